#include "contend/sim_config.hpp"

#include <cmath>

namespace contend {

namespace {
bool power_of_two(std::int64_t v) { return v > 0 && (v & (v - 1)) == 0; }
} // namespace

void SimConfig::validate() const {
  if (n_stations < 1) throw ConfigError("n_stations must be >= 1");
  if (n_agents < 0) throw ConfigError("n_agents must be >= 0");
  if (n_agents > n_stations) throw ConfigError("n_agents must be <= n_stations");
  if (slot <= 0) throw ConfigError("slot must be > 0");
  if (sifs <= 0) throw ConfigError("sifs must be > 0");
  if (difs <= sifs) throw ConfigError("difs must be > sifs");
  if (cw_min < 1) throw ConfigError("cw_min must be >= 1");
  if (cw_max < cw_min) throw ConfigError("cw_max must be >= cw_min");
  const std::int64_t ratio = (static_cast<std::int64_t>(cw_max) + 1) / (cw_min + 1);
  if ((cw_max + 1) % (cw_min + 1) != 0 || !power_of_two(ratio))
    throw ConfigError("cw_max+1 must be a power-of-two multiple of cw_min+1");
  if (payload_bytes < 0) throw ConfigError("payload_bytes must be >= 0");
  if (data_rate <= 0.0) throw ConfigError("data_rate must be > 0");
  if (ack_duration <= 0) throw ConfigError("ack_duration must be > 0");
  if (preamble_duration < 0) throw ConfigError("preamble_duration must be >= 0");
  if (warmup < 0.0) throw ConfigError("warmup must be >= 0");
  if (sim_time <= warmup) throw ConfigError("sim_time must be > warmup");
}

Micros frame_airtime(int payload_bytes, double data_rate_mbps, Micros preamble_us) {
  if (data_rate_mbps <= 0.0) throw ConfigError("data_rate must be > 0");
  if (payload_bytes < 0) throw ConfigError("payload_bytes must be >= 0");
  const double bits = 8.0 * static_cast<double>(payload_bytes);
  return preamble_us + static_cast<Micros>(std::ceil(bits / data_rate_mbps));
}

} // namespace contend
