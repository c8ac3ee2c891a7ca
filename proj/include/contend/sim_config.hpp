#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace contend {

using Micros = std::int64_t; // all MAC timing is integer microseconds

// Raised when a configuration fails validation before any simulation step.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// One BSS: n_stations saturated uplink contenders, the first n_agents of a
// station layout may be policy-driven (actual agent ids are chosen per run).
struct SimConfig {
  int n_stations = 4;
  int n_agents = 0;          // m <= n
  Micros slot = 9;           // us
  Micros sifs = 16;          // us
  Micros difs = 34;          // us (sifs + 2*slot for 802.11ax OFDM)
  int cw_min = 15;
  int cw_max = 1023;
  int payload_bytes = 1500;
  double data_rate = 114.7;  // Mbit/s, fixed HE-MCS9-like rate
  Micros ack_duration = 32;  // us
  Micros preamble_duration = 40; // us
  double warmup = 1.0;       // s, traffic runs but metrics are suppressed
  double sim_time = 6.0;     // s
  std::uint64_t seed = 1;

  Micros warmup_us() const { return static_cast<Micros>(warmup * 1e6); }
  Micros sim_time_us() const { return static_cast<Micros>(sim_time * 1e6); }
  // A collided station declares failure this long after its TxEnd.
  Micros ack_timeout_us() const { return sifs + ack_duration + slot; }

  // Throws ConfigError with the offending field named.
  void validate() const;
};

// Fixed-airtime PHY: preamble + ceil(8*payload/rate) us.
Micros frame_airtime(int payload_bytes, double data_rate_mbps, Micros preamble_us);

} // namespace contend
