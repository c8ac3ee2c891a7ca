#include "contend/trace.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace contend {

SlotOutcome resolve_slot(const std::vector<int>& transmitting) {
  SlotOutcome out;
  out.stations = transmitting;
  std::sort(out.stations.begin(), out.stations.end());
  if (out.stations.empty())
    out.kind = SlotOutcomeKind::Idle;
  else if (out.stations.size() == 1)
    out.kind = SlotOutcomeKind::Success;
  else
    out.kind = SlotOutcomeKind::Collision;
  return out;
}

std::int64_t SimTrace::total_attempts() const {
  std::int64_t n = 0;
  for (const auto& c : counters) n += c.tx_attempts;
  return n;
}

std::int64_t SimTrace::total_collisions() const {
  std::int64_t n = 0;
  for (const auto& c : counters) n += c.collisions;
  return n;
}

std::int64_t SimTrace::total_successes() const {
  std::int64_t n = 0;
  for (const auto& c : counters) n += c.successes;
  return n;
}

double SimTrace::collision_fraction(const std::vector<int>& stations) const {
  std::int64_t attempts = 0;
  std::int64_t collisions = 0;
  if (stations.empty()) {
    attempts = total_attempts();
    collisions = total_collisions();
  } else {
    for (int id : stations) {
      attempts += counters.at(id).tx_attempts;
      collisions += counters.at(id).collisions;
    }
  }
  return attempts > 0 ? static_cast<double>(collisions) / static_cast<double>(attempts) : 0.0;
}

double SimTrace::throughput_mbps(int station_id) const {
  const double span_s = static_cast<double>(sim_end_us - warmup_end_us) * 1e-6;
  if (span_s <= 0.0) return 0.0;
  return static_cast<double>(counters.at(station_id).bytes_delivered) * 8.0 / span_s * 1e-6;
}

double SimTrace::aggregate_throughput_mbps() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < counters.size(); ++i) sum += throughput_mbps(static_cast<int>(i));
  return sum;
}

namespace {
const char* outcome_name(SlotOutcomeKind k) {
  switch (k) {
    case SlotOutcomeKind::Success: return "success";
    case SlotOutcomeKind::Collision: return "collision";
    default: return "idle";
  }
}
} // namespace

void SimTrace::write_csv(std::ostream& os) const {
  os << "station_id,start_us,end_us,outcome,cw,cum_backoff\n";
  for (const auto& r : records) {
    os << r.station_id << ',' << r.start_us << ',' << r.end_us << ','
       << outcome_name(r.outcome) << ',' << r.cw_at_tx << ','
       << r.cumulative_backoff_at_tx << '\n';
  }
}

std::string SimTrace::csv_string() const {
  std::ostringstream ss;
  write_csv(ss);
  return ss.str();
}

void SimTrace::write_summary_json(std::ostream& os) const {
  os << "{\n  \"warmup_end_us\": " << warmup_end_us
     << ",\n  \"sim_end_us\": " << sim_end_us << ",\n  \"stations\": [\n";
  for (std::size_t i = 0; i < counters.size(); ++i) {
    const auto& c = counters[i];
    os << "    {\"id\": " << i << ", \"tx_attempts\": " << c.tx_attempts
       << ", \"successes\": " << c.successes << ", \"collisions\": " << c.collisions
       << ", \"bytes_delivered\": " << c.bytes_delivered << "}";
    os << (i + 1 < counters.size() ? ",\n" : "\n");
  }
  os << "  ]\n}\n";
}

} // namespace contend
