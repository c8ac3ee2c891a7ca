#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "contend/sim_config.hpp"

namespace contend {

enum class SlotOutcomeKind { Idle, Success, Collision };

// Outcome of one contention slot given the set of simultaneous transmitters.
struct SlotOutcome {
  SlotOutcomeKind kind = SlotOutcomeKind::Idle;
  std::vector<int> stations; // 1 id on Success, >= 2 on Collision
};

SlotOutcome resolve_slot(const std::vector<int>& transmitting);

struct TransmissionRecord {
  int station_id = 0;
  Micros start_us = 0;
  Micros end_us = 0;
  SlotOutcomeKind outcome = SlotOutcomeKind::Success;
  int cw_at_tx = 0;
  int cumulative_backoff_at_tx = 0;
};

struct StationCounters {
  std::int64_t tx_attempts = 0;
  std::int64_t successes = 0;
  std::int64_t collisions = 0;
  std::int64_t bytes_delivered = 0;
};

// Full transmission log plus post-warmup counters.
struct SimTrace {
  std::vector<TransmissionRecord> records; // every transmission, warmup included
  std::vector<StationCounters> counters;   // accumulated after warmup only
  Micros warmup_end_us = 0;
  Micros sim_end_us = 0;
  int payload_bytes = 0;

  std::int64_t total_attempts() const;
  std::int64_t total_collisions() const;
  std::int64_t total_successes() const;
  // collisions / attempts over the given stations (all stations if empty).
  double collision_fraction(const std::vector<int>& stations = {}) const;
  double throughput_mbps(int station_id) const; // post-warmup goodput
  double aggregate_throughput_mbps() const;

  void write_csv(std::ostream& os) const;
  std::string csv_string() const;
  void write_summary_json(std::ostream& os) const;
};

} // namespace contend
