#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "contend/events.hpp"
#include "contend/sim_config.hpp"
#include "contend/station.hpp"

namespace contend {

// Per-neighbor view at a given instant: d2lt is the time since that
// neighbor's last observed ACK, ci2la subtracts the observed busy time.
struct NeighborTracker {
  Micros d2lt = 0;
  Micros busy_since_ack = 0;
  Micros ci2la = 0; // d2lt - busy_since_ack, exactly
};

// Self-state features at a decision point.
struct SelfObservation {
  int cw = 0;
  int deferral_count = 0;
  int cumulative_backoff = 0;
  Micros since_failure = 0;      // time since last own tx failure
  Micros idle_since_failure = 0; // minus observed busy time
};

struct LocalObservation {
  SelfObservation self_obs;
  std::vector<std::pair<Micros, Micros>> neighbor_obs; // (d2lt, ci2la)
};

struct GlobalState {
  std::vector<SelfObservation> agent_self_obs;
  std::vector<std::pair<Micros, Micros>> legacy_obs; // (d2lt, ci2la)
};

// Channel-wide activity bookkeeping shared by every station (perfect
// overhearing inside the BSS). Tracks busy intervals, per-station ACK
// anchors for D2LT/CI2LA and per-station failure anchors for the agents'
// f/f' clocks. Clocks without an event yet anchor at warmup end.
class ChannelMonitor {
 public:
  ChannelMonitor(int n_stations, Micros warmup_end_us);

  // Events must arrive in (timestamp, kind) order.
  void on_event(const SimEvent& ev);
  // The id of the station whose frame the current/most recent ACK confirms.
  void set_ack_owner(int station_id) { ack_owner_ = station_id; }
  // Marks a transmission failure declared by `station_id` at time t.
  void on_failure(int station_id, Micros t);

  NeighborTracker tracker(int station_id, Micros now) const;
  int n_stations() const { return static_cast<int>(tx_seen_.size()); }
  bool active_since_warmup(int station_id) const {
    return tx_seen_[station_id] > 0;
  }
  // Busy time accumulated in [0, t]; t must not precede the latest event.
  Micros busy_total(Micros t) const;
  bool busy_now() const { return busy_depth_ > 0; }

  std::pair<Micros, Micros> failure_clocks(int station_id, Micros now) const;

 private:
  struct Anchor {
    Micros at = 0;
    Micros busy_at = 0;  // busy_total(at), resolved lazily for the sentinel
    bool resolved = false;
  };
  Micros clocks_from(const Anchor& a, Micros now, Micros& busy_out) const;
  void resolve_sentinels(Micros now);

  Micros warmup_end_;
  Micros last_event_ = 0;
  Micros busy_accum_ = 0;  // closed intervals
  Micros busy_start_ = 0;
  int busy_depth_ = 0;     // overlapping transmissions share one interval
  std::optional<Micros> warmup_busy_snapshot_;
  int ack_owner_ = kNoStation;
  std::vector<Anchor> ack_anchor_;
  std::vector<Anchor> failure_anchor_;
  std::vector<std::int64_t> tx_seen_;
};

// Assembles agent i's local observation. Neighbors are every other station
// with at least one overheard frame since warmup end, ordered by id.
LocalObservation build_local_observation(const StationState& station,
                                         const ChannelMonitor& monitor, Micros now);

// Concatenates the agents' self observations with the legacy stations'
// (d2lt, ci2la) pairs. expected_agents guards against a count mismatch.
GlobalState build_global_state(const std::vector<SelfObservation>& agent_self_obs,
                               const std::vector<std::pair<Micros, Micros>>& legacy_obs,
                               int expected_agents);

} // namespace contend
