#include "contend/observe.hpp"

#include <algorithm>

namespace contend {

ChannelMonitor::ChannelMonitor(int n_stations, Micros warmup_end_us)
    : warmup_end_(warmup_end_us),
      ack_anchor_(n_stations),
      failure_anchor_(n_stations),
      tx_seen_(n_stations, 0) {
  for (auto& a : ack_anchor_) a.at = warmup_end_;
  for (auto& a : failure_anchor_) a.at = warmup_end_;
}

Micros ChannelMonitor::busy_total(Micros t) const {
  if (t < last_event_) throw std::logic_error("ChannelMonitor: busy_total into the past");
  if (busy_depth_ > 0) return busy_accum_ + (t - busy_start_);
  return busy_accum_;
}

void ChannelMonitor::resolve_sentinels(Micros now) {
  if (warmup_busy_snapshot_ || now < warmup_end_) return;
  // warmup_end falls either inside the current busy interval or in idle time
  // that followed the last closed interval.
  Micros at_warmup = busy_accum_;
  if (busy_depth_ > 0 && busy_start_ < warmup_end_) at_warmup += warmup_end_ - busy_start_;
  if (busy_depth_ > 0 && busy_start_ >= warmup_end_) at_warmup = busy_accum_;
  warmup_busy_snapshot_ = at_warmup;
  for (auto& a : ack_anchor_)
    if (!a.resolved) { a.busy_at = at_warmup; a.resolved = true; }
  for (auto& a : failure_anchor_)
    if (!a.resolved) { a.busy_at = at_warmup; a.resolved = true; }
}

void ChannelMonitor::on_event(const SimEvent& ev) {
  if (ev.timestamp < last_event_)
    throw std::logic_error("ChannelMonitor: out-of-order event");
  resolve_sentinels(ev.timestamp);
  switch (ev.kind) {
    case EventKind::TxStart:
      if (busy_depth_ == 0) busy_start_ = ev.timestamp;
      ++busy_depth_;
      if (ev.station_id >= 0 && ev.timestamp >= warmup_end_) ++tx_seen_[ev.station_id];
      break;
    case EventKind::TxEnd:
      // Simultaneous transmissions end together; one TxEnd closes the interval.
      busy_accum_ += ev.timestamp - busy_start_;
      busy_depth_ = 0;
      break;
    case EventKind::AckStart:
      busy_start_ = ev.timestamp;
      busy_depth_ = 1;
      break;
    case EventKind::AckEnd: {
      busy_accum_ += ev.timestamp - busy_start_;
      busy_depth_ = 0;
      if (ack_owner_ >= 0) {
        auto& a = ack_anchor_[ack_owner_];
        a.at = ev.timestamp;
        a.busy_at = busy_accum_;
        a.resolved = true;
        ack_owner_ = kNoStation;
      }
      break;
    }
    default:
      break;
  }
  last_event_ = ev.timestamp;
}

void ChannelMonitor::on_failure(int station_id, Micros t) {
  resolve_sentinels(t);
  auto& a = failure_anchor_[station_id];
  a.at = t;
  a.busy_at = busy_total(t);
  a.resolved = true;
  if (t > last_event_) last_event_ = t;
}

Micros ChannelMonitor::clocks_from(const Anchor& a, Micros now, Micros& busy_out) const {
  if (now <= a.at) {
    busy_out = 0;
    return 0;
  }
  if (!a.resolved)
    throw std::logic_error("ChannelMonitor: unresolved anchor queried past its origin");
  busy_out = busy_total(now) - a.busy_at;
  return now - a.at;
}

NeighborTracker ChannelMonitor::tracker(int station_id, Micros now) const {
  const_cast<ChannelMonitor*>(this)->resolve_sentinels(now);
  NeighborTracker t;
  t.d2lt = clocks_from(ack_anchor_[station_id], now, t.busy_since_ack);
  t.ci2la = t.d2lt - t.busy_since_ack;
  return t;
}

std::pair<Micros, Micros> ChannelMonitor::failure_clocks(int station_id, Micros now) const {
  const_cast<ChannelMonitor*>(this)->resolve_sentinels(now);
  Micros busy = 0;
  const Micros f = clocks_from(failure_anchor_[station_id], now, busy);
  return {f, f - busy};
}

LocalObservation build_local_observation(const StationState& station,
                                         const ChannelMonitor& monitor, Micros now) {
  LocalObservation obs;
  obs.self_obs.cw = station.cw;
  obs.self_obs.deferral_count = station.deferral_count;
  obs.self_obs.cumulative_backoff = station.cumulative_backoff;
  const auto [f, f_idle] = monitor.failure_clocks(station.id, now);
  obs.self_obs.since_failure = f;
  obs.self_obs.idle_since_failure = f_idle;
  for (int j = 0; j < monitor.n_stations(); ++j) {
    if (j == station.id || !monitor.active_since_warmup(j)) continue;
    const NeighborTracker t = monitor.tracker(j, now);
    obs.neighbor_obs.emplace_back(t.d2lt, t.ci2la);
  }
  return obs;
}

GlobalState build_global_state(const std::vector<SelfObservation>& agent_self_obs,
                               const std::vector<std::pair<Micros, Micros>>& legacy_obs,
                               int expected_agents) {
  if (static_cast<int>(agent_self_obs.size()) != expected_agents)
    throw std::invalid_argument("build_global_state: agent count mismatch");
  GlobalState s;
  s.agent_self_obs = agent_self_obs;
  s.legacy_obs = legacy_obs;
  return s;
}

} // namespace contend
