#pragma once

#include <cstdint>
#include <queue>
#include <vector>

#include "contend/sim_config.hpp"

namespace contend {

// Enumerator order is the tie-break order for simultaneous events.
enum class EventKind : int {
  TxEnd = 0,
  AckEnd = 1,
  DeferEnd = 2, // station_id < 0: contention restart; >= 0: that station's ACK-timeout expiry
  SlotBoundary = 3,
  TxStart = 4,
  AckStart = 5,
};

constexpr int kNoStation = -1;

struct SimEvent {
  Micros timestamp = 0;
  EventKind kind = EventKind::SlotBoundary;
  int station_id = kNoStation;
};

struct EventLater {
  bool operator()(const SimEvent& a, const SimEvent& b) const {
    if (a.timestamp != b.timestamp) return a.timestamp > b.timestamp;
    if (a.kind != b.kind) return static_cast<int>(a.kind) > static_cast<int>(b.kind);
    return a.station_id > b.station_id;
  }
};

// Min-queue over (timestamp, kind, station_id).
class EventQueue {
 public:
  void push(SimEvent ev) { q_.push(ev); }
  void push(Micros t, EventKind k, int station = kNoStation) { q_.push({t, k, station}); }
  bool empty() const { return q_.empty(); }
  const SimEvent& top() const { return q_.top(); }
  SimEvent pop() {
    SimEvent ev = q_.top();
    q_.pop();
    return ev;
  }

 private:
  std::priority_queue<SimEvent, std::vector<SimEvent>, EventLater> q_;
};

} // namespace contend
