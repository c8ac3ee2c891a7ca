#pragma once

#include <optional>
#include <stdexcept>

#include "contend/events.hpp"
#include "contend/sim_config.hpp"

namespace contend {

// Per-station MAC state. cumulative_backoff and deferral_count cover the
// current access attempt, i.e. they reset whenever the station transmits.
struct StationState {
  int id = 0;
  bool is_agent = false;
  int cw = 15;                // current contention window
  int backoff_counter = 0;    // slots remaining
  int cumulative_backoff = 0; // slots waited this access attempt
  int deferral_count = 0;     // busy onsets endured this access attempt
  int retry_stage = 0;
  int queue_len = 1;          // saturated: always >= 1
};

struct TxIntent {
  int station_id = 0;
};

// Applies the per-station contention transitions:
//   - idle SlotBoundary: counter 0 emits a TxIntent, otherwise the counter
//     decrements and cumulative_backoff grows by one slot;
//   - busy onset (TxStart overheard while counting down): counter freezes
//     and deferral_count increments.
inline std::optional<TxIntent> advance_station(StationState& st, const SimEvent& ev,
                                               bool channel_busy) {
  switch (ev.kind) {
    case EventKind::SlotBoundary: {
      if (channel_busy) return std::nullopt;
      if (st.backoff_counter == 0) return TxIntent{st.id};
      if (st.backoff_counter < 0)
        throw std::logic_error("backoff counter below zero");
      --st.backoff_counter;
      ++st.cumulative_backoff;
      return std::nullopt;
    }
    case EventKind::TxStart: {
      // Overheard busy onset; the transmitting station never defers to itself.
      if (ev.station_id != st.id) ++st.deferral_count;
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

} // namespace contend
