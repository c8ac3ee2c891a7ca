#pragma once

#include <algorithm>
#include <random>
#include <stdexcept>

namespace contend {

struct BebState {
  int cw = 15;
  int retry_stage = 0;
};

// Uniform draw over [0, cw]; cw = 0 degenerates to 0.
inline int beb_draw(int cw, std::mt19937_64& rng) {
  if (cw < 0) throw std::domain_error("beb_draw: cw must be >= 0");
  if (cw == 0) return 0;
  std::uniform_int_distribution<int> dist(0, cw);
  return dist(rng);
}

inline BebState beb_on_failure(BebState state, int cw_max) {
  state.cw = std::min(2 * (state.cw + 1) - 1, cw_max);
  state.retry_stage += 1;
  return state;
}

inline BebState beb_on_success(BebState state, int cw_min) {
  state.cw = cw_min;
  state.retry_stage = 0;
  return state;
}

// Closed-form conditional transmission probability for a legacy station that
// has already waited `waited` generic slots under window size `cw`:
// Pr(transmit | waited) = 1 / (cw - waited).
inline double conditional_tx_probability(int cw, int waited) {
  if (waited < 0 || waited >= cw)
    throw std::domain_error("conditional_tx_probability: requires 0 <= waited < cw");
  return 1.0 / static_cast<double>(cw - waited);
}

} // namespace contend
