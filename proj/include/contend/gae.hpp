#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace contend {

// Generalized advantage estimation. values carries one bootstrap entry more
// than rewards (terminal bootstrap is the caller's job; 0 for episode ends).
// Returns raw advantages; batch normalization happens at update time.
inline std::vector<double> compute_gae(std::span<const double> rewards,
                                       std::span<const double> values, double gamma,
                                       double gae_lambda) {
  if (values.size() != rewards.size() + 1)
    throw std::invalid_argument("compute_gae: |values| must be |rewards| + 1");
  std::vector<double> adv(rewards.size(), 0.0);
  double last = 0.0;
  for (std::size_t i = rewards.size(); i-- > 0;) {
    const double delta = rewards[i] + gamma * values[i + 1] - values[i];
    last = delta + gamma * gae_lambda * last;
    adv[i] = last;
  }
  return adv;
}

} // namespace contend
