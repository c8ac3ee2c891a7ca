#pragma once

#include <stdexcept>
#include <string>

namespace contend {

// Saturation fixed point for n contenders with minimum window size w
// (w = cw_min + 1 backoff values at stage 0) and max_stage window doublings.
struct BianchiSolution {
  double tau = 0.0; // per-slot transmission probability
  double p = 0.0;   // conditional collision probability
  int iterations = 0;
  double residual = 0.0;
};

class BianchiError : public std::runtime_error {
 public:
  BianchiError(const std::string& msg, double residual)
      : std::runtime_error(msg), residual(residual) {}
  double residual;
};

// tau as a function of p, using the series form which is regular at p = 1/2:
//   tau = 2 / (W + 1 + p W sum_{i=0}^{m-1} (2p)^i)
double bianchi_tau_given_p(double p, int w, int max_stage);

// Solves tau = f(p), p = 1 - (1 - tau)^(n-1) by bisection on p in [0, 1).
BianchiSolution bianchi_fixed_point(int n, int w, int max_stage, double tol = 1e-10);

// Convenience wrapper returning only the collision probability.
double saturation_collision_probability(int n, int w, int max_stage, double tol = 1e-10);

} // namespace contend
