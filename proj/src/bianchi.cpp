#include "contend/bianchi.hpp"

#include <cmath>

namespace contend {

double bianchi_tau_given_p(double p, int w, int max_stage) {
  // sum_{i=0}^{m-1} (2p)^i, evaluated term by term so p = 1/2 needs no
  // special casing.
  double series = 0.0;
  double term = 1.0;
  for (int i = 0; i < max_stage; ++i) {
    series += term;
    term *= 2.0 * p;
  }
  return 2.0 / (static_cast<double>(w) + 1.0 + p * static_cast<double>(w) * series);
}

namespace {
double collision_given_tau(double tau, int n) {
  return 1.0 - std::pow(1.0 - tau, n - 1);
}
} // namespace

BianchiSolution bianchi_fixed_point(int n, int w, int max_stage, double tol) {
  if (n < 1) throw BianchiError("bianchi_fixed_point: n must be >= 1", 0.0);
  if (w < 2) throw BianchiError("bianchi_fixed_point: w must be >= 2", 0.0);
  if (max_stage < 0) throw BianchiError("bianchi_fixed_point: max_stage must be >= 0", 0.0);
  if (tol <= 0.0) throw BianchiError("bianchi_fixed_point: tol must be > 0", 0.0);

  BianchiSolution sol;
  if (n == 1) {
    sol.p = 0.0;
    sol.tau = bianchi_tau_given_p(0.0, w, max_stage);
    sol.iterations = 0;
    sol.residual = 0.0;
    return sol;
  }

  // h(p) = p - (1 - (1 - tau(p))^(n-1)) is increasing with h(0) <= 0 < h(1).
  const int max_iter = 200;
  double lo = 0.0;
  double hi = 1.0;
  double p = 0.5;
  double residual = 1.0;
  int it = 0;
  for (; it < max_iter; ++it) {
    p = 0.5 * (lo + hi);
    const double h = p - collision_given_tau(bianchi_tau_given_p(p, w, max_stage), n);
    residual = std::fabs(h);
    if (residual < tol) break;
    if (h < 0.0)
      lo = p;
    else
      hi = p;
  }
  if (residual >= tol)
    throw BianchiError("bianchi_fixed_point: no convergence within iteration cap", residual);

  sol.p = p;
  sol.tau = bianchi_tau_given_p(p, w, max_stage);
  sol.iterations = it + 1;
  sol.residual = residual;
  return sol;
}

double saturation_collision_probability(int n, int w, int max_stage, double tol) {
  return bianchi_fixed_point(n, w, max_stage, tol).p;
}

} // namespace contend
