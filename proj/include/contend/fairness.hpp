#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "contend/trace.hpp"

namespace contend {

// Backoff ratio: cumulative backoff slots normalized by the CW in force at
// transmission time. Values above 1 are possible when an attempt spans
// several deferrals.
inline double backoff_ratio(int cumulative_backoff, int cw) {
  if (cw < 1) throw std::domain_error("backoff_ratio: cw must be >= 1");
  if (cumulative_backoff < 0)
    throw std::domain_error("backoff_ratio: cumulative_backoff must be >= 0");
  return static_cast<double>(cumulative_backoff) / static_cast<double>(cw);
}

// Stepwise constraint penalty: (T/T_s)*(0.5 - ratio) at transmitting steps,
// 0 otherwise.
inline double constraint_penalty(bool transmitted, double ratio, std::int64_t total_steps,
                                 std::int64_t transmissions) {
  if (!transmitted) return 0.0;
  if (transmissions < 1)
    throw std::domain_error("constraint_penalty: transmitted requires transmissions >= 1");
  if (total_steps < transmissions)
    throw std::domain_error("constraint_penalty: total_steps must be >= transmissions");
  return (static_cast<double>(total_steps) / static_cast<double>(transmissions)) *
         (0.5 - ratio);
}

// Cooperative collision-avoidance reward for one agent at one step:
//   success           -> ratio_at_tx / max_pending_ratio, in (0, 1]
//   transmit, no ACK  -> -2
//   no transmission   -> 0
// max_pending_ratio is the max over all agents of pending backoff ratio and
// includes the transmitter, so it can only be 0 if state is corrupt.
inline double reward(SlotOutcomeKind outcome_for_agent, double ratio_at_tx,
                     double max_pending_ratio) {
  switch (outcome_for_agent) {
    case SlotOutcomeKind::Success:
      if (max_pending_ratio <= 0.0)
        throw std::domain_error("reward: success scored with max_pending_ratio = 0");
      return ratio_at_tx / max_pending_ratio;
    case SlotOutcomeKind::Collision:
      return -2.0;
    case SlotOutcomeKind::Idle:
    default:
      return 0.0;
  }
}

// Penalized reward: r - lambda * sum_i c_i.
inline double penalized_reward(double r, const std::vector<double>& penalties, double lambda) {
  if (lambda < 0.0) throw std::domain_error("penalized_reward: lambda must be >= 0");
  double sum = 0.0;
  for (double c : penalties) sum += c;
  return r - lambda * sum;
}

// Per-episode fairness accounting for every agent. Penalties depend on the
// final T and T_s, so they are produced at close() rather than inline.
class EpisodeLedger {
 public:
  explicit EpisodeLedger(int n_agents) : agents_(n_agents) {}

  int n_agents() const { return static_cast<int>(agents_.size()); }
  std::int64_t step_count() const { return step_count_; }
  bool closed() const { return closed_; }

  // One joint step; per-agent flags say who transmitted and at what ratio.
  void record_step(const std::vector<bool>& transmitted, const std::vector<double>& ratios,
                   const std::vector<double>& rewards);
  void close();

  std::int64_t transmissions(int agent) const { return agents_.at(agent).tx_steps.size(); }
  const std::vector<double>& penalties(int agent) const;
  const std::vector<double>& rewards(int agent) const { return agents_.at(agent).rewards; }
  const std::vector<double>& backoff_ratios(int agent) const {
    return agents_.at(agent).ratios;
  }

  // Mean of c_t over all T steps; equals 0.5 - mean backoff ratio when the
  // agent transmitted at least once, 0 otherwise.
  double episode_violation(int agent) const;

  double mean_backoff_ratio(int agent) const;
  double mean_backoff_ratio_all() const; // over all agent transmissions
  double mean_reward_per_tx() const;     // total reward / total transmissions

  // CSV rows: episode,agent,T,T_s,mean_backoff_ratio,mean_reward,violation
  static void write_csv_header(std::ostream& os);
  void write_csv_rows(std::ostream& os, int episode) const;

 private:
  struct AgentLog {
    std::vector<double> rewards;        // per step
    std::vector<double> ratios;         // per transmission
    std::vector<std::int64_t> tx_steps; // step indices of transmissions
    std::vector<double> penalties;      // per step, filled at close()
  };
  std::vector<AgentLog> agents_;
  std::int64_t step_count_ = 0;
  bool closed_ = false;
};

} // namespace contend
