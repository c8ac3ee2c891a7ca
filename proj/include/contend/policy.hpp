#pragma once

#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "contend/beb.hpp"
#include "contend/observe.hpp"
#include "contend/station.hpp"

namespace contend {

struct PolicyDecision {
  int counter = 0;     // backoff counter to install
  int action = -1;     // policy head index for agents, -1 otherwise
  double logprob = 0.0;
};

// Per-station backoff selection. Agent-style policies are consulted again
// after every access deferral; legacy BEB keeps its frozen counter.
class BackoffPolicy {
 public:
  virtual ~BackoffPolicy() = default;
  virtual bool is_agent() const = 0;
  // `initial` marks the first selection of an access attempt. Re-selections
  // (initial = false) only happen for agent-style policies.
  virtual PolicyDecision select(const StationState& st, const LocalObservation& obs,
                                bool initial, std::mt19937_64& rng) = 0;
};

class LegacyBebPolicy final : public BackoffPolicy {
 public:
  bool is_agent() const override { return false; }
  PolicyDecision select(const StationState& st, const LocalObservation&, bool,
                        std::mt19937_64& rng) override {
    return {beb_draw(st.cw, rng), -1, 0.0};
  }
};

// Fixed selection sequence, then uniform draws; for tests.
class ScriptedPolicy final : public BackoffPolicy {
 public:
  explicit ScriptedPolicy(std::vector<int> counters, bool agent_like = true)
      : counters_(std::move(counters)), agent_like_(agent_like) {}
  bool is_agent() const override { return agent_like_; }
  PolicyDecision select(const StationState& st, const LocalObservation&, bool,
                        std::mt19937_64& rng) override {
    if (next_ < counters_.size()) return {counters_[next_++], -1, 0.0};
    return {beb_draw(st.cw, rng), -1, 0.0};
  }

 private:
  std::vector<int> counters_;
  std::size_t next_ = 0;
  bool agent_like_;
};

using PolicyHandle = std::shared_ptr<BackoffPolicy>;

} // namespace contend
