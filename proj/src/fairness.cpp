#include "contend/fairness.hpp"

#include <ostream>

namespace contend {

void EpisodeLedger::record_step(const std::vector<bool>& transmitted,
                                const std::vector<double>& ratios,
                                const std::vector<double>& rewards) {
  if (closed_) throw std::logic_error("EpisodeLedger: record_step after close");
  if (transmitted.size() != agents_.size() || ratios.size() != agents_.size() ||
      rewards.size() != agents_.size())
    throw std::invalid_argument("EpisodeLedger: per-agent vector size mismatch");
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    auto& a = agents_[i];
    a.rewards.push_back(rewards[i]);
    if (transmitted[i]) {
      a.tx_steps.push_back(step_count_);
      a.ratios.push_back(ratios[i]);
    }
  }
  ++step_count_;
}

void EpisodeLedger::close() {
  if (closed_) return;
  for (auto& a : agents_) {
    a.penalties.assign(step_count_, 0.0);
    const std::int64_t ts = static_cast<std::int64_t>(a.tx_steps.size());
    for (std::size_t k = 0; k < a.tx_steps.size(); ++k)
      a.penalties[a.tx_steps[k]] = constraint_penalty(true, a.ratios[k], step_count_, ts);
  }
  closed_ = true;
}

const std::vector<double>& EpisodeLedger::penalties(int agent) const {
  if (!closed_) throw std::logic_error("EpisodeLedger: penalties before close");
  return agents_.at(agent).penalties;
}

double EpisodeLedger::episode_violation(int agent) const {
  if (!closed_) throw std::logic_error("EpisodeLedger: episode_violation before close");
  if (step_count_ == 0) return 0.0;
  const auto& a = agents_.at(agent);
  double sum = 0.0;
  for (double c : a.penalties) sum += c;
  return sum / static_cast<double>(step_count_);
}

double EpisodeLedger::mean_backoff_ratio(int agent) const {
  const auto& a = agents_.at(agent);
  if (a.ratios.empty()) return 0.0;
  double sum = 0.0;
  for (double r : a.ratios) sum += r;
  return sum / static_cast<double>(a.ratios.size());
}

double EpisodeLedger::mean_backoff_ratio_all() const {
  double sum = 0.0;
  std::int64_t n = 0;
  for (const auto& a : agents_) {
    for (double r : a.ratios) sum += r;
    n += static_cast<std::int64_t>(a.ratios.size());
  }
  return n > 0 ? sum / static_cast<double>(n) : 0.0;
}

double EpisodeLedger::mean_reward_per_tx() const {
  double sum = 0.0;
  std::int64_t n = 0;
  for (const auto& a : agents_) {
    for (double r : a.rewards) sum += r;
    n += static_cast<std::int64_t>(a.tx_steps.size());
  }
  return n > 0 ? sum / static_cast<double>(n) : 0.0;
}

void EpisodeLedger::write_csv_header(std::ostream& os) {
  os << "episode,agent,T,T_s,mean_backoff_ratio,mean_reward,violation\n";
}

void EpisodeLedger::write_csv_rows(std::ostream& os, int episode) const {
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    const auto& a = agents_[i];
    double reward_sum = 0.0;
    for (double r : a.rewards) reward_sum += r;
    const double mean_reward =
        a.rewards.empty() ? 0.0 : reward_sum / static_cast<double>(a.rewards.size());
    os << episode << ',' << i << ',' << step_count_ << ',' << a.tx_steps.size() << ','
       << mean_backoff_ratio(static_cast<int>(i)) << ',' << mean_reward << ','
       << episode_violation(static_cast<int>(i)) << '\n';
  }
}

} // namespace contend
