#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "gridguard/environment.hpp"

namespace gridguard {

class Agent {
 public:
  virtual ~Agent() = default;
  virtual AgentAction act(const Observation& obs, const Environment& env) = 0;
  virtual std::string_view name() const = 0;
};

AgentAction act_do_nothing(const Observation& obs);

/// Lowest-index line that is open, out of cooldown, not attacked and not in
/// maintenance; do nothing otherwise.
AgentAction act_reco_powerline(const Observation& obs);

/// One-step lookahead over do-nothing and every legal single-line switch,
/// with frozen injections. Picks the smallest simulated max rho; ties go to
/// do-nothing, then to the lowest line index. `candidate_cap` > 0 limits the
/// number of line actions simulated (reconnections first, then the most
/// loaded lines for disconnection).
AgentAction act_greedy(const Observation& obs, const Environment& env, std::size_t candidate_cap = 0);

class DoNothingAgent final : public Agent {
 public:
  AgentAction act(const Observation& obs, const Environment&) override { return act_do_nothing(obs); }
  std::string_view name() const override { return "do_nothing"; }
};

class RecoPowerlineAgent final : public Agent {
 public:
  AgentAction act(const Observation& obs, const Environment&) override { return act_reco_powerline(obs); }
  std::string_view name() const override { return "reco_powerline"; }
};

class GreedyLineSwitchAgent final : public Agent {
 public:
  explicit GreedyLineSwitchAgent(std::size_t candidate_cap = 0) : cap_(candidate_cap) {}
  AgentAction act(const Observation& obs, const Environment& env) override {
    return act_greedy(obs, env, cap_);
  }
  std::string_view name() const override { return "greedy_line_switch"; }

 private:
  std::size_t cap_;
};

struct AgentConfig {
  std::string kind = "do_nothing";
  std::size_t candidate_cap = 0;
};

/// Throws ConfigError on an unknown kind.
std::unique_ptr<Agent> make_agent(const AgentConfig& config);

}  // namespace gridguard
