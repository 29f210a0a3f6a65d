#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gridguard/chronics.hpp"
#include "gridguard/dc_flow.hpp"
#include "gridguard/grid.hpp"

namespace gridguard {

/// Why a line is out of service. `none` means connected.
enum class LineCause { none, agent, opponent, maintenance, overload_trip };

std::string_view to_string(LineCause cause);
LineCause line_cause_from_string(std::string_view text);

struct ActiveAttack {
  std::size_t line = 0;
  int remaining = 0;  // further solved states the line is held out
  bool operator==(const ActiveAttack&) const = default;
};

struct Observation {
  int t = 0;
  std::vector<double> rho;
  std::vector<double> flow_mw;
  std::vector<bool> connected;
  std::vector<LineCause> cause;
  std::vector<int> cooldown;
  std::vector<bool> in_maintenance;
  InjectionVector injections;
  std::optional<ActiveAttack> attack;
  double total_load = 0.0;
};

struct AgentAction {
  enum class Kind { do_nothing, reconnect, disconnect };
  Kind kind = Kind::do_nothing;
  std::size_t line = 0;

  static AgentAction do_nothing() { return {}; }
  static AgentAction reconnect(std::size_t l) { return {Kind::reconnect, l}; }
  static AgentAction disconnect(std::size_t l) { return {Kind::disconnect, l}; }
  bool operator==(const AgentAction&) const = default;
};

struct OpponentAction {
  std::optional<std::size_t> line;  // empty = do nothing
  int duration = 0;

  static OpponentAction do_nothing() { return {}; }
  static OpponentAction attack(std::size_t l, int duration) { return {l, duration}; }
  bool operator==(const OpponentAction&) const = default;
};

enum class Termination { running, completed, blackout, islanded_load };

std::string_view to_string(Termination cause);
Termination termination_from_string(std::string_view text);

struct StepOutcome {
  Observation observation;
  double reward = 0.0;
  bool done = false;
  Termination cause = Termination::running;
  bool attack_applied = false;
  bool agent_rejected = false;
  std::vector<std::size_t> trips;
  std::vector<std::string> notices;
};

/// Overload and switching rules. Defaults follow the usual L2RPN-style
/// platform conventions.
struct EnvConfig {
  double hard_trip_rho = 2.0;
  int soft_overflow_steps = 3;
  int cooldown_steps = 12;
};

/// Result of a one-step lookahead with frozen injections.
struct Simulation {
  bool islanded_load = false;
  double max_rho = 0.0;
};

/// Discrete-time grid environment: one line-switching agent, one line-attacking
/// opponent, chronics-driven injections and maintenance, DC flows, overload
/// trips with a single cascade re-solve per step.
class Environment {
 public:
  Environment(Grid grid, std::shared_ptr<const Chronics> chronics, EnvConfig config = {});

  Observation reset(std::uint64_t seed = 0);
  StepOutcome step(const AgentAction& agent, const OpponentAction& opponent);

  const Observation& observation() const { return obs_; }
  bool done() const { return done_; }
  Termination termination() const { return cause_; }
  /// Reward of the current state (set by reset and by every step).
  double reward() const { return reward_; }

  const Grid& grid() const { return grid_; }
  const Chronics& chronics() const { return *chronics_; }
  const EnvConfig& config() const { return config_; }

  bool is_legal(const AgentAction& action) const;
  bool can_reconnect(std::size_t line) const;

  /// Applies `action` to the current topology and re-solves with the current
  /// injections. No opponent, no maintenance transition, no trips.
  Simulation simulate(const AgentAction& action) const;

 private:
  void disconnect(std::size_t line, LineCause cause);
  double compute_reward(const FlowSolution& sol) const;
  void refresh_observation(const FlowSolution& sol);

  Grid grid_;
  std::shared_ptr<const Chronics> chronics_;
  EnvConfig config_;

  int t_ = 0;
  LineMask connected_;
  std::vector<LineCause> cause_by_line_;
  std::vector<int> cooldown_;
  std::vector<int> overflow_streak_;
  std::optional<ActiveAttack> attack_;
  Observation obs_;
  double reward_ = 0.0;
  bool done_ = true;
  Termination cause_ = Termination::running;
};

/// Margin reward: mean over all lines of max(0, 1 - rho^2), open lines count 0.
double margin_reward(const FlowSolution& sol, const LineMask& connected);

}  // namespace gridguard
