#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gridguard/agents.hpp"
#include "gridguard/chronics.hpp"
#include "gridguard/environment.hpp"
#include "gridguard/opponent.hpp"

namespace gridguard {

/// One record per environment state. Actions are the ones that produced
/// this state (absent for t = 0).
struct StepRecord {
  int t = 0;
  double reward = 0.0;
  std::vector<double> rho;
  std::vector<LineCause> status;
  AgentAction agent;
  bool agent_rejected = false;
  OpponentAction opponent;
  std::optional<ActiveAttack> attack;
  std::vector<std::size_t> trips;
  std::vector<std::string> notices;

  LineMask connected() const;
  bool operator==(const StepRecord&) const = default;
};

struct AttackEvent {
  std::size_t line = 0;
  int start = 0;     // observation step at which the attack was launched
  int duration = 0;  // solved states the line was held out by the attack
  bool operator==(const AttackEvent&) const = default;
};

struct EpisodeLog {
  std::string label;
  std::vector<StepRecord> steps;
  std::vector<AttackEvent> attacks;
  Termination cause = Termination::running;
  double total_return = 0.0;
  int steps_survived = 0;  // states with a valid, non-blackout grid

  bool operator==(const EpisodeLog&) const = default;
};

/// Runs reset/step to termination. `opponent` may be null (no opponent).
EpisodeLog run_episode(Agent& agent, Opponent* opponent, const Grid& grid,
                       std::shared_ptr<const Chronics> chronics, std::uint64_t seed,
                       const EnvConfig& config = {});

/// JSON-lines: one object per state, then a footer object.
void write_episode_log(std::ostream& out, const EpisodeLog& log, const Grid& grid);
EpisodeLog read_episode_log(std::istream& in, const Grid& grid);
void save_episode_log(const std::string& path, const EpisodeLog& log, const Grid& grid);
EpisodeLog load_episode_log(const std::string& path, const Grid& grid);

}  // namespace gridguard
