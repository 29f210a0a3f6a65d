#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "gridguard/chronics.hpp"
#include "gridguard/environment.hpp"
#include "gridguard/grid.hpp"

namespace gridguard {

/// Attack constraints. Steps are environment steps (5 minutes by default),
/// so 48 steps = 4 h and 288 steps = 24 h.
struct OpponentConfig {
  int n_attack = 1;
  int d_attack = 48;
  int t_attack = 288;
  double attack_cost = 1.0;
  double budget_per_step = 1.0 / 288.0;
  double initial_budget = 1.0;

  void validate() const;
};

struct OpponentState {
  double budget = 0.0;
  long period = -1;                    // index k of the current attack period
  std::optional<int> scheduled;        // t_k for the current period
  std::optional<int> last_attack;      // start step of the most recent attack
  std::optional<ActiveAttack> active;
  std::vector<int> attack_counts;      // per line index; nonzero only on attackable lines
  std::vector<double> alpha;           // per line index
};

class Opponent {
 public:
  virtual ~Opponent() = default;
  virtual void reset(std::uint64_t seed) = 0;
  virtual OpponentAction act(const Observation& obs) = 0;
  virtual std::string_view name() const = 0;
};

class DoNothingOpponent final : public Opponent {
 public:
  void reset(std::uint64_t) override {}
  OpponentAction act(const Observation&) override { return OpponentAction::do_nothing(); }
  std::string_view name() const override { return "do_nothing"; }
};

/// budget += budget_per_step.
void tick_budget(OpponentState& state, const OpponentConfig& config);

/// Uniform draw of the attack time inside period `period`, restricted to
/// steps >= last attack + d_attack. Empty when no step is feasible.
std::optional<int> schedule_attack_time(const OpponentState& state, const OpponentConfig& config,
                                        long period, std::mt19937_64& rng);

/// Normalized attack probabilities over `candidates` (rho / alpha, uniform
/// when every weight is zero). Empty input gives an empty result.
std::vector<double> wro_probabilities(const std::vector<std::size_t>& candidates,
                                      const std::vector<double>& rho,
                                      const std::vector<double>& alpha);

/// Picks the attacked line at a scheduled step and books the attack
/// (budget, counts, active attack). Returns empty when infeasible.
std::optional<std::size_t> wro_pick_line(const Observation& obs, const Grid& grid,
                                         OpponentState& state, const OpponentConfig& config,
                                         std::mt19937_64& rng);

/// Time-mean of rho per line over a do-nothing, opponent-free rollout,
/// counting only steps where the line is connected. Floored at 1e-6.
std::vector<double> compute_alpha(const Grid& grid, const Chronics& chronics);

inline constexpr double kAlphaFloor = 1e-6;

/// max_i n_i - min_j n_j.
int delta_attack(const std::vector<int>& counts);

/// Counts restricted to the attackable lines of `grid`, in attackable order.
std::vector<int> attackable_counts(const Grid& grid, const std::vector<int>& counts);

class WeightedRandomOpponent final : public Opponent {
 public:
  WeightedRandomOpponent(Grid grid, OpponentConfig config, std::vector<double> alpha);

  void reset(std::uint64_t seed) override;
  OpponentAction act(const Observation& obs) override;
  std::string_view name() const override { return "weighted_random"; }

  const OpponentState& state() const { return state_; }
  const OpponentConfig& config() const { return config_; }

 private:
  Grid grid_;
  OpponentConfig config_;
  std::vector<double> alpha_;
  OpponentState state_;
  std::mt19937_64 rng_;
};

}  // namespace gridguard
