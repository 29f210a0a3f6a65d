#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "gridguard/chronics.hpp"
#include "gridguard/dc_flow.hpp"
#include "gridguard/episode.hpp"
#include "gridguard/grid.hpp"

namespace gridguard {

/// Exponentially decreasing weights w_j = exp(-lambda (j-1)/(n-1)), j = 1..n,
/// so the largest weight is exactly 1.
class WeightVector {
 public:
  WeightVector(double lambda, std::size_t n_lines);

  double lambda() const { return lambda_; }
  std::size_t size() const { return w_.size(); }
  const std::vector<double>& weights() const { return w_; }
  double operator[](std::size_t j) const { return w_[j]; }
  double sum() const;

 private:
  double lambda_;
  std::vector<double> w_;
};

/// Number of "worst" outages the calibration targets: ceil(fraction * n).
std::size_t worst_count(std::size_t n_lines, double fraction);

/// Share of the total weight carried by the first `m` weights.
double head_mass(double lambda, std::size_t n_lines, std::size_t m);

/// Lambda such that the `fraction` worst outages carry `mass` of the total
/// weight, by bisection to |ratio - mass| <= 1e-10.
double calibrate_lambda(std::size_t n_lines, double mass = 0.95, double fraction = 0.2);

/// Sorted pairing: the j-th smallest score meets w_j.
double weighted_reward(const std::vector<double>& scores, const WeightVector& weights);
double uniform_reward(const std::vector<double>& scores);
double worst_case_reward(const std::vector<double>& scores);

/// N-1 stability score per attackable line (attackable order): 1 when the
/// single outage leaves no overflow and no islanded load, else 0. An outage of
/// an already open line is the current state itself.
std::vector<double> stability_scores(const Grid& grid, const LineMask& connected,
                                     const InjectionVector& injections);

struct EvalRecord {
  int t = 0;
  std::vector<double> scores;
  double r_weighted = 0.0;
  double r_uniform = 0.0;
  double r_worst = 0.0;
  double total_load = 0.0;
  bool operator==(const EvalRecord&) const = default;
};

EvalRecord evaluate_state(const Grid& grid, int t, const LineMask& connected,
                          const Chronics& chronics, const WeightVector& weights);

/// Replays every `stride`-th valid state of `log`.
std::vector<EvalRecord> evaluate_episode(const EpisodeLog& log, const Grid& grid,
                                         const Chronics& chronics, const WeightVector& weights,
                                         int stride = 1);

/// CSV: t, S_<line id>..., r_weighted, r_uniform, r_worst, total_load.
/// With `normalize`, r_weighted is divided by the weight sum.
void write_eval_csv(std::ostream& out, const std::vector<EvalRecord>& records, const Grid& grid,
                    double weight_sum = 1.0);

}  // namespace gridguard
