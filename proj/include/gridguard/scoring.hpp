#pragma once

#include <vector>

namespace gridguard {

/// Per-scenario reference points for competition-style scores.
struct ScenarioAnchors {
  double dn_return = 0.0;  // cumulative reward of the do-nothing agent
  int dn_steps = 0;        // states the do-nothing agent survived
  int n_steps = 0;         // scenario length
  double max_return = 0.0; // n_steps with every reward at 1

  /// Return that maps to 80: the do-nothing return if it completes, else its
  /// per-step rate extrapolated to the full scenario.
  double completion_return() const;
};

ScenarioAnchors make_anchors(double dn_return, int dn_steps, int n_steps);

/// Piecewise-linear score in [-100, 100]: -100 for an initial blackout,
/// 0 at the do-nothing return, 80 at the completion anchor, 100 at the
/// maximum return. Throws ConsistencyError on unusable anchors.
double score_episode(double episode_return, int steps_survived, const ScenarioAnchors& anchors);

/// Centered moving average over `window` samples, truncated at the edges.
std::vector<double> moving_average(const std::vector<double>& x, int window);

/// Central differences divided by `spacing`; one-sided at the ends.
std::vector<double> central_difference(const std::vector<double>& x, double spacing = 1.0);

/// Pearson correlation; NaN when either series is constant or too short.
double pearson(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace gridguard
