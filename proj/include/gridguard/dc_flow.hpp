#pragma once

#include <cstddef>
#include <vector>

#include "gridguard/grid.hpp"

namespace gridguard {

/// Net injection per bus in MW (generation positive, load negative),
/// indexed like Grid::buses().
using InjectionVector = std::vector<double>;

/// Injections below this magnitude (MW) count as zero when deciding
/// whether an island carries load.
inline constexpr double kIslandInjectionTolerance = 1e-9;

struct FlowSolution {
  std::vector<double> flow_mw;  // signed from -> to, 0 for open lines
  std::vector<double> theta;    // radians, slack at 0, 0 outside the slack component
  std::vector<double> rho;      // |flow| / limit, 0 for open lines
  std::vector<bool> energized;  // bus belongs to the slack component
  double slack_injection_mw = 0.0;
  bool islanded_load = false;   // some bus outside the slack component has a nonzero injection

  double max_rho() const;
};

/// DC power flow over the lines in `connected`.
///
/// The slack bus absorbs the imbalance of its component. Buses outside the
/// slack component get theta = 0; if any of them carries a nonzero injection
/// the returned solution has `islanded_load` set instead of throwing.
FlowSolution try_solve_dc(const Grid& grid, const InjectionVector& injections,
                          const LineMask& connected);

/// As try_solve_dc, but throws IslandedLoad when load is cut off from the slack.
FlowSolution solve_dc(const Grid& grid, const InjectionVector& injections,
                      const LineMask& connected);

/// Indices of lines whose relative loading strictly exceeds 1.
std::vector<std::size_t> check_overflow(const FlowSolution& sol);

}  // namespace gridguard
