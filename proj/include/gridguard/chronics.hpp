#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gridguard/dc_flow.hpp"
#include "gridguard/grid.hpp"

namespace gridguard {

/// Scenario time series. Loads and generation are kept separately (both in
/// MW, loads positive) so the load signal survives netting at a bus.
struct Chronics {
  std::string label;
  double step_minutes = 5.0;
  std::vector<std::vector<double>> load_mw;  // [step][bus]
  std::vector<std::vector<double>> gen_mw;   // [step][bus]
  std::vector<LineMask> maintenance;         // [step][line], true = forced out

  std::size_t n_steps() const { return load_mw.size(); }

  /// gen - load per bus at step t.
  InjectionVector injections(std::size_t t) const;

  /// Line indices that appear in any maintenance window.
  std::vector<std::size_t> maintained_lines() const;
};

struct ProfileParams {
  double step_minutes = 5.0;
  /// Depth of the daily swing below the base case; 0 keeps the base case.
  double amplitude = 0.35;
  /// Per-bus noise, as a fraction of the daily swing.
  double noise = 0.05;
  /// Expected maintenance windows per attackable line per week.
  double maintenance_per_week = 1.0;
  /// Peak output of an optional midday solar profile.
  double solar_mw = 0.0;
  std::string solar_bus;
};

inline constexpr double kMaintenanceHours = 4.0;

/// Reads the chronics CSV format (`step`, `load_<bus>`, `gen_<bus>`, `maint`).
Chronics load_chronics(const std::string& path, const Grid& grid, double step_minutes = 5.0);
Chronics parse_chronics(std::istream& in, const Grid& grid, double step_minutes = 5.0,
                        const std::string& label = "chronics");

void write_chronics(std::ostream& out, const Chronics& chronics, const Grid& grid);
void save_chronics(const std::string& path, const Chronics& chronics, const Grid& grid);

/// Seeded synthetic week(s) around the grid's base profile.
Chronics generate_chronics(const Grid& grid, std::uint64_t seed, int days,
                           const ProfileParams& params = {});

/// Sum of load at step t (MW).
double total_load(const Chronics& chronics, std::size_t t);

/// Grid whose attackable set also holds every line with a maintenance window.
Grid with_maintenance_attackable(const Grid& grid, const Chronics& chronics);

/// One generated week shipped with the bundled grid (no maintenance).
std::string bundled_week_path();

/// Throws ConsistencyError if chronics and grid dimensions disagree.
void check_consistent(const Grid& grid, const Chronics& chronics);

}  // namespace gridguard
