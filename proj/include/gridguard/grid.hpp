#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

namespace gridguard {

/// Per-line boolean mask, indexed by line position in Grid::lines().
using LineMask = std::vector<bool>;

struct Line {
  int id = 0;
  std::string from_bus;
  std::string to_bus;
  double susceptance = 0.0;  // per-unit on the grid's MVA base
  double limit_mw = 0.0;
};

/// Immutable network description.
///
/// Lines are kept sorted by id, so "lowest id" and "lowest index" coincide.
/// The attackable set is stored as sorted line indices.
class Grid {
 public:
  Grid(std::vector<std::string> buses, std::string slack, std::vector<Line> lines,
       std::vector<int> attackable_ids, double base_mva = 100.0);

  const std::vector<std::string>& buses() const { return buses_; }
  const std::vector<Line>& lines() const { return lines_; }
  std::size_t bus_count() const { return buses_.size(); }
  std::size_t line_count() const { return lines_.size(); }
  std::size_t slack_index() const { return slack_; }
  double base_mva() const { return base_mva_; }

  std::size_t from_index(std::size_t line) const { return from_[line]; }
  std::size_t to_index(std::size_t line) const { return to_[line]; }

  std::optional<std::size_t> bus_index(const std::string& bus) const;
  std::optional<std::size_t> line_index(int id) const;

  const std::vector<std::size_t>& attackable() const { return attackable_; }
  bool is_attackable(std::size_t line) const { return attackable_mask_[line]; }

  /// Copy of this grid whose attackable set also contains `extra` (line indices).
  Grid with_attackable(const std::vector<std::size_t>& extra) const;

  /// Nominal per-bus load and generation (MW, both >= 0) used by the
  /// scenario generator. Zero when the grid file does not provide them.
  const std::vector<double>& base_load_mw() const { return base_load_; }
  const std::vector<double>& base_gen_mw() const { return base_gen_; }
  void set_base_profile(std::vector<double> load_mw, std::vector<double> gen_mw);

  /// All-true mask.
  LineMask all_connected() const { return LineMask(lines_.size(), true); }

 private:
  std::vector<std::string> buses_;
  std::vector<Line> lines_;
  std::size_t slack_ = 0;
  double base_mva_ = 100.0;
  std::vector<std::size_t> from_;
  std::vector<std::size_t> to_;
  std::vector<std::size_t> attackable_;
  std::vector<bool> attackable_mask_;
  std::vector<double> base_load_;
  std::vector<double> base_gen_;
  std::unordered_map<std::string, std::size_t> bus_lookup_;
  std::unordered_map<int, std::size_t> line_lookup_;
};

Grid grid_from_json(const nlohmann::json& doc);
nlohmann::json grid_to_json(const Grid& grid);
Grid load_grid(const std::string& path);

/// Path of the bundled 14-bus grid shipped with the library.
std::string bundled_grid_path();

}  // namespace gridguard
