#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gridguard/agents.hpp"
#include "gridguard/chronics.hpp"
#include "gridguard/environment.hpp"
#include "gridguard/episode.hpp"
#include "gridguard/evaluation.hpp"
#include "gridguard/grid.hpp"
#include "gridguard/opponent.hpp"
#include "gridguard/scoring.hpp"
#include "json.hpp"

namespace gridguard {

struct GeneratedScenarios {
  int count = 1;
  std::uint64_t seed = 1;
  int days = 7;
  ProfileParams profile;
};

struct OpponentSpec {
  std::string kind = "do_nothing";  // do_nothing | weighted_random
  OpponentConfig config;
};

struct RunConfig {
  std::string grid_path;
  std::vector<std::string> chronics_files;
  std::optional<GeneratedScenarios> generate;
  std::vector<AgentConfig> agents;
  OpponentSpec opponent;
  std::vector<std::uint64_t> seeds{0};
  int stride = 1;
  std::optional<double> lambda;  // empty = calibrate per attackable-set size
  bool normalize = false;
  std::string output_dir = "gridguard_out";
  EnvConfig env;
  int threads = 0;  // 0 = hardware concurrency

  void validate() const;
};

/// Built-in configuration: bundled grid and week, do-nothing
/// agent, no opponent.
RunConfig default_run_config();
/// Parses a config document; relative paths resolve against `base_dir`.
RunConfig parse_run_config(const nlohmann::json& doc, const std::string& base_dir = ".");
RunConfig load_run_config(const std::string& path);

struct Scenario {
  std::string label;
  Grid grid;  // attackable set extended with maintained lines
  std::shared_ptr<const Chronics> chronics;
};

std::vector<Scenario> load_scenarios(const RunConfig& config);

/// Episodes of one (agent, scenario, seed) triple.
struct RunRecord {
  std::string agent;
  std::size_t scenario = 0;
  std::uint64_t seed = 0;
  EpisodeLog episode;                  // scored run (configured opponent)
  std::optional<EpisodeLog> eval_run;  // opponent-free run when an opponent is active
  std::optional<std::string> error;

  const EpisodeLog& evaluated() const { return eval_run ? *eval_run : episode; }
};

/// Do-nothing reference run of one (scenario, seed) pair.
struct AnchorRecord {
  std::size_t scenario = 0;
  std::uint64_t seed = 0;
  EpisodeLog episode;
  std::optional<std::string> error;
};

struct RunSummary {
  std::string agent;
  std::string scenario;
  std::uint64_t seed = 0;
  std::optional<std::string> error;
  Termination cause = Termination::running;
  double episode_return = 0.0;
  int steps = 0;
  ScenarioAnchors anchors;
  double score = 0.0;
  double mean_weighted = 0.0;  // over every stride-th step, failed states count 0
  double load_correlation = 0.0;  // NaN when undefined
  int attacks = 0;
  int delta_attack = 0;
  std::vector<EvalRecord> eval;
};

struct BatchReport {
  std::vector<std::string> agents;
  std::vector<std::string> scenarios;
  std::vector<RunSummary> runs;  // agent-major, then scenario, then seed
  std::vector<int> line_ids;     // union of evaluated attackable lines
  std::vector<std::vector<double>> matrix;          // [agent][scenario] mean weighted reward
  std::vector<std::vector<double>> series;          // [agent][stride step] mean weighted reward
  std::vector<std::vector<double>> overflow_probs;  // [agent][line] P(outage overflows)
  std::vector<double> mean_score;
  std::vector<double> mean_weighted;
  int stride = 1;
  bool normalize = false;

  const RunSummary& run(const std::string& agent, std::size_t scenario, std::uint64_t seed) const;
};

struct BatchResult {
  std::vector<Scenario> scenarios;
  std::vector<AnchorRecord> anchors;
  std::vector<RunRecord> runs;
  BatchReport report;
};

std::uint64_t episode_seed(std::uint64_t seed, std::size_t scenario);

/// Correlation between total load and the smoothed derivative of the
/// weighted N-1 reward (12-step centered average, central differences).
double load_derivative_correlation(const std::vector<EvalRecord>& records, int stride);

/// Runs every (scenario, seed) pair, possibly in parallel, then evaluates and
/// scores. Does not touch the filesystem.
BatchResult run_batch(const RunConfig& config);
BatchResult run_batch(const RunConfig& config, std::vector<Scenario> scenarios);

/// Evaluation, scoring and aggregate analyses over finished episodes.
BatchReport build_report(const RunConfig& config, const std::vector<Scenario>& scenarios,
                         const std::vector<AnchorRecord>& anchors,
                         const std::vector<RunRecord>& runs);

/// Writes episodes/, eval/ and report/ under config.output_dir.
void write_batch(const RunConfig& config, const BatchResult& result);
void write_report(const std::string& dir, const BatchReport& report, const RunConfig& config);

/// Rebuilds the report from the episode logs persisted under `run_dir`.
BatchReport report_from_logs(const RunConfig& config, const std::string& run_dir);

std::string run_file_stem(const std::string& agent, const std::string& scenario, std::uint64_t seed);

}  // namespace gridguard
