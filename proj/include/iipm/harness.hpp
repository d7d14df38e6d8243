#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iipm/uncertainty.hpp"

namespace iipm {

// One test instance: its true label and the m x K matrix of per-predictor
// class probabilities (rows normalized at load).
struct PredictionRecord {
  std::string instance_id;
  int true_label = 0;
  std::vector<std::vector<double>> probs;
};

struct PredictionTable {
  int class_count = 0;
  std::vector<std::string> class_labels;
  int predictor_count = 0;
  std::vector<PredictionRecord> instances;
};

struct ARCurve {
  std::vector<double> rejection_rates;
  std::vector<double> accuracies;
  double auc = 0.0;
};

struct RunConfig {
  std::vector<std::string> measures = {"mmi", "mmi-lin", "gh", "ediff"};
  double grid_max = 0.9;
  double grid_step = 0.05;
  int exact_k_guard = kLatticeGuardDefault;
  std::uint64_t seed = 0;
  std::string input_path;
  std::string output_dir;
};

// Known measure names, in canonical report order.
const std::vector<std::string>& known_measures();

// Loads the long-format CSV (header: instance_id,true_label,predictor_id,
// p_0,...,p_{K-1}; one row per instance/predictor pair). Rows whose sums
// deviate from 1 by at most 1e-6 are renormalized; worse rows are rejected.
// Throws ParseError (with line number), NotNormalized, InconsistentShape,
// IoError.
PredictionTable load_predictions(const std::string& path);

// Writes a table back to the same CSV format.
void write_predictions(const PredictionTable& table, const std::string& path);

// Per-instance lower probability. Below the guard the full lattice capacity
// is built; above it only the singleton lower values (enough for mmi_lin;
// the record's generator rows remain available for e_diff).
struct InstanceLowerProb {
  std::optional<Capacity> full;
  std::vector<double> singleton_lower;
};
InstanceLowerProb build_instance_lower_prob(const PredictionRecord& record,
                                            int class_count,
                                            int exact_k_guard);

// Argmax of the predictor average; ties break toward the smallest index.
int centroid_predict(const PredictionRecord& record);

struct InstanceScore {
  std::string instance_id;
  bool correct = false;
  UncertaintyScores scores;
};

// Scores every instance with the configured measures; results are sorted by
// instance_id. Deterministic for a fixed table and config.
std::vector<InstanceScore> score_instances(const PredictionTable& table,
                                           const RunConfig& config);

// Rejection grid 0, step, 2*step, ... up to grid_max (inclusive).
std::vector<double> rejection_grid(double grid_max, double grid_step);

// Accuracy of the retained instances after rejecting the ceil(p*n) highest
// scores at each grid rate p (score ties break by instance order). An empty
// remainder counts as accuracy 1. The AUC is the trapezoid integral over
// the grid divided by the grid span.
ARCurve accuracy_rejection_curve(const std::vector<bool>& correctness,
                                 const std::vector<double>& scores,
                                 const std::vector<double>& grid);

// Spearman rank correlation with average ranks on ties. Two constant
// vectors correlate 1; a constant against a non-constant correlates 0.
double spearman(const std::vector<double>& a, const std::vector<double>& b);

// Deterministic synthetic ensemble table. Profiles: "easy" (tightly
// clustered predictors), "hard" (divergent predictors), "mixed" (difficulty
// drawn uniformly). Labels are sampled from each instance's base vector, so
// predictor spread and error probability rise together.
PredictionTable synth_generate(std::uint64_t seed, int n_instances,
                               int class_count, int predictor_count,
                               const std::string& profile);

struct MeasureReport {
  bool skipped = false;  // requested but K exceeded the exact guard
  ARCurve curve;         // empty when skipped
};

struct ScoreReport {
  RunConfig config;
  int n_instances = 0;
  // Measure name -> curve, in canonical order restricted to the request.
  std::vector<std::pair<std::string, MeasureReport>> measures;
  // "<a>__<b>" -> Spearman correlation across instances, for computed pairs.
  std::vector<std::pair<std::string, double>> correlations;
};

// Builds curves and correlations from instance scores.
ScoreReport build_report(const std::vector<InstanceScore>& scores,
                         const RunConfig& config);

// Writes report.json and curves.csv into the output directory.
// Throws IoError.
void emit_report(const ScoreReport& report, const std::string& output_dir);

}  // namespace iipm
