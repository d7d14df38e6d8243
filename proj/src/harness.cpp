#include "iipm/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "iipm/rng.hpp"

namespace iipm {

namespace {

constexpr double kRowSumTol = 1e-6;

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

double parse_double(const std::string& s, std::size_t line_number) {
  double value = 0.0;
  const char* begin = s.data();
  const char* end = begin + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError("bad numeric field '" + s + "'", line_number);
  }
  return value;
}

int parse_int(const std::string& s, std::size_t line_number) {
  int value = 0;
  const char* begin = s.data();
  const char* end = begin + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError("bad integer field '" + s + "'", line_number);
  }
  return value;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double measure_score(const UncertaintyScores& s, const std::string& name) {
  if (name == "mmi") return *s.mmi_tv;
  if (name == "mmi-lin") return *s.mmi_lin;
  if (name == "gh") return *s.gh;
  return *s.e_diff;  // ediff
}

bool measure_present(const UncertaintyScores& s, const std::string& name) {
  if (name == "mmi") return s.mmi_tv.has_value();
  if (name == "mmi-lin") return s.mmi_lin.has_value();
  if (name == "gh") return s.gh.has_value();
  return s.e_diff.has_value();
}

}  // namespace

const std::vector<std::string>& known_measures() {
  static const std::vector<std::string> names = {"mmi", "mmi-lin", "gh",
                                                 "ediff"};
  return names;
}

PredictionTable load_predictions(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open '" + path + "' for reading");
  }
  std::string line;
  std::size_t line_number = 1;
  if (!std::getline(in, line)) {
    throw ParseError("empty file", line_number);
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  auto header = split_csv_line(line);
  if (header.size() < 4 || header[0] != "instance_id" ||
      header[1] != "true_label" || header[2] != "predictor_id") {
    throw ParseError(
        "header must start with instance_id,true_label,predictor_id,p_0,...",
        line_number);
  }
  const int k = static_cast<int>(header.size()) - 3;
  for (int i = 0; i < k; ++i) {
    if (header[3 + i] != "p_" + std::to_string(i)) {
      throw ParseError("probability column " + std::to_string(i) +
                           " must be named p_" + std::to_string(i),
                       line_number);
    }
  }

  struct InstanceBuilder {
    int true_label = -1;
    std::size_t first_line = 0;
    std::map<std::string, std::vector<double>> rows;  // predictor -> probs
  };
  std::vector<std::string> order;
  std::unordered_map<std::string, InstanceBuilder> builders;

  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != header.size()) {
      throw ParseError("expected " + std::to_string(header.size()) +
                           " fields, got " + std::to_string(fields.size()),
                       line_number);
    }
    const std::string& instance_id = fields[0];
    const int true_label = parse_int(fields[1], line_number);
    if (true_label < 0 || true_label >= k) {
      throw ParseError("true_label " + std::to_string(true_label) +
                           " out of range [0," + std::to_string(k) + ")",
                       line_number);
    }
    const std::string& predictor_id = fields[2];
    std::vector<double> probs(k);
    double row_sum = 0.0;
    for (int i = 0; i < k; ++i) {
      probs[i] = parse_double(fields[3 + i], line_number);
      if (!std::isfinite(probs[i]) || probs[i] < 0.0) {
        throw NotNormalized("negative or non-finite probability for instance " +
                            instance_id + ", predictor " + predictor_id);
      }
      row_sum += probs[i];
    }
    if (std::abs(row_sum - 1.0) > kRowSumTol) {
      throw NotNormalized("row for instance " + instance_id + ", predictor " +
                          predictor_id + " sums to " + format_double(row_sum));
    }
    for (double& v : probs) v /= row_sum;

    auto [it, inserted] = builders.try_emplace(instance_id);
    if (inserted) {
      order.push_back(instance_id);
      it->second.true_label = true_label;
      it->second.first_line = line_number;
    } else if (it->second.true_label != true_label) {
      throw InconsistentShape("instance " + instance_id +
                              " has conflicting true labels");
    }
    if (!it->second.rows.emplace(predictor_id, std::move(probs)).second) {
      throw InconsistentShape("duplicate row for instance " + instance_id +
                              ", predictor " + predictor_id);
    }
  }
  if (order.empty()) {
    throw ParseError("no data rows", line_number);
  }

  const auto& first = builders.at(order.front());
  std::vector<std::string> predictor_ids;
  for (const auto& [pid, row] : first.rows) predictor_ids.push_back(pid);

  PredictionTable table;
  table.class_count = k;
  for (int i = 0; i < k; ++i) table.class_labels.push_back(std::to_string(i));
  table.predictor_count = static_cast<int>(predictor_ids.size());
  table.instances.reserve(order.size());
  for (const auto& instance_id : order) {
    auto& builder = builders.at(instance_id);
    if (builder.rows.size() != predictor_ids.size()) {
      throw InconsistentShape("instance " + instance_id + " has " +
                              std::to_string(builder.rows.size()) +
                              " predictor rows, expected " +
                              std::to_string(predictor_ids.size()));
    }
    PredictionRecord record;
    record.instance_id = instance_id;
    record.true_label = builder.true_label;
    record.probs.reserve(predictor_ids.size());
    for (const auto& pid : predictor_ids) {
      auto it = builder.rows.find(pid);
      if (it == builder.rows.end()) {
        throw InconsistentShape("instance " + instance_id +
                                " is missing predictor " + pid);
      }
      record.probs.push_back(std::move(it->second));
    }
    table.instances.push_back(std::move(record));
  }
  return table;
}

void write_predictions(const PredictionTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  out << "instance_id,true_label,predictor_id";
  for (int i = 0; i < table.class_count; ++i) out << ",p_" << i;
  out << "\n";
  for (const auto& record : table.instances) {
    for (std::size_t j = 0; j < record.probs.size(); ++j) {
      out << record.instance_id << "," << record.true_label << "," << j;
      for (double v : record.probs[j]) out << "," << format_double(v);
      out << "\n";
    }
  }
  if (!out) {
    throw IoError("failed writing '" + path + "'");
  }
}

InstanceLowerProb build_instance_lower_prob(const PredictionRecord& record,
                                            int class_count,
                                            int exact_k_guard) {
  InstanceLowerProb out;
  out.singleton_lower.assign(class_count,
                             std::numeric_limits<double>::infinity());
  for (const auto& row : record.probs) {
    for (int i = 0; i < class_count; ++i) {
      out.singleton_lower[i] = std::min(out.singleton_lower[i], row[i]);
    }
  }
  if (class_count <= exact_k_guard) {
    CredalSet credal(FiniteSpace::indexed(class_count), record.probs);
    out.full = capacity_from_credal(credal);
  }
  return out;
}

int centroid_predict(const PredictionRecord& record) {
  const std::size_t k = record.probs.front().size();
  std::vector<double> mean(k, 0.0);
  for (const auto& row : record.probs) {
    for (std::size_t i = 0; i < k; ++i) mean[i] += row[i];
  }
  int best = 0;
  for (std::size_t i = 1; i < k; ++i) {
    if (mean[i] > mean[best]) best = static_cast<int>(i);
  }
  return best;
}

std::vector<InstanceScore> score_instances(const PredictionTable& table,
                                           const RunConfig& config) {
  for (const auto& name : config.measures) {
    if (std::find(known_measures().begin(), known_measures().end(), name) ==
        known_measures().end()) {
      throw Error("unknown measure '" + name + "'");
    }
  }
  const int k = table.class_count;
  const bool want_mmi = std::count(config.measures.begin(),
                                   config.measures.end(), "mmi") > 0;
  const bool want_lin = std::count(config.measures.begin(),
                                   config.measures.end(), "mmi-lin") > 0;
  const bool want_gh =
      std::count(config.measures.begin(), config.measures.end(), "gh") > 0;
  const bool want_ediff = std::count(config.measures.begin(),
                                     config.measures.end(), "ediff") > 0;
  const bool exact_ok = k <= config.exact_k_guard;

  std::vector<InstanceScore> out;
  out.reserve(table.instances.size());
  for (const auto& record : table.instances) {
    InstanceScore score;
    score.instance_id = record.instance_id;
    score.correct = centroid_predict(record) == record.true_label;

    const auto lower =
        build_instance_lower_prob(record, k, config.exact_k_guard);
    if (want_mmi) {
      if (exact_ok) {
        score.scores.mmi_tv = mmi_tv(*lower.full).value;
      } else {
        score.scores.mmi_tv_guard_skipped = true;
      }
    }
    if (want_gh) {
      if (exact_ok) {
        score.scores.gh = std::max(0.0, gh_measure(*lower.full));
      } else {
        score.scores.gh_guard_skipped = true;
      }
    }
    if (want_lin) {
      double singleton_total = 0.0;
      for (double v : lower.singleton_lower) singleton_total += v;
      score.scores.mmi_lin = std::max(0.0, 1.0 - singleton_total);
    }
    if (want_ediff) {
      CredalSet credal(FiniteSpace::indexed(k), record.probs);
      score.scores.e_diff = entropy_difference(credal).value;
    }
    out.push_back(std::move(score));
  }
  std::sort(out.begin(), out.end(),
            [](const InstanceScore& a, const InstanceScore& b) {
              return a.instance_id < b.instance_id;
            });
  return out;
}

std::vector<double> rejection_grid(double grid_max, double grid_step) {
  if (!(grid_step > 0.0) || grid_max < 0.0 || grid_max >= 1.0) {
    throw Error("rejection grid must lie in [0,1) with positive step");
  }
  std::vector<double> grid;
  for (int i = 0;; ++i) {
    const double p = i * grid_step;
    if (p > grid_max + 1e-12) break;
    grid.push_back(p);
  }
  return grid;
}

ARCurve accuracy_rejection_curve(const std::vector<bool>& correctness,
                                 const std::vector<double>& scores,
                                 const std::vector<double>& grid) {
  if (correctness.size() != scores.size()) {
    throw LengthMismatch("correctness and scores differ in length");
  }
  const std::size_t n = correctness.size();
  if (n == 0) {
    throw EmptyInput("no instances to build a curve from");
  }
  if (grid.empty()) {
    throw EmptyInput("empty rejection grid");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 0.0 || grid[i] >= 1.0 ||
        (i > 0 && grid[i] <= grid[i - 1])) {
      throw Error("rejection grid must be increasing within [0,1)");
    }
  }

  // Rejection order: score descending, ties by instance order.
  std::vector<std::size_t> ranking(n);
  std::iota(ranking.begin(), ranking.end(), std::size_t{0});
  std::stable_sort(ranking.begin(), ranking.end(),
                   [&](std::size_t a, std::size_t b) {
                     return scores[a] > scores[b];
                   });

  ARCurve curve;
  curve.rejection_rates = grid;
  curve.accuracies.reserve(grid.size());
  for (double p : grid) {
    auto rejected =
        static_cast<std::size_t>(std::ceil(p * double(n) - 1e-9));
    rejected = std::min(rejected, n);
    const std::size_t kept = n - rejected;
    if (kept == 0) {
      curve.accuracies.push_back(1.0);
      continue;
    }
    std::size_t hits = 0;
    for (std::size_t r = rejected; r < n; ++r) {
      if (correctness[ranking[r]]) ++hits;
    }
    curve.accuracies.push_back(double(hits) / double(kept));
  }

  if (grid.size() == 1) {
    curve.auc = curve.accuracies.front();
  } else {
    double area = 0.0;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
      area += (grid[i + 1] - grid[i]) *
              (curve.accuracies[i] + curve.accuracies[i + 1]) / 2.0;
    }
    curve.auc = area / (grid.back() - grid.front());
  }
  return curve;
}

double spearman(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw LengthMismatch("correlation inputs differ in length");
  }
  const std::size_t n = a.size();
  if (n == 0) {
    throw EmptyInput("cannot correlate empty vectors");
  }
  auto ranks = [n](const std::vector<double>& v) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return v[x] < v[y]; });
    std::vector<double> rank(n);
    std::size_t i = 0;
    while (i < n) {
      std::size_t j = i;
      while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
      const double avg = (double(i) + double(j)) / 2.0;
      for (std::size_t t = i; t <= j; ++t) rank[order[t]] = avg;
      i = j + 1;
    }
    return rank;
  };
  const auto ra = ranks(a);
  const auto rb = ranks(b);
  double mean_a = 0.0, mean_b = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_a += ra[i];
    mean_b += rb[i];
  }
  mean_a /= double(n);
  mean_b /= double(n);
  double cov = 0.0, var_a = 0.0, var_b = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double da = ra[i] - mean_a;
    const double db = rb[i] - mean_b;
    cov += da * db;
    var_a += da * da;
    var_b += db * db;
  }
  if (var_a == 0.0 && var_b == 0.0) return 1.0;
  if (var_a == 0.0 || var_b == 0.0) return 0.0;
  return cov / std::sqrt(var_a * var_b);
}

PredictionTable synth_generate(std::uint64_t seed, int n_instances,
                               int class_count, int predictor_count,
                               const std::string& profile) {
  if (n_instances < 0 || class_count < 1 || predictor_count < 1) {
    throw Error("synth requires n >= 0, k >= 1, m >= 1");
  }
  if (profile != "easy" && profile != "hard" && profile != "mixed") {
    throw Error("unknown noise profile '" + profile +
                "' (easy, hard, mixed)");
  }
  detail::Rng rng(seed);

  PredictionTable table;
  table.class_count = class_count;
  for (int i = 0; i < class_count; ++i) {
    table.class_labels.push_back(std::to_string(i));
  }
  table.predictor_count = predictor_count;
  table.instances.reserve(n_instances);

  for (int idx = 0; idx < n_instances; ++idx) {
    double difficulty;
    if (profile == "easy") {
      difficulty = 0.08 * rng.uniform01();
    } else if (profile == "hard") {
      difficulty = rng.uniform(0.55, 1.0);
    } else {
      difficulty = rng.uniform01();
    }
    const int anchor = rng.uniform_int(0, class_count - 1);
    const double diffuse = 0.05 + 0.9 * difficulty;
    const auto direction = rng.simplex_point(class_count);
    std::vector<double> base(class_count);
    for (int i = 0; i < class_count; ++i) {
      base[i] = diffuse * direction[i] + (i == anchor ? 1.0 - diffuse : 0.0);
    }

    PredictionRecord record;
    char id[16];
    std::snprintf(id, sizeof(id), "i%06d", idx);
    record.instance_id = id;
    record.true_label = rng.categorical(base);
    record.probs.reserve(predictor_count);
    for (int j = 0; j < predictor_count; ++j) {
      const double eta = difficulty * rng.uniform(0.25, 0.75);
      const auto outlier = rng.simplex_point(class_count);
      std::vector<double> row(class_count);
      for (int i = 0; i < class_count; ++i) {
        row[i] = (1.0 - eta) * base[i] + eta * outlier[i];
      }
      record.probs.push_back(std::move(row));
    }
    table.instances.push_back(std::move(record));
  }
  return table;
}

ScoreReport build_report(const std::vector<InstanceScore>& scores,
                         const RunConfig& config) {
  if (scores.empty()) {
    throw EmptyInput("no scored instances to build curves from");
  }
  ScoreReport report;
  report.config = config;
  report.n_instances = static_cast<int>(scores.size());

  const auto grid = rejection_grid(config.grid_max, config.grid_step);
  std::vector<bool> correctness;
  correctness.reserve(scores.size());
  for (const auto& s : scores) correctness.push_back(s.correct);

  std::vector<std::string> computed;
  for (const auto& name : known_measures()) {
    if (std::find(config.measures.begin(), config.measures.end(), name) ==
        config.measures.end()) {
      continue;
    }
    MeasureReport mr;
    const bool present = measure_present(scores.front().scores, name);
    if (!present) {
      mr.skipped = true;
    } else {
      std::vector<double> values;
      values.reserve(scores.size());
      for (const auto& s : scores) {
        values.push_back(measure_score(s.scores, name));
      }
      mr.curve = accuracy_rejection_curve(correctness, values, grid);
      computed.push_back(name);
    }
    report.measures.emplace_back(name, std::move(mr));
  }

  for (std::size_t i = 0; i < computed.size(); ++i) {
    for (std::size_t j = i + 1; j < computed.size(); ++j) {
      std::vector<double> a, b;
      a.reserve(scores.size());
      b.reserve(scores.size());
      for (const auto& s : scores) {
        a.push_back(measure_score(s.scores, computed[i]));
        b.push_back(measure_score(s.scores, computed[j]));
      }
      report.correlations.emplace_back(computed[i] + "__" + computed[j],
                                       spearman(a, b));
    }
  }
  return report;
}

void emit_report(const ScoreReport& report, const std::string& output_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(output_dir, ec);
  if (ec) {
    throw IoError("cannot create output directory '" + output_dir + "'");
  }

  nlohmann::ordered_json doc;
  nlohmann::ordered_json config;
  config["measures"] = report.config.measures;
  config["grid_max"] = report.config.grid_max;
  config["grid_step"] = report.config.grid_step;
  config["exact_k_guard"] = report.config.exact_k_guard;
  config["seed"] = report.config.seed;
  config["input"] = report.config.input_path;
  config["auc_normalization"] = "trapezoid over grid, divided by grid span";
  doc["config"] = std::move(config);

  nlohmann::ordered_json measures;
  for (const auto& [name, mr] : report.measures) {
    nlohmann::ordered_json entry;
    if (mr.skipped) {
      entry["skipped"] = true;
    } else {
      entry["rejection_rates"] = mr.curve.rejection_rates;
      entry["accuracies"] = mr.curve.accuracies;
      entry["auc"] = mr.curve.auc;
      entry["skipped"] = false;
    }
    measures[name] = std::move(entry);
  }
  doc["measures"] = std::move(measures);

  nlohmann::ordered_json correlations = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.correlations) {
    correlations[key] = value;
  }
  doc["correlations"] = std::move(correlations);
  doc["n_instances"] = report.n_instances;

  const fs::path json_path = fs::path(output_dir) / "report.json";
  std::ofstream json_out(json_path);
  if (!json_out) {
    throw IoError("cannot open '" + json_path.string() + "' for writing");
  }
  json_out << doc.dump(2) << "\n";
  if (!json_out) {
    throw IoError("failed writing '" + json_path.string() + "'");
  }

  const fs::path csv_path = fs::path(output_dir) / "curves.csv";
  std::ofstream csv_out(csv_path);
  if (!csv_out) {
    throw IoError("cannot open '" + csv_path.string() + "' for writing");
  }
  csv_out << "measure,rejection_rate,accuracy\n";
  for (const auto& [name, mr] : report.measures) {
    if (mr.skipped) continue;
    for (std::size_t i = 0; i < mr.curve.rejection_rates.size(); ++i) {
      csv_out << name << "," << format_double(mr.curve.rejection_rates[i])
              << "," << format_double(mr.curve.accuracies[i]) << "\n";
    }
  }
  if (!csv_out) {
    throw IoError("failed writing '" + csv_path.string() + "'");
  }
}

}  // namespace iipm
