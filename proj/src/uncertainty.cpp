#include "iipm/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace iipm {

namespace {

constexpr double kLn2 = 0.6931471805599453;
constexpr double kFwGapTol = 1e-8;
constexpr int kFwMaxIterations = 1000;

double entropy_bits(const std::vector<double>& p) {
  double total = 0.0;
  for (double v : p) {
    if (v > 0.0) total -= v * std::log2(v);
  }
  return total;
}

// d/dp_i of the entropy in bits, with p_i clamped away from 0 so the
// gradient stays finite on the boundary of the simplex.
void entropy_gradient(const std::vector<double>& p, std::vector<double>& g) {
  g.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double v = std::max(p[i], 1e-300);
    g[i] = -(std::log(v) + 1.0) / kLn2;
  }
}

// Maximizes H(p + alpha * dir) for alpha in [0, alpha_max] along a segment
// that stays inside the simplex. The directional derivative is strictly
// decreasing, so a safeguarded Newton search on its root converges in a
// handful of probes.
double entropy_line_search(const std::vector<double>& p,
                           const std::vector<double>& dir, double alpha_max) {
  const std::size_t k = p.size();
  auto derivative = [&](double alpha) {
    double d = 0.0;
    double curvature = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      const double q = std::max(p[i] + alpha * dir[i], 1e-300);
      d -= dir[i] * (std::log(q) + 1.0);
      curvature -= dir[i] * dir[i] / q;
    }
    return std::pair{d, curvature};
  };
  auto [d_hi, unused] = derivative(alpha_max);
  if (d_hi >= 0.0) return alpha_max;
  double lo = 0.0, hi = alpha_max;
  double alpha = 0.5 * alpha_max;
  for (int it = 0; it < 30 && hi - lo > 1e-13 * alpha_max; ++it) {
    auto [d, curvature] = derivative(alpha);
    if (d > 0.0) {
      lo = alpha;
    } else {
      hi = alpha;
    }
    double next = 0.5 * (lo + hi);
    if (curvature < 0.0) {
      const double newton = alpha - d / curvature;
      if (newton > lo && newton < hi) next = newton;
    }
    if (std::abs(next - alpha) < 1e-14 * alpha_max) break;
    alpha = next;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

MmiResult mmi_tv(const Capacity& lower, int lattice_guard) {
  const int k = lower.outcome_count();
  if (k > lattice_guard) {
    throw SpaceTooLarge("mmi sweep over 2^" + std::to_string(k) +
                        " subsets exceeds the guard");
  }
  const SubsetIndex full = lower.space().full();
  const std::size_t n = subset_count(k);
  MmiResult result;
  result.value = 0.0;  // attained at the empty set and the whole space
  for (SubsetIndex a = 0; a < n; ++a) {
    const double gap = (1.0 - lower[full ^ a]) - lower[a];
    if (gap > result.value) {
      result.value = gap;
      result.argmax = a;
    }
  }
  return result;
}

double mmi_lin(const Capacity& lower) {
  double singleton_total = 0.0;
  for (int i = 0; i < lower.outcome_count(); ++i) {
    singleton_total += lower[subset_bit(i)];
  }
  return std::max(0.0, 1.0 - singleton_total);
}

IipmResult mmi_family(const FunctionFamily& family, const Capacity& lower) {
  if (family.space() != lower.space()) {
    throw SpaceMismatch("family on a different space than the capacity");
  }
  const Capacity upper = conjugate(lower);
  IipmResult result;
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& f = family.member(i);
    const double gap =
        choquet_integral(f, upper) - choquet_integral(f, lower);
    if (gap > best) {
      best = gap;
      result.argmax_index = i;
    }
  }
  result.value = best;
  return result;
}

double gh_measure(const Capacity& lower, int lattice_guard) {
  const int k = lower.outcome_count();
  if (k > lattice_guard) {
    throw SpaceTooLarge("Hartley sweep over 2^" + std::to_string(k) +
                        " subsets exceeds the guard");
  }
  const MassFunction mass = mobius_inverse(lower);
  double total = 0.0;
  const std::size_t n = subset_count(k);
  for (SubsetIndex a = 1; a < n; ++a) {
    const int size = set_size(a);
    if (size > 1) total += mass[a] * std::log2(double(size));
  }
  return total;
}

double shannon_entropy(const std::vector<double>& p) {
  double total_mass = 0.0;
  for (double v : p) {
    if (!std::isfinite(v) || v < 0.0) {
      throw NotNormalized("probability vector has a bad entry");
    }
    total_mass += v;
  }
  if (std::abs(total_mass - 1.0) > kNormalizationTol) {
    throw NotNormalized("probability vector sums to " +
                        std::to_string(total_mass));
  }
  return entropy_bits(p);
}

EntropyDiffResult entropy_difference(const CredalSet& credal) {
  const auto& gens = credal.generators();
  const std::size_t m = gens.size();
  const std::size_t k = gens.front().size();

  EntropyDiffResult result;
  result.min_entropy = entropy_bits(gens[0]);
  for (std::size_t j = 1; j < m; ++j) {
    result.min_entropy = std::min(result.min_entropy, entropy_bits(gens[j]));
  }
  if (m == 1) {
    result.max_entropy = result.min_entropy;
    result.value = 0.0;
    return result;
  }

  // Frank-Wolfe ascent over mixture weights, with away steps so face-interior
  // optima converge linearly instead of zigzagging. The certified duality gap
  // is the standard one: best vertex score minus the current score.
  std::vector<double> weights(m, 1.0 / double(m));
  std::vector<double> mix(k, 0.0);
  auto refresh_mix = [&] {
    std::fill(mix.begin(), mix.end(), 0.0);
    for (std::size_t j = 0; j < m; ++j) {
      if (weights[j] == 0.0) continue;
      for (std::size_t i = 0; i < k; ++i) mix[i] += weights[j] * gens[j][i];
    }
  };
  refresh_mix();

  std::vector<double> grad;
  std::vector<double> dir(k);
  double gap = 0.0;
  int iter = 0;
  for (; iter < kFwMaxIterations; ++iter) {
    entropy_gradient(mix, grad);
    double mix_score = 0.0;
    for (std::size_t i = 0; i < k; ++i) mix_score += mix[i] * grad[i];

    std::size_t fw_j = 0, away_j = 0;
    double fw_score = -std::numeric_limits<double>::infinity();
    double away_score = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < m; ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < k; ++i) s += gens[j][i] * grad[i];
      if (s > fw_score) {
        fw_score = s;
        fw_j = j;
      }
      if (weights[j] > 0.0 && s < away_score) {
        away_score = s;
        away_j = j;
      }
    }
    gap = fw_score - mix_score;
    if (gap < kFwGapTol) break;

    const double away_gap = mix_score - away_score;
    if (gap >= away_gap || weights[away_j] >= 1.0) {
      // Toward the best vertex.
      const auto& target = gens[fw_j];
      for (std::size_t i = 0; i < k; ++i) dir[i] = target[i] - mix[i];
      const double alpha = entropy_line_search(mix, dir, 1.0);
      for (std::size_t j = 0; j < m; ++j) weights[j] *= (1.0 - alpha);
      weights[fw_j] += alpha;
    } else {
      // Away from the worst active vertex.
      const auto& source = gens[away_j];
      for (std::size_t i = 0; i < k; ++i) dir[i] = mix[i] - source[i];
      const double alpha_max = weights[away_j] / (1.0 - weights[away_j]);
      const double alpha = entropy_line_search(mix, dir, alpha_max);
      for (std::size_t j = 0; j < m; ++j) weights[j] *= (1.0 + alpha);
      weights[away_j] = std::max(0.0, weights[away_j] - alpha);
    }
    refresh_mix();
  }

  result.max_entropy = std::max(entropy_bits(mix), result.min_entropy);
  result.frank_wolfe_gap = gap;
  result.iterations = iter;
  result.value = result.max_entropy - result.min_entropy;
  return result;
}

}  // namespace iipm
