#include "iipm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace iipm {

FunctionFamily::FunctionFamily(FiniteSpace space,
                               std::vector<BoundedFunction> members)
    : space_(std::move(space)), members_(std::move(members)) {
  if (members_.empty()) {
    throw EmptyFamily("function family must be nonempty");
  }
  for (const auto& f : members_) {
    if (f.space() != space_) {
      throw SpaceMismatch("family member on a different space");
    }
  }
}

FunctionFamily indicator_family(const FiniteSpace& space, int lattice_guard) {
  const int k = space.size();
  if (k > lattice_guard) {
    throw SpaceTooLarge("indicator family over 2^" + std::to_string(k) +
                        " subsets exceeds the guard");
  }
  const std::size_t n = subset_count(k);
  std::vector<BoundedFunction> members;
  members.reserve(n);
  for (SubsetIndex a = 0; a < n; ++a) {
    std::vector<double> values(k, 0.0);
    for (int i = 0; i < k; ++i) {
      if (subset_contains(a, i)) values[i] = 1.0;
    }
    members.emplace_back(space, std::move(values));
  }
  return FunctionFamily(space, std::move(members));
}

SampleSet::SampleSet(std::vector<std::vector<double>> points)
    : points_(std::move(points)) {
  if (points_.size() < 2) {
    throw TooFewSamples("sample set needs at least 2 points");
  }
  const std::size_t d = points_.front().size();
  if (d == 0) {
    throw DimMismatch("sample points must have positive dimension");
  }
  for (const auto& p : points_) {
    if (p.size() != d) {
      throw DimMismatch("sample points have inconsistent dimensions");
    }
  }
}

LtvResult ltv(const Capacity& lower_p, const Capacity& lower_q,
              int lattice_guard) {
  if (lower_p.space() != lower_q.space()) {
    throw SpaceMismatch("capacities live on different spaces");
  }
  const int k = lower_p.outcome_count();
  if (k > lattice_guard) {
    throw SpaceTooLarge("ltv sweep over 2^" + std::to_string(k) +
                        " subsets exceeds the guard");
  }
  LtvResult result;
  const std::size_t n = subset_count(k);
  for (SubsetIndex a = 0; a < n; ++a) {
    const double diff = std::abs(lower_p[a] - lower_q[a]);
    if (diff > result.value) {
      result.value = diff;
      result.argmax = a;
    }
  }
  return result;
}

double singleton_l1(const Capacity& lower_p, const Capacity& lower_q) {
  if (lower_p.space() != lower_q.space()) {
    throw SpaceMismatch("capacities live on different spaces");
  }
  double total = 0.0;
  for (int i = 0; i < lower_p.outcome_count(); ++i) {
    total += std::abs(lower_p[subset_bit(i)] - lower_q[subset_bit(i)]);
  }
  return total;
}

IipmResult iipm_bruteforce(const FunctionFamily& family, const Capacity& nu,
                           const Capacity& mu) {
  if (nu.space() != mu.space()) {
    throw SpaceMismatch("capacities live on different spaces");
  }
  if (family.space() != nu.space()) {
    throw SpaceMismatch("family on a different space than the capacities");
  }
  IipmResult result;
  double best = -1.0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& f = family.member(i);
    const double diff =
        std::abs(choquet_integral(f, nu) - choquet_integral(f, mu));
    if (diff > best) {
      best = diff;
      result.argmax_index = i;
    }
  }
  result.value = best;
  return result;
}

FunctionFamily lipschitz_family_1d(const std::vector<double>& points,
                                   int guard) {
  const int k = static_cast<int>(points.size());
  if (k < 1) {
    throw EmptyInput("need at least one point");
  }
  for (int i = 0; i + 1 < k; ++i) {
    if (!(points[i] < points[i + 1])) {
      throw PointsNotSorted("points must be strictly increasing");
    }
  }
  if (k > guard) {
    throw SpaceTooLarge("Lipschitz family over 2^" + std::to_string(k - 1) +
                        " sign patterns exceeds the guard");
  }
  const FiniteSpace space = FiniteSpace::indexed(k);
  const std::size_t count = subset_count(k - 1);
  std::vector<BoundedFunction> members;
  members.reserve(count);
  for (SubsetIndex signs = 0; signs < count; ++signs) {
    std::vector<double> values(k);
    values[0] = 0.0;
    for (int i = 0; i + 1 < k; ++i) {
      const double gap = points[i + 1] - points[i];
      values[i + 1] = values[i] + (subset_contains(signs, i) ? gap : -gap);
    }
    members.emplace_back(space, std::move(values));
  }
  return FunctionFamily(space, std::move(members));
}

double wasserstein1_line(const std::vector<double>& p,
                         const std::vector<double>& q,
                         const std::vector<double>& points) {
  const std::size_t k = points.size();
  if (p.size() != k || q.size() != k) {
    throw BadLength("distributions and points must have equal length");
  }
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (!(points[i] < points[i + 1])) {
      throw PointsNotSorted("points must be strictly increasing");
    }
  }
  auto check = [](const std::vector<double>& v, const char* name) {
    double total = 0.0;
    for (double x : v) {
      if (!std::isfinite(x) || x < 0.0) {
        throw NotNormalized(std::string(name) + " has a bad entry");
      }
      total += x;
    }
    if (std::abs(total - 1.0) > kNormalizationTol) {
      throw NotNormalized(std::string(name) + " sums to " +
                          std::to_string(total));
    }
  };
  check(p, "p");
  check(q, "q");

  double cdf_p = 0.0;
  double cdf_q = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    cdf_p += p[i];
    cdf_q += q[i];
    total += std::abs(cdf_p - cdf_q) * (points[i + 1] - points[i]);
  }
  return total;
}

KantorovichCheck contaminated_kantorovich_check(
    const std::vector<double>& p, const std::vector<double>& q,
    const std::vector<double>& points, double epsilon) {
  const auto family = lipschitz_family_1d(points);
  const FiniteSpace& space = family.space();
  const Capacity lower_p =
      epsilon_contamination(ContaminationModel(space, p, epsilon));
  const Capacity lower_q =
      epsilon_contamination(ContaminationModel(space, q, epsilon));
  KantorovichCheck out;
  out.iipm_value = iipm_bruteforce(family, lower_p, lower_q).value;
  out.identity_value = (1.0 - epsilon) * wasserstein1_line(p, q, points);
  return out;
}

double gaussian_kernel(const std::vector<double>& x,
                       const std::vector<double>& y, const KernelSpec& spec) {
  if (x.size() != y.size()) {
    throw DimMismatch("kernel arguments have different dimensions");
  }
  if (!(spec.bandwidth > 0.0)) {
    throw Error("kernel bandwidth must be positive");
  }
  double sq = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    sq += d * d;
  }
  return std::exp(-sq / (2.0 * spec.bandwidth * spec.bandwidth));
}

double contaminated_mmd_sq(const SampleSet& x, const SampleSet& z, double eps,
                           double delta, const KernelSpec& spec) {
  if (x.dim() != z.dim()) {
    throw DimMismatch("sample sets have different dimensions");
  }
  if (!std::isfinite(eps) || eps < 0.0 || eps > 1.0 || !std::isfinite(delta) ||
      delta < 0.0 || delta > 1.0) {
    throw BadRate("contamination rates must lie in [0,1]");
  }
  const std::size_t n = x.size();
  const std::size_t m = z.size();

  double xx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      xx += gaussian_kernel(x.point(i), x.point(j), spec);
    }
  }
  double zz = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      zz += gaussian_kernel(z.point(i), z.point(j), spec);
    }
  }
  double xz = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      xz += gaussian_kernel(x.point(i), z.point(j), spec);
    }
  }

  const double keep_x = 1.0 - eps;
  const double keep_z = 1.0 - delta;
  return keep_x * keep_x * (2.0 * xx) / (double(n) * double(n - 1)) -
         2.0 * keep_x * keep_z * xz / (double(n) * double(m)) +
         keep_z * keep_z * (2.0 * zz) / (double(m) * double(m - 1));
}

}  // namespace iipm
