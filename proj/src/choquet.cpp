#include "iipm/choquet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace iipm {

namespace {

void require_same_space(const BoundedFunction& f, const Capacity& nu) {
  if (f.space() != nu.space()) {
    throw SpaceMismatch("function and capacity live on different spaces");
  }
}

// Outcome indices ordered by (value descending, index ascending).
std::vector<int> descending_order(const BoundedFunction& f) {
  std::vector<int> order(f.space().size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return f[a] > f[b]; });
  return order;
}

}  // namespace

BoundedFunction::BoundedFunction(FiniteSpace space, std::vector<double> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(space_.size())) {
    throw BadLength("function needs one value per outcome");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw Error("function values must be finite");
    }
  }
  auto [lo, hi] = std::minmax_element(values_.begin(), values_.end());
  min_ = *lo;
  max_ = *hi;
}

BoundedFunction negate(const BoundedFunction& f) {
  std::vector<double> values = f.values();
  for (double& v : values) v = -v;
  return BoundedFunction(f.space(), std::move(values));
}

double choquet_integral(const BoundedFunction& f, const Capacity& nu) {
  require_same_space(f, nu);
  const int k = f.space().size();
  const auto order = descending_order(f);

  double total = 0.0;
  double prev = 0.0;  // nu of the empty set
  SubsetIndex upper = 0;
  int i = 0;
  while (i < k) {
    const double value = f[order[i]];
    while (i < k && f[order[i]] == value) {
      upper |= subset_bit(order[i]);
      ++i;
    }
    const double cur = nu[upper];
    total += value * (cur - prev);
    prev = cur;
  }
  return total;
}

double choquet_threshold_oracle(const BoundedFunction& f, const Capacity& nu) {
  require_same_space(f, nu);
  std::vector<double> levels = f.values();
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  double total = levels.front();  // min f, times nu(X) = 1
  for (std::size_t j = 0; j + 1 < levels.size(); ++j) {
    const double next = levels[j + 1];
    SubsetIndex level_set = 0;
    for (int i = 0; i < f.space().size(); ++i) {
      if (f[i] >= next) level_set |= subset_bit(i);
    }
    total += (next - levels[j]) * nu[level_set];
  }
  return total;
}

double lebesgue_expectation(const BoundedFunction& f,
                            const std::vector<double>& p) {
  if (p.size() != static_cast<std::size_t>(f.space().size())) {
    throw BadLength("probability vector length mismatch");
  }
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
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    total += f[static_cast<int>(i)] * p[i];
  }
  return total;
}

}  // namespace iipm
