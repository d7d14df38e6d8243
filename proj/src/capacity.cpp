#include "iipm/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace iipm {

namespace {

void check_lattice_guard(int k, int lattice_guard) {
  if (k > lattice_guard) {
    throw SpaceTooLarge("lattice sweep over 2^" + std::to_string(k) +
                        " entries exceeds the guard (K <= " +
                        std::to_string(lattice_guard) + ")");
  }
}

// Scans the covering pairs (A, A + {i}); any monotonicity violation shows
// up on a covering pair. Slack kStructuralTol absorbs transform noise.
std::optional<std::pair<SubsetIndex, SubsetIndex>> find_monotonicity_witness(
    int k, const std::vector<double>& values) {
  const std::size_t n = subset_count(k);
  for (SubsetIndex a = 0; a < n; ++a) {
    for (int i = 0; i < k; ++i) {
      if (subset_contains(a, i)) continue;
      const SubsetIndex b = a | subset_bit(i);
      if (values[a] > values[b] + kStructuralTol) {
        return std::make_pair(a, b);
      }
    }
  }
  return std::nullopt;
}

std::vector<double> checked_probability_vector(const FiniteSpace& space,
                                               std::vector<double> p,
                                               const std::string& what) {
  if (static_cast<int>(p.size()) != space.size()) {
    throw BadLength(what + " must have one entry per outcome");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!std::isfinite(p[i]) || p[i] < 0.0) {
      throw NotNormalized(what + " has a negative or non-finite entry at " +
                          space.label(static_cast<int>(i)));
    }
    total += p[i];
  }
  if (std::abs(total - 1.0) > kNormalizationTol) {
    throw NotNormalized(what + " sums to " + std::to_string(total) +
                        ", expected 1");
  }
  return p;
}

}  // namespace

CredalSet::CredalSet(FiniteSpace space,
                     std::vector<std::vector<double>> generators)
    : space_(std::move(space)), generators_(std::move(generators)) {
  if (generators_.empty()) {
    throw EmptyInput("CredalSet requires at least one generator");
  }
  for (std::size_t j = 0; j < generators_.size(); ++j) {
    auto& g = generators_[j];
    g = checked_probability_vector(space_, std::move(g),
                                   "generator " + std::to_string(j));
    double total = 0.0;
    for (double v : g) total += v;
    for (double& v : g) v /= total;
  }
}

MassFunction::MassFunction(FiniteSpace space, std::vector<double> mass)
    : space_(std::move(space)), mass_(std::move(mass)) {
  if (mass_.size() != subset_count(space_.size())) {
    throw BadLength("mass function needs 2^K entries, got " +
                    std::to_string(mass_.size()));
  }
  if (std::abs(mass_[0]) > kNormalizationTol) {
    throw NotNormalizedMass("mass of the empty set must be 0");
  }
  double total = 0.0;
  for (double v : mass_) {
    if (!std::isfinite(v)) {
      throw NotNormalizedMass("mass entries must be finite");
    }
    total += v;
  }
  if (std::abs(total - 1.0) > kNormalizationTol) {
    throw NotNormalizedMass("total mass is " + std::to_string(total) +
                            ", expected 1");
  }
}

ContaminationModel::ContaminationModel(FiniteSpace space,
                                       std::vector<double> base,
                                       double epsilon)
    : space_(std::move(space)),
      base_(checked_probability_vector(space_, std::move(base),
                                       "contamination base")),
      epsilon_(epsilon) {
  if (!std::isfinite(epsilon_) || epsilon_ < 0.0 || epsilon_ > 1.0) {
    throw BadRate("contamination rate must lie in [0,1], got " +
                  std::to_string(epsilon_));
  }
}

Capacity validate_capacity(const FiniteSpace& space,
                           std::vector<double> values, int lattice_guard) {
  const int k = space.size();
  check_lattice_guard(k, lattice_guard);
  const std::size_t n = subset_count(k);
  if (values.size() != n) {
    throw BadLength("capacity over K=" + std::to_string(k) + " needs " +
                    std::to_string(n) + " values, got " +
                    std::to_string(values.size()));
  }
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw NotNormalized("capacity values must be finite");
    }
  }
  if (std::abs(values[0]) > kNormalizationTol) {
    throw NotNormalized("capacity of the empty set must be 0, got " +
                        std::to_string(values[0]));
  }
  if (auto witness = find_monotonicity_witness(k, values)) {
    throw NotMonotone(
        "capacity not monotone: value of " +
            subset_to_string(space, witness->first) + " (" +
            std::to_string(values[witness->first]) + ") exceeds value of " +
            subset_to_string(space, witness->second) + " (" +
            std::to_string(values[witness->second]) + ")",
        witness->first, witness->second);
  }
  if (std::abs(values[n - 1] - 1.0) > kNormalizationTol) {
    throw NotNormalized("capacity of the whole space must be 1, got " +
                        std::to_string(values[n - 1]));
  }
  return Capacity(space, std::move(values), Capacity::Unchecked{});
}

Capacity capacity_from_credal(const CredalSet& credal) {
  const int k = credal.space().size();
  check_lattice_guard(k, kLatticeGuardDefault);
  const std::size_t n = subset_count(k);
  std::vector<double> values(n, 0.0);
  std::vector<double> sums(n);
  for (const auto& g : credal.generators()) {
    sums[0] = 0.0;
    for (SubsetIndex a = 1; a < n; ++a) {
      const int low = std::countr_zero(a);
      sums[a] = sums[a & (a - 1)] + g[low];
    }
    if (&g == &credal.generators().front()) {
      values = sums;
    } else {
      for (SubsetIndex a = 0; a < n; ++a) {
        values[a] = std::min(values[a], sums[a]);
      }
    }
  }
  for (double& v : values) v = std::min(v, 1.0);
  values[0] = 0.0;
  values[n - 1] = 1.0;
  return Capacity(credal.space(), std::move(values), Capacity::Unchecked{});
}

Capacity conjugate(const Capacity& nu) {
  const SubsetIndex full = nu.space().full();
  const std::size_t n = nu.values().size();
  std::vector<double> values(n);
  for (SubsetIndex a = 0; a < n; ++a) {
    values[a] = 1.0 - nu[full ^ a];
  }
  return Capacity(nu.space(), std::move(values), Capacity::Unchecked{});
}

TwoMonotoneResult is_two_monotone(const Capacity& nu, int pair_guard) {
  const int k = nu.outcome_count();
  if (k > pair_guard) {
    throw SpaceTooLarge("2-monotonicity sweep over 4^" + std::to_string(k) +
                        " pairs exceeds the guard (K <= " +
                        std::to_string(pair_guard) + ")");
  }
  const std::size_t n = subset_count(k);
  for (SubsetIndex a = 0; a < n; ++a) {
    for (SubsetIndex b = 0; b < n; ++b) {
      const double slack = nu[a | b] + nu[a & b] - nu[a] - nu[b];
      if (slack < -kStructuralTol) {
        return {false, std::make_pair(a, b)};
      }
    }
  }
  return {true, std::nullopt};
}

MassFunction mobius_inverse(const Capacity& nu) {
  const int k = nu.outcome_count();
  const std::size_t n = subset_count(k);
  std::vector<double> mass = nu.values();
  for (int d = 0; d < k; ++d) {
    const SubsetIndex bit = subset_bit(d);
    for (SubsetIndex a = 0; a < n; ++a) {
      if (a & bit) mass[a] -= mass[a ^ bit];
    }
  }
  return MassFunction(nu.space(), std::move(mass));
}

ZetaResult mobius_forward(const MassFunction& mass) {
  const int k = mass.space().size();
  const std::size_t n = subset_count(k);
  std::vector<double> values = mass.values();
  for (int d = 0; d < k; ++d) {
    const SubsetIndex bit = subset_bit(d);
    for (SubsetIndex a = 0; a < n; ++a) {
      if (a & bit) values[a] += values[a ^ bit];
    }
  }
  auto witness = find_monotonicity_witness(k, values);
  ZetaResult result{mass.space(), std::move(values), !witness.has_value(),
                    witness};
  return result;
}

Capacity ZetaResult::to_capacity() const {
  return validate_capacity(space, values);
}

Capacity epsilon_contamination(const ContaminationModel& model) {
  const int k = model.space().size();
  check_lattice_guard(k, kLatticeGuardDefault);
  const std::size_t n = subset_count(k);
  const double keep = 1.0 - model.epsilon();
  std::vector<double> sums(n);
  sums[0] = 0.0;
  for (SubsetIndex a = 1; a < n; ++a) {
    const int low = std::countr_zero(a);
    sums[a] = sums[a & (a - 1)] + model.base()[low];
  }
  std::vector<double> values(n);
  values[0] = 0.0;
  for (SubsetIndex a = 1; a + 1 < n; ++a) {
    values[a] = std::min(keep * sums[a], 1.0);
  }
  values[n - 1] = 1.0;
  return Capacity(model.space(), std::move(values), Capacity::Unchecked{});
}

ContaminationModel outer_approx_epsilon(const Capacity& lower) {
  const int k = lower.outcome_count();
  double singleton_total = 0.0;
  for (int i = 0; i < k; ++i) {
    singleton_total += lower[subset_bit(i)];
  }
  std::vector<double> base(k);
  if (singleton_total == 0.0) {
    std::fill(base.begin(), base.end(), 1.0 / k);
    return ContaminationModel(lower.space(), std::move(base), 1.0);
  }
  for (int i = 0; i < k; ++i) {
    base[i] = lower[subset_bit(i)] / singleton_total;
  }
  double eps = 1.0 - singleton_total;
  eps = std::clamp(eps, 0.0, 1.0);
  return ContaminationModel(lower.space(), std::move(base), eps);
}

}  // namespace iipm
