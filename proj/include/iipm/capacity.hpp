#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "iipm/space.hpp"

namespace iipm {

class CredalSet;
class ContaminationModel;

// A normalized monotone set function over the full subset lattice of a
// finite space, stored densely: values()[a] is the capacity of the subset
// encoded by bitmask a. Immutable after construction; construction goes
// through validate_capacity or one of the trusted builders below.
class Capacity {
 public:
  const FiniteSpace& space() const { return space_; }
  int outcome_count() const { return space_.size(); }
  double operator[](SubsetIndex a) const { return values_[a]; }
  const std::vector<double>& values() const { return values_; }

 private:
  struct Unchecked {};
  Capacity(FiniteSpace space, std::vector<double> values, Unchecked)
      : space_(std::move(space)), values_(std::move(values)) {}

  friend Capacity validate_capacity(const FiniteSpace&, std::vector<double>,
                                    int);
  friend Capacity capacity_from_credal(const CredalSet&);
  friend Capacity conjugate(const Capacity&);
  friend Capacity epsilon_contamination(const ContaminationModel&);

  FiniteSpace space_;
  std::vector<double> values_;
};

// A finite list of probability vectors whose pointwise set-function minimum
// generates a lower probability. Generators are validated (nonnegative,
// normalized within kNormalizationTol) and stored exactly normalized.
class CredalSet {
 public:
  CredalSet(FiniteSpace space, std::vector<std::vector<double>> generators);

  const FiniteSpace& space() const { return space_; }
  std::size_t generator_count() const { return generators_.size(); }
  const std::vector<std::vector<double>>& generators() const {
    return generators_;
  }
  const std::vector<double>& generator(std::size_t j) const {
    return generators_[j];
  }

 private:
  FiniteSpace space_;
  std::vector<std::vector<double>> generators_;
};

// A set function over the lattice with mass(empty) = 0 and total mass 1.
// Masses may be negative: Moebius inverses of general lower probabilities
// are signed; nonnegativity holds only for belief functions.
class MassFunction {
 public:
  MassFunction(FiniteSpace space, std::vector<double> mass);

  const FiniteSpace& space() const { return space_; }
  double operator[](SubsetIndex a) const { return mass_[a]; }
  const std::vector<double>& values() const { return mass_; }

 private:
  FiniteSpace space_;
  std::vector<double> mass_;
};

// A base probability vector P together with a contamination rate epsilon:
// the neighborhood { (1-eps) P + eps R : R any probability }.
class ContaminationModel {
 public:
  ContaminationModel(FiniteSpace space, std::vector<double> base,
                     double epsilon);

  const FiniteSpace& space() const { return space_; }
  const std::vector<double>& base() const { return base_; }
  double epsilon() const { return epsilon_; }

 private:
  FiniteSpace space_;
  std::vector<double> base_;
  double epsilon_;
};

struct TwoMonotoneResult {
  bool two_monotone = false;
  // Violating pair (a, b) with nu(a|b) + nu(a&b) < nu(a) + nu(b); set only
  // when two_monotone is false.
  std::optional<std::pair<SubsetIndex, SubsetIndex>> witness;
};

// Result of a zeta transform of a signed mass function. The transform of a
// signed mass need not be monotone, so the raw values are returned with a
// flag instead of a Capacity.
struct ZetaResult {
  FiniteSpace space;
  std::vector<double> values;
  bool monotone = false;
  std::optional<std::pair<SubsetIndex, SubsetIndex>> witness;

  // Validates and converts; throws NotMonotone when the flag is set.
  Capacity to_capacity() const;
};

// Checks boundary normalization, length, and monotonicity (via the
// K * 2^(K-1) covering pairs) and returns the capacity.
// Throws BadLength, NotNormalized, NotMonotone, SpaceTooLarge.
Capacity validate_capacity(const FiniteSpace& space,
                           std::vector<double> values,
                           int lattice_guard = kLatticeGuardDefault);

// Lower probability of a credal set: value(A) = min over generators of the
// generator's mass on A. Super-additive on disjoint events.
Capacity capacity_from_credal(const CredalSet& credal);

// Conjugate capacity: value(A) = 1 - nu(complement of A). Involutive.
Capacity conjugate(const Capacity& nu);

// Exhaustive 2-monotonicity check over all ordered subset pairs, with
// slack tolerance kStructuralTol. Throws SpaceTooLarge when 4^K exceeds
// the pair guard budget.
TwoMonotoneResult is_two_monotone(const Capacity& nu,
                                  int pair_guard = kPairGuardDefault);

// Moebius inverse via the fast in-place subset transform, O(K 2^K).
MassFunction mobius_inverse(const Capacity& nu);

// Zeta transform of a mass function, O(K 2^K). Throws NotNormalizedMass.
ZetaResult mobius_forward(const MassFunction& mass);

// Lower probability of an epsilon-contamination neighborhood:
// (1-eps) P(A) on proper subsets, 1 on the whole space.
Capacity epsilon_contamination(const ContaminationModel& model);

// The unique undominated contamination-model outer approximation of a lower
// probability: eps = 1 - sum of singleton values, base = normalized
// singleton values. When every singleton value is 0 the base formula is
// degenerate; returns eps = 1 with a uniform base (any base yields the same
// vacuous model at eps = 1).
ContaminationModel outer_approx_epsilon(const Capacity& lower);

}  // namespace iipm
