#pragma once

#include <vector>

#include "iipm/capacity.hpp"

namespace iipm {

// A real-valued function on the outcomes of a finite space; the Choquet
// integrand. Values must be finite.
class BoundedFunction {
 public:
  BoundedFunction(FiniteSpace space, std::vector<double> values);

  const FiniteSpace& space() const { return space_; }
  double operator[](int i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }
  double min_value() const { return min_; }
  double max_value() const { return max_; }

 private:
  FiniteSpace space_;
  std::vector<double> values_;
  double min_;
  double max_;
};

BoundedFunction negate(const BoundedFunction& f);

// Choquet integral in the discrete sorted form: outcomes ordered by
// descending value (ties coalesced; they contribute zero-width increments),
// summing value * (nu(upper level set) - nu(previous upper level set)).
// Reduces to the Lebesgue expectation when nu is additive.
double choquet_integral(const BoundedFunction& f, const Capacity& nu);

// Threshold form of the same integral: min f + integral over [min f, max f]
// of nu({f >= t}) dt, evaluated exactly over the level intervals between
// sorted distinct values. Independent arithmetic route kept as a test
// oracle; agrees with choquet_integral within kStructuralTol.
double choquet_threshold_oracle(const BoundedFunction& f, const Capacity& nu);

// Plain expectation sum f(x_i) p_i. Throws NotNormalized.
double lebesgue_expectation(const BoundedFunction& f,
                            const std::vector<double>& p);

}  // namespace iipm
