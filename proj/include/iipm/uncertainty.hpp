#pragma once

#include <optional>
#include <vector>

#include "iipm/metrics.hpp"

namespace iipm {

struct MmiResult {
  double value = 0.0;
  SubsetIndex argmax = 0;  // smallest bitmask attaining the supremum
};

// Exact epistemic-uncertainty measure over the total-variation class:
// max over subsets of (upper(A) - lower(A)), where upper is the conjugate.
// Nonnegative by conjugate dominance. Throws SpaceTooLarge above the guard.
MmiResult mmi_tv(const Capacity& lower,
                 int lattice_guard = kLatticeGuardDefault);

// Linear-time upper bound 1 - sum of singleton lower values. Tight on
// contamination models; never exceeds the guard (reads K entries).
double mmi_lin(const Capacity& lower);

// Generic form: max over the family of Choquet-integral gaps between the
// conjugate and the lower probability. With the full indicator family this
// equals mmi_tv.
IipmResult mmi_family(const FunctionFamily& family, const Capacity& lower);

// Generalised Hartley: sum over nonempty subsets of Moebius mass times
// log2 of the subset size. Zero for additive capacities.
double gh_measure(const Capacity& lower,
                  int lattice_guard = kLatticeGuardDefault);

// Shannon entropy in bits; 0 log 0 = 0. Throws NotNormalized.
double shannon_entropy(const std::vector<double>& p);

struct EntropyDiffResult {
  double value = 0.0;        // max_entropy - min_entropy
  double max_entropy = 0.0;  // certified lower bound on the hull maximum
  double min_entropy = 0.0;
  double frank_wolfe_gap = 0.0;  // final duality gap of the ascent
  int iterations = 0;
};

// Entropy difference over the convex hull of the generators. The minimum is
// attained at a generator (entropy is concave). The maximum is computed by
// Frank-Wolfe ascent on the mixture weights, starting from uniform weights,
// stopping when the duality gap drops below 1e-8 or after 1000 iterations;
// the reported maximum is a certified lower bound on the hull maximum.
EntropyDiffResult entropy_difference(const CredalSet& credal);

// Per-instance scores; the optional exact measures are absent when the
// class count exceeded the lattice guard (guard flags) or when a measure
// was not requested.
struct UncertaintyScores {
  std::optional<double> mmi_tv;
  std::optional<double> mmi_lin;
  std::optional<double> gh;
  std::optional<double> e_diff;
  bool mmi_tv_guard_skipped = false;
  bool gh_guard_skipped = false;
};

}  // namespace iipm
