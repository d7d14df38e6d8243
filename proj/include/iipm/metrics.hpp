#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "iipm/choquet.hpp"

namespace iipm {

// A finite explicit family of integrands standing in for an IPM/IIPM
// function class.
class FunctionFamily {
 public:
  FunctionFamily(FiniteSpace space, std::vector<BoundedFunction> members);

  const FiniteSpace& space() const { return space_; }
  std::size_t size() const { return members_.size(); }
  const BoundedFunction& member(std::size_t i) const { return members_[i]; }
  const std::vector<BoundedFunction>& members() const { return members_; }

 private:
  FiniteSpace space_;
  std::vector<BoundedFunction> members_;
};

// All 2^K indicator functions of a space; realizes the total-variation
// function class exactly.
FunctionFamily indicator_family(const FiniteSpace& space,
                                int lattice_guard = kLatticeGuardDefault);

// iid samples in R^d.
class SampleSet {
 public:
  explicit SampleSet(std::vector<std::vector<double>> points);

  std::size_t size() const { return points_.size(); }
  std::size_t dim() const { return points_.front().size(); }
  const std::vector<double>& point(std::size_t i) const { return points_[i]; }

 private:
  std::vector<std::vector<double>> points_;
};

struct KernelSpec {
  double bandwidth = 1.0;  // Gaussian; the only built-in kind.
};

struct LtvResult {
  double value = 0.0;
  SubsetIndex argmax = 0;  // smallest bitmask attaining the max
};

struct IipmResult {
  double value = 0.0;
  std::size_t argmax_index = 0;  // first family member attaining the max
};

// Lower total variation: max over all subsets of |lower_p(A) - lower_q(A)|.
LtvResult ltv(const Capacity& lower_p, const Capacity& lower_q,
              int lattice_guard = kLatticeGuardDefault);

// Sum over outcomes of |lower_p({x}) - lower_q({x})|. For additive
// capacities this is twice the total variation; for general lower
// probabilities it can differ from ltv (and does on the stored example).
double singleton_l1(const Capacity& lower_p, const Capacity& lower_q);

// Supremum over an explicit family of absolute Choquet-integral differences.
// With the full indicator family this equals ltv exactly.
IipmResult iipm_bruteforce(const FunctionFamily& family, const Capacity& nu,
                           const Capacity& mu);

// The 2^(K-1) functions on sorted 1D points with f(x_0) = 0 and increments
// +-(x_{i+1} - x_i): the vertex set of the 1-Lipschitz class after anchoring,
// attaining the Kantorovich dual optimum for any pair of distributions on
// the points. Lives on FiniteSpace::indexed(K).
FunctionFamily lipschitz_family_1d(const std::vector<double>& points,
                                   int guard = kLatticeGuardDefault);

// Closed-form 1D Wasserstein-1: sum |CDF_p - CDF_q| * gap over the point
// gaps. Throws NotNormalized, PointsNotSorted.
double wasserstein1_line(const std::vector<double>& p,
                         const std::vector<double>& q,
                         const std::vector<double>& points);

struct KantorovichCheck {
  double iipm_value = 0.0;      // brute-force IIPM over the Lipschitz family
  double identity_value = 0.0;  // (1 - eps) * W1(P, Q)
};

// Evaluates both sides of the contaminated-Kantorovich identity: the IIPM
// between the eps-contaminations of P and Q over the 1D Lipschitz family,
// and (1-eps) times the closed-form W1. The two agree within 1e-10.
KantorovichCheck contaminated_kantorovich_check(
    const std::vector<double>& p, const std::vector<double>& q,
    const std::vector<double>& points, double epsilon);

// exp(-|x-y|^2 / (2 h^2)). Symmetric, in (0,1].
double gaussian_kernel(const std::vector<double>& x,
                       const std::vector<double>& y, const KernelSpec& spec);

// Unbiased estimator of |(1-eps) mu_P - (1-delta) mu_Q|^2 in the RKHS:
//   (1-eps)^2   / (n(n-1)) sum_{i != j} k(X_i, X_j)
// - 2(1-eps)(1-delta) / (nm) sum k(X_i, Z_j)
// + (1-delta)^2 / (m(m-1)) sum_{i != j} k(Z_i, Z_j).
// May be negative (U-statistic); never clamped. Reduces to the textbook
// unbiased MMD^2 at eps = delta = 0.
double contaminated_mmd_sq(const SampleSet& x, const SampleSet& z, double eps,
                           double delta, const KernelSpec& spec);

}  // namespace iipm
