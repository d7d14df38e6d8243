#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "iipm/errors.hpp"

namespace iipm {

// Events over a finite outcome space are encoded as bitmasks over outcome
// indices: bit i set <=> outcome x_i belongs to the event. 0 is the empty
// set, (1 << K) - 1 is the whole space.
using SubsetIndex = std::uint32_t;

// Default guards for exhaustive lattice work. Operations touching 2^K
// entries refuse larger K; pair sweeps over 4^K use the tighter guard.
inline constexpr int kLatticeGuardDefault = 20;
inline constexpr int kPairGuardDefault = 14;

// Tolerance for structural floating-point identities (roundtrips, conjugation).
inline constexpr double kStructuralTol = 1e-12;
// Tolerance for input normalization (probability vectors, masses).
inline constexpr double kNormalizationTol = 1e-9;

constexpr SubsetIndex subset_bit(int i) { return SubsetIndex{1} << i; }
constexpr SubsetIndex full_set(int k) { return (SubsetIndex{1} << k) - 1; }
constexpr std::size_t subset_count(int k) { return std::size_t{1} << k; }
constexpr int set_size(SubsetIndex a) { return std::popcount(a); }
constexpr bool subset_contains(SubsetIndex a, int i) {
  return (a & subset_bit(i)) != 0;
}

// An ordered finite outcome space. The index of a label is the canonical
// identity of the outcome; labels exist for reporting.
class FiniteSpace {
 public:
  explicit FiniteSpace(std::vector<std::string> labels);

  // Space with labels "x0", "x1", ..., "x{k-1}".
  static FiniteSpace indexed(int k);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  SubsetIndex full() const { return full_set(size()); }

  bool operator==(const FiniteSpace&) const = default;

 private:
  std::vector<std::string> labels_;
};

// Renders a subset as "{x0,x2}" for error messages and reports.
std::string subset_to_string(const FiniteSpace& space, SubsetIndex a);

}  // namespace iipm
