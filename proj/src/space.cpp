#include "iipm/space.hpp"

#include <unordered_set>

namespace iipm {

FiniteSpace::FiniteSpace(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw Error("FiniteSpace requires at least one outcome");
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels_) {
    if (!seen.insert(label).second) {
      throw Error("FiniteSpace labels must be unique; duplicate '" + label +
                  "'");
    }
  }
}

FiniteSpace FiniteSpace::indexed(int k) {
  if (k < 1) {
    throw Error("FiniteSpace size must be positive");
  }
  std::vector<std::string> labels;
  labels.reserve(k);
  for (int i = 0; i < k; ++i) {
    labels.push_back("x" + std::to_string(i));
  }
  return FiniteSpace(std::move(labels));
}

std::string subset_to_string(const FiniteSpace& space, SubsetIndex a) {
  if (a == 0) return "{}";
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < space.size(); ++i) {
    if (!subset_contains(a, i)) continue;
    if (!first) out += ",";
    out += space.label(i);
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace iipm
