#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace iipm::detail {

// mt19937_64 with hand-rolled value mappings. The engine's output sequence
// is pinned by the standard; avoiding std distributions keeps generated
// streams identical across standard-library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1).
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  // Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }

  double exponential() { return -std::log(1.0 - uniform01()); }

  // Uniformly distributed point on the probability simplex.
  std::vector<double> simplex_point(int k) {
    std::vector<double> p(k);
    double total = 0.0;
    for (double& v : p) {
      v = exponential();
      total += v;
    }
    for (double& v : p) v /= total;
    return p;
  }

  int categorical(const std::vector<double>& p) {
    const double u = uniform01();
    double cum = 0.0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      cum += p[i];
      if (u < cum) return static_cast<int>(i);
    }
    return static_cast<int>(p.size()) - 1;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace iipm::detail
