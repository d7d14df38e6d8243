#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "iipm/metrics.hpp"
#include "test_support.hpp"

using namespace iipm;
using testing::Rng;

TEST_CASE("ltv separates the stored pair tables at one sixth") {
  const auto result = ltv(testing::remark_p1(), testing::remark_p2());
  CHECK(result.value == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(set_size(result.argmax) == 2);
}

TEST_CASE("ltv of a capacity with itself is zero") {
  Rng rng(211);
  const Capacity nu = testing::random_lower_probability(rng, 4, 5);
  CHECK(ltv(nu, nu).value == 0.0);
}

TEST_CASE("ltv of uniform versus a point mass") {
  const Capacity uniform = testing::additive_capacity({0.5, 0.5});
  const Capacity point = testing::additive_capacity({1.0, 0.0});
  CHECK(ltv(uniform, point).value == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("ltv errors") {
  const Capacity a = testing::additive_capacity({0.5, 0.5});
  const Capacity b = testing::additive_capacity({0.3, 0.3, 0.4});
  CHECK_THROWS_AS(ltv(a, b), SpaceMismatch);
  Rng rng(213);
  const Capacity big = testing::additive_capacity(rng.simplex_point(10));
  CHECK_THROWS_AS(ltv(big, big, 8), SpaceTooLarge);
}

TEST_CASE("singleton L1 vanishes on the stored pair while ltv does not") {
  const Capacity p1 = testing::remark_p1();
  const Capacity p2 = testing::remark_p2();
  CHECK(singleton_l1(p1, p2) == 0.0);
  CHECK(ltv(p1, p2).value > 0.0);
}

TEST_CASE("singleton L1 of additive capacities is twice the total variation") {
  Rng rng(217);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = rng.uniform_int(2, 6);
    const auto p = rng.simplex_point(k);
    const auto q = rng.simplex_point(k);
    const Capacity cp = testing::additive_capacity(p);
    const Capacity cq = testing::additive_capacity(q);
    CHECK(singleton_l1(cp, cq) ==
          doctest::Approx(2.0 * ltv(cp, cq).value).epsilon(1e-11));
  }
}

TEST_CASE("singleton L1 of the stored pair against the vacuous capacity") {
  std::vector<double> values(8, 0.0);
  values[7] = 1.0;
  const Capacity vacuous =
      validate_capacity(FiniteSpace::indexed(3), values);
  CHECK(singleton_l1(testing::remark_p1(), vacuous) == 0.0);
}

TEST_CASE("brute-force IIPM over the full indicator family equals ltv") {
  Rng rng(223);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = rng.uniform_int(1, 10);
    const Capacity nu =
        testing::random_lower_probability(rng, k, rng.uniform_int(1, 6));
    const Capacity mu = testing::random_dyadic_capacity(rng, k);
    const auto family = indicator_family(nu.space());
    CHECK(iipm_bruteforce(family, nu, mu).value == ltv(nu, mu).value);
  }
}

TEST_CASE("brute-force IIPM matches the stored pair value") {
  const Capacity p1 = testing::remark_p1();
  const auto family = indicator_family(p1.space());
  CHECK(iipm_bruteforce(family, p1, testing::remark_p2()).value ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-14));
}

TEST_CASE("IIPM over a constant family is zero") {
  const FiniteSpace space = FiniteSpace::indexed(3);
  const FunctionFamily constants(
      space, {BoundedFunction(space, {1.0, 1.0, 1.0})});
  Rng rng(227);
  const Capacity nu = testing::random_lower_probability(rng, 3, 4);
  const Capacity mu = testing::random_lower_probability(rng, 3, 2);
  CHECK(iipm_bruteforce(constants, nu, mu).value == 0.0);
}

TEST_CASE("IIPM of singleton indicators between additive capacities") {
  const FiniteSpace space = FiniteSpace::indexed(2);
  const FunctionFamily family(space, {BoundedFunction(space, {1.0, 0.0}),
                                      BoundedFunction(space, {0.0, 1.0})});
  const auto result = iipm_bruteforce(family,
                                      testing::additive_capacity({0.3, 0.7}),
                                      testing::additive_capacity({0.5, 0.5}));
  CHECK(result.value == doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("family construction errors") {
  const FiniteSpace space = FiniteSpace::indexed(2);
  CHECK_THROWS_AS(FunctionFamily(space, {}), EmptyFamily);
  CHECK_THROWS_AS(
      FunctionFamily(space,
                     {BoundedFunction(FiniteSpace::indexed(3), {1, 2, 3})}),
      SpaceMismatch);
}

TEST_CASE("IIPM is an exact pseudometric under argument swap") {
  Rng rng(229);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = rng.uniform_int(2, 5);
    const Capacity nu = testing::random_dyadic_capacity(rng, k);
    const Capacity mu = testing::random_dyadic_capacity(rng, k);
    std::vector<BoundedFunction> members;
    for (int i = 0; i < 8; ++i) {
      members.push_back(testing::random_function(rng, nu.space()));
    }
    const FunctionFamily family(nu.space(), members);
    CHECK(iipm_bruteforce(family, nu, mu).value ==
          iipm_bruteforce(family, mu, nu).value);
  }
}

TEST_CASE("IIPM satisfies the triangle inequality") {
  Rng rng(233);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = rng.uniform_int(2, 5);
    const Capacity a = testing::random_dyadic_capacity(rng, k);
    const Capacity b = testing::random_lower_probability(rng, k, 3);
    const Capacity c = testing::random_dyadic_capacity(rng, k);
    std::vector<BoundedFunction> members;
    for (int i = 0; i < 8; ++i) {
      members.push_back(testing::random_function(rng, a.space()));
    }
    const FunctionFamily family(a.space(), members);
    const double dab = iipm_bruteforce(family, a, b).value;
    const double dac = iipm_bruteforce(family, a, c).value;
    const double dcb = iipm_bruteforce(family, c, b).value;
    CHECK(dab <= dac + dcb + 1e-12);
  }
}

TEST_CASE("1D Lipschitz family on two points") {
  const auto family = lipschitz_family_1d({0.0, 1.0});
  REQUIRE(family.size() == 2);
  CHECK(family.member(0).values() == std::vector<double>{0.0, -1.0});
  CHECK(family.member(1).values() == std::vector<double>{0.0, 1.0});
}

TEST_CASE("1D Lipschitz family enumerates sign patterns of the gaps") {
  const auto family = lipschitz_family_1d({0.0, 1.0, 3.0});
  REQUIRE(family.size() == 4);
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& values = family.member(i).values();
    CHECK(values[0] == 0.0);
    CHECK(std::abs(values[1] - values[0]) == 1.0);
    CHECK(std::abs(values[2] - values[1]) == 2.0);
  }
}

TEST_CASE("1D Lipschitz family on a single point is the constant zero") {
  const auto family = lipschitz_family_1d({4.2});
  REQUIRE(family.size() == 1);
  CHECK(family.member(0).values() == std::vector<double>{0.0});
}

TEST_CASE("1D Lipschitz family input validation") {
  CHECK_THROWS_AS(lipschitz_family_1d({1.0, 1.0}), PointsNotSorted);
  CHECK_THROWS_AS(lipschitz_family_1d({2.0, 1.0}), PointsNotSorted);
}

TEST_CASE("1D Wasserstein by CDF differences") {
  CHECK(wasserstein1_line({1.0, 0.0}, {0.0, 1.0}, {0.0, 1.0}) ==
        doctest::Approx(1.0).epsilon(1e-15));
  Rng rng(239);
  const auto p = rng.simplex_point(5);
  std::vector<double> points = {0.0, 0.5, 1.25, 2.0, 5.0};
  CHECK(wasserstein1_line(p, p, points) == 0.0);
  CHECK(wasserstein1_line({0.5, 0.5, 0.0}, {0.0, 0.5, 0.5}, {0.0, 1.0, 3.0}) ==
        doctest::Approx(1.5).epsilon(1e-15));
  CHECK_THROWS_AS(wasserstein1_line({0.5, 0.4}, {0.5, 0.5}, {0.0, 1.0}),
                  NotNormalized);
}

TEST_CASE("Wasserstein equals the dual maximum over the Lipschitz family") {
  Rng rng(241);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = rng.uniform_int(1, 8);
    std::vector<double> points(k);
    double x = rng.uniform(-2.0, 0.0);
    for (int i = 0; i < k; ++i) {
      points[i] = x;
      x += rng.uniform(0.05, 1.5);
    }
    const auto p = rng.simplex_point(k);
    const auto q = rng.simplex_point(k);
    const auto family = lipschitz_family_1d(points);
    double dual = 0.0;
    for (std::size_t i = 0; i < family.size(); ++i) {
      const double gap = std::abs(lebesgue_expectation(family.member(i), p) -
                                  lebesgue_expectation(family.member(i), q));
      dual = std::max(dual, gap);
    }
    CHECK(wasserstein1_line(p, q, points) ==
          doctest::Approx(dual).epsilon(1e-11));
  }
}

TEST_CASE("contaminated Kantorovich identity on point masses") {
  const auto check =
      contaminated_kantorovich_check({1.0, 0.0}, {0.0, 1.0}, {0.0, 1.0}, 0.3);
  CHECK(check.iipm_value == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(check.identity_value == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("contaminated Kantorovich identity at zero contamination") {
  Rng rng(251);
  const auto p = rng.simplex_point(4);
  const auto q = rng.simplex_point(4);
  const std::vector<double> points = {0.0, 1.0, 2.5, 4.0};
  const auto check = contaminated_kantorovich_check(p, q, points, 0.0);
  CHECK(check.identity_value ==
        doctest::Approx(wasserstein1_line(p, q, points)).epsilon(1e-12));
  CHECK(check.iipm_value ==
        doctest::Approx(check.identity_value).epsilon(1e-10));
}

TEST_CASE("contaminated Kantorovich identity vanishes when P equals Q") {
  Rng rng(257);
  const auto p = rng.simplex_point(3);
  const auto check =
      contaminated_kantorovich_check(p, p, {0.0, 1.0, 2.0}, 0.4);
  CHECK(check.iipm_value == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(check.identity_value == 0.0);
}

TEST_CASE("Gaussian kernel values") {
  const KernelSpec spec{2.0};
  CHECK(gaussian_kernel({1.0, 2.0}, {1.0, 2.0}, spec) == 1.0);
  CHECK(gaussian_kernel({0.0}, {2.0 * std::sqrt(2.0)}, spec) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  Rng rng(263);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> x = {rng.uniform(-3, 3), rng.uniform(-3, 3)};
    std::vector<double> y = {rng.uniform(-3, 3), rng.uniform(-3, 3)};
    CHECK(gaussian_kernel(x, y, spec) == gaussian_kernel(y, x, spec));
  }
  CHECK_THROWS_AS(gaussian_kernel({1.0}, {1.0, 2.0}, spec), DimMismatch);
}

TEST_CASE("contaminated MMD on constant data collapses to the rate gap") {
  const std::vector<double> point = {1.5, -0.5};
  const SampleSet x({point, point, point});
  const SampleSet z({point, point, point, point});
  const KernelSpec spec{1.0};
  const double eps = 0.25;
  const double delta = 0.65;
  CHECK(contaminated_mmd_sq(x, z, eps, delta, spec) ==
        doctest::Approx((delta - eps) * (delta - eps)).epsilon(1e-13));
  CHECK(contaminated_mmd_sq(x, z, 1.0, 1.0, spec) == 0.0);
}

TEST_CASE("contaminated MMD near zero for identical multisets") {
  Rng rng(269);
  std::vector<std::vector<double>> points;
  for (int i = 0; i < 20; ++i) {
    points.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1)});
  }
  const SampleSet x(points);
  const SampleSet z(points);
  const double value = contaminated_mmd_sq(x, z, 0.0, 0.0, KernelSpec{0.7});
  CHECK(std::abs(value) <= 4.0 / 20.0);
}

TEST_CASE("contaminated MMD is symmetric under swapping the two sides") {
  Rng rng(271);
  std::vector<std::vector<double>> xs, zs;
  for (int i = 0; i < 12; ++i) xs.push_back({rng.uniform(-2, 2)});
  for (int i = 0; i < 9; ++i) zs.push_back({rng.uniform(-2, 2)});
  const SampleSet x(xs);
  const SampleSet z(zs);
  const KernelSpec spec{1.3};
  const double forward = contaminated_mmd_sq(x, z, 0.2, 0.55, spec);
  const double backward = contaminated_mmd_sq(z, x, 0.55, 0.2, spec);
  CHECK(forward == doctest::Approx(backward).epsilon(1e-12));
}

TEST_CASE("contaminated MMD input validation") {
  const SampleSet x({{0.0}, {1.0}});
  const SampleSet z({{0.0, 1.0}, {1.0, 0.0}});
  CHECK_THROWS_AS(contaminated_mmd_sq(x, z, 0.0, 0.0, KernelSpec{1.0}),
                  DimMismatch);
  CHECK_THROWS_AS(contaminated_mmd_sq(x, x, -0.1, 0.0, KernelSpec{1.0}),
                  BadRate);
  CHECK_THROWS_AS(SampleSet(std::vector<std::vector<double>>{{1.0}}), TooFewSamples);
}
