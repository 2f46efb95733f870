#include <cmath>

#include "doctest.h"
#include "fmlog/blowup_kn.hpp"
#include "fmlog/errors.hpp"

using namespace fmlog;
using namespace fmlog::kn;

TEST_SUITE("kn") {
  const ChartSection plane{2, 2, [](const RVec& x) { return RVec{x[0], x[1]}; }};

  TEST_CASE("blow-up membership") {
    const RVec x{3, 4};
    CHECK(bu_membership(plane, x, {0.6, 0.8}));
    CHECK_FALSE(bu_membership(plane, x, {-0.6, -0.8}));
    CHECK(bu_membership(plane, {0, 0}, {std::sqrt(0.5), -std::sqrt(0.5)}));
    CHECK_THROWS_AS(bu_membership(plane, x, {1, 1}), InvalidInput);
  }

  TEST_CASE("blow-up fibers") {
    const Fiber zero = bu_fiber(plane, {0, 0}, 8);
    CHECK(zero.over_zero);
    CHECK(zero.directions.size() == 8u);
    for (const auto& u : zero.directions) CHECK(norm(u) == doctest::Approx(1.0).epsilon(1e-12));
    const Fiber off = bu_fiber(plane, {3, 4}, 8);
    REQUIRE(off.directions.size() == 1u);
    CHECK(max_abs_diff(off.directions[0], {0.6, 0.8}) < 1e-15);
    const ChartSection line{1, 1, [](const RVec& x) { return RVec{x[0]}; }};
    const Fiber s0 = bu_fiber(line, {0}, 5);
    REQUIRE(s0.directions.size() == 2u);
    CHECK(std::abs(s0.directions[0][0] + s0.directions[1][0]) < 1e-15);
  }

  TEST_CASE("monomial maps") {
    const auto one = [](const RVec&) { return Complex(1, 0); };
    const MonomialMap id = kn_map_chart({one, one}, {{1, 0}, {0, 1}});
    const CVec z{Complex(0.3, -0.2), Complex(-1.5, 0.7)};
    CHECK(max_abs_diff(id.apply({}, z), z) < 1e-15);
    const MonomialMap inv = kn_map_chart({one}, {{-1}});
    const Complex u = std::polar(1.0, 0.7);
    CHECK(max_abs_diff(inv.apply_phase({}, {u}), {std::conj(u)}) < 1e-15);
    const MonomialMap zero = kn_map_chart({[](const RVec&) { return Complex(0, 0); }}, {{1}});
    CHECK_THROWS_AS(zero.apply({}, {Complex(1, 0)}), InvalidInput);
  }

  TEST_CASE("sample campaigns") {
    for (int m = 0; m <= 2; ++m) CHECK(hopf_verify(m, 2000, kDefaultTol, 1).ok());
    for (const auto& c : circle_split_catalog()) CHECK_MESSAGE(circle_split_verify(c, 500, kDefaultTol, 1).ok(), c);
    CHECK(circle_split_verify("catalog:disk-zero", 100, kDefaultTol, 1).ok());
    for (int n = 1; n <= 3; ++n) CHECK(s1_action_verify(n, 500, kDefaultTol, 1).ok());
    for (const auto& c : strict_cartesian_catalog()) CHECK_MESSAGE(strict_cartesian_verify(c, 500, kDefaultTol, 1).ok(), c);
    CHECK(order_independence_verify(500, kDefaultTol, 1).ok());
    CHECK(functoriality_verify(200, kDefaultTol, 1).ok());
    CHECK(sphere_example_verify(500, kDefaultTol, 1).ok());
    CHECK_THROWS_AS(strict_cartesian_verify("no-such-case", 10, kDefaultTol, 1), InvalidInput);
  }

  TEST_CASE("reports record failures above tolerance") {
    Report r("probe");
    r.record(1e-12, 1e-9, "small");
    CHECK(r.ok());
    r.record(1e-3, 1e-9, "large");
    CHECK_FALSE(r.ok());
    CHECK(r.max_error == doctest::Approx(1e-3));
    CHECK(r.failures.size() == 1u);
  }

  TEST_CASE("halton samples are reproducible") {
    Halton a(4, 9), b(4, 9), c(4, 10);
    const RVec x = a.next();
    CHECK(x == b.next());
    CHECK(x != c.next());
    for (double v : x) CHECK((v >= 0 && v < 1));
  }
}
