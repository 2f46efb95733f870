#include "doctest.h"
#include "fmlog/campaigns.hpp"
#include "fmlog/errors.hpp"
#include "fmlog/nested.hpp"
#include "fmlog/screens.hpp"

using namespace fmlog;

namespace {
Vec v1(const char* a) { return {Rational(a)}; }
}  // namespace

TEST_SUITE("screens") {
  TEST_CASE("difference module relations") {
    const DiffModule f12(0b11, 1);
    const Vec t12 = f12.reduce({{Rational(1), 1, 2, 1}});
    REQUIRE(t12.size() == 1u);
    CHECK(abs(t12[0]) == 1);
    const DiffModule f123(0b111, 1);
    CHECK(f123.reduce({{Rational(1), 1, 3, 1}, {Rational(-1), 2, 3, 1}}) == f123.reduce({{Rational(1), 1, 2, 1}}));
    CHECK(is_zero(f123.reduce({{Rational(1), 2, 2, 1}})));
    CHECK_THROWS_AS(f12.reduce({{Rational(1), 1, 3, 1}}), InvalidInput);
  }

  TEST_CASE("pullbacks along label maps") {
    const Vec v{Rational(2), Rational(-3)};
    CHECK(pull({{1, 1}, {2, 2}, {3, 3}}, 0b111, 1, v) == v);
    // F_I -> F_J for 1,2 -> 1 and 3 -> 2: t_{21} goes to t_{11} = 0
    const DiffModule f(0b111, 1);
    const Vec image = pull({{1, 1}, {2, 1}, {3, 2}}, 0b11, 1, f.reduce({{Rational(1), 2, 1, 1}}));
    CHECK(is_zero(image));
  }

  TEST_CASE("screen_from_config invariances") {
    const SimpleScreen s = screen_from_config(1, {v1("0"), v1("1"), v1("3")});
    CHECK(screen_from_config(1, {v1("5"), v1("6"), v1("8")}) == s);
    CHECK(screen_from_config(1, {v1("0"), v1("-2"), v1("-6")}) == s);
    CHECK_THROWS_AS(screen_from_config(1, {v1("1"), v1("1")}), InvalidInput);
  }

  TEST_CASE("validation and vanishing") {
    const SimpleScreen s = screen_from_config(2, {{Rational(0), Rational(0)}, {Rational(1), Rational(2)},
                                                  {Rational(-1), Rational(3)}, {Rational(4), Rational(1)}});
    CHECK(screen_validate(s).valid);
    for (Mask m : proper_multi_subsets(4)) CHECK_FALSE(vanishing_satisfied(s, m));
    // adding a covector independent of phi_{123} breaks compatibility
    std::map<Mask, Vec> phi = s.covectors();
    Vec& c = phi.at(0b0111);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] += Rational(int(k) + 1, 7) * (k % 2 ? 1 : -1);
    const SimpleScreen bad(4, 2, phi);
    const ScreenValidation v = screen_validate(bad);
    CHECK_FALSE(v.valid);
    CHECK(v.witness.has_value());
  }

  TEST_CASE("composition examples") {
    const SimpleScreen s0 = screen_from_config(1, {v1("0"), v1("1"), v1("4")});
    CHECK(screen_compose(Surjection::identity(3), s0, std::vector<SimpleScreen>(3, SimpleScreen(1, 1))) == s0);
    const Surjection q({1, 2, 1}, 2);
    const SimpleScreen outer = screen_from_config(1, {v1("0"), v1("1")});
    const SimpleScreen inner = screen_from_config(1, {v1("0"), v1("5")});
    const SimpleScreen c = screen_compose(q, outer, {inner, SimpleScreen(1, 1)});
    CHECK(screen_validate(c).valid);
    CHECK(vanishing_satisfied(c, 0b101));
    CHECK(c.phi(0b101) == inner.phi(0b11));
    // straddling subsets: phi_{q(K)} o F_q, computed by hand from the outer
    CHECK(c.phi(0b011) == canonical_covector(pull_covector({{1, 1}, {2, 2}}, 0b11, 1, outer.phi(0b11))));
    CHECK(c.phi(0b111) == canonical_covector(pull_covector({{1, 1}, {2, 2}, {3, 1}}, 0b11, 1, outer.phi(0b11))));
    const ScreenDecomposition dec = screen_decompose(q, c);
    CHECK(dec.outer == outer);
    CHECK(dec.inner[0] == inner);
    CHECK_THROWS_AS(screen_decompose(q, s0), InvalidInput);
  }

  TEST_CASE("bijective q and the symmetric group") {
    const SimpleScreen s = screen_from_config(2, {{Rational(0), Rational(0)}, {Rational(1), Rational(2)},
                                                  {Rational(-1), Rational(3)}});
    const ScreenDecomposition dec = screen_decompose(Surjection({2, 3, 1}, 3), s);
    for (const auto& t : dec.inner) CHECK(t.arity() == 1);
    CHECK(screen_compose(Surjection({2, 3, 1}, 3), dec.outer, dec.inner) == s);
    CHECK(screen_sigma(Permutation::identity(3), s) == s);
    const Permutation sig({2, 3, 1});
    CHECK(screen_sigma(sig.inverse(), screen_sigma(sig, s)) == s);
  }

  TEST_CASE("bijection and bridge campaigns") {
    const CheckResult b = screen_bijection(4, 3, 60, 5);
    CHECK_MESSAGE(b.ok, b.detail);
    const CheckResult br = screen_fm_bridge(40, 5);
    CHECK_MESSAGE(br.ok, br.detail);
  }
}
