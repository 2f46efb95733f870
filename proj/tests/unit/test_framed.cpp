#include "doctest.h"
#include "fmlog/campaigns.hpp"
#include "fmlog/errors.hpp"
#include "fmlog/framed.hpp"

using namespace fmlog;

TEST_SUITE("framed") {
  TEST_CASE("embed_circle") {
    CHECK(embed_circle(CirclePoint(1, 0), 2) == identity_matrix(4));
    CHECK(embed_circle(CirclePoint(0, 1), 1) == Matrix{{Rational(0), Rational(-1)}, {Rational(1), Rational(0)}});
    CHECK_THROWS_AS(CirclePoint(Rational(1), Rational(1)), InvalidInput);
    const CirclePoint t = CirclePoint::from_slope(Rational(1, 2));
    CHECK(t == CirclePoint(Rational(3, 5), Rational(4, 5)));
    CHECK(t * t.inverse() == CirclePoint());
  }

  TEST_CASE("trivial frames reduce to the unframed composition") {
    Rng rng(21);
    const Surjection q({1, 2, 1, 2, 2}, 2);
    const FMPoint x = random_point(rng, 2, 2), y1 = random_point(rng, 2, 2), y2 = random_point(rng, 2, 3);
    auto triv = [](const FMPoint& p) { return FramedFMPoint(p, std::vector<CirclePoint>(p.arity())); };
    const FramedFMPoint c = framed_compose(q, triv(x), {triv(y1), triv(y2)});
    CHECK(point_eq(c.point, compose(q, x, {y1, y2})));
    for (const auto& f : c.frames) CHECK(f == CirclePoint());
  }

  TEST_CASE("framed units: frames act by rotation") {
    Rng rng(4);
    const FramedFMPoint x = random_framed(rng, 1, 3);
    const CirclePoint theta = CirclePoint::from_slope(Rational(2, 3));
    const FramedFMPoint u(FMPoint::unit(2), {theta});
    // a framed unit in the outer slot rotates the inner point and its frames
    const FramedFMPoint c = framed_compose(Surjection({1, 1, 1}, 1), u, {x});
    CHECK(framed_eq(c, framed_rotate(theta, x)));
    CHECK(framed_eq(framed_compose(Surjection::identity(3), x, std::vector<FramedFMPoint>(3, FramedFMPoint::unit(2))),
                    x));
  }

  TEST_CASE("odd dimension is rejected") {
    CHECK_THROWS_AS(FramedFMPoint(FMPoint::unit(3), {CirclePoint()}), InvalidInput);
  }

  TEST_CASE("semidirect axioms") {
    for (int d = 1; d <= 2; ++d)
      for (int n = 1; n <= 4; ++n)
        for (const CheckResult& r :
             {framed_associativity(d, n, 30, 2), framed_unit(d, n, 30, 2), framed_equivariance(d, n, 30, 2)})
          CHECK_MESSAGE(r.ok, r.name << ": " << r.detail);
  }
}
