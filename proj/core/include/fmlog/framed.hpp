#pragma once

// S^1-framed Fulton-MacPherson points for D = 2d: the circle acts through the
// diagonal U(1) -> U(d) -> SO(2d), and composition is the semidirect one.

#include <vector>

#include "fmlog/fm_operad.hpp"

namespace fmlog {

/// A rational point (c, s) of the unit circle, c^2 + s^2 = 1 exactly.
class CirclePoint {
 public:
  CirclePoint() : c_(1), s_(0) {}
  CirclePoint(Rational c, Rational s);
  /// Rational parametrization ((1-t^2)/(1+t^2), 2t/(1+t^2)).
  static CirclePoint from_slope(const Rational& t);

  const Rational& c() const { return c_; }
  const Rational& s() const { return s_; }
  CirclePoint operator*(const CirclePoint& o) const;  // complex multiplication
  CirclePoint inverse() const { return CirclePoint(c_, -s_); }
  bool operator==(const CirclePoint&) const = default;

 private:
  Rational c_, s_;
};

/// Block diagonal 2d x 2d matrix with d copies of ((c, -s), (s, c)).
Matrix embed_circle(const CirclePoint& theta, int d);

struct FramedFMPoint {
  FMPoint point;
  std::vector<CirclePoint> frames;  // frames[i-1] belongs to leaf i

  /// Throws InvalidInput on odd D or a frame count different from the arity.
  FramedFMPoint(FMPoint p, std::vector<CirclePoint> f);
  static FramedFMPoint unit(int dim);
  int half_dim() const { return point.dim() / 2; }
  bool operator==(const FramedFMPoint&) const = default;
};

FramedFMPoint framed_compose(const Surjection& q, const FramedFMPoint& x, const std::vector<FramedFMPoint>& ys);
FramedFMPoint framed_sigma(const Permutation& sigma, const FramedFMPoint& x);
/// Rotation by theta of the underlying point; frames are multiplied by theta.
FramedFMPoint framed_rotate(const CirclePoint& theta, const FramedFMPoint& x);
bool framed_eq(const FramedFMPoint& x, const FramedFMPoint& y);

}  // namespace fmlog
