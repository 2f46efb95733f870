#include "fmlog/framed.hpp"

#include "fmlog/errors.hpp"

namespace fmlog {

CirclePoint::CirclePoint(Rational c, Rational s) : c_(std::move(c)), s_(std::move(s)) {
  if (c_ * c_ + s_ * s_ != 1) throw_invalid("circle point off the unit circle");
}

CirclePoint CirclePoint::from_slope(const Rational& t) {
  const Rational den = 1 + t * t;
  return CirclePoint((1 - t * t) / den, 2 * t / den);
}

CirclePoint CirclePoint::operator*(const CirclePoint& o) const {
  return CirclePoint(c_ * o.c_ - s_ * o.s_, c_ * o.s_ + s_ * o.c_);
}

Matrix embed_circle(const CirclePoint& theta, int d) {
  if (d < 1) throw_invalid("embed_circle: d must be positive");
  Matrix m(2 * d, Vec(2 * d, 0));
  for (int b = 0; b < d; ++b) {
    m[2 * b][2 * b] = theta.c();
    m[2 * b][2 * b + 1] = -theta.s();
    m[2 * b + 1][2 * b] = theta.s();
    m[2 * b + 1][2 * b + 1] = theta.c();
  }
  return m;
}

FramedFMPoint::FramedFMPoint(FMPoint p, std::vector<CirclePoint> f) : point(std::move(p)), frames(std::move(f)) {
  if (point.dim() % 2 != 0) throw_invalid("framed point needs even ambient dimension");
  if (static_cast<int>(frames.size()) != point.arity()) throw_invalid("frame count differs from arity");
}

FramedFMPoint FramedFMPoint::unit(int dim) { return FramedFMPoint(FMPoint::unit(dim), {CirclePoint()}); }

FramedFMPoint framed_compose(const Surjection& q, const FramedFMPoint& x, const std::vector<FramedFMPoint>& ys) {
  if (static_cast<int>(ys.size()) != x.point.arity()) throw_invalid("framed_compose: wrong number of inputs");
  const int d = x.half_dim();
  std::vector<FMPoint> rotated;
  rotated.reserve(ys.size());
  for (int r = 1; r <= x.point.arity(); ++r) {
    const auto& y = ys[r - 1];
    if (y.point.dim() != x.point.dim()) throw_invalid("framed_compose: dimension mismatch");
    rotated.push_back(rotate(embed_circle(x.frames[r - 1], d), y.point));
  }
  FMPoint point = compose(q, x.point, rotated);
  std::vector<CirclePoint> frames(q.source_size());
  for (int j = 1; j <= q.source_size(); ++j) {
    const int r = q(j);
    frames[j - 1] = x.frames[r - 1] * ys[r - 1].frames[q.local_index(j) - 1];
  }
  return FramedFMPoint(std::move(point), std::move(frames));
}

FramedFMPoint framed_sigma(const Permutation& sigma, const FramedFMPoint& x) {
  std::vector<CirclePoint> frames(x.frames.size());
  for (int i = 1; i <= sigma.size(); ++i) frames[sigma(i) - 1] = x.frames[i - 1];
  return FramedFMPoint(sigma_act(sigma, x.point), std::move(frames));
}

FramedFMPoint framed_rotate(const CirclePoint& theta, const FramedFMPoint& x) {
  std::vector<CirclePoint> frames;
  for (const auto& f : x.frames) frames.push_back(theta * f);
  return FramedFMPoint(rotate(embed_circle(theta, x.half_dim()), x.point), std::move(frames));
}

bool framed_eq(const FramedFMPoint& x, const FramedFMPoint& y) {
  return x.frames == y.frames && point_eq(x.point, y.point);
}

}  // namespace fmlog
