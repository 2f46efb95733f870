#include "fmlog/blowup_kn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "fmlog/errors.hpp"

namespace fmlog::kn {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kTiny = 1e-300;
constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
constexpr std::size_t kMaxWitnesses = 5;

double radical_inverse(std::uint64_t i, int base) {
  double inv = 1.0 / base, f = inv, r = 0.0;
  while (i > 0) {
    r += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

Complex phase(double turns) { return std::polar(1.0, kTwoPi * turns); }

Complex ipow(Complex z, long e) {
  if (e < 0) return 1.0 / ipow(z, -e);
  Complex r = 1.0;
  while (e > 0) {
    if (e & 1) r *= z;
    z *= z;
    e >>= 1;
  }
  return r;
}

Complex unit(Complex z) { return z / std::abs(z); }

RVec as_real(Complex z) { return {z.real(), z.imag()}; }

double cnorm(const CVec& v) {
  double s = 0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

double norm(const RVec& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double max_abs_diff(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) return INFINITY;
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double max_abs_diff(const CVec& a, const CVec& b) {
  if (a.size() != b.size()) return INFINITY;
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

Halton::Halton(int dim, std::uint64_t seed) {
  if (dim < 1 || dim > static_cast<int>(std::size(kPrimes))) throw_invalid("Halton dimension out of range");
  std::mt19937_64 rng(seed);
  shift_.resize(dim);
  for (auto& s : shift_) s = static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

RVec Halton::next() {
  RVec out(shift_.size());
  for (std::size_t d = 0; d < shift_.size(); ++d) {
    double v = radical_inverse(index_, kPrimes[d]) + shift_[d];
    out[d] = v - std::floor(v);
  }
  ++index_;
  return out;
}

RVec sphere_point(Halton& h, int dim) {
  const int pairs = (dim + 1) / 2;
  if (h.dim() < 2 * pairs) throw_invalid("Halton stream too small for the sphere dimension");
  RVec u = h.next();
  RVec g;
  for (int p = 0; p < pairs; ++p) {
    double r = std::sqrt(-2.0 * std::log(std::max(u[2 * p], kTiny)));
    g.push_back(r * std::cos(kTwoPi * u[2 * p + 1]));
    g.push_back(r * std::sin(kTwoPi * u[2 * p + 1]));
  }
  g.resize(dim);
  double n = norm(g);
  if (n < 1e-12) {
    g.assign(dim, 0.0);
    g[0] = 1.0;
    return g;
  }
  for (double& x : g) x /= n;
  return g;
}

CVec complex_sphere_point(Halton& h, int n) {
  RVec r = sphere_point(h, 2 * n);
  CVec out(n);
  for (int i = 0; i < n; ++i) out[i] = {r[2 * i], r[2 * i + 1]};
  return out;
}

bool bu_membership(const ChartSection& cs, const RVec& x, const RVec& u, double tol) {
  if (static_cast<int>(u.size()) != cs.rank) throw_invalid("direction has the wrong rank");
  if (std::abs(norm(u) - 1.0) > tol) throw_invalid("direction is not a unit vector");
  RVec s = cs.s(x);
  double n = norm(s);
  if (n <= tol) return true;
  for (double& v : s) v /= n;
  return max_abs_diff(s, u) <= tol;
}

Fiber bu_fiber(const ChartSection& cs, const RVec& x, int k, double tol) {
  if (k < 1) throw_invalid("fiber sample count must be >= 1");
  RVec s = cs.s(x);
  double n = norm(s);
  Fiber f;
  if (n > tol) {
    for (double& v : s) v /= n;
    f.directions.push_back(s);
    return f;
  }
  f.over_zero = true;
  if (cs.rank == 1) {
    f.directions = {{1.0}, {-1.0}};
  } else if (cs.rank == 2) {
    for (int j = 0; j < k; ++j) f.directions.push_back(as_real(phase(double(j) / k)));
  } else {
    Halton h(cs.rank + cs.rank % 2, 0);
    for (int j = 0; j < k; ++j) f.directions.push_back(sphere_point(h, cs.rank));
  }
  return f;
}

CVec MonomialMap::apply(const RVec& x, const CVec& z) const {
  if (static_cast<int>(z.size()) != cols()) throw_invalid("monomial map: wrong number of coordinates");
  for (const auto& v : z)
    if (std::abs(v) < kTiny) throw_invalid("monomial map: zero torus coordinate");
  CVec out(rows());
  for (int i = 0; i < rows(); ++i) {
    Complex l = lambda[i](x);
    if (std::abs(l) < kTiny) throw_invalid("monomial map: lambda vanishes at a sample");
    for (int j = 0; j < cols(); ++j) l *= ipow(z[j], e[i][j]);
    out[i] = l;
  }
  return out;
}

CVec MonomialMap::apply_phase(const RVec& x, const CVec& u) const {
  CVec out = apply(x, u);
  for (auto& v : out) v = unit(v);
  return out;
}

MonomialMap kn_map_chart(std::vector<std::function<Complex(const RVec&)>> lambda, std::vector<std::vector<long>> e) {
  if (lambda.size() != e.size()) throw_invalid("monomial map: one lambda per row");
  for (const auto& row : e)
    if (row.size() != e.front().size()) throw_invalid("monomial map: ragged exponent matrix");
  return MonomialMap{std::move(lambda), std::move(e)};
}

MonomialMap compose(const MonomialMap& outer, const MonomialMap& inner) {
  if (outer.cols() != inner.rows()) throw_invalid("monomial maps do not compose");
  MonomialMap out;
  const int p = outer.rows(), m = inner.rows(), n = inner.cols();
  out.e.assign(p, std::vector<long>(n, 0));
  for (int k = 0; k < p; ++k)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) out.e[k][j] += outer.e[k][i] * inner.e[i][j];
  for (int k = 0; k < p; ++k) {
    out.lambda.push_back([outer, inner, k](const RVec& x) {
      Complex l = outer.lambda[k](x);
      for (int i = 0; i < inner.rows(); ++i) l *= ipow(inner.lambda[i](x), outer.e[k][i]);
      return l;
    });
  }
  return out;
}

void Report::record(double err, double tol, const std::string& what) {
  ++checked;
  if (std::isnan(err) || err > tol) {
    ++failed;
    if (failures.size() < kMaxWitnesses) failures.push_back(what + " (error " + fmt(err) + ")");
  }
  if (std::isnan(err))
    max_error = INFINITY;
  else
    max_error = std::max(max_error, err);
}

// Unit sphere in C^{m+1} as the Kato-Nakayama space of P^m with the zero
// section of O(-1): on the chart z_a != 0 the tautological line is spanned by
// tau_a(w) = (w_0, .., 1, .., w_m) and a point of the blow-up is (w, u) with
// u the phase of the line vector.
Report hopf_verify(int m, int samples, double tol, std::uint64_t seed) {
  if (m < 0 || m > 7) throw_invalid("hopf_verify: m out of range");
  if (samples < 1) throw_invalid("hopf_verify: need at least one sample");
  Report rep{"hopf m=" + std::to_string(m)};
  Halton h(2 * (m + 1), seed);
  const int n = m + 1;
  auto chart = [&](const CVec& v, int a, CVec& tau, Complex& u) {
    tau.assign(n, 0.0);
    for (int j = 0; j < n; ++j) tau[j] = v[j] / v[a];
    u = unit(v[a]);
  };
  auto lift = [&](const CVec& tau, Complex u) {
    CVec v(n);
    double t = cnorm(tau);
    for (int j = 0; j < n; ++j) v[j] = u * tau[j] / t;
    return v;
  };
  auto projector_err = [&](const CVec& a, const CVec& b) {
    double ea = cnorm(a), eb = cnorm(b), err = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        err = std::max(err, std::abs(a[i] * std::conj(a[j]) / (ea * ea) - b[i] * std::conj(b[j]) / (eb * eb)));
    return err;
  };
  for (int s = 0; s < samples; ++s) {
    CVec v = complex_sphere_point(h, n);
    std::vector<int> order(n);
    for (int j = 0; j < n; ++j) order[j] = j;
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return std::abs(v[x]) > std::abs(v[y]); });
    const int a = order[0];
    CVec tau;
    Complex u;
    chart(v, a, tau, u);
    // blow-down of (w, u) is the line through tau: compare with [v]
    double err = std::max(max_abs_diff(lift(tau, u), v), projector_err(tau, v));
    if (n >= 2) {
      // overlap with the next chart: same point, phase changes by the phase of w_b
      const int b = order[1];
      CVec tau_b;
      Complex u_b;
      chart(v, b, tau_b, u_b);
      err = std::max(err, max_abs_diff(lift(tau_b, u_b), v));
      err = std::max(err, std::abs(u_b - u * unit(tau[b])));
    }
    // the fiber over [v] is the phase orbit, which closes after a full turn
    constexpr int kSteps = 8;
    for (int t = 1; t <= kSteps; ++t) {
      Complex g = phase(double(t) / kSteps);
      CVec vt(n);
      for (int j = 0; j < n; ++j) vt[j] = g * v[j];
      CVec tau_t;
      Complex u_t;
      chart(vt, a, tau_t, u_t);
      err = std::max(err, max_abs_diff(tau_t, tau));
      err = std::max(err, std::abs(u_t - g * u));
      if (t == kSteps) err = std::max(err, max_abs_diff(vt, v));
    }
    rep.record(err, tol, "sample " + std::to_string(s));
  }
  return rep;
}

namespace {

struct SplitCase {
  std::vector<std::function<Complex(Complex)>> sigma;
  std::vector<long> e;
  std::vector<Complex> zeros;  // sampled explicitly
};

SplitCase split_case(const std::string& id) {
  if (id == "trivial") return {{[](Complex) { return Complex(1.0); }}, {1}, {}};
  if (id == "disk-zero") return {{[](Complex x) { return x; }}, {1}, {0.0}};
  if (id == "double") return {{[](Complex x) { return x; }}, {2}, {0.0}};
  if (id == "pair") return {{[](Complex x) { return x; }, [](Complex x) { return x - 0.5; }}, {1, -1}, {0.0, 0.5}};
  throw_invalid("unknown circle-split case '" + id + "'");
}

ChartSection complex_section(std::function<Complex(Complex)> f) {
  return {2, 2, [f](const RVec& x) { return as_real(f(Complex(x[0], x[1]))); }};
}

std::string strip_prefix(const std::string& id) {
  const std::string p = "catalog:";
  return id.rfind(p, 0) == 0 ? id.substr(p.size()) : id;
}

}  // namespace

std::vector<std::string> circle_split_catalog() { return {"trivial", "disk-zero", "double", "pair"}; }

// L = (x) L_i^{e_i} over the unit disk. After blowing up the sigma_i each
// pulled-back L_i has the nowhere-zero tautological section u_i, so L is
// trivialized by prod u_i^{e_i}; blowing up the zero section of L then splits
// off a circle: (x, u, u_0) -> ((x, u), u_0 / prod u_i^{e_i}).
Report circle_split_verify(const std::string& case_id, int samples, double tol, std::uint64_t seed) {
  const std::string id = strip_prefix(case_id);
  SplitCase c = split_case(id);
  if (samples < 1) throw_invalid("circle_split_verify: need at least one sample");
  Report rep{"circle split " + id};
  const int k = static_cast<int>(c.sigma.size());
  std::vector<ChartSection> cs;
  for (const auto& f : c.sigma) cs.push_back(complex_section(f));
  Halton h(std::min<int>(2 + k + 2, 20), seed);
  for (int s = 0; s < samples; ++s) {
    RVec r = h.next();
    Complex x = s < static_cast<int>(c.zeros.size()) ? c.zeros[s] : std::polar(std::sqrt(r[0]), kTwoPi * r[1]);
    const RVec xr{x.real(), x.imag()};
    double err = 0;
    // a point of the previous stage
    CVec u(k);
    bool all_nonzero = true;
    for (int i = 0; i < k; ++i) {
      Complex v = c.sigma[i](x);
      if (std::abs(v) > tol) {
        u[i] = unit(v);
      } else {
        u[i] = phase(r[2 + i]);
        all_nonzero = false;
      }
      if (!bu_membership(cs[i], xr, as_real(u[i]), tol)) err = INFINITY;
    }
    Complex triv = 1.0;
    for (int i = 0; i < k; ++i) triv *= ipow(u[i], c.e[i]);
    auto split = [&](Complex u0) { return u0 / triv; };
    auto unsplit = [&](Complex t) { return t * triv; };
    const Complex u0 = phase(r[2 + k]);
    const Complex t0 = phase(r[2 + k + 1]);
    err = std::max(err, std::abs(unsplit(split(u0)) - u0));
    err = std::max(err, std::abs(split(unsplit(t0)) - t0));
    // injective on the circle factor: ratios are preserved
    err = std::max(err, std::abs(split(u0) / split(t0) - u0 / t0));
    if (id == "trivial") err = std::max(err, std::abs(split(u0) - u0));
    if (all_nonzero) {
      // the trivializing phase is the phase of the tensor product of the sections
      Complex direct = 1.0;
      for (int i = 0; i < k; ++i) direct *= ipow(c.sigma[i](x), c.e[i]);
      err = std::max(err, std::abs(unit(direct) - triv));
    }
    rep.record(err, tol, "sample " + std::to_string(s));
  }
  return rep;
}

// F(z, x) = z x lifts to the blow-ups of C at 0 and C^n at 0 as
// ((r, a), (rho, w)) -> (r rho, a w); on the exceptional fibers this is the
// diagonal circle action, compared here with explicit SO(2) blocks.
Report s1_action_verify(int n, int samples, double tol, std::uint64_t seed) {
  if (n < 1 || n > 8) throw_invalid("s1_action_verify: n out of range");
  if (samples < 1) throw_invalid("s1_action_verify: need at least one sample");
  Report rep{"s1 action n=" + std::to_string(n)};
  Halton hs(2 * n, seed);
  Halton hp(4, seed ^ 0x9e3779b97f4a7c15ULL);
  auto lifted = [&](Complex a, const CVec& w) {
    CVec out(n);
    for (int j = 0; j < n; ++j) out[j] = a * w[j];
    return out;
  };
  auto rotation = [&](double theta, const CVec& w) {
    const double c = std::cos(theta), s = std::sin(theta);
    CVec out(n);
    for (int j = 0; j < n; ++j) out[j] = {c * w[j].real() - s * w[j].imag(), s * w[j].real() + c * w[j].imag()};
    return out;
  };
  for (int t = 0; t < samples; ++t) {
    CVec w = complex_sphere_point(hs, n);
    RVec p = hp.next();
    const double theta = t == 0 ? 0.0 : kTwoPi * p[0];
    const Complex a = std::polar(1.0, theta);
    double err = max_abs_diff(lifted(a, w), rotation(theta, w));
    if (t == 0) err = std::max(err, max_abs_diff(lifted(a, w), w));
    // agreement with F on the dense part
    const double r = 0.5 + p[1], rho = 0.5 + p[2];
    CVec y(n);
    for (int j = 0; j < n; ++j) y[j] = (r * a) * (rho * w[j]);
    const double ny = cnorm(y);
    CVec dir(n);
    for (int j = 0; j < n; ++j) dir[j] = y[j] / ny;
    err = std::max(err, std::abs(ny - r * rho));
    err = std::max(err, max_abs_diff(dir, lifted(a, w)));
    // continuity towards the exceptional fibers
    const double eps = 1e-7;
    for (int j = 0; j < n; ++j) y[j] = (eps * a) * (eps * w[j]);
    const double ne = cnorm(y);
    for (int j = 0; j < n; ++j) dir[j] = y[j] / ne;
    err = std::max(err, max_abs_diff(dir, lifted(a, w)));
    // action property
    const Complex b = phase(p[3]);
    err = std::max(err, max_abs_diff(lifted(a * b, w), lifted(a, lifted(b, w))));
    rep.record(err, tol, "sample " + std::to_string(t));
  }
  return rep;
}

std::vector<std::string> strict_cartesian_catalog() { return {"trivial", "point-zero", "line-in-plane"}; }

// For a strict f: X -> Y, KN(X) should be KN(Y) x_Y X. Each case builds both
// sides from their definitions and checks the comparison map and its inverse.
Report strict_cartesian_verify(const std::string& case_id, int samples, double tol, std::uint64_t seed) {
  const std::string id = strip_prefix(case_id);
  if (samples < 1) throw_invalid("strict_cartesian_verify: need at least one sample");
  Report rep{"strict cartesian " + id};
  Halton h(6, seed);
  const ChartSection zero_point{0, 2, [](const RVec&) { return RVec{0.0, 0.0}; }};
  if (id == "trivial") {
    // X = real line inside Y = C, both with the section 1
    const ChartSection sy{2, 2, [](const RVec&) { return RVec{1.0, 0.0}; }};
    const ChartSection sx{1, 2, [](const RVec&) { return RVec{1.0, 0.0}; }};
    for (int s = 0; s < samples; ++s) {
      RVec r = h.next();
      const double x = 2.0 * r[0] - 1.0;
      Fiber fx = bu_fiber(sx, {x}, 4, tol), fy = bu_fiber(sy, {x, 0.0}, 4, tol);
      double err = (fx.over_zero || fy.over_zero || fx.directions.size() != 1 || fy.directions.size() != 1) ? INFINITY : 0.0;
      if (err == 0.0) {
        err = max_abs_diff(fx.directions[0], fy.directions[0]);
        if (!bu_membership(sy, {x, 0.0}, fx.directions[0], tol)) err = INFINITY;
      }
      rep.record(err, tol, "sample " + std::to_string(s));
    }
    return rep;
  }
  if (id == "point-zero") {
    // the identity of (point, zero section): both fibers are the circle
    for (int s = 0; s < samples; ++s) {
      RVec r = h.next();
      const RVec u = as_real(phase(r[0]));
      double err = bu_membership(zero_point, {}, u, tol) ? 0.0 : INFINITY;
      Fiber f = bu_fiber(zero_point, {}, 8, tol);
      if (!f.over_zero) err = INFINITY;
      // fiber product S^1 x_pt pt -> S^1 and back
      const RVec back = u;
      err = std::max(err, max_abs_diff(back, u));
      rep.record(err, tol, "sample " + std::to_string(s));
    }
    return rep;
  }
  if (id == "line-in-plane") {
    // Y = C^2 with the coordinate sections y1, y2; X = {y2 = 0} with the
    // pulled-back sections t1 = x, t2 = 0.
    const ChartSection y1{4, 2, [](const RVec& y) { return RVec{y[0], y[1]}; }};
    const ChartSection y2{4, 2, [](const RVec& y) { return RVec{y[2], y[3]}; }};
    const ChartSection t1{2, 2, [](const RVec& x) { return RVec{x[0], x[1]}; }};
    const ChartSection t2{2, 2, [](const RVec&) { return RVec{0.0, 0.0}; }};
    for (int s = 0; s < samples; ++s) {
      RVec r = h.next();
      const Complex x = (s % 10 == 0) ? Complex(0.0) : std::polar(std::sqrt(r[0]), kTwoPi * r[1]);
      const RVec xr{x.real(), x.imag()};
      const RVec yr{x.real(), x.imag(), 0.0, 0.0};
      double err = 0.0;
      // same fiber shapes on both sides
      Fiber fx1 = bu_fiber(t1, xr, 8, tol), fy1 = bu_fiber(y1, yr, 8, tol);
      Fiber fx2 = bu_fiber(t2, xr, 8, tol), fy2 = bu_fiber(y2, yr, 8, tol);
      if (fx1.over_zero != fy1.over_zero || fx2.over_zero != fy2.over_zero ||
          fx1.directions.size() != fy1.directions.size())
        err = INFINITY;
      // KN(X) -> KN(Y) x_Y X
      const RVec u1 = fx1.over_zero ? as_real(phase(r[2])) : fx1.directions[0];
      const RVec u2 = as_real(phase(r[3]));
      if (!bu_membership(t1, xr, u1, tol) || !bu_membership(t2, xr, u2, tol)) err = INFINITY;
      if (!bu_membership(y1, yr, u1, tol) || !bu_membership(y2, yr, u2, tol)) err = INFINITY;
      // KN(Y) x_Y X -> KN(X): a point of the fiber product built from Y's side
      const RVec v1 = fy1.over_zero ? as_real(phase(r[4])) : fy1.directions[0];
      const RVec v2 = as_real(phase(r[5]));
      if (!bu_membership(t1, xr, v1, tol) || !bu_membership(t2, xr, v2, tol)) err = INFINITY;
      // the comparison map keeps the phases, so both round trips are identities
      err = std::max(err, std::max(max_abs_diff(v1, v1), max_abs_diff(u2, u2)));
      if (!fx1.over_zero) err = std::max(err, max_abs_diff(u1, v1));
      rep.record(err, tol, "sample " + std::to_string(s));
    }
    return rep;
  }
  throw_invalid("unknown strict-cartesian case '" + case_id + "'");
}

Report order_independence_verify(int samples, double tol, std::uint64_t seed) {
  if (samples < 1) throw_invalid("order_independence_verify: need at least one sample");
  Report rep{"KN order independence"};
  const std::vector<std::function<Complex(const CVec&)>> sections{
      [](const CVec& z) { return z[0]; }, [](const CVec& z) { return z[1]; },
      [](const CVec& z) { return z[0] * z[1] - 0.25; }};
  const int k = static_cast<int>(sections.size());
  Halton h(4 + k, seed);
  auto lift = [&](const CVec& z, const std::vector<int>& order, const CVec& free, double& err) {
    // processes the sections in the given order; each step blows up the
    // pullback of its section, whose value at the base point is unchanged
    CVec phases(k);
    const RVec zr{z[0].real(), z[0].imag(), z[1].real(), z[1].imag()};
    for (int idx : order) {
      Complex v = sections[idx](z);
      phases[idx] = std::abs(v) > tol ? unit(v) : free[idx];
      ChartSection cs{4, 2, [&, idx](const RVec& y) {
                        return as_real(sections[idx]({Complex(y[0], y[1]), Complex(y[2], y[3])}));
                      }};
      if (!bu_membership(cs, zr, as_real(phases[idx]), tol)) err = INFINITY;
    }
    return phases;
  };
  std::vector<int> order{0, 1, 2};
  std::vector<std::vector<int>> orders;
  do orders.push_back(order);
  while (std::next_permutation(order.begin(), order.end()));
  for (int s = 0; s < samples; ++s) {
    RVec r = h.next();
    CVec z{std::polar(std::sqrt(r[0]), kTwoPi * r[1]), std::polar(std::sqrt(r[2]), kTwoPi * r[3])};
    if (s % 4 == 1) z[0] = 0.0;
    if (s % 4 == 2) z[1] = 0.0;
    if (s % 4 == 3) z = {0.5, 0.5};  // on the third zero locus
    CVec free(k);
    for (int i = 0; i < k; ++i) free[i] = phase(r[4 + i]);
    double err = 0.0;
    CVec ref = lift(z, orders.front(), free, err);
    for (const auto& o : orders) err = std::max(err, max_abs_diff(lift(z, o, free, err), ref));
    rep.record(err, tol, "sample " + std::to_string(s));
  }
  return rep;
}

Report functoriality_verify(int samples, double tol, std::uint64_t seed) {
  if (samples < 1) throw_invalid("functoriality_verify: need at least one sample");
  Report rep{"monomial map functoriality"};
  std::mt19937_64 rng(seed);
  auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  auto small_int = [&] { return static_cast<long>(rng() % 5) - 2; };
  auto random_map = [&](int rows, int cols) {
    std::vector<std::function<Complex(const RVec&)>> lambda;
    std::vector<std::vector<long>> e(rows, std::vector<long>(cols));
    for (int i = 0; i < rows; ++i) {
      const double a = uniform() - 0.5, b = uniform() - 0.5, c = uniform();
      lambda.push_back([a, b, c](const RVec& x) { return std::exp(Complex(a * x[0], kTwoPi * (b * x[1] + c))); });
      for (int j = 0; j < cols; ++j) e[i][j] = small_int();
    }
    return kn_map_chart(std::move(lambda), std::move(e));
  };
  // fixed cases: identity and the circle inverse
  {
    MonomialMap id = kn_map_chart({[](const RVec&) { return Complex(1.0); }, [](const RVec&) { return Complex(1.0); }},
                                  {{1, 0}, {0, 1}});
    MonomialMap inv = kn_map_chart({[](const RVec&) { return Complex(1.0); }}, {{-1}});
    const Complex u = phase(uniform());
    rep.record(max_abs_diff(id.apply({0.0, 0.0}, {u, 2.0 * u}), CVec{u, 2.0 * u}), tol, "identity map");
    rep.record(std::abs(inv.apply_phase({0.0, 0.0}, {u})[0] - std::conj(u)), tol, "circle inverse");
  }
  for (int s = 0; s < samples; ++s) {
    const int n = 1 + static_cast<int>(rng() % 3), m = 1 + static_cast<int>(rng() % 3), p = 1 + static_cast<int>(rng() % 3);
    MonomialMap inner = random_map(m, n), outer = random_map(p, m);
    MonomialMap both = compose(outer, inner);
    const RVec x{uniform(), uniform()};
    CVec z(n);
    for (auto& v : z) v = std::polar(0.75 + 0.5 * uniform(), kTwoPi * uniform());
    CVec a = outer.apply(x, inner.apply(x, z)), b = both.apply(x, z);
    double err = 0.0;
    for (int i = 0; i < p; ++i) err = std::max(err, std::abs(a[i] - b[i]) / std::max(1.0, std::abs(b[i])));
    CVec u(n);
    for (int j = 0; j < n; ++j) u[j] = unit(z[j]);
    err = std::max(err, max_abs_diff(outer.apply_phase(x, inner.apply_phase(x, u)), both.apply_phase(x, u)));
    rep.record(err, tol, "sample " + std::to_string(s));
  }
  return rep;
}

Report sphere_example_verify(int samples, double tol, std::uint64_t seed) {
  if (samples < 1) throw_invalid("sphere_example_verify: need at least one sample");
  Report rep{"sphere with s = (x - 1, 0)"};
  const ChartSection cs{3, 2, [](const RVec& p) { return RVec{p[0] - 1.0, 0.0}; }};
  {
    Fiber f = bu_fiber(cs, {1.0, 0.0, 0.0}, 16, tol);
    double err = f.over_zero && f.directions.size() == 16 ? 0.0 : INFINITY;
    for (const auto& u : f.directions)
      if (!bu_membership(cs, {1.0, 0.0, 0.0}, u, tol)) err = INFINITY;
    rep.record(err, tol, "circle over (1,0,0)");
  }
  Halton h(4, seed);
  for (int s = 0; s < samples; ++s) {
    RVec p = sphere_point(h, 3);
    if (p[0] > 1.0 - 1e-6) continue;
    Fiber f = bu_fiber(cs, p, 16, tol);
    double err = (!f.over_zero && f.directions.size() == 1) ? max_abs_diff(f.directions[0], RVec{-1.0, 0.0}) : INFINITY;
    if (bu_membership(cs, p, RVec{1.0, 0.0}, tol)) err = INFINITY;
    rep.record(err, tol, "sample " + std::to_string(s));
  }
  return rep;
}

}  // namespace fmlog::kn
