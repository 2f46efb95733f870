#include "fmlog/campaigns.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "fmlog/errors.hpp"
#include "fmlog/nested.hpp"

namespace fmlog {

int Rng::uniform(int lo, int hi) {
  if (hi < lo) throw_invalid("Rng::uniform: empty range");
  const std::uint64_t span = std::uint64_t(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

Rational Rng::small_rational() {
  Rational r(uniform(-9, 9), uniform(1, 5));
  r.canonicalize();
  return r;
}

std::uint64_t derive_seed(std::uint64_t seed, const std::string& label) {
  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
  for (unsigned char c : label) h = (h ^ c) * 0x100000001b3ULL;
  h += 0x9e3779b97f4a7c15ULL;
  h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
  h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
  return h ^ (h >> 31);
}

Vec random_vec(Rng& rng, int dim) {
  Vec v;
  for (int k = 0; k < dim; ++k) v.push_back(rng.small_rational());
  return v;
}

std::vector<Vec> random_config(Rng& rng, int dim, int n) {
  std::vector<Vec> pts;
  while (static_cast<int>(pts.size()) < n) {
    Vec v = random_vec(rng, dim);
    if (std::find(pts.begin(), pts.end(), v) == pts.end()) pts.push_back(std::move(v));
  }
  return pts;
}

Surjection random_surjection(Rng& rng, int m, int n) {
  if (n < 1 || n > m) throw_invalid("random_surjection: need 1 <= n <= m");
  // a shuffled list containing every target at least once
  std::vector<int> images(m);
  for (int i = 0; i < m; ++i) images[i] = i < n ? i + 1 : rng.uniform(1, n);
  for (int i = m - 1; i > 0; --i) std::swap(images[i], images[rng.uniform(0, i)]);
  return Surjection(images, n);
}

Surjection random_surjection(Rng& rng, int m) { return random_surjection(rng, m, rng.uniform(1, m)); }

Permutation random_permutation(Rng& rng, int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  for (int i = n - 1; i > 0; --i) std::swap(images[i], images[rng.uniform(0, i)]);
  return Permutation(images);
}

FMPoint random_point(Rng& rng, int dim, int n, int depth) {
  if (n == 1) return FMPoint::unit(dim);
  if (depth <= 0 || rng.uniform(0, 2) == 0) return point_from_config(dim, random_config(rng, dim, n));
  const Surjection q = random_surjection(rng, n, rng.uniform(2, n));
  FMPoint x = point_from_config(dim, random_config(rng, dim, q.target_size()));
  std::vector<FMPoint> ys;
  for (int r = 1; r <= q.target_size(); ++r) ys.push_back(random_point(rng, dim, q.fiber_size(r), depth - 1));
  return compose(q, x, ys);
}

CirclePoint random_circle(Rng& rng) {
  if (rng.uniform(0, 7) == 0) return CirclePoint(-1, 0);
  return CirclePoint::from_slope(rng.small_rational());
}

Matrix random_rotation(Rng& rng, int dim) {
  Matrix r = identity_matrix(dim);
  if (dim < 2) return r;
  for (int step = 0; step < 3; ++step) {
    const int a = rng.uniform(0, dim - 1);
    int b = rng.uniform(0, dim - 2);
    if (b >= a) ++b;
    const CirclePoint t = random_circle(rng);
    Matrix g = identity_matrix(dim);
    g[a][a] = t.c();
    g[a][b] = -t.s();
    g[b][a] = t.s();
    g[b][b] = t.c();
    r = multiply(g, r);
  }
  return r;
}

FramedFMPoint random_framed(Rng& rng, int d, int n, int depth) {
  std::vector<CirclePoint> frames;
  for (int i = 0; i < n; ++i) frames.push_back(random_circle(rng));
  return FramedFMPoint(random_point(rng, 2 * d, n, depth), std::move(frames));
}

SimpleScreen random_screen(Rng& rng, int n, int d, int depth) {
  if (n <= 1) return SimpleScreen(n, d);
  if (depth <= 0 || rng.uniform(0, 2) == 0) return screen_from_config(d, random_config(rng, d, n));
  const Surjection q = random_surjection(rng, n, rng.uniform(2, n));
  SimpleScreen x = screen_from_config(d, random_config(rng, d, q.target_size()));
  std::vector<SimpleScreen> ys;
  for (int r = 1; r <= q.target_size(); ++r) ys.push_back(random_screen(rng, q.fiber_size(r), d, depth - 1));
  return screen_compose(q, x, ys);
}

Permutation local_permutation(const Surjection& q, const Permutation& sigma, int r) {
  std::vector<int> images(q.source_size());
  const Permutation inv = sigma.inverse();
  for (int i = 1; i <= q.source_size(); ++i) images[i - 1] = q(inv(i));
  const Surjection qs(images, q.target_size());
  std::vector<int> local;
  for (int i : q.fiber(r)) local.push_back(qs.local_index(sigma(i)));
  return Permutation(local);
}

namespace {

std::string tag(const std::string& what, int a, int b) {
  return what + " (" + std::to_string(a) + "," + std::to_string(b) + ")";
}

Surjection precompose_inverse(const Surjection& q, const Permutation& sigma) {
  const Permutation inv = sigma.inverse();
  std::vector<int> images(q.source_size());
  for (int i = 1; i <= q.source_size(); ++i) images[i - 1] = q(inv(i));
  return Surjection(images, q.target_size());
}

Surjection postcompose(const Permutation& rho, const Surjection& q) {
  std::vector<int> images(q.source_size());
  for (int i = 1; i <= q.source_size(); ++i) images[i - 1] = rho(q(i));
  return Surjection(images, q.target_size());
}

// Generic drivers so that the FM and framed campaigns share their shape.
template <class P>
struct Ops {
  std::function<P(Rng&, int)> random;
  std::function<P()> unit;
  std::function<P(const Surjection&, const P&, const std::vector<P>&)> compose;
  std::function<P(const Permutation&, const P&)> sigma;
  std::function<bool(const P&, const P&)> eq;
};

template <class P>
void check_associativity(const Ops<P>& ops, Rng& rng, int n, CheckResult& r) {
  const Surjection q1 = random_surjection(rng, n);
  const Surjection q2 = random_surjection(rng, q1.target_size());
  const int m = q2.target_size();
  const P x = ops.random(rng, m);
  std::vector<P> ys, zs;
  for (int t = 1; t <= m; ++t) ys.push_back(ops.random(rng, q2.fiber_size(t)));
  for (int j = 1; j <= q1.target_size(); ++j) zs.push_back(ops.random(rng, q1.fiber_size(j)));
  const P left = ops.compose(q1, ops.compose(q2, x, ys), zs);
  std::vector<P> inner;
  for (int t = 1; t <= m; ++t) {
    std::vector<P> zt;
    for (int j : q2.fiber(t)) zt.push_back(zs[j - 1]);
    inner.push_back(ops.compose(q1.restrict_over(q2, t), ys[t - 1], zt));
  }
  const P right = ops.compose(q2.after(q1), x, inner);
  ++r.cases;
  if (!ops.eq(left, right)) r.fail("associativity fails for q1=" + q1.to_string() + " q2=" + q2.to_string());
}

template <class P>
void check_unit(const Ops<P>& ops, Rng& rng, int n, CheckResult& r) {
  const P y = ops.random(rng, n);
  ++r.cases;
  if (!ops.eq(ops.compose(Surjection(std::vector<int>(n, 1), 1), ops.unit(), {y}), y))
    r.fail("left unit fails at arity " + std::to_string(n));
  ++r.cases;
  if (!ops.eq(ops.compose(Surjection::identity(n), y, std::vector<P>(n, ops.unit())), y))
    r.fail("right unit fails at arity " + std::to_string(n));
}

template <class P>
void check_equivariance(const Ops<P>& ops, Rng& rng, int n, CheckResult& r) {
  const Surjection q = random_surjection(rng, n);
  const int k = q.target_size();
  const P x = ops.random(rng, k);
  std::vector<P> ys;
  for (int t = 1; t <= k; ++t) ys.push_back(ops.random(rng, q.fiber_size(t)));
  const P base = ops.compose(q, x, ys);
  // relabeling the inputs
  const Permutation sigma = random_permutation(rng, n);
  const Surjection qs = precompose_inverse(q, sigma);
  std::vector<P> ys2;
  for (int t = 1; t <= k; ++t) ys2.push_back(ops.sigma(local_permutation(q, sigma, t), ys[t - 1]));
  ++r.cases;
  if (!ops.eq(ops.sigma(sigma, base), ops.compose(qs, x, ys2)))
    r.fail("input relabeling breaks equivariance for q=" + q.to_string());
  // relabeling the outer leaves
  const Permutation rho = random_permutation(rng, k);
  std::vector<P> ys3(k, ops.unit());
  for (int t = 1; t <= k; ++t) ys3[rho(t) - 1] = ys[t - 1];
  ++r.cases;
  if (!ops.eq(base, ops.compose(postcompose(rho, q), ops.sigma(rho, x), ys3)))
    r.fail("outer relabeling breaks equivariance for q=" + q.to_string());
}

Ops<FMPoint> fm_ops(int dim) {
  return {[dim](Rng& rng, int n) { return random_point(rng, dim, n); },
          [dim] { return FMPoint::unit(dim); },
          [](const Surjection& q, const FMPoint& x, const std::vector<FMPoint>& ys) { return compose(q, x, ys); },
          [](const Permutation& s, const FMPoint& x) { return sigma_act(s, x); },
          [](const FMPoint& a, const FMPoint& b) { return point_eq(a, b); }};
}

Ops<FramedFMPoint> framed_ops(int d) {
  return {[d](Rng& rng, int n) { return random_framed(rng, d, n); },
          [d] { return FramedFMPoint::unit(2 * d); },
          [](const Surjection& q, const FramedFMPoint& x, const std::vector<FramedFMPoint>& ys) {
            return framed_compose(q, x, ys);
          },
          [](const Permutation& s, const FramedFMPoint& x) { return framed_sigma(s, x); },
          [](const FramedFMPoint& a, const FramedFMPoint& b) { return framed_eq(a, b); }};
}

template <class P, class F>
CheckResult run(const std::string& name, int a, int n, int trials, std::uint64_t seed, const Ops<P>& ops, F&& body) {
  CheckResult r(tag(name, a, n));
  Rng rng(derive_seed(seed, r.name));
  for (int t = 0; t < trials; ++t) body(ops, rng, n, r);
  if (r.ok) r.detail = "exact equality on all instances";
  return r;
}

void check_arity(int n) {
  if (n < 1 || n > 8) throw ResourceLimit("campaign arity must be in 1..8");
}

}  // namespace

CheckResult fm_associativity(int dim, int n, int trials, std::uint64_t seed) {
  check_arity(n);
  return run("fm associativity", dim, n, trials, seed, fm_ops(dim), check_associativity<FMPoint>);
}

CheckResult fm_unit(int dim, int n, int trials, std::uint64_t seed) {
  check_arity(n);
  return run("fm unit", dim, n, trials, seed, fm_ops(dim), check_unit<FMPoint>);
}

CheckResult fm_equivariance(int dim, int n, int trials, std::uint64_t seed) {
  check_arity(n);
  return run("fm equivariance", dim, n, trials, seed, fm_ops(dim), check_equivariance<FMPoint>);
}

CheckResult framed_associativity(int d, int n, int trials, std::uint64_t seed) {
  check_arity(n);
  return run("framed associativity", d, n, trials, seed, framed_ops(d), check_associativity<FramedFMPoint>);
}

CheckResult framed_unit(int d, int n, int trials, std::uint64_t seed) {
  check_arity(n);
  return run("framed unit", d, n, trials, seed, framed_ops(d), check_unit<FramedFMPoint>);
}

CheckResult framed_equivariance(int d, int n, int trials, std::uint64_t seed) {
  check_arity(n);
  return run("framed equivariance", d, n, trials, seed, framed_ops(d), check_equivariance<FramedFMPoint>);
}

CheckResult fm_coordinate_law(int dim, int n, int trials, std::uint64_t seed) {
  check_arity(n);
  CheckResult r(tag("fm coordinate law", dim, n));
  Rng rng(derive_seed(seed, r.name));
  for (int t = 0; t < trials; ++t) {
    const Surjection q = random_surjection(rng, n);
    const FMPoint x = random_point(rng, dim, q.target_size());
    std::vector<FMPoint> ys;
    for (int s = 1; s <= q.target_size(); ++s) ys.push_back(random_point(rng, dim, q.fiber_size(s)));
    const FMPoint c = compose(q, x, ys);
    for (Mask subset : multi_subsets(n)) {
      ++r.cases;
      DirectionClass expected = [&] {
        for (int s = 1; s <= q.target_size(); ++s) {
          const Mask f = q.fiber_mask(s);
          if (!contains(f, subset)) continue;
          std::map<int, int> to_global;
          const std::vector<int> fl = q.fiber(s);
          for (std::size_t l = 0; l < fl.size(); ++l) to_global[int(l) + 1] = fl[l];
          return coordinates(ys[s - 1], compress(subset, f)).relabeled(to_global);
        }
        std::map<int, int> restricted;
        for (int i : labels_of(subset)) restricted[i] = q(i);
        return g_map(restricted, coordinates(x, q.image(subset)));
      }();
      if (!(coordinates(c, subset) == expected))
        r.fail("coordinate law fails for q=" + q.to_string() + " I=" + subset_key(subset));
    }
  }
  if (r.ok) r.detail = "piecewise formula matches every coordinate";
  return r;
}

CheckResult fm_rotation(int dim, int n, int trials, std::uint64_t seed) {
  check_arity(n);
  CheckResult r(tag("fm rotation", dim, n));
  Rng rng(derive_seed(seed, r.name));
  for (int t = 0; t < trials; ++t) {
    const Surjection q = random_surjection(rng, n);
    const FMPoint x = random_point(rng, dim, q.target_size());
    std::vector<FMPoint> ys, rys;
    const Matrix R = random_rotation(rng, dim), S = random_rotation(rng, dim);
    for (int s = 1; s <= q.target_size(); ++s) {
      ys.push_back(random_point(rng, dim, q.fiber_size(s)));
      rys.push_back(rotate(R, ys.back()));
    }
    ++r.cases;
    if (!point_eq(rotate(R, compose(q, x, ys)), compose(q, rotate(R, x), rys)))
      r.fail("rotation does not distribute over composition for q=" + q.to_string());
    ++r.cases;
    if (!point_eq(rotate(multiply(R, S), x), rotate(R, rotate(S, x)))) r.fail("rotation action is not multiplicative");
  }
  if (r.ok) r.detail = "diagonal rotation commutes with composition";
  return r;
}

CheckResult screen_bijection(int max_n, int max_d, int trials, std::uint64_t seed) {
  if (max_n < 2 || max_n > 6 || max_d < 1 || max_d > 4) throw ResourceLimit("screen campaign bounds out of range");
  CheckResult r(tag("screen bijection", max_n, max_d));
  Rng rng(derive_seed(seed, r.name));
  for (int t = 0; t < trials; ++t) {
    const int n = rng.uniform(2, max_n), d = rng.uniform(1, max_d);
    const Surjection q = random_surjection(rng, n);
    const int k = q.target_size();
    const SimpleScreen outer = random_screen(rng, k, d);
    std::vector<SimpleScreen> inner;
    for (int s = 1; s <= k; ++s) inner.push_back(random_screen(rng, q.fiber_size(s), d));
    const SimpleScreen composed = screen_compose(q, outer, inner);
    ++r.cases;
    if (!screen_validate(composed).valid) r.fail("composed screen fails validation for q=" + q.to_string());
    for (int s = 1; s <= k; ++s)
      if (q.fiber_size(s) >= 2 && q.fiber_mask(s) != full_mask(n) && !vanishing_satisfied(composed, q.fiber_mask(s)))
        r.fail("composed screen violates fiber vanishing for q=" + q.to_string());
    const ScreenDecomposition dec = screen_decompose(q, composed);
    if (!(dec.outer == outer) || dec.inner != inner) r.fail("decompose o compose is not the identity for q=" + q.to_string());

    // a screen in the stratum built along the other bracket, then split along q
    const Surjection q2 = random_surjection(rng, k);
    const SimpleScreen x = random_screen(rng, q2.target_size(), d);
    std::vector<SimpleScreen> mid;
    for (int u = 1; u <= q2.target_size(); ++u) {
      std::vector<SimpleScreen> zs;
      for (int j : q2.fiber(u)) zs.push_back(random_screen(rng, q.fiber_size(j), d));
      mid.push_back(screen_compose(q.restrict_over(q2, u), random_screen(rng, q2.fiber_size(u), d), zs));
    }
    const SimpleScreen s2 = screen_compose(q2.after(q), x, mid);
    ++r.cases;
    const ScreenDecomposition dec2 = screen_decompose(q, s2);
    if (!(screen_compose(q, dec2.outer, dec2.inner) == s2))
      r.fail("compose o decompose is not the identity for q=" + q.to_string());
  }
  if (r.ok) r.detail = "both round trips exact; composed screens valid and fiber-vanishing";
  return r;
}

CheckResult screen_fm_bridge(int trials, std::uint64_t seed) {
  CheckResult r("screen/fm bridge");
  Rng rng(derive_seed(seed, r.name));
  for (int t = 0; t < trials; ++t) {
    const int n = rng.uniform(2, 5), d = rng.uniform(1, 3);
    const std::vector<Vec> pts = random_config(rng, d, n);
    const FMPoint x = point_from_config(d, pts);
    const SimpleScreen s = screen_from_config(d, pts);
    ++r.cases;
    for (Mask subset : multi_subsets(n)) {
      const DirectionClass u = coordinates(x, subset);
      if (!(canonical_covector(covector_from_direction(u)) == s.phi(subset)))
        r.fail("covector of the direction class differs from the screen at I=" + subset_key(subset));
      // covectors are projective, direction classes only up to positive scaling
      const DirectionClass back = direction_from_covector(subset, d, s.phi(subset));
      std::vector<Vec> negated;
      for (const auto& v : u.vectors()) negated.push_back(Rational(-1) * v);
      if (!(back == u) && !(back == direction_canonical(d, u.labels(), negated)))
        r.fail("direction recovered from the screen differs at I=" + subset_key(subset));
    }
  }
  if (r.ok) r.detail = "projective agreement on every subset";
  return r;
}

long brute_force_nested_count(int n) {
  const std::vector<Mask> subsets = proper_multi_subsets(n);
  const int k = static_cast<int>(subsets.size());
  long count = 0;
  std::vector<Mask> chosen;
  std::function<void(int)> rec = [&](int from) {
    ++count;
    for (int i = from; i < k; ++i) {
      const Mask s = subsets[i];
      bool ok = true;
      for (Mask c : chosen) {
        const Mask common = c & s;
        if (common != 0 && common != c && common != s) ok = false;
      }
      if (!ok) continue;
      chosen.push_back(s);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return count;
}

CheckResult strata_consistency(int max_n) {
  CheckResult r("strata consistency n<=" + std::to_string(max_n));
  for (int n = 1; n <= max_n; ++n) {
    const auto trees = enumerate_stable_trees(n);
    ++r.cases;
    if (static_cast<long>(trees.size()) != brute_force_nested_count(n))
      r.fail("tree count differs from the nested-family count at n=" + std::to_string(n));
    std::vector<NestedCollection> cols;
    for (const auto& t : trees) {
      NestedCollection c = tree_to_nested(t);
      if (!(nested_to_tree(c) == t)) r.fail("tree -> nested -> tree is not the identity at n=" + std::to_string(n));
      cols.push_back(std::move(c));
    }
    std::set<std::vector<Mask>> distinct;
    for (const auto& c : cols) distinct.insert(c.masks());
    if (distinct.size() != cols.size()) r.fail("two trees share a nested collection at n=" + std::to_string(n));
    if (n > 5) continue;
    for (const auto& a : cols) {
      if (!strata_closure_leq(a, a)) r.fail("closure order is not reflexive");
      for (const auto& b : cols) {
        if (&a != &b && strata_closure_leq(a, b) && strata_closure_leq(b, a)) r.fail("closure order is not antisymmetric");
        if (!strata_closure_leq(a, b)) continue;
        for (const auto& c : cols)
          if (strata_closure_leq(b, c) && !strata_closure_leq(a, c)) r.fail("closure order is not transitive");
      }
    }
  }
  if (r.ok) r.detail = "bijection, counts and partial order verified";
  return r;
}

}  // namespace fmlog
