#include "fmlog/screens.hpp"

#include "fmlog/errors.hpp"

namespace fmlog {

DiffModule::DiffModule(Mask subset, int d) : subset_(subset), d_(d), position_(33, -1) {
  if (popcount(subset) < 2) throw_invalid("difference module needs |I| >= 2");
  if (d < 1) throw_invalid("difference module needs d >= 1");
  const auto labels = labels_of(subset);
  root_ = labels.front();
  for (std::size_t a = 1; a < labels.size(); ++a) position_[labels[a]] = static_cast<int>(a) - 1;
}

int DiffModule::index(int i, int k) const {
  if (i < 1 || i > 32 || !(subset_ & bit(i))) throw_invalid("label " + std::to_string(i) + " outside the index set");
  if (k < 1 || k > d_) throw_invalid("coordinate index out of range");
  if (i == root_) return -1;
  return position_[i] * d_ + (k - 1);
}

Vec DiffModule::reduce(const std::vector<Generator>& combination) const {
  Vec out(rank(), 0);
  for (const auto& g : combination) {
    const int a = index(g.i, g.k), b = index(g.j, g.k);
    if (a >= 0) out[a] += g.coef;
    if (b >= 0) out[b] -= g.coef;
  }
  return out;
}

namespace {

Mask domain_of(const std::map<int, int>& phi) {
  Mask m = 0;
  for (const auto& [i, j] : phi) m |= bit(i);
  return m;
}

}  // namespace

Vec pull(const std::map<int, int>& phi, Mask target, int d, const Vec& v) {
  const DiffModule src(domain_of(phi), d), dst(target, d);
  if (static_cast<int>(v.size()) != src.rank()) throw_invalid("pull: vector of wrong rank");
  const int r = phi.at(src.root());
  std::vector<Generator> images;
  for (const auto& [i, fi] : phi) {
    if (i == src.root()) continue;
    for (int k = 1; k <= d; ++k) images.push_back({v[src.index(i, k)], fi, r, k});
  }
  return dst.reduce(images);
}

Vec pull_covector(const std::map<int, int>& phi, Mask target, int d, const Vec& c) {
  const DiffModule src(domain_of(phi), d), dst(target, d);
  if (static_cast<int>(c.size()) != dst.rank()) throw_invalid("pull_covector: covector of wrong rank");
  const int r = phi.at(src.root());
  Vec out(src.rank(), 0);
  for (const auto& [i, fi] : phi) {
    if (i == src.root()) continue;
    for (int k = 1; k <= d; ++k) {
      const int a = dst.index(fi, k), b = dst.index(r, k);
      Rational v = 0;
      if (a >= 0) v += c[a];
      if (b >= 0) v -= c[b];
      out[src.index(i, k)] = v;
    }
  }
  return out;
}

Vec canonical_covector(Vec c) {
  for (const auto& x : c) {
    if (x == 0) continue;
    const Rational lead = x;
    for (auto& y : c) y /= lead;
    return c;
  }
  throw_invalid("screen covector is zero");
}

SimpleScreen::SimpleScreen(int n, int d) : n_(n), d_(d) {
  if (n > 1) throw_invalid("a screen of arity >= 2 needs covectors");
  if (d < 1) throw_invalid("screen dimension must be positive");
}

SimpleScreen::SimpleScreen(int n, int d, std::map<Mask, Vec> phi) : n_(n), d_(d) {
  if (n < 1 || n > 31 || d < 1) throw_invalid("screen arity or dimension out of range");
  for (Mask s : multi_subsets(n)) {
    auto it = phi.find(s);
    if (it == phi.end()) throw_invalid("screen lacks a covector for {" + subset_key(s) + "}");
    if (static_cast<int>(it->second.size()) != d * (popcount(s) - 1))
      throw_invalid("covector for {" + subset_key(s) + "} has wrong rank");
    phi_[s] = canonical_covector(std::move(it->second));
    phi.erase(it);
  }
  if (!phi.empty()) throw_invalid("screen has a covector for a subset outside P>=2([n])");
}

const Vec& SimpleScreen::phi(Mask subset) const {
  const auto it = phi_.find(subset);
  if (it == phi_.end()) throw_invalid("screen has no covector for {" + subset_key(subset) + "}");
  return it->second;
}

SimpleScreen screen_from_config(int d, const std::vector<Vec>& points) {
  const int n = static_cast<int>(points.size());
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != d) throw_invalid("configuration point of wrong dimension");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (points[a] == points[b]) throw_invalid("coincident points in configuration");
  if (n <= 1) return SimpleScreen(n, d);
  std::map<Mask, Vec> phi;
  for (Mask s : multi_subsets(n)) {
    const DiffModule f(s, d);
    Vec c(f.rank(), 0);
    for (int i : labels_of(s)) {
      if (i == f.root()) continue;
      for (int k = 1; k <= d; ++k) c[f.index(i, k)] = points[i - 1][k - 1] - points[f.root() - 1][k - 1];
    }
    phi[s] = std::move(c);
  }
  return SimpleScreen(n, d, std::move(phi));
}

namespace {

std::map<int, int> inclusion(Mask subset) {
  std::map<int, int> m;
  for (int i : labels_of(subset)) m[i] = i;
  return m;
}

}  // namespace

std::optional<Rational> compatibility_scalar(const SimpleScreen& s, Mask inner, Mask outer) {
  if (!contains(outer, inner) || popcount(inner) < 2) throw_invalid("compatibility_scalar: need I inside J, |I| >= 2");
  const Vec& phi_i = s.phi(inner);
  const Vec pulled = pull_covector(inclusion(inner), outer, s.d(), s.phi(outer));
  std::size_t lead = 0;
  while (phi_i[lead] == 0) ++lead;  // canonical covectors are nonzero
  const Rational lambda = pulled[lead];
  if (pulled != lambda * phi_i) return std::nullopt;
  return lambda;
}

ScreenValidation screen_validate(const SimpleScreen& s) {
  ScreenValidation out;
  const auto subsets = multi_subsets(s.arity());
  for (Mask outer : subsets)
    for (Mask inner : subsets) {
      if (inner == outer || !contains(outer, inner)) continue;
      const auto lambda = compatibility_scalar(s, inner, outer);
      if (!lambda) {
        if (out.valid) out.witness = std::make_pair(inner, outer);
        out.valid = false;
        continue;
      }
      out.lambda[{inner, outer}] = *lambda;
    }
  return out;
}

bool vanishing_satisfied(const SimpleScreen& s, Mask subset) {
  for (Mask j : multi_subsets(s.arity())) {
    if (contains(subset, j)) continue;
    const Mask meet = subset & j;
    if (popcount(meet) < 2) continue;
    const auto lambda = compatibility_scalar(s, meet, j);
    if (!lambda) throw_invalid("vanishing_satisfied: screen is not compatible on {" + subset_key(meet) + "} in {" +
                               subset_key(j) + "}");
    if (*lambda != 0) return false;
  }
  return true;
}

SimpleScreen screen_compose(const Surjection& q, const SimpleScreen& outer, const std::vector<SimpleScreen>& inner) {
  const int n = q.target_size(), m = q.source_size();
  if (outer.arity() != n) throw_invalid("screen_compose: outer arity does not match the surjection");
  if (static_cast<int>(inner.size()) != n) throw_invalid("screen_compose: wrong number of inner screens");
  for (int r = 1; r <= n; ++r) {
    if (inner[r - 1].arity() != q.fiber_size(r)) throw_invalid("screen_compose: inner arity differs from fiber size");
    if (inner[r - 1].d() != outer.d()) throw_invalid("screen_compose: dimension mismatch");
  }
  const int d = outer.d();
  if (m == 1) return SimpleScreen(1, d);
  std::map<Mask, Vec> rho;
  for (Mask k : multi_subsets(m)) {
    const int r = q(__builtin_ctz(k) + 1);
    if (contains(q.fiber_mask(r), k)) {
      // Order-preserving relabeling keeps basis positions.
      rho[k] = inner[r - 1].phi(compress(k, q.fiber_mask(r)));
      continue;
    }
    std::map<int, int> fq;
    for (int i : labels_of(k)) fq[i] = q(i);
    rho[k] = pull_covector(fq, q.image(k), d, outer.phi(q.image(k)));
  }
  return SimpleScreen(m, d, std::move(rho));
}

ScreenDecomposition screen_decompose(const Surjection& q, const SimpleScreen& s) {
  const int n = q.target_size(), m = q.source_size(), d = s.d();
  if (s.arity() != m) throw_invalid("screen_decompose: screen arity differs from the surjection source");
  if (m >= 2 && !screen_validate(s).valid) throw_invalid("screen_decompose: input is not a simple screen");
  for (int r = 1; r <= n; ++r)
    if (!vanishing_satisfied(s, q.fiber_mask(r)))
      throw_invalid("screen_decompose: q^{-1}(" + std::to_string(r) + ")-vanishing property fails");

  std::vector<SimpleScreen> inner;
  for (int r = 1; r <= n; ++r) {
    const Mask f = q.fiber_mask(r);
    const int k = popcount(f);
    if (k == 1) {
      inner.emplace_back(1, d);
      continue;
    }
    std::map<Mask, Vec> psi;
    for (Mask local : multi_subsets(k)) psi[local] = s.phi(expand(local, f));
    inner.emplace_back(k, d, std::move(psi));
  }

  if (n == 1) return {SimpleScreen(1, d), std::move(inner)};
  std::map<Mask, Vec> phi;
  for (Mask j : multi_subsets(n)) {
    // A section of q over J: F_q restricted to it is an isomorphism onto F_J.
    Mask section = 0;
    for (int r : labels_of(j)) section |= bit(q.fiber(r).front());
    const DiffModule src(section, d), dst(j, d);
    std::map<int, int> fq;
    for (int i : labels_of(section)) fq[i] = q(i);
    Matrix image_columns;  // rows: basis of F_section pushed into F_J
    for (int i : labels_of(section)) {
      if (i == src.root()) continue;
      for (int kk = 1; kk <= d; ++kk) {
        Vec e(src.rank(), 0);
        e[src.index(i, kk)] = 1;
        image_columns.push_back(pull(fq, j, d, e));
      }
    }
    // psi . A = rho_section, A = transpose(image_columns)
    const Matrix a = transpose(image_columns);
    const Matrix a_inv = inverse(a);
    const Vec& rho = s.phi(section);
    Vec psi(dst.rank(), 0);
    for (int col = 0; col < dst.rank(); ++col)
      for (int row = 0; row < src.rank(); ++row) psi[col] += rho[row] * a_inv[row][col];
    phi[j] = canonical_covector(std::move(psi));
  }
  SimpleScreen outer(n, d, std::move(phi));

  // Every subset not inside a fiber must factor through F_q with this outer screen.
  for (Mask k : multi_subsets(m)) {
    const int r = q(__builtin_ctz(k) + 1);
    if (contains(q.fiber_mask(r), k)) continue;
    std::map<int, int> fq;
    for (int i : labels_of(k)) fq[i] = q(i);
    if (canonical_covector(pull_covector(fq, q.image(k), d, outer.phi(q.image(k)))) != s.phi(k))
      throw_internal("screen_decompose: covector for {" + subset_key(k) + "} does not factor through F_q");
  }
  return {std::move(outer), std::move(inner)};
}

SimpleScreen screen_sigma(const Permutation& sigma, const SimpleScreen& s) {
  const int n = s.arity();
  if (sigma.size() != n) throw_invalid("screen_sigma: permutation size differs from arity");
  if (n <= 1) return s;
  const Permutation inv = sigma.inverse();
  std::map<Mask, Vec> phi;
  for (Mask i : multi_subsets(n)) {
    std::map<int, int> map;
    for (int l : labels_of(i)) map[l] = inv(l);
    const Mask source = inv.apply(i);
    phi[i] = pull_covector(map, source, s.d(), s.phi(source));
  }
  return SimpleScreen(n, s.d(), std::move(phi));
}

Vec covector_from_direction(const DirectionClass& u) {
  const Mask subset = mask_of(u.labels());
  const DiffModule f(subset, u.dim());
  Vec c(f.rank(), 0);
  for (int i : u.labels()) {
    if (i == f.root()) continue;
    for (int k = 1; k <= u.dim(); ++k) c[f.index(i, k)] = u.at(i)[k - 1] - u.at(f.root())[k - 1];
  }
  return c;
}

DirectionClass direction_from_covector(Mask subset, int d, const Vec& c) {
  const DiffModule f(subset, d);
  if (static_cast<int>(c.size()) != f.rank()) throw_invalid("covector of wrong rank");
  std::vector<int> labels = labels_of(subset);
  std::vector<Vec> vectors;
  for (int i : labels) {
    Vec v(d, 0);
    if (i != f.root())
      for (int k = 1; k <= d; ++k) v[k - 1] = c[f.index(i, k)];
    vectors.push_back(std::move(v));
  }
  return direction_canonical(d, labels, vectors);
}

}  // namespace fmlog
