#include "fmlog/log_verify.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "fmlog/errors.hpp"

namespace fmlog {

bool LogVerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok; });
}

namespace {

StructureKind kind_of(Variant v) { return v == Variant::Log ? StructureKind::T : StructureKind::K; }
const char* variant_name(Variant v) { return v == Variant::Log ? "log" : "vlog"; }

bool present(Variant v, Mask subset) { return v == Variant::Log || popcount(subset) >= 2; }

void fail(CheckResult& r, const std::string& what) {
  if (r.ok) r.detail = what;
  r.ok = false;
}

// Compact rows for the exhaustive sweeps. Factor tags follow the default
// gamma convention: 0 for the outer space, r for the fiber over r.
struct CEntry {
  int f;
  Mask key;
  long e;
  bool operator==(const CEntry&) const = default;
};

struct CRow {
  std::vector<CEntry> entries;
  Section pulled = Section::Unit;
  bool operator==(const CRow&) const = default;
};

void normalize(std::vector<CEntry>& v) {
  std::sort(v.begin(), v.end(), [](const CEntry& a, const CEntry& b) { return a.f != b.f ? a.f < b.f : a.key < b.key; });
  std::size_t w = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (w > 0 && v[w - 1].f == v[i].f && v[w - 1].key == v[i].key) {
      v[w - 1].e += v[i].e;
    } else {
      v[w++] = v[i];
    }
    if (v[w - 1].e == 0) --w;
  }
  v.resize(w);
}

CRow to_compact(const LogRow& row) {
  CRow out;
  out.pulled = row.pulled;
  for (const auto& e : row.entries) out.entries.push_back({e.col.factor, e.col.key, e.exp});
  normalize(out.entries);
  return out;
}

std::string describe(const CRow& r) {
  std::ostringstream os;
  for (const auto& e : r.entries) os << e.e << "*[" << e.f << ":" << subset_key(e.key) << "] ";
  os << "(" << to_string(r.pulled) << ")";
  return os.str();
}

// Section carried by bundle `key` of a T- or K-factor of the given arity.
Section bundle_section(int arity, Mask key) {
  if (arity <= 1 || popcount(key) == 1 || key == full_mask(arity)) return Section::Zero;
  return Section::Divisor;
}

struct Table {
  std::vector<CRow> rows;  // indexed by target subset mask
};

// Surjections with source size <= 8 are keyed by their image sequence packed
// into 4-bit digits.
std::uint64_t surjection_code(const int* images, int len) {
  std::uint64_t c = std::uint64_t(len) << 60;
  for (int i = 0; i < len; ++i) c |= std::uint64_t(images[i]) << (4 * i);
  return c;
}

class TableCache {
 public:
  explicit TableCache(Variant v) : variant_(v) {}
  const Table& get(const Surjection& q) { return get(q.images().data(), q.source_size(), q.target_size()); }
  const Table& get(const int* images, int len, int target) {
    const std::uint64_t key = surjection_code(images, len);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const Surjection q(std::vector<int>(images, images + len), target);
    Table t;
    t.rows.resize(std::size_t(full_mask(len)) + 1);
    for (Mask s = 1; s <= full_mask(len); ++s)
      if (present(variant_, s)) t.rows[s] = to_compact(pullback_row(q, s, variant_));
    return cache_.emplace(key, std::move(t)).first->second;
  }

 private:
  Variant variant_;
  std::unordered_map<std::uint64_t, Table> cache_;
};

// Pulled section of a composite row whose outer row had a divisor section.
template <class F>
Section combine(const std::vector<CEntry>& entries, F&& pulled_of) {
  Section s = Section::Unit;
  for (const auto& e : entries) {
    if (e.e <= 0) continue;
    Section p = pulled_of(e);
    if (p == Section::Zero) return Section::Zero;
    if (p == Section::Divisor) s = Section::Divisor;
  }
  return s;
}

std::vector<Mask> target_subsets(int m, Variant v) {
  std::vector<Mask> out;
  for (Mask s = 1; s <= full_mask(m); ++s)
    if (present(v, s)) out.push_back(s);
  return out;
}

// Row of a generic morphism as a compact row; missing target bundle -> error.
CRow generic_row(const LogMorphism& m, int target_tag, Mask key) {
  return to_compact(m.row(BundleId{target_tag, key}));
}

Permutation induced_local(const Permutation& sigma, Mask from, Mask to) {
  // Local relabeling of `from` (1..|from|) into `to` induced by sigma.
  std::vector<int> images;
  for (int i : labels_of(from)) images.push_back(__builtin_ctz(compress(bit(sigma(i)), to)) + 1);
  return Permutation(images);
}

}  // namespace

CheckResult check_legality(int max_arity, Variant variant) {
  CheckResult r{std::string("legality sweep (") + variant_name(variant) + ")"};
  for (int M = 1; M <= max_arity; ++M) {
    for (const auto& q : all_surjections(M)) {
      ++r.cases;
      LogMorphism g = gamma(q, variant);
      Legality df = legality_df(g), virt = legality_virtual(g);
      if (!virt.ok) fail(r, "virtual-illegal gamma for q=" + q.to_string());
      if (variant == Variant::Log) {
        if (!df.ok) fail(r, "DF-illegal gamma_log for q=" + q.to_string() + ": " + df.witness->reason);
        continue;
      }
      bool has_big_fiber = false;
      for (int t = 1; t <= q.target_size(); ++t) has_big_fiber |= q.fiber_size(t) >= 2;
      const bool expect_illegal = has_big_fiber && q.target_size() >= 2;
      if (df.ok == expect_illegal) {
        fail(r, "unexpected DF legality of gamma_vlog for q=" + q.to_string());
      } else if (!df.ok && classify(q, df.witness->row.key) != PullbackCase::Fiber) {
        fail(r, "DF witness of gamma_vlog is not a fiber row for q=" + q.to_string());
      }
    }
  }
  if (r.ok) r.detail = "all gamma morphisms legal as expected";
  return r;
}

CheckResult check_section_bookkeeping(int max_arity, Variant variant) {
  CheckResult r{std::string("section bookkeeping (") + variant_name(variant) + ")"};
  for (int M = 1; M <= max_arity; ++M) {
    for (const auto& q : all_surjections(M)) {
      LogMorphism g = gamma(q, variant);
      for (const auto& b : g.target().bundles()) {
        ++r.cases;
        const Mask s = b.id.key;
        bool is_fiber = false, overlaps = false;
        for (int t = 1; t <= q.target_size(); ++t) {
          const Mask f = q.fiber_mask(t);
          is_fiber |= f == s;
          const Mask common = f & s;
          if (common != 0 && common != f && common != s) overlaps = true;
        }
        Section expected = Section::Divisor;
        if (s == full_mask(M) || is_fiber || popcount(s) == 1)
          expected = Section::Zero;
        else if (overlaps)
          expected = Section::Unit;
        const LogRow& row = g.row(b.id);
        if (row.pulled != expected || product_section(g.source(), row.entries) != expected)
          fail(r, "q=" + q.to_string() + " I=" + subset_key(s) + " pulls back to " + to_string(row.pulled));
      }
    }
  }
  if (r.ok) r.detail = "zero on M, fibers, singletons; unit on non-nested; divisor otherwise";
  return r;
}

CheckResult check_class_consistency(int max_arity, Variant variant) {
  CheckResult r{std::string("class consistency (") + variant_name(variant) + ")"};
  for (int M = 1; M <= max_arity; ++M) {
    for (const auto& q : all_surjections(M)) {
      LogMorphism g = gamma(q, variant);
      r.cases += static_cast<long>(g.rows().size());
      for (std::size_t i = 0; i < g.rows().size(); ++i) {
        const Mask s = g.target().bundles()[i].id.key;
        if (row_class(g, g.rows()[i]) != pullback_class(q, s, variant))
          fail(r, "row class differs from the pullback class for q=" + q.to_string() + " I=" + subset_key(s));
      }
    }
  }
  if (r.ok) r.detail = "every row realizes its pullback class";
  return r;
}

CheckResult check_variant_difference(int max_arity) {
  CheckResult r{"log/vlog rows differ only on fibers"};
  for (int M = 2; M <= max_arity; ++M) {
    for (const auto& q : all_surjections(M)) {
      for (Mask s : target_subsets(M, Variant::VLog)) {
        ++r.cases;
        const bool same = pullback_row(q, s, Variant::Log) == pullback_row(q, s, Variant::VLog);
        const bool differs_expected = classify(q, s) == PullbackCase::Fiber;
        if (same == differs_expected)
          fail(r, "unexpected row difference for q=" + q.to_string() + " I=" + subset_key(s));
      }
    }
  }
  if (r.ok) r.detail = "difference supported exactly on fiber rows";
  return r;
}

std::vector<CheckResult> check_associativity(int max_arity, Variant variant, int generic_arity) {
  CheckResult assoc{std::string("associativity (") + variant_name(variant) + ")"};
  CheckResult legal{"DF-legality of gamma_log composites"};
  CheckResult cross{std::string("fast path matches generic composition (") + variant_name(variant) + ")"};
  const StructureKind kind = kind_of(variant);
  TableCache cache(variant);
  if (max_arity > 8) throw ResourceLimit("associativity sweep supports |M| <= 8");
  std::vector<std::vector<Surjection>> surj(max_arity + 1);
  for (int k = 1; k <= max_arity; ++k) surj[k] = all_surjections(k);
  std::vector<CEntry> a, b;
  std::vector<CRow> routeA, routeB;
  for (int M = 1; M <= max_arity; ++M) {
    const std::vector<Mask> subsets = target_subsets(M, variant);
    for (const auto& q1 : surj[M]) {
      const int n = q1.target_size();
      const Table& G1 = cache.get(q1);
      for (const auto& q2 : surj[n]) {
        ++assoc.cases;
        const int m = q2.target_size();
        // q = q2 q1 and the restrictions q1|r, built from image sequences
        int imq[8];
        for (int i = 1; i <= M; ++i) imq[i - 1] = q2(q1(i));
        const Table& G2 = cache.get(q2);
        const Table& G = cache.get(imq, M, m);
        const Table* Gr[9];
        int q2fiber[9][8];
        for (int t = 1; t <= m; ++t) {
          int imr[8], len = 0;
          for (int i = 1; i <= M; ++i)
            if (imq[i - 1] == t) imr[len++] = q2.local_index(q1(i));
          Gr[t] = &cache.get(imr, len, q2.fiber_size(t));
          int c = 0;
          for (int j = 1; j <= n; ++j)
            if (q2(j) == t) q2fiber[t][c++] = j;
        }
        auto source_section = [&](const CEntry& e) {
          const int tag = e.f;
          const int ar = tag == 0 ? m : (tag <= m ? q2.fiber_size(tag) : q1.fiber_size(tag - m));
          return bundle_section(ar, e.key);
        };
        const bool keep = M <= generic_arity;
        routeA.clear();
        routeB.clear();
        for (Mask s : subsets) {
          // (x; y) o_{q2} then o_{q1} z
          const CRow& r1 = G1.rows[s];
          a.clear();
          for (const auto& e : r1.entries) {
            if (e.f == 0) {
              for (const auto& e2 : G2.rows[e.key].entries) a.push_back({e2.f, e2.key, e.e * e2.e});
            } else {
              a.push_back({m + e.f, e.key, e.e});
            }
          }
          normalize(a);
          const Section pa = r1.pulled != Section::Divisor
                                 ? r1.pulled
                                 : combine(r1.entries, [&](const CEntry& e) {
                                     return e.f == 0 ? G2.rows[e.key].pulled : bundle_section(q1.fiber_size(e.f), e.key);
                                   });
          // x o_{q2 q1} (y_r o_{q1|r} z)
          const CRow& r0 = G.rows[s];
          b.clear();
          for (const auto& e : r0.entries) {
            if (e.f == 0) {
              b.push_back(e);
              continue;
            }
            for (const auto& e3 : Gr[e.f]->rows[e.key].entries) {
              if (e3.f == 0)
                b.push_back({e.f, e3.key, e.e * e3.e});
              else
                b.push_back({m + q2fiber[e.f][e3.f - 1], e3.key, e.e * e3.e});
            }
          }
          normalize(b);
          const Section pb = r0.pulled != Section::Divisor
                                 ? r0.pulled
                                 : combine(r0.entries, [&](const CEntry& e) {
                                     return e.f == 0 ? bundle_section(m, e.key) : Gr[e.f]->rows[e.key].pulled;
                                   });
          if (a != b || pa != pb)
            fail(assoc, "q1=" + q1.to_string() + " q2=" + q2.to_string() + " I=" + subset_key(s) + ": " +
                            describe({a, pa}) + " vs " + describe({b, pb}));
          if (variant == Variant::Log) {
            ++legal.cases;
            bool nonneg = std::all_of(a.begin(), a.end(), [](const CEntry& e) { return e.e >= 0; });
            if (!nonneg || combine(a, source_section) != pa)
              fail(legal, "composite row not DF-legal for q1=" + q1.to_string() + " q2=" + q2.to_string() +
                              " I=" + subset_key(s));
          }
          if (keep) {
            routeA.push_back({a, pa});
            routeB.push_back({b, pb});
          }
        }

        if (M > generic_arity) continue;
        ++cross.cases;
        constexpr int kMid = 1000, kInner = 2000;
        GammaTags t1{kMid, {}, 0}, t2{0, {}, kMid};
        for (int j = 1; j <= n; ++j) t1.inner.push_back(m + j);
        const Surjection q = q2.after(q1);
        std::vector<LogMorphism> partsA{gamma(q2, variant, t2)};
        for (int j = 1; j <= n; ++j) partsA.push_back(identity(structure(kind, q1.fiber_size(j), m + j)));
        LogMorphism A = compose_morphisms(gamma(q1, variant, t1), product(partsA));

        GammaTags t0{0, {}, 0};
        std::vector<LogMorphism> partsB{identity(structure(kind, m, 0))};
        for (int t = 1; t <= m; ++t) {
          t0.inner.push_back(kInner + t);
          GammaTags tr{t, {}, kInner + t};
          for (int j : q2.fiber(t)) tr.inner.push_back(m + j);
          partsB.push_back(gamma(q1.restrict_over(q2, t), variant, tr));
        }
        LogMorphism B = compose_morphisms(gamma(q, variant, t0), product(partsB));
        for (std::size_t i = 0; i < subsets.size(); ++i) {
          if (!(generic_row(A, 0, subsets[i]) == routeA[i]) || !(generic_row(B, 0, subsets[i]) == routeB[i]))
            fail(cross, "fast and generic composites differ for q1=" + q1.to_string() + " q2=" + q2.to_string() +
                            " I=" + subset_key(subsets[i]));
        }
      }
    }
  }
  if (assoc.ok) assoc.detail = "both bracketings agree on every row and section flag";
  if (cross.ok) cross.detail = "checked up to |M| = " + std::to_string(generic_arity);
  std::vector<CheckResult> out{assoc, cross};
  if (variant == Variant::Log) {
    if (legal.ok) legal.detail = "all composite rows non-negative with matching sections";
    out.push_back(legal);
  }
  return out;
}

CheckResult check_equivariance(int max_arity, Variant variant, int full_permutation_arity) {
  CheckResult r{std::string("equivariance (") + variant_name(variant) + ")"};
  const StructureKind kind = kind_of(variant);
  TableCache cache(variant);
  for (int M = 1; M <= max_arity; ++M) {
    const auto perms_M = M <= full_permutation_arity ? all_permutations(M) : adjacent_transpositions(M);
    const std::vector<Mask> subsets = target_subsets(M, variant);
    for (const auto& q : all_surjections(M)) {
      const int n = q.target_size();
      const Table& G = cache.get(q);
      // Permuting the source labels.
      for (const auto& sigma : perms_M) {
        ++r.cases;
        const Permutation inv = sigma.inverse();
        std::vector<int> images(M);
        for (int i = 1; i <= M; ++i) images[i - 1] = q(inv(i));
        const Surjection qs(images, n);
        const Table& Gs = cache.get(qs);
        for (Mask s : subsets) {
          const CRow& lhs = G.rows[inv.apply(s)];
          const CRow& rs = Gs.rows[s];
          CRow rhs;
          rhs.pulled = rs.pulled;
          for (const auto& e : rs.entries) {
            if (e.f == 0)
              rhs.entries.push_back(e);
            else
              rhs.entries.push_back({e.f, compress(inv.apply(expand(e.key, qs.fiber_mask(e.f))), q.fiber_mask(e.f)), e.e});
          }
          normalize(rhs.entries);
          if (!(lhs == rhs)) fail(r, "source permutation breaks equivariance for q=" + q.to_string() + " I=" + subset_key(s));
        }
        if (M <= 3) {
          LogMorphism lhs = compose_morphisms(sigma_log(sigma, structure(kind, M, 0)), gamma(q, variant));
          std::vector<LogMorphism> parts{identity(structure(kind, n, 0))};
          for (int t = 1; t <= n; ++t)
            parts.push_back(sigma_log(induced_local(sigma, q.fiber_mask(t), qs.fiber_mask(t)), structure(kind, q.fiber_size(t), t)));
          LogMorphism rhs = compose_morphisms(gamma(qs, variant), product(parts));
          for (Mask s : subsets)
            if (!(generic_row(lhs, 0, s) == generic_row(rhs, 0, s)))
              fail(r, "generic source-permutation check fails for q=" + q.to_string());
        }
      }
      // Permuting the target labels (and the fiber factors with them).
      const auto perms_n = n <= full_permutation_arity ? all_permutations(n) : adjacent_transpositions(n);
      for (const auto& rho : perms_n) {
        ++r.cases;
        const Permutation rinv = rho.inverse();
        std::vector<int> images(M);
        for (int i = 1; i <= M; ++i) images[i - 1] = rho(q(i));
        const Surjection qr(images, n);
        const Table& Gr = cache.get(qr);
        for (Mask s : subsets) {
          const CRow& lhs = G.rows[s];
          CRow rhs;
          rhs.pulled = Gr.rows[s].pulled;
          for (const auto& e : Gr.rows[s].entries) {
            if (e.f == 0)
              rhs.entries.push_back({0, rinv.apply(e.key), e.e});
            else
              rhs.entries.push_back({rinv(e.f), e.key, e.e});
          }
          normalize(rhs.entries);
          if (!(lhs == rhs)) fail(r, "target permutation breaks equivariance for q=" + q.to_string() + " I=" + subset_key(s));
        }
        if (M <= 3) {
          GammaTags tags{0, {}, 0};
          for (int t = 1; t <= n; ++t) tags.inner.push_back(rinv(t));
          std::vector<LogMorphism> parts{sigma_log(rho, structure(kind, n, 0))};
          for (int t = 1; t <= n; ++t) parts.push_back(identity(structure(kind, qr.fiber_size(t), rinv(t))));
          LogMorphism rhs = compose_morphisms(gamma(qr, variant, tags), product(parts));
          LogMorphism lhs = gamma(q, variant);
          for (Mask s : subsets)
            if (!(generic_row(lhs, 0, s) == generic_row(rhs, 0, s)))
              fail(r, "generic target-permutation check fails for q=" + q.to_string());
        }
      }
    }
  }
  if (r.ok) r.detail = "all permutations up to |M| = " + std::to_string(full_permutation_arity) + ", generators beyond";
  return r;
}

CheckResult check_unit_axioms(int max_arity, Variant variant) {
  CheckResult r{std::string("unit axioms via the virtual unit (") + variant_name(variant) + ")"};
  const StructureKind kind = kind_of(variant);
  const LogMorphism eta = unit_vlog(variant);
  if (!legality_virtual(eta).ok) fail(r, "virtual unit is not virtual-legal");
  if (variant == Variant::Log && legality_df(eta).ok) fail(r, "virtual unit is unexpectedly DF-legal");
  for (int m = 1; m <= max_arity; ++m) {
    ++r.cases;
    const Surjection to_one(std::vector<int>(m, 1), 1);
    LogMorphism left = compose_morphisms(gamma(to_one, variant, {0, {1}, 0}),
                                         product({unit_vlog(variant, 0), identity(structure(kind, m, 1))}));
    LogMorphism id1 = identity(structure(kind, m, 1));
    for (const auto& b : id1.target().bundles())
      if (!(left.row(BundleId{0, b.id.key}) == id1.row(b.id))) fail(r, "left unit fails at arity " + std::to_string(m));

    ++r.cases;
    std::vector<LogMorphism> parts{identity(structure(kind, m, 0))};
    for (int t = 1; t <= m; ++t) parts.push_back(unit_vlog(variant, t));
    LogMorphism right = compose_morphisms(gamma(Surjection::identity(m), variant), product(parts));
    LogMorphism id0 = identity(structure(kind, m, 0));
    if (right.rows() != id0.rows()) fail(r, "right unit fails at arity " + std::to_string(m));
  }
  if (r.ok) r.detail = "left and right unit equations hold exactly";
  return r;
}

CheckResult check_universal_dual(int max_n) {
  CheckResult r{"universal class dual identity"};
  for (int n = 2; n <= max_n; ++n) {
    for (Mask s = 1; s <= full_mask(n); ++s) {
      if (popcount(s) < 2) continue;
      ++r.cases;
      LatticeVector v = -1 * universal_class(n, s);
      for (Mask t = 1; t <= full_mask(n); ++t)
        if (t != s && contains(t, s)) v = v + (-1 * lattice_basis(0, t));
      if (v != lattice_basis(0, s)) fail(r, "dual identity fails for n=" + std::to_string(n) + " I=" + subset_key(s));
    }
  }
  if (r.ok) r.detail = "O(I) = M_I^v (x) prod O(I')^v for I proper in I'";
  return r;
}

StrictUnitSearch search_strict_unit(int bound, int max_point_bundles, int max_arity) {
  if (bound < 0 || max_point_bundles < 0 || max_point_bundles > 4 || max_arity < 1)
    throw_invalid("strict unit search parameters out of range");
  StrictUnitSearch out{bound, max_point_bundles, max_arity};
  for (int k = 0; k <= max_point_bundles; ++k) {
    std::vector<long> e(k, -bound);
    while (true) {
      ++out.candidates;
      LogRow row;
      row.pulled = Section::Zero;  // the zero section of T_1 pulls back to zero
      for (int i = 0; i < k; ++i)
        if (e[i] != 0) row.entries.push_back({BundleId{0, bit(i + 1)}, e[i]});
      LogMorphism eta(point_structure(k, 0), structure_T(1, 0), {row}, MorphismKind::StrictDF);
      bool unit = true;
      for (int m = 1; m <= max_arity && unit; ++m) {
        const Surjection to_one(std::vector<int>(m, 1), 1);
        LogMorphism left =
            compose_morphisms(gamma_log(to_one, {0, {1}, 0}), product({eta, identity(structure_T(m, 1))}));
        LogMorphism id1 = identity(structure_T(m, 1));
        for (const auto& b : id1.target().bundles()) {
          LogRow got = left.row(BundleId{0, b.id.key});
          if (!(got == id1.row(b.id))) unit = false;
        }
      }
      if (unit) {
        ++out.unit_solutions;
        if (legality_df(eta).ok) ++out.df_legal_solutions;
        if (legality_virtual(eta).ok) ++out.virtual_legal_solutions;
      }
      int i = 0;
      while (i < k && e[i] == bound) e[i++] = -bound;
      if (i == k) break;
      ++e[i];
    }
  }
  return out;
}

CheckResult check_no_strict_unit(int bound) {
  CheckResult r{"no strict unit (bounded search)"};
  StrictUnitSearch s = search_strict_unit(bound);
  r.cases = s.candidates;
  r.ok = s.unit_solutions > 0 && s.df_legal_solutions == 0 && s.virtual_legal_solutions == s.unit_solutions;
  std::ostringstream os;
  os << "bound |e| <= " << s.bound << ", up to " << s.max_point_bundles << " point bundles, |M| <= " << s.max_arity
     << ": " << s.unit_solutions << " unit solutions, " << s.df_legal_solutions << " DF-legal, "
     << s.virtual_legal_solutions << " virtual-legal";
  r.detail = os.str();
  return r;
}

LogVerifyReport verify_log_calculus(const LogVerifyOptions& o) {
  if (o.max_arity < 1 || o.max_arity > 7) throw ResourceLimit("log verification supports max arity 1..7");
  LogVerifyReport rep;
  rep.checks.push_back(check_legality(o.max_arity, o.variant));
  rep.checks.push_back(check_section_bookkeeping(o.max_arity, o.variant));
  rep.checks.push_back(check_class_consistency(o.max_arity, o.variant));
  if (o.variant == Variant::VLog) rep.checks.push_back(check_variant_difference(o.max_arity));
  for (auto& c : check_associativity(o.max_arity, o.variant, o.generic_arity)) rep.checks.push_back(std::move(c));
  rep.checks.push_back(check_equivariance(o.max_arity, o.variant, o.full_permutation_arity));
  rep.checks.push_back(check_unit_axioms(o.max_arity, o.variant));
  rep.checks.push_back(check_universal_dual(o.max_arity));
  rep.checks.push_back(check_no_strict_unit(o.strict_unit_bound));
  return rep;
}

}  // namespace fmlog
