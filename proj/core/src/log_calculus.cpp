#include "fmlog/log_calculus.hpp"

#include <algorithm>
#include <sstream>

#include "fmlog/errors.hpp"
#include "fmlog/nested.hpp"

namespace fmlog {

std::string to_string(Section s) {
  switch (s) {
    case Section::Divisor: return "divisor";
    case Section::Zero: return "zero";
    case Section::Unit: return "unit";
  }
  return "?";
}

std::string to_string(StructureKind k) { return k == StructureKind::T ? "T" : "K"; }

std::string to_string(PullbackCase c) {
  switch (c) {
    case PullbackCase::FiberInterior: return "fiber-interior";
    case PullbackCase::FiberUnion: return "fiber-union";
    case PullbackCase::NotNested: return "not-nested";
    case PullbackCase::Whole: return "whole";
    case PullbackCase::Fiber: return "fiber";
    case PullbackCase::Singleton: return "singleton";
  }
  return "?";
}

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  LatticeVector out = a;
  for (const auto& [k, v] : b) {
    long& slot = out[k];
    slot += v;
    if (slot == 0) out.erase(k);
  }
  return out;
}

LatticeVector operator*(long s, const LatticeVector& v) {
  LatticeVector out;
  if (s == 0) return out;
  for (const auto& [k, c] : v) out[k] = s * c;
  return out;
}

LatticeVector lattice_basis(int factor, Mask subset) {
  if (popcount(subset) < 2) throw_invalid("lattice basis symbols need |I| >= 2");
  return {{BundleId{factor, subset}, 1}};
}

namespace {

// Subsets of [n] of size >= min_size, by size then lexicographically.
std::vector<Mask> ordered_subsets(int n, int min_size) {
  std::vector<Mask> out;
  for (Mask m = 1; m <= full_mask(n); ++m)
    if (popcount(m) >= min_size) out.push_back(m);
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return lex_less(a, b);
  });
  return out;
}

LatticeVector singleton_class(int n, int label, int tag) {
  LatticeVector out;
  for (Mask m = 1; m <= full_mask(n); ++m)
    if (popcount(m) >= 2 && (m & bit(label))) out[BundleId{tag, m}] = -1;
  return out;
}

void check_arity(int n) {
  if (n < 1) throw_invalid("arity must be >= 1");
  if (n > 16) throw ResourceLimit("arity above 16 is not supported by the divisor lattice");
}

}  // namespace

int DFStructure::find(const BundleId& id) const {
  auto it = index_.find(id.packed());
  return it == index_.end() ? -1 : it->second;
}

const LogBundle& DFStructure::bundle(const BundleId& id) const {
  int i = find(id);
  if (i < 0) throw_invalid("no bundle " + subset_key(id.key) + " in factor " + std::to_string(id.factor));
  return bundles_[i];
}

void DFStructure::reindex() {
  index_.clear();
  for (std::size_t i = 0; i < bundles_.size(); ++i) {
    if (!index_.emplace(bundles_[i].id.packed(), static_cast<int>(i)).second)
      throw_invalid("duplicate bundle in DF structure");
  }
}

DFStructure structure_T(int n, int tag) {
  check_arity(n);
  DFStructure s;
  s.factors_.push_back({tag, n, StructureKind::T});
  if (n == 1) {
    s.bundles_.push_back({BundleId{tag, 1}, Section::Zero, {}});
  } else {
    for (Mask m : ordered_subsets(n, 2))
      s.bundles_.push_back({BundleId{tag, m}, m == full_mask(n) ? Section::Zero : Section::Divisor, lattice_basis(tag, m)});
    for (int i = 1; i <= n; ++i) s.bundles_.push_back({BundleId{tag, bit(i)}, Section::Zero, singleton_class(n, i, tag)});
  }
  s.reindex();
  return s;
}

DFStructure structure_K(int n, int tag) {
  check_arity(n);
  DFStructure s;
  s.factors_.push_back({tag, n, StructureKind::K});
  for (Mask m : ordered_subsets(n, 2))
    s.bundles_.push_back({BundleId{tag, m}, m == full_mask(n) ? Section::Zero : Section::Divisor, lattice_basis(tag, m)});
  s.reindex();
  return s;
}

DFStructure point_structure(int bundles, int tag) {
  if (bundles < 0 || bundles > 16) throw_invalid("point structure: bundle count out of range");
  DFStructure s;
  s.factors_.push_back({tag, 0, StructureKind::T});
  for (int i = 1; i <= bundles; ++i) s.bundles_.push_back({BundleId{tag, bit(i)}, Section::Unit, {}});
  s.reindex();
  return s;
}

DFStructure structure(StructureKind kind, int n, int tag) {
  return kind == StructureKind::T ? structure_T(n, tag) : structure_K(n, tag);
}

DFStructure product(const std::vector<DFStructure>& parts) {
  DFStructure s;
  for (const auto& p : parts) {
    for (const auto& f : p.factors_) {
      for (const auto& g : s.factors_)
        if (g.tag == f.tag) throw_invalid("product of structures with a repeated factor tag");
      s.factors_.push_back(f);
    }
    s.bundles_.insert(s.bundles_.end(), p.bundles_.begin(), p.bundles_.end());
  }
  s.reindex();
  return s;
}

namespace {

int map_tag(const std::map<int, int>& tags, int t) {
  auto it = tags.find(t);
  return it == tags.end() ? t : it->second;
}

LatticeVector retag_vector(const LatticeVector& v, const std::map<int, int>& tags) {
  LatticeVector out;
  for (const auto& [k, c] : v) out[BundleId{map_tag(tags, k.factor), k.key}] = c;
  return out;
}

}  // namespace

DFStructure retag(const DFStructure& s, const std::map<int, int>& tags) {
  DFStructure out = s;
  for (auto& f : out.factors_) f.tag = map_tag(tags, f.tag);
  for (std::size_t i = 0; i < out.factors_.size(); ++i)
    for (std::size_t j = i + 1; j < out.factors_.size(); ++j)
      if (out.factors_[i].tag == out.factors_[j].tag) throw_invalid("retag produces a repeated factor tag");
  for (auto& b : out.bundles_) {
    b.id.factor = map_tag(tags, b.id.factor);
    b.cls = retag_vector(b.cls, tags);
  }
  out.reindex();
  return out;
}

LatticeVector universal_class(int n, Mask subset, int tag) {
  check_arity(n);
  if (popcount(subset) < 2 || !contains(full_mask(n), subset)) throw_invalid("universal class needs I in P>=2([n])");
  LatticeVector out;
  for (Mask m = 1; m <= full_mask(n); ++m)
    if (contains(m, subset)) out[BundleId{tag, m}] = -1;
  return out;
}

std::vector<Entry> normalized(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
  std::vector<Entry> out;
  for (const auto& e : entries) {
    if (!out.empty() && out.back().col == e.col)
      out.back().exp += e.exp;
    else
      out.push_back(e);
    if (out.back().exp == 0) out.pop_back();
  }
  return out;
}

Section product_section(const DFStructure& source, const std::vector<Entry>& entries) {
  Section s = Section::Unit;
  for (const auto& e : entries) {
    if (e.exp <= 0) continue;
    Section b = source.bundle(e.col).section;
    if (b == Section::Zero) return Section::Zero;
    if (b == Section::Divisor) s = Section::Divisor;
  }
  return s;
}

LogMorphism::LogMorphism(DFStructure source, DFStructure target, std::vector<LogRow> rows, MorphismKind kind)
    : source_(std::move(source)), target_(std::move(target)), rows_(std::move(rows)), kind_(kind) {
  if (rows_.size() != target_.size()) throw_invalid("morphism needs one row per target bundle");
  for (auto& r : rows_) {
    r.entries = normalized(std::move(r.entries));
    for (const auto& e : r.entries)
      if (source_.find(e.col) < 0) throw_invalid("morphism row refers to a bundle outside the source");
  }
}

const LogRow& LogMorphism::row(const BundleId& target_bundle) const {
  int i = target_.find(target_bundle);
  if (i < 0) throw_invalid("no such target bundle");
  return rows_[i];
}

std::vector<std::vector<long>> LogMorphism::matrix() const {
  std::vector<std::vector<long>> out(rows_.size(), std::vector<long>(source_.size(), 0));
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto& e : rows_[i].entries) out[i][source_.find(e.col)] = e.exp;
  return out;
}

PullbackCase classify(const Surjection& q, Mask subset) {
  const Mask whole = full_mask(q.source_size());
  if (subset == 0 || !contains(whole, subset)) throw_invalid("subset must be a nonempty subset of the source");
  bool nested = true;
  for (int r = 1; r <= q.target_size(); ++r) {
    Mask f = q.fiber_mask(r);
    if (contains(f, subset)) {
      if (f == subset) return PullbackCase::Fiber;
      return popcount(subset) == 1 ? PullbackCase::Singleton : PullbackCase::FiberInterior;
    }
    if ((f & subset) != 0 && !contains(subset, f)) nested = false;
  }
  if (!nested) return PullbackCase::NotNested;
  return subset == whole ? PullbackCase::Whole : PullbackCase::FiberUnion;
}

namespace {

int inner_tag(const GammaTags& tags, int r) {
  if (tags.inner.empty()) return r;
  if (r < 1 || r > static_cast<int>(tags.inner.size())) throw_invalid("gamma tags: missing inner tag");
  return tags.inner[r - 1];
}

int owning_fiber(const Surjection& q, Mask subset) {
  for (int r = 1; r <= q.target_size(); ++r)
    if (contains(q.fiber_mask(r), subset)) return r;
  return 0;
}

Section case_section(PullbackCase c) {
  switch (c) {
    case PullbackCase::Whole:
    case PullbackCase::Fiber:
    case PullbackCase::Singleton: return Section::Zero;
    case PullbackCase::NotNested: return Section::Unit;
    default: return Section::Divisor;
  }
}

}  // namespace

LatticeVector pullback_class(const Surjection& q, Mask subset, Variant variant, const GammaTags& tags) {
  if (variant == Variant::VLog && popcount(subset) < 2) throw_invalid("K-structures have no singleton bundles");
  const PullbackCase c = classify(q, subset);
  const int n = q.target_size();
  const int r = owning_fiber(q, subset);
  switch (c) {
    case PullbackCase::FiberInterior:
      return lattice_basis(inner_tag(tags, r), compress(subset, q.fiber_mask(r)));
    case PullbackCase::Singleton:
      return singleton_class(q.fiber_size(r), __builtin_ctz(compress(subset, q.fiber_mask(r))) + 1, inner_tag(tags, r));
    case PullbackCase::FiberUnion: return lattice_basis(tags.outer, q.image(subset));
    case PullbackCase::NotNested: return {};
    case PullbackCase::Whole: return lattice_basis(tags.outer, full_mask(n));
    case PullbackCase::Fiber: {
      // pi_0 O({r}) (x) pi_r O(q^{-1}(r)); on an arity-1 factor both are trivial.
      LatticeVector out = n >= 2 ? singleton_class(n, r, tags.outer) : LatticeVector{};
      if (q.fiber_size(r) >= 2) out = out + lattice_basis(inner_tag(tags, r), full_mask(q.fiber_size(r)));
      return out;
    }
  }
  throw_internal("unreachable pullback case");
}

LogRow pullback_row(const Surjection& q, Mask subset, Variant variant, const GammaTags& tags) {
  if (variant == Variant::VLog && popcount(subset) < 2) throw_invalid("K-structures have no singleton bundles");
  const PullbackCase c = classify(q, subset);
  const int n = q.target_size();
  const int r = owning_fiber(q, subset);
  LogRow row;
  row.pulled = case_section(c);
  switch (c) {
    case PullbackCase::FiberInterior:
    case PullbackCase::Singleton:
      row.entries.push_back({BundleId{inner_tag(tags, r), compress(subset, q.fiber_mask(r))}, 1});
      break;
    case PullbackCase::FiberUnion: row.entries.push_back({BundleId{tags.outer, q.image(subset)}, 1}); break;
    case PullbackCase::NotNested: break;
    case PullbackCase::Whole: row.entries.push_back({BundleId{tags.outer, full_mask(n)}, 1}); break;
    case PullbackCase::Fiber: {
      const int k = q.fiber_size(r);
      if (variant == Variant::Log) {
        row.entries.push_back({BundleId{tags.outer, bit(r)}, 1});
      } else {
        for (Mask m = 1; m <= full_mask(n); ++m)
          if (popcount(m) >= 2 && (m & bit(r))) row.entries.push_back({BundleId{tags.outer, m}, -1});
      }
      row.entries.push_back({BundleId{inner_tag(tags, r), full_mask(k)}, 1});
      break;
    }
  }
  row.entries = normalized(std::move(row.entries));
  return row;
}

namespace {

LogMorphism build_gamma(const Surjection& q, Variant variant, const GammaTags& tags) {
  const StructureKind kind = variant == Variant::Log ? StructureKind::T : StructureKind::K;
  std::vector<DFStructure> parts;
  parts.push_back(structure(kind, q.target_size(), tags.outer));
  for (int r = 1; r <= q.target_size(); ++r) parts.push_back(structure(kind, q.fiber_size(r), inner_tag(tags, r)));
  DFStructure src = product(parts);
  DFStructure tgt = structure(kind, q.source_size(), tags.target);
  std::vector<LogRow> rows;
  rows.reserve(tgt.size());
  for (const auto& b : tgt.bundles()) rows.push_back(pullback_row(q, b.id.key, variant, tags));
  return LogMorphism(std::move(src), std::move(tgt), std::move(rows),
                     variant == Variant::Log ? MorphismKind::StrictDF : MorphismKind::Virtual);
}

}  // namespace

LogMorphism gamma_log(const Surjection& q, const GammaTags& tags) {
  LogMorphism m = build_gamma(q, Variant::Log, tags);
  Legality l = legality_df(m);
  if (!l.ok) throw_internal("gamma_log is not DF-legal: " + l.witness->reason);
  return m;
}

LogMorphism gamma_vlog(const Surjection& q, const GammaTags& tags) {
  LogMorphism m = build_gamma(q, Variant::VLog, tags);
  Legality l = legality_virtual(m);
  if (!l.ok) throw_internal("gamma_vlog is not virtual-legal: " + l.witness->reason);
  return m;
}

LogMorphism gamma(const Surjection& q, Variant variant, const GammaTags& tags) {
  return variant == Variant::Log ? gamma_log(q, tags) : gamma_vlog(q, tags);
}

LogMorphism unit_vlog(Variant variant, int target_tag) {
  DFStructure tgt = variant == Variant::Log ? structure_T(1, target_tag) : structure_K(1, target_tag);
  std::vector<LogRow> rows(tgt.size());
  // The zero section pulls back to the zero section of the trivial bundle on
  // the point, while the empty tensor product carries the unit section.
  for (auto& r : rows) r.pulled = Section::Zero;
  return LogMorphism(DFStructure{}, std::move(tgt), std::move(rows), MorphismKind::Virtual);
}

LogMorphism identity(const DFStructure& s) {
  std::vector<LogRow> rows;
  rows.reserve(s.size());
  for (const auto& b : s.bundles()) rows.push_back({{{b.id, 1}}, b.section});
  return LogMorphism(s, s, std::move(rows), MorphismKind::StrictDF);
}

LogMorphism compose_morphisms(const LogMorphism& outer, const LogMorphism& inner) {
  if (!(inner.target() == outer.source()))
    throw_invalid("compose_morphisms: inner target does not match outer source");
  std::vector<LogRow> rows;
  rows.reserve(outer.rows().size());
  for (const auto& orow : outer.rows()) {
    LogRow row;
    for (const auto& e : orow.entries) {
      const LogRow& irow = inner.rows()[inner.target().find(e.col)];
      for (const auto& f : irow.entries) row.entries.push_back({f.col, e.exp * f.exp});
    }
    row.entries = normalized(std::move(row.entries));
    if (orow.pulled == Section::Divisor) {
      Section s = Section::Unit;
      for (const auto& e : orow.entries) {
        if (e.exp <= 0) continue;
        Section p = inner.rows()[inner.target().find(e.col)].pulled;
        if (p == Section::Zero) {
          s = Section::Zero;
          break;
        }
        if (p == Section::Divisor) s = Section::Divisor;
      }
      row.pulled = s;
    } else {
      row.pulled = orow.pulled;
    }
    rows.push_back(std::move(row));
  }
  MorphismKind kind = (outer.kind() == MorphismKind::Virtual || inner.kind() == MorphismKind::Virtual)
                          ? MorphismKind::Virtual
                          : MorphismKind::StrictDF;
  return LogMorphism(inner.source(), outer.target(), std::move(rows), kind);
}

LogMorphism product(const std::vector<LogMorphism>& parts) {
  std::vector<DFStructure> srcs, tgts;
  std::vector<LogRow> rows;
  MorphismKind kind = MorphismKind::StrictDF;
  for (const auto& p : parts) {
    srcs.push_back(p.source());
    tgts.push_back(p.target());
    rows.insert(rows.end(), p.rows().begin(), p.rows().end());
    if (p.kind() == MorphismKind::Virtual) kind = MorphismKind::Virtual;
  }
  return LogMorphism(product(srcs), product(tgts), std::move(rows), kind);
}

LogMorphism retag(const LogMorphism& m, const std::map<int, int>& source_tags, const std::map<int, int>& target_tags) {
  std::vector<LogRow> rows = m.rows();
  for (auto& r : rows)
    for (auto& e : r.entries) e.col.factor = map_tag(source_tags, e.col.factor);
  return LogMorphism(retag(m.source(), source_tags), retag(m.target(), target_tags), std::move(rows), m.kind());
}

LogMorphism sigma_log(const Permutation& sigma, const DFStructure& s) {
  if (s.factors().size() != 1) throw_invalid("sigma_log acts on a single-factor structure");
  const Factor& f = s.factors().front();
  if (sigma.size() != f.arity) throw_invalid("sigma_log: permutation size differs from the arity");
  const Permutation inv = sigma.inverse();
  std::vector<LogRow> rows;
  rows.reserve(s.size());
  for (const auto& b : s.bundles()) {
    BundleId col{f.tag, inv.apply(b.id.key)};
    rows.push_back({{{col, 1}}, s.bundle(col).section});
  }
  return LogMorphism(s, s, std::move(rows), MorphismKind::StrictDF);
}

namespace {

Legality check_rows(const LogMorphism& m, bool virtual_rule) {
  const auto& tgt = m.target().bundles();
  for (std::size_t i = 0; i < tgt.size(); ++i) {
    const LogRow& row = m.rows()[i];
    const BundleId id = tgt[i].id;
    if (virtual_rule && (tgt[i].section == Section::Zero || row.pulled == Section::Zero)) continue;
    if (tgt[i].section != Section::Zero) {
      for (const auto& e : row.entries)
        if (e.exp < 0) return {false, Witness{id, e.col, e.exp, "negative exponent on a row with nonzero target section"}};
    }
    if (tgt[i].section == Section::Zero && row.pulled != Section::Zero)
      return {false, Witness{id, std::nullopt, 0, "zero section pulled back to a nonzero section"}};
    Section s = product_section(m.source(), row.entries);
    if (s != row.pulled)
      return {false, Witness{id, std::nullopt, 0,
                             "pulled-back section is " + to_string(row.pulled) + " but the tensor product carries " +
                                 to_string(s)}};
  }
  return {};
}

}  // namespace

Legality legality_df(const LogMorphism& m) { return check_rows(m, false); }
Legality legality_virtual(const LogMorphism& m) { return check_rows(m, true); }

LatticeVector row_class(const LogMorphism& m, const LogRow& row) {
  LatticeVector out;
  for (const auto& e : row.entries) out = out + e.exp * m.source().bundle(e.col).cls;
  return out;
}

std::string format_row(const LogRow& row) {
  std::ostringstream os;
  if (row.entries.empty()) os << "1";
  bool first = true;
  for (const auto& e : row.entries) {
    if (!first) os << " + ";
    first = false;
    os << e.exp << "*O" << e.col.factor << "{" << subset_key(e.col.key) << "}";
  }
  os << " [" << to_string(row.pulled) << "]";
  return os.str();
}

std::string format_class(const LatticeVector& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : v) {
    if (!first) os << " + ";
    first = false;
    os << c << "*D" << k.factor << "{" << subset_key(k.key) << "}";
  }
  return os.str();
}

}  // namespace fmlog
