#pragma once

// Divisor-lattice model of the Deligne-Faltings log structures on T_{d,n}
// (one line bundle per nonempty I) and K_{d,n} (one per |I| >= 2), and of the
// log / virtual-log extensions of the composition maps.
//
// Line bundles are identified with their classes in the free abelian group on
// the boundary symbols D(I), |I| >= 2, of each factor. A morphism is an integer
// exponent matrix: row i expresses the pullback of target bundle i as a tensor
// product of source bundles.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fmlog/surjection.hpp"

namespace fmlog {

enum class Section { Divisor, Zero, Unit };
enum class StructureKind { T, K };
enum class MorphismKind { StrictDF, Virtual };
enum class Variant { Log, VLog };  // gamma on T-structures / on K-structures

std::string to_string(Section s);
std::string to_string(StructureKind k);

/// A bundle (or a lattice basis symbol) of one factor of a product:
/// `key` is a subset of the factor's local labels 1..arity.
struct BundleId {
  int factor = 0;
  Mask key = 0;
  auto operator<=>(const BundleId&) const = default;
  std::uint64_t packed() const { return (std::uint64_t(std::uint32_t(factor)) << 32) | key; }
};

using LatticeVector = std::map<BundleId, long>;  // basis symbol -> coefficient, no zero entries

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator*(long s, const LatticeVector& v);
LatticeVector lattice_basis(int factor, Mask subset);

struct Factor {
  int tag = 0;
  int arity = 1;
  StructureKind kind = StructureKind::T;
  auto operator<=>(const Factor&) const = default;
};

struct LogBundle {
  BundleId id;
  Section section = Section::Zero;
  LatticeVector cls;
  bool operator==(const LogBundle&) const = default;
};

/// Ordered tuple of line bundles with sections (a product over its factors).
class DFStructure {
 public:
  DFStructure() = default;
  const std::vector<Factor>& factors() const { return factors_; }
  const std::vector<LogBundle>& bundles() const { return bundles_; }
  std::size_t size() const { return bundles_.size(); }
  /// Index of a bundle, or -1.
  int find(const BundleId& id) const;
  const LogBundle& bundle(const BundleId& id) const;
  bool operator==(const DFStructure& o) const { return factors_ == o.factors_ && bundles_ == o.bundles_; }

  friend DFStructure structure_T(int n, int tag);
  friend DFStructure structure_K(int n, int tag);
  friend DFStructure point_structure(int bundles, int tag);
  friend DFStructure product(const std::vector<DFStructure>& parts);
  friend DFStructure retag(const DFStructure& s, const std::map<int, int>& tags);

 private:
  void reindex();
  std::vector<Factor> factors_;
  std::vector<LogBundle> bundles_;
  std::map<std::uint64_t, int> index_;
};

/// Bundles for every nonempty I: |I| >= 2 by size then lex, then singletons.
/// O(I) = D(I) with divisor section for I proper, zero section for I = [n];
/// O({i}) = -sum_{I containing i} D(I) with zero section; n = 1 gives one
/// trivial bundle with zero section.
DFStructure structure_T(int n, int tag = 0);
/// Bundles for every I with |I| >= 2 (empty for n = 1).
DFStructure structure_K(int n, int tag = 0);
DFStructure structure(StructureKind kind, int n, int tag = 0);
/// The point carrying `bundles` trivial bundles with nowhere-vanishing
/// sections (an arity-0 factor, keys 1, 2, 4, ...).
DFStructure point_structure(int bundles, int tag = 0);
/// Concatenation; factor tags must be distinct.
DFStructure product(const std::vector<DFStructure>& parts);
DFStructure retag(const DFStructure& s, const std::map<int, int>& tags);

/// Class of the universal screen line bundle M_I: -sum_{I subseteq I'} D(I').
LatticeVector universal_class(int n, Mask subset, int tag = 0);

struct Entry {
  BundleId col;
  long exp = 0;
  bool operator==(const Entry&) const = default;
};

struct LogRow {
  std::vector<Entry> entries;  // sorted by column, no zero exponents
  Section pulled = Section::Unit;  // section of the pulled-back target bundle
  bool operator==(const LogRow&) const = default;
};

class LogMorphism {
 public:
  LogMorphism(DFStructure source, DFStructure target, std::vector<LogRow> rows, MorphismKind kind);
  const DFStructure& source() const { return source_; }
  const DFStructure& target() const { return target_; }
  const std::vector<LogRow>& rows() const { return rows_; }
  const LogRow& row(const BundleId& target_bundle) const;
  MorphismKind kind() const { return kind_; }
  /// Dense exponent matrix, target bundle order x source bundle order.
  std::vector<std::vector<long>> matrix() const;
  bool operator==(const LogMorphism& o) const {
    return source_ == o.source_ && target_ == o.target_ && rows_ == o.rows_ && kind_ == o.kind_;
  }

 private:
  DFStructure source_;
  DFStructure target_;
  std::vector<LogRow> rows_;
  MorphismKind kind_;
};

/// Normalizes entries: sorts, merges, drops zeros.
std::vector<Entry> normalized(std::vector<Entry> entries);
/// The section of a tensor product of source bundles with the given exponents
/// (positive exponents only): zero beats divisor beats unit.
Section product_section(const DFStructure& source, const std::vector<Entry>& entries);

/// Which case of the pullback lemmas a subset I of M falls in.
enum class PullbackCase { FiberInterior, FiberUnion, NotNested, Whole, Fiber, Singleton };
std::string to_string(PullbackCase c);
PullbackCase classify(const Surjection& q, Mask subset);

/// Factor tags of a composition source: outer space, then one per fiber.
struct GammaTags {
  int outer = 0;
  std::vector<int> inner;  // defaults to 1..n
  int target = 0;
};

/// Pullback class of O_{T_M}(I) (T-structures) along gamma, computed from the
/// closed formulas in the product lattice. For `VLog`, |I| >= 2.
LatticeVector pullback_class(const Surjection& q, Mask subset, Variant variant, const GammaTags& tags = {});

/// Row of gamma for target subset I (the exponent choice, with the remark's
/// convention: n = 1 and singleton fibers use the fiber case).
LogRow pullback_row(const Surjection& q, Mask subset, Variant variant, const GammaTags& tags = {});

LogMorphism gamma_log(const Surjection& q, const GammaTags& tags = {});
LogMorphism gamma_vlog(const Surjection& q, const GammaTags& tags = {});
LogMorphism gamma(const Surjection& q, Variant variant, const GammaTags& tags = {});

/// Virtual morphism from the point (empty structure) to the arity-1 space:
/// T_1 carries one zero-section bundle, K_1 carries none.
LogMorphism unit_vlog(Variant variant = Variant::Log, int target_tag = 0);

LogMorphism identity(const DFStructure& s);
/// outer o inner (inner applied first): exponent matrix outer.e * inner.e.
/// Requires inner.target == outer.source (InvalidInput otherwise).
LogMorphism compose_morphisms(const LogMorphism& outer, const LogMorphism& inner);
/// Block-diagonal product of morphisms with disjoint factor tags.
LogMorphism product(const std::vector<LogMorphism>& parts);
LogMorphism retag(const LogMorphism& m, const std::map<int, int>& source_tags, const std::map<int, int>& target_tags);

/// Symmetric group action on a single-factor structure: row I has exponent 1
/// on sigma^{-1}(I), so sigma o tau has matrix E_sigma E_tau.
LogMorphism sigma_log(const Permutation& sigma, const DFStructure& s);

struct Witness {
  BundleId row;
  std::optional<BundleId> col;
  long exp = 0;
  std::string reason;
};
struct Legality {
  bool ok = true;
  std::optional<Witness> witness;
};
Legality legality_df(const LogMorphism& m);
Legality legality_virtual(const LogMorphism& m);

/// sum_j e_ij cls(source_j) for target row i.
LatticeVector row_class(const LogMorphism& m, const LogRow& row);

std::string format_row(const LogRow& row);
std::string format_class(const LatticeVector& v);

}  // namespace fmlog
