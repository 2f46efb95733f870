#pragma once

// Exhaustive small-arity verification of the log calculus: legality, section
// bookkeeping, class consistency, associativity, equivariance, unit axioms and
// the bounded search showing that no strict unit exists.

#include <string>
#include <vector>

#include "fmlog/check.hpp"
#include "fmlog/log_calculus.hpp"

namespace fmlog {

struct LogVerifyOptions {
  int max_arity = 6;
  Variant variant = Variant::VLog;
  /// Stacked pairs with |M| up to this bound are also assembled with the
  /// generic product/compose machinery and compared with the fast path.
  int generic_arity = 4;
  /// Equivariance uses every permutation up to this |M|, generators beyond.
  int full_permutation_arity = 4;
  int strict_unit_bound = 3;
};

struct LogVerifyReport {
  std::vector<CheckResult> checks;
  bool ok() const;
};

CheckResult check_legality(int max_arity, Variant variant);
CheckResult check_section_bookkeeping(int max_arity, Variant variant);
CheckResult check_class_consistency(int max_arity, Variant variant);
/// gamma_vlog rows agree with gamma_log rows on K-bundles except on fibers.
CheckResult check_variant_difference(int max_arity);
/// Returns {associativity, composite DF-legality (log only)}.
std::vector<CheckResult> check_associativity(int max_arity, Variant variant, int generic_arity);
CheckResult check_equivariance(int max_arity, Variant variant, int full_permutation_arity);
CheckResult check_unit_axioms(int max_arity, Variant variant);
CheckResult check_universal_dual(int max_n);

struct StrictUnitSearch {
  int bound = 3;
  int max_point_bundles = 2;
  int max_arity = 3;
  long candidates = 0;
  long unit_solutions = 0;
  long df_legal_solutions = 0;
  long virtual_legal_solutions = 0;
};

/// Candidate units: morphisms from the point with k <= max_point_bundles
/// nowhere-vanishing bundles to T_1, exponents in [-bound, bound]. Counts the
/// candidates satisfying the left unit equation for every |M| <= max_arity and
/// how many of those are DF-legal.
StrictUnitSearch search_strict_unit(int bound, int max_point_bundles = 2, int max_arity = 3);
CheckResult check_no_strict_unit(int bound);

LogVerifyReport verify_log_calculus(const LogVerifyOptions& opts = {});

}  // namespace fmlog
