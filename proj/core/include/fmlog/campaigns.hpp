#pragma once

// Seeded random instances and the exact verification campaigns built on them
// (operad axioms for FM and framed FM, coordinate law, screen bijection,
// screen/FM bridge, strata bookkeeping). Every campaign is a pure function of
// its arguments, so equal seeds give equal results.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fmlog/check.hpp"
#include "fmlog/fm_operad.hpp"
#include "fmlog/framed.hpp"
#include "fmlog/rational.hpp"
#include "fmlog/screens.hpp"
#include "fmlog/surjection.hpp"

namespace fmlog {

/// Deterministic across platforms: only raw 64-bit engine output is used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi);
  bool coin() { return (engine_() >> 63) != 0; }
  /// p/q with |p| <= 9, 1 <= q <= 5.
  Rational small_rational();

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 of the seed mixed with a label, for independent sub-streams.
std::uint64_t derive_seed(std::uint64_t seed, const std::string& label);

Vec random_vec(Rng& rng, int dim);
std::vector<Vec> random_config(Rng& rng, int dim, int n);
Surjection random_surjection(Rng& rng, int m, int n);
/// Random target size in [1, m].
Surjection random_surjection(Rng& rng, int m);
Permutation random_permutation(Rng& rng, int n);
/// Random normal-form point: a corolla or a composite of random points, of
/// nesting depth at most `depth`. Arity 1 gives the unit.
FMPoint random_point(Rng& rng, int dim, int n, int depth = 2);
CirclePoint random_circle(Rng& rng);
/// Product of Givens rotations with rational circle points (SO(dim)).
Matrix random_rotation(Rng& rng, int dim);
FramedFMPoint random_framed(Rng& rng, int d, int n, int depth = 2);
SimpleScreen random_screen(Rng& rng, int n, int d, int depth = 2);

/// tau_r: local labels of q^{-1}(r) -> local labels of (q sigma^{-1})^{-1}(r).
Permutation local_permutation(const Surjection& q, const Permutation& sigma, int r);

CheckResult fm_associativity(int dim, int n, int trials, std::uint64_t seed);
CheckResult fm_unit(int dim, int n, int trials, std::uint64_t seed);
CheckResult fm_equivariance(int dim, int n, int trials, std::uint64_t seed);
CheckResult fm_coordinate_law(int dim, int n, int trials, std::uint64_t seed);
CheckResult fm_rotation(int dim, int n, int trials, std::uint64_t seed);
CheckResult framed_associativity(int d, int n, int trials, std::uint64_t seed);
CheckResult framed_unit(int d, int n, int trials, std::uint64_t seed);
CheckResult framed_equivariance(int d, int n, int trials, std::uint64_t seed);
/// compose o decompose and decompose o compose, plus validity and fiber
/// vanishing of every composed screen; n in [2, max_n], d in [1, max_d].
CheckResult screen_bijection(int max_n, int max_d, int trials, std::uint64_t seed);
/// Screen covectors and FM direction classes of rational configurations
/// determine each other.
CheckResult screen_fm_bridge(int trials, std::uint64_t seed);
/// Tree/nested bijection, counts against a brute-force family count, closure
/// order axioms (n <= min(max_n, 5)).
CheckResult strata_consistency(int max_n);

/// Number of nested families of proper subsets with >= 2 elements, by
/// direct search over families (independent of the tree enumeration).
long brute_force_nested_count(int n);

}  // namespace fmlog
