#pragma once

// Floating-point, chart-level real oriented blow-ups and Kato-Nakayama spaces.
// Everything here is sample based: a statement is checked by evaluating
// explicit formulas on seeded low-discrepancy samples and comparing within a
// tolerance.

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace fmlog::kn {

using RVec = std::vector<double>;
using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

inline constexpr double kDefaultTol = 1e-9;

double norm(const RVec& v);
double max_abs_diff(const RVec& a, const RVec& b);
double max_abs_diff(const CVec& a, const CVec& b);

/// Halton sequence with a seeded Cranley-Patterson rotation.
class Halton {
 public:
  Halton(int dim, std::uint64_t seed);
  RVec next();
  int dim() const { return static_cast<int>(shift_.size()); }

 private:
  RVec shift_;
  std::uint64_t index_ = 1;
};

/// Quasi-uniform point of the unit sphere in R^dim (dim >= 1) from a Halton
/// stream of dimension >= dim + (dim odd); Gaussian via Box-Muller.
RVec sphere_point(Halton& h, int dim);
/// Same for C^n viewed as R^{2n}.
CVec complex_sphere_point(Halton& h, int n);

/// A section of a trivialized rank-r real bundle over a parametric chart.
struct ChartSection {
  int base_dim = 1;
  int rank = 1;
  std::function<RVec(const RVec&)> s;
};

/// (x, u) lies in the blow-up iff s(x) = 0 or u is a positive multiple of s(x).
/// Throws InvalidInput if |u| differs from 1 by more than tol.
bool bu_membership(const ChartSection& cs, const RVec& x, const RVec& u, double tol = kDefaultTol);

struct Fiber {
  bool over_zero = false;
  std::vector<RVec> directions;
};
/// Fiber of the blow-down over x: one direction off the zero locus, k samples
/// of the sphere S^{r-1} over it (both points of S^0 for rank 1).
Fiber bu_fiber(const ChartSection& cs, const RVec& x, int k, double tol = kDefaultTol);

/// The monomial map (x, z) -> (x, (lambda_i(x) prod_j z_j^{e_ij})_i) realizing
/// the analytification of a morphism of DF structures on a trivialized chart.
struct MonomialMap {
  std::vector<std::function<Complex(const RVec&)>> lambda;  // one per row
  std::vector<std::vector<long>> e;                          // rows x columns

  int rows() const { return static_cast<int>(e.size()); }
  int cols() const { return e.empty() ? 0 : static_cast<int>(e.front().size()); }
  /// Throws InvalidInput if some lambda_i(x) vanishes or z has a zero entry.
  CVec apply(const RVec& x, const CVec& z) const;
  /// Induced map on phases (unit complex numbers).
  CVec apply_phase(const RVec& x, const CVec& u) const;
};
MonomialMap kn_map_chart(std::vector<std::function<Complex(const RVec&)>> lambda, std::vector<std::vector<long>> e);
/// outer o inner: exponents outer.e * inner.e, lambda_k = mu_k prod_i lambda_i^{e'_ki}.
MonomialMap compose(const MonomialMap& outer, const MonomialMap& inner);

struct Report {
  Report() = default;
  explicit Report(std::string n) : name(std::move(n)) {}
  std::string name;
  long checked = 0;
  double max_error = 0.0;
  long failed = 0;
  std::vector<std::string> failures;  // the first few witnesses
  bool ok() const { return failed == 0; }
  void record(double err, double tol, const std::string& what);
};

Report hopf_verify(int m, int samples, double tol, std::uint64_t seed);
/// Catalog cases: "trivial", "disk-zero", "double", "pair".
Report circle_split_verify(const std::string& case_id, int samples, double tol, std::uint64_t seed);
std::vector<std::string> circle_split_catalog();
Report s1_action_verify(int n, int samples, double tol, std::uint64_t seed);
/// Catalog cases: "trivial", "point-zero", "line-in-plane".
Report strict_cartesian_verify(const std::string& case_id, int samples, double tol, std::uint64_t seed);
std::vector<std::string> strict_cartesian_catalog();
/// Blow-up order independence for a three-section chart over C^2.
Report order_independence_verify(int samples, double tol, std::uint64_t seed);
/// Monomial-map functoriality on random integer matrices.
Report functoriality_verify(int samples, double tol, std::uint64_t seed);
/// The section s(x, y, z) = (x - 1, 0) on the unit sphere S^2.
Report sphere_example_verify(int samples, double tol, std::uint64_t seed);

}  // namespace fmlog::kn
