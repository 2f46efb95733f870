#pragma once

// Field-valued points of T_{d,n} as simple screens: for every I with |I| >= 2
// a nonzero covector on the difference module F_I, up to scalar.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fmlog/fm_operad.hpp"
#include "fmlog/rational.hpp"
#include "fmlog/surjection.hpp"

namespace fmlog {

/// coef * t^k_{ij}
struct Generator {
  Rational coef;
  int i;
  int j;
  int k;
};

/// F_I of rank d(|I|-1) with basis t^k_{i,r}, r = min I, i in I \ {r}.
/// Basis index of t^k_{i,r} is (position of i in I \ {r}) * d + (k - 1).
class DiffModule {
 public:
  DiffModule(Mask subset, int d);
  Mask subset() const { return subset_; }
  int d() const { return d_; }
  int root() const { return root_; }
  int rank() const { return d_ * (popcount(subset_) - 1); }
  /// Basis index of t^k_{i,r}; -1 for i == r.
  int index(int i, int k) const;
  /// Coordinates of a formal combination of generators t^k_{ij}.
  Vec reduce(const std::vector<Generator>& combination) const;

 private:
  Mask subset_;
  int d_;
  int root_;
  std::vector<int> position_;  // label -> position among non-root labels
};

/// F_phi: F_I -> F_J for phi a map of label sets (I = keys of phi).
Vec pull(const std::map<int, int>& phi, Mask target, int d, const Vec& v);
/// The covector c o F_phi on F_I, for c a covector on F_J.
Vec pull_covector(const std::map<int, int>& phi, Mask target, int d, const Vec& c);

/// Scales so that the first nonzero coefficient is 1. Throws on zero.
Vec canonical_covector(Vec c);

class SimpleScreen {
 public:
  /// The empty screen of arity n <= 1.
  SimpleScreen(int n, int d);
  /// Every I subseteq {1..n} with |I| >= 2 must be present and nonzero.
  SimpleScreen(int n, int d, std::map<Mask, Vec> phi);

  int arity() const { return n_; }
  int d() const { return d_; }
  const Vec& phi(Mask subset) const;
  const std::map<Mask, Vec>& covectors() const { return phi_; }
  bool operator==(const SimpleScreen&) const = default;

 private:
  int n_;
  int d_;
  std::map<Mask, Vec> phi_;
};

SimpleScreen screen_from_config(int d, const std::vector<Vec>& points);

/// The scalar lambda with phi_J o F_{I in J} = lambda phi_I, if it exists.
std::optional<Rational> compatibility_scalar(const SimpleScreen& s, Mask inner, Mask outer);

struct ScreenValidation {
  bool valid = true;
  std::optional<std::pair<Mask, Mask>> witness;
  std::map<std::pair<Mask, Mask>, Rational> lambda;  // (I, J), I strictly inside J
};
ScreenValidation screen_validate(const SimpleScreen& s);

/// The I-vanishing property. Throws InvalidInput if s is not a valid screen
/// on a pair it needs.
bool vanishing_satisfied(const SimpleScreen& s, Mask subset);

/// rho_K = psi^r_K if K inside q^{-1}(r), phi_{q(K)} o F_q otherwise.
SimpleScreen screen_compose(const Surjection& q, const SimpleScreen& outer, const std::vector<SimpleScreen>& inner);

struct ScreenDecomposition {
  SimpleScreen outer;
  std::vector<SimpleScreen> inner;
};
/// Inverse of screen_compose; requires the q^{-1}(r)-vanishing property for
/// every r (InvalidInput otherwise).
ScreenDecomposition screen_decompose(const Surjection& q, const SimpleScreen& s);

/// phi'_I = phi_{sigma^{-1}(I)} o sigma^{-1}.
SimpleScreen screen_sigma(const Permutation& sigma, const SimpleScreen& s);

/// Covector t^k_{i,r} -> (u_i - u_r)^k of a direction class on labels I.
Vec covector_from_direction(const DirectionClass& u);
/// Centered tuple of the differences recorded by a covector (sign is not
/// determined by a projective covector).
DirectionClass direction_from_covector(Mask subset, int d, const Vec& c);

}  // namespace fmlog
