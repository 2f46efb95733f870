#pragma once

// Exact model of the Kontsevich spaces K_{D,n}: points in stable-tree normal
// form, the sphere coordinates x_I, operad composition, the symmetric group
// action and the orthogonal action.

#include <map>
#include <vector>

#include "fmlog/rational.hpp"
#include "fmlog/surjection.hpp"

namespace fmlog {

/// A point of S^{D(|I|-1)-1}: a centered tuple of D-vectors indexed by the
/// labels of I, modulo positive scaling. Stored in L1-normalized form, so two
/// classes are equal iff their stored tuples are equal.
class DirectionClass {
 public:
  int dim() const { return dim_; }
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<Vec>& vectors() const { return vectors_; }
  const Vec& at(int label) const;
  bool operator==(const DirectionClass&) const = default;

  /// Relabels through `relabel` (label -> new label) and re-sorts.
  DirectionClass relabeled(const std::map<int, int>& relabel) const;

 private:
  friend DirectionClass direction_canonical(int, const std::vector<int>&, const std::vector<Vec>&);
  int dim_ = 0;
  std::vector<int> labels_;
  std::vector<Vec> vectors_;
};

/// Subtracts the mean, divides by the L1 norm. Labels must be distinct.
/// Throws DegenerateDirection when all vectors are equal.
DirectionClass direction_canonical(int dim, const std::vector<int>& labels, const std::vector<Vec>& vectors);

/// The map of normal spheres induced by a surjection q: I ->> J of label sets,
/// u_i = w_{q(i)} recentred. `q` maps every label of I to a label of w.
DirectionClass g_map(const std::map<int, int>& q, const DirectionClass& w);

/// Vertex of a point's tree. Internal vertices carry one position per child.
struct FMNode {
  int leaf = 0;
  std::vector<FMNode> children;
  std::vector<Vec> positions;
  Mask mask = 0;  // leaf set, maintained by normalize()

  bool is_leaf() const { return leaf > 0; }
  bool operator==(const FMNode& o) const {
    return leaf == o.leaf && children == o.children && positions == o.positions;
  }
};

/// A point of K_{D,n} in normal form: a stable tree with leaves 1..n whose
/// internal vertices hold centered, L1-normalized, pairwise distinct child
/// positions. The unit (n = 1) is a single leaf.
class FMPoint {
 public:
  /// Validates and normalizes (sorts children, recomputes leaf masks).
  FMPoint(int dim, FMNode root);
  static FMPoint unit(int dim);

  int dim() const { return dim_; }
  int arity() const { return arity_; }
  const FMNode& root() const { return root_; }
  /// Structural equality of normal forms.
  bool operator==(const FMPoint& o) const { return dim_ == o.dim_ && arity_ == o.arity_ && root_ == o.root_; }

 private:
  int dim_;
  int arity_;
  FMNode root_;
};

/// Corolla point from n >= 2 pairwise distinct points of Q^D, modulo
/// translation and positive scaling. n == 1 yields the unit.
FMPoint point_from_config(int dim, const std::vector<Vec>& points);

/// x_I for I a subset of the leaf set with |I| >= 2.
DirectionClass coordinates(const FMPoint& x, Mask subset);

/// gamma(x; ys) for q: {1..m} ->> {1..n}; ys[r-1] has arity |q^{-1}(r)|.
FMPoint compose(const Surjection& q, const FMPoint& x, const std::vector<FMPoint>& ys);

/// Partial composition: y inserted at leaf i of x (labels i..i+|y|-1).
FMPoint circ_i(const FMPoint& x, const FMPoint& y, int i);
/// The surjection {1..n+m-1} ->> {1..n} collapsing block i..i+m-1 onto i.
Surjection circ_surjection(int n, int m, int i);

/// Leaf relabeling i -> sigma(i).
FMPoint sigma_act(const Permutation& sigma, const FMPoint& x);

/// Applies an orthogonal matrix to every vertex configuration. Throws
/// InvalidInput unless R^T R = 1 exactly.
FMPoint rotate(const Matrix& r, const FMPoint& x);

/// Equality through the coordinate embedding: x_I == y_I for all I.
bool point_eq(const FMPoint& x, const FMPoint& y);

/// All I subseteq {1..n} with |I| >= 2 (including {1..n}).
std::vector<Mask> multi_subsets(int n);

}  // namespace fmlog
