#pragma once

// Finite combinatorics of the boundary stratification: subsets of [n] with at
// least two elements, nested collections of proper such subsets, and stable
// rooted trees with labeled leaves.

#include <vector>

#include "fmlog/surjection.hpp"

namespace fmlog {

inline constexpr int kDefaultArityBound = 8;

/// A subset of {1..n} with 2 <= |elements| <= n.
class SubsetIndex {
 public:
  SubsetIndex(int n, Mask elements);
  SubsetIndex(int n, const std::vector<int>& elements);
  int ambient() const { return n_; }
  Mask mask() const { return mask_; }
  int size() const { return popcount(mask_); }
  std::vector<int> elements() const { return labels_of(mask_); }
  bool is_proper() const { return mask_ != full_mask(n_); }
  auto operator<=>(const SubsetIndex&) const = default;

 private:
  int n_;
  Mask mask_;
};

/// Lexicographic comparison of sorted element lists.
bool lex_less(Mask a, Mask b);

/// Members sorted lexicographically by element list; all proper, |I| >= 2.
class NestedCollection {
 public:
  /// Throws InvalidInput on mixed ambient n, non-proper members or non-nested input.
  NestedCollection(int n, std::vector<SubsetIndex> members);
  static NestedCollection from_masks(int n, const std::vector<Mask>& members);

  int ambient() const { return n_; }
  const std::vector<SubsetIndex>& members() const { return members_; }
  std::vector<Mask> masks() const;
  std::size_t size() const { return members_.size(); }
  bool contains(Mask m) const;
  bool operator==(const NestedCollection&) const = default;
  /// Size first, then lexicographic member order.
  bool operator<(const NestedCollection& other) const;

 private:
  int n_;
  std::vector<SubsetIndex> members_;
};

/// Inclusion-or-disjointness for every pair. Throws InvalidInput on mixed n.
bool is_nested(const std::vector<SubsetIndex>& collection);
bool is_nested_masks(const std::vector<Mask>& collection);

/// Rooted tree with leaves labeled 1..n. Children sorted by smallest leaf.
struct TreeNode {
  int leaf = 0;  // > 0 for a leaf
  std::vector<TreeNode> children;

  bool is_leaf() const { return leaf > 0; }
  Mask leaf_mask() const;
  bool operator==(const TreeNode&) const = default;
};

class StableTree {
 public:
  /// Validates stability and that leaves are exactly {1..n}; sorts children.
  StableTree(int n, TreeNode root);
  static StableTree corolla(int n);

  int arity() const { return n_; }
  const TreeNode& root() const { return root_; }
  bool operator==(const StableTree&) const = default;

 private:
  int n_;
  TreeNode root_;
};

/// Sorts children by smallest leaf, recursively.
void canonicalize(TreeNode& node);

struct EnumerationOptions {
  int arity_bound = kDefaultArityBound;
};

/// One tree per isomorphism class of labeled stable trees, ordered by the
/// corresponding nested collection (size, then lexicographic members).
std::vector<StableTree> enumerate_stable_trees(int n, const EnumerationOptions& opts = {});

NestedCollection tree_to_nested(const StableTree& t);
StableTree nested_to_tree(const NestedCollection& c);

/// True iff c2 is contained in c1: the stratum of c1 lies in the closure of
/// the stratum of c2.
bool strata_closure_leq(const NestedCollection& c1, const NestedCollection& c2);

/// Proper subsets of [n] with at least two elements, by size then lex.
std::vector<Mask> proper_multi_subsets(int n);

}  // namespace fmlog
