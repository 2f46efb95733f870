#include "fmlog/nested.hpp"

#include <algorithm>

#include "fmlog/errors.hpp"

namespace fmlog {

SubsetIndex::SubsetIndex(int n, Mask elements) : n_(n), mask_(elements) {
  if (n < 1 || n > 31) throw_invalid("ambient arity out of range");
  if ((elements & ~full_mask(n)) != 0) throw_invalid("subset element outside 1.." + std::to_string(n));
  if (popcount(elements) < 2) throw_invalid("subset index needs at least two elements");
}

SubsetIndex::SubsetIndex(int n, const std::vector<int>& elements) : SubsetIndex(n, mask_of(elements)) {}

bool lex_less(Mask a, Mask b) { return labels_of(a) < labels_of(b); }

NestedCollection::NestedCollection(int n, std::vector<SubsetIndex> members) : n_(n), members_(std::move(members)) {
  for (const auto& m : members_) {
    if (m.ambient() != n) throw_invalid("nested collection members over different ambient n");
    if (!m.is_proper()) throw_invalid("nested collection member equals [n]");
  }
  std::sort(members_.begin(), members_.end(),
            [](const SubsetIndex& a, const SubsetIndex& b) { return lex_less(a.mask(), b.mask()); });
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw_invalid("duplicate member in nested collection");
  if (!is_nested(members_)) throw_invalid("collection is not nested");
}

NestedCollection NestedCollection::from_masks(int n, const std::vector<Mask>& members) {
  std::vector<SubsetIndex> idx;
  idx.reserve(members.size());
  for (Mask m : members) idx.emplace_back(n, m);
  return NestedCollection(n, std::move(idx));
}

std::vector<Mask> NestedCollection::masks() const {
  std::vector<Mask> out;
  for (const auto& m : members_) out.push_back(m.mask());
  return out;
}

bool NestedCollection::contains(Mask m) const {
  return std::any_of(members_.begin(), members_.end(), [m](const SubsetIndex& s) { return s.mask() == m; });
}

bool NestedCollection::operator<(const NestedCollection& other) const {
  if (members_.size() != other.members_.size()) return members_.size() < other.members_.size();
  for (std::size_t i = 0; i < members_.size(); ++i) {
    const Mask a = members_[i].mask(), b = other.members_[i].mask();
    if (a != b) return lex_less(a, b);
  }
  return false;
}

bool is_nested_masks(const std::vector<Mask>& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      const Mask a = c[i], b = c[j];
      if (!(contains(a, b) || contains(b, a) || (a & b) == 0)) return false;
    }
  return true;
}

bool is_nested(const std::vector<SubsetIndex>& collection) {
  if (!collection.empty()) {
    const int n = collection.front().ambient();
    for (const auto& s : collection)
      if (s.ambient() != n) throw_invalid("is_nested: mixed ambient n");
  }
  std::vector<Mask> masks;
  for (const auto& s : collection) masks.push_back(s.mask());
  return is_nested_masks(masks);
}

Mask TreeNode::leaf_mask() const {
  if (is_leaf()) return bit(leaf);
  Mask m = 0;
  for (const auto& c : children) m |= c.leaf_mask();
  return m;
}

void canonicalize(TreeNode& node) {
  if (node.is_leaf()) return;
  for (auto& c : node.children) canonicalize(c);
  std::sort(node.children.begin(), node.children.end(), [](const TreeNode& a, const TreeNode& b) {
    return __builtin_ctz(a.leaf_mask()) < __builtin_ctz(b.leaf_mask());
  });
}

namespace {

void check_stable(const TreeNode& node) {
  if (node.is_leaf()) {
    if (!node.children.empty()) throw_invalid("leaf with children");
    return;
  }
  if (node.leaf < 0) throw_invalid("negative leaf label");
  if (node.children.size() < 2) throw_invalid("internal vertex with fewer than two children");
  Mask seen = 0;
  for (const auto& c : node.children) {
    check_stable(c);
    const Mask m = c.leaf_mask();
    if (seen & m) throw_invalid("leaf label repeated");
    seen |= m;
  }
}

}  // namespace

StableTree::StableTree(int n, TreeNode root) : n_(n), root_(std::move(root)) {
  if (n < 1 || n > 31) throw_invalid("tree arity out of range");
  check_stable(root_);
  if (root_.leaf_mask() != full_mask(n)) throw_invalid("tree leaves are not exactly 1..n");
  canonicalize(root_);
}

StableTree StableTree::corolla(int n) {
  TreeNode root;
  if (n == 1) {
    root.leaf = 1;
  } else {
    for (int i = 1; i <= n; ++i) root.children.push_back(TreeNode{i, {}});
  }
  return StableTree(n, std::move(root));
}

namespace {

// Trees on leaf set `s`; every internal vertex is a partition of its leaf set
// into >= 2 blocks, singleton blocks being leaves.
std::vector<TreeNode> trees_on(Mask s);

void partitions_rec(Mask rest, std::vector<Mask>& blocks, std::vector<std::vector<Mask>>& out) {
  if (rest == 0) {
    out.push_back(blocks);
    return;
  }
  // The lowest remaining label opens a new block; choose the rest of it.
  const Mask low = rest & (~rest + 1);
  const Mask others = rest & ~low;
  for (Mask sub = others;; sub = (sub - 1) & others) {
    blocks.push_back(low | sub);
    partitions_rec(rest & ~(low | sub), blocks, out);
    blocks.pop_back();
    if (sub == 0) break;
  }
}

std::vector<TreeNode> trees_on(Mask s) {
  if (popcount(s) == 1) return {TreeNode{__builtin_ctz(s) + 1, {}}};
  std::vector<std::vector<Mask>> partitions;
  std::vector<Mask> blocks;
  partitions_rec(s, blocks, partitions);
  std::vector<TreeNode> out;
  for (const auto& p : partitions) {
    if (p.size() < 2) continue;
    // Cartesian product of subtree choices for each block.
    std::vector<TreeNode> partial{TreeNode{}};
    for (Mask b : p) {
      const auto subs = trees_on(b);
      std::vector<TreeNode> next;
      next.reserve(partial.size() * subs.size());
      for (const auto& base : partial)
        for (const auto& sub : subs) {
          TreeNode t = base;
          t.children.push_back(sub);
          next.push_back(std::move(t));
        }
      partial = std::move(next);
    }
    for (auto& t : partial) out.push_back(std::move(t));
  }
  return out;
}

void collect_internal(const TreeNode& node, bool is_root, std::vector<Mask>& out) {
  if (node.is_leaf()) return;
  if (!is_root) out.push_back(node.leaf_mask());
  for (const auto& c : node.children) collect_internal(c, false, out);
}

}  // namespace

std::vector<StableTree> enumerate_stable_trees(int n, const EnumerationOptions& opts) {
  if (n < 1) throw_invalid("enumerate_stable_trees: n must be positive");
  if (n > opts.arity_bound)
    throw ResourceLimit("enumerate_stable_trees: n=" + std::to_string(n) + " exceeds bound " +
                        std::to_string(opts.arity_bound));
  if (n > 12) throw ResourceLimit("enumerate_stable_trees: n above hard limit 12");
  std::vector<std::pair<NestedCollection, StableTree>> keyed;
  for (auto& root : trees_on(full_mask(n))) {
    StableTree t(n, std::move(root));
    keyed.emplace_back(tree_to_nested(t), std::move(t));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<StableTree> out;
  out.reserve(keyed.size());
  for (auto& [c, t] : keyed) out.push_back(std::move(t));
  return out;
}

NestedCollection tree_to_nested(const StableTree& t) {
  std::vector<Mask> members;
  collect_internal(t.root(), true, members);
  return NestedCollection::from_masks(t.arity(), members);
}

StableTree nested_to_tree(const NestedCollection& c) {
  const int n = c.ambient();
  if (n == 1) return StableTree::corolla(1);
  std::vector<Mask> vertices = c.masks();
  vertices.push_back(full_mask(n));
  // Parent of each vertex: the smallest strict superset.
  std::sort(vertices.begin(), vertices.end(), [](Mask a, Mask b) { return popcount(a) < popcount(b); });
  const std::size_t k = vertices.size();
  std::vector<TreeNode> nodes(k);
  std::vector<Mask> covered(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    // Children already built (smaller sets) were attached below.
    for (int l : labels_of(vertices[i] & ~covered[i])) nodes[i].children.push_back(TreeNode{l, {}});
    if (i + 1 == k) break;
    std::size_t parent = k;
    for (std::size_t j = i + 1; j < k; ++j)
      if (contains(vertices[j], vertices[i]) && vertices[j] != vertices[i]) {
        parent = j;
        break;
      }
    if (parent == k) throw_internal("nested_to_tree: vertex without parent");
    covered[parent] |= vertices[i];
    nodes[parent].children.push_back(std::move(nodes[i]));
  }
  return StableTree(n, std::move(nodes[k - 1]));
}

bool strata_closure_leq(const NestedCollection& c1, const NestedCollection& c2) {
  if (c1.ambient() != c2.ambient()) throw_invalid("strata_closure_leq: different ambient n");
  for (const auto& m : c2.members())
    if (!c1.contains(m.mask())) return false;
  return true;
}

std::vector<Mask> proper_multi_subsets(int n) {
  std::vector<Mask> out;
  for (Mask m = 1; m < full_mask(n); ++m)
    if (popcount(m) >= 2) out.push_back(m);
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return lex_less(a, b);
  });
  return out;
}

}  // namespace fmlog
