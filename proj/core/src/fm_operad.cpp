#include "fmlog/fm_operad.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "fmlog/errors.hpp"

namespace fmlog {

const Vec& DirectionClass::at(int label) const {
  const auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) throw_invalid("direction class has no label " + std::to_string(label));
  return vectors_[static_cast<std::size_t>(it - labels_.begin())];
}

DirectionClass DirectionClass::relabeled(const std::map<int, int>& relabel) const {
  std::vector<int> labels;
  for (int l : labels_) {
    const auto it = relabel.find(l);
    if (it == relabel.end()) throw_invalid("relabel map misses label " + std::to_string(l));
    labels.push_back(it->second);
  }
  // Relabeling is a bijection, so the canonical form only needs re-sorting.
  return direction_canonical(dim_, labels, vectors_);
}

DirectionClass direction_canonical(int dim, const std::vector<int>& labels, const std::vector<Vec>& vectors) {
  if (labels.size() != vectors.size()) throw_invalid("direction: labels and vectors differ in length");
  if (labels.size() < 2) throw_invalid("direction: need at least two vectors");
  std::vector<std::size_t> order(labels.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
  DirectionClass out;
  out.dim_ = dim;
  Vec mean(dim, 0);
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != dim) throw_invalid("direction: vector of wrong dimension");
    for (int k = 0; k < dim; ++k) mean[k] += v[k];
  }
  const Rational count(static_cast<long>(vectors.size()));
  for (auto& m : mean) m /= count;
  Rational norm = 0;
  for (std::size_t idx : order) {
    if (!out.labels_.empty() && out.labels_.back() == labels[idx]) throw_invalid("direction: repeated label");
    out.labels_.push_back(labels[idx]);
    out.vectors_.push_back(vectors[idx] - mean);
    norm += l1_norm(out.vectors_.back());
  }
  if (norm == 0) throw DegenerateDirection("direction of an all-equal tuple is undefined");
  for (auto& v : out.vectors_)
    for (auto& c : v) c /= norm;
  return out;
}

DirectionClass g_map(const std::map<int, int>& q, const DirectionClass& w) {
  std::vector<int> labels;
  std::vector<Vec> vectors;
  std::vector<int> hit;
  for (const auto& [i, j] : q) {
    labels.push_back(i);
    vectors.push_back(w.at(j));
    hit.push_back(j);
  }
  std::sort(hit.begin(), hit.end());
  hit.erase(std::unique(hit.begin(), hit.end()), hit.end());
  if (hit != w.labels()) throw_invalid("g_map: map is not onto the labels of w");
  try {
    return direction_canonical(w.dim(), labels, vectors);
  } catch (const DegenerateDirection&) {
    throw_internal("g_map: surjection produced a zero direction");
  }
}

namespace {

void normalize(FMNode& node, int dim) {
  if (node.is_leaf()) {
    if (!node.children.empty() || !node.positions.empty()) throw_invalid("leaf carries configuration data");
    node.mask = bit(node.leaf);
    return;
  }
  if (node.leaf < 0) throw_invalid("negative leaf label");
  if (node.children.size() < 2) throw_invalid("internal vertex with fewer than two children");
  if (node.positions.size() != node.children.size()) throw_invalid("positions do not match children");
  node.mask = 0;
  for (auto& c : node.children) {
    normalize(c, dim);
    if (node.mask & c.mask) throw_invalid("leaf label repeated");
    node.mask |= c.mask;
  }
  Vec sum(dim, 0);
  Rational norm = 0;
  for (const auto& p : node.positions) {
    if (static_cast<int>(p.size()) != dim) throw_invalid("position of wrong dimension");
    for (int k = 0; k < dim; ++k) sum[k] += p[k];
    norm += l1_norm(p);
  }
  if (!is_zero(sum)) throw_invalid("vertex configuration is not centered");
  if (norm != 1) throw_invalid("vertex configuration is not L1-normalized");
  std::vector<std::size_t> order(node.children.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return __builtin_ctz(node.children[a].mask) < __builtin_ctz(node.children[b].mask);
  });
  std::vector<FMNode> children;
  std::vector<Vec> positions;
  for (std::size_t idx : order) {
    children.push_back(std::move(node.children[idx]));
    positions.push_back(std::move(node.positions[idx]));
  }
  node.children = std::move(children);
  node.positions = std::move(positions);
  for (std::size_t a = 0; a < node.positions.size(); ++a)
    for (std::size_t b = a + 1; b < node.positions.size(); ++b)
      if (node.positions[a] == node.positions[b]) throw_invalid("coincident child positions");
}

}  // namespace

FMPoint::FMPoint(int dim, FMNode root) : dim_(dim), arity_(0), root_(std::move(root)) {
  if (dim < 1) throw_invalid("ambient dimension must be positive");
  normalize(root_, dim_);
  arity_ = popcount(root_.mask);
  if (root_.mask != full_mask(arity_)) throw_invalid("leaves are not exactly 1..n");
}

FMPoint FMPoint::unit(int dim) { return FMPoint(dim, FMNode{1, {}, {}, 0}); }

FMPoint point_from_config(int dim, const std::vector<Vec>& points) {
  const int n = static_cast<int>(points.size());
  if (n == 0) throw_invalid("empty configuration");
  if (n == 1) return FMPoint::unit(dim);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (points[a] == points[b]) throw_invalid("coincident points in configuration");
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  const DirectionClass dir = direction_canonical(dim, labels, points);
  FMNode root;
  for (int i = 1; i <= n; ++i) {
    root.children.push_back(FMNode{i, {}, {}, 0});
    root.positions.push_back(dir.at(i));
  }
  return FMPoint(dim, std::move(root));
}

DirectionClass coordinates(const FMPoint& x, Mask subset) {
  if (popcount(subset) < 2) throw_invalid("coordinates: subset needs at least two elements");
  if (!contains(x.root().mask, subset)) throw_invalid("coordinates: subset outside the leaf set");
  const FMNode* node = &x.root();
  while (true) {
    const FMNode* next = nullptr;
    for (const auto& c : node->children)
      if (contains(c.mask, subset)) next = &c;
    if (next == nullptr) break;
    node = next;
  }
  std::map<int, int> q;
  std::vector<int> child_labels;
  std::vector<Vec> child_positions;
  for (std::size_t c = 0; c < node->children.size(); ++c) {
    const Mask hit = node->children[c].mask & subset;
    if (hit == 0) continue;
    const int label = static_cast<int>(c) + 1;
    child_labels.push_back(label);
    child_positions.push_back(node->positions[c]);
    for (int i : labels_of(hit)) q[i] = label;
  }
  return g_map(q, direction_canonical(x.dim(), child_labels, child_positions));
}

namespace {

FMNode graft(const FMNode& node, const Surjection& q, const std::vector<FMPoint>& ys) {
  if (node.is_leaf()) {
    const std::vector<int> fiber = q.fiber(node.leaf);
    std::function<FMNode(const FMNode&)> relabel = [&](const FMNode& n) {
      FMNode out;
      if (n.is_leaf()) {
        out.leaf = fiber[n.leaf - 1];
        return out;
      }
      out.positions = n.positions;
      for (const auto& c : n.children) out.children.push_back(relabel(c));
      return out;
    };
    return relabel(ys[node.leaf - 1].root());
  }
  FMNode out;
  out.positions = node.positions;
  for (const auto& c : node.children) out.children.push_back(graft(c, q, ys));
  return out;
}

}  // namespace

FMPoint compose(const Surjection& q, const FMPoint& x, const std::vector<FMPoint>& ys) {
  if (q.target_size() != x.arity()) throw_invalid("compose: outer arity does not match the surjection");
  if (static_cast<int>(ys.size()) != x.arity()) throw_invalid("compose: wrong number of inputs");
  for (int r = 1; r <= x.arity(); ++r) {
    if (ys[r - 1].dim() != x.dim()) throw_invalid("compose: dimension mismatch");
    if (ys[r - 1].arity() != q.fiber_size(r)) throw_invalid("compose: input arity does not match fiber size");
  }
  return FMPoint(x.dim(), graft(x.root(), q, ys));
}

Surjection circ_surjection(int n, int m, int i) {
  if (i < 1 || i > n || m < 1) throw_invalid("circ_i: slot out of range");
  std::vector<int> im;
  for (int j = 1; j <= n + m - 1; ++j) {
    if (j < i) im.push_back(j);
    else if (j < i + m) im.push_back(i);
    else im.push_back(j - m + 1);
  }
  return Surjection(std::move(im), n);
}

FMPoint circ_i(const FMPoint& x, const FMPoint& y, int i) {
  std::vector<FMPoint> ys(x.arity(), FMPoint::unit(x.dim()));
  if (i < 1 || i > x.arity()) throw_invalid("circ_i: slot out of range");
  ys[i - 1] = y;
  return compose(circ_surjection(x.arity(), y.arity(), i), x, ys);
}

namespace {

FMNode relabel_leaves(const FMNode& node, const Permutation& sigma) {
  FMNode out;
  if (node.is_leaf()) {
    out.leaf = sigma(node.leaf);
    return out;
  }
  out.positions = node.positions;
  for (const auto& c : node.children) out.children.push_back(relabel_leaves(c, sigma));
  return out;
}

FMNode rotate_node(const FMNode& node, const Matrix& r) {
  FMNode out;
  out.leaf = node.leaf;
  if (node.is_leaf()) return out;
  Rational norm = 0;
  for (const auto& p : node.positions) {
    out.positions.push_back(apply(r, p));
    norm += l1_norm(out.positions.back());
  }
  for (auto& p : out.positions)
    for (auto& c : p) c /= norm;
  for (const auto& c : node.children) out.children.push_back(rotate_node(c, r));
  return out;
}

}  // namespace

FMPoint sigma_act(const Permutation& sigma, const FMPoint& x) {
  if (sigma.size() != x.arity()) throw_invalid("sigma_act: permutation size differs from arity");
  return FMPoint(x.dim(), relabel_leaves(x.root(), sigma));
}

FMPoint rotate(const Matrix& r, const FMPoint& x) {
  if (static_cast<int>(r.size()) != x.dim() || !is_orthogonal(r)) throw_invalid("rotate: matrix is not orthogonal");
  return FMPoint(x.dim(), rotate_node(x.root(), r));
}

std::vector<Mask> multi_subsets(int n) {
  std::vector<Mask> out;
  for (Mask m = 1; m <= full_mask(n); ++m)
    if (popcount(m) >= 2) out.push_back(m);
  return out;
}

bool point_eq(const FMPoint& x, const FMPoint& y) {
  if (x.dim() != y.dim() || x.arity() != y.arity()) throw_invalid("point_eq: points of different type");
  for (Mask s : multi_subsets(x.arity()))
    if (!(coordinates(x, s) == coordinates(y, s))) return false;
  return true;
}

}  // namespace fmlog
