#include "fmlog/surjection.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fmlog/errors.hpp"

namespace fmlog {

std::vector<int> labels_of(Mask m) {
  std::vector<int> out;
  for (int i = 1; m != 0; ++i, m >>= 1)
    if (m & 1u) out.push_back(i);
  return out;
}

Mask mask_of(const std::vector<int>& labels) {
  Mask m = 0;
  for (int l : labels) {
    if (l < 1 || l > 32) throw_invalid("label " + std::to_string(l) + " out of range 1..32");
    m |= bit(l);
  }
  return m;
}

std::string subset_key(Mask m) {
  std::string out;
  for (int l : labels_of(m)) {
    if (!out.empty()) out += ',';
    out += std::to_string(l);
  }
  return out;
}

Mask parse_subset_key(const std::string& key) {
  std::vector<int> labels;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      labels.push_back(std::stoi(part, &used));
      if (used != part.size()) throw InvalidInput("trailing characters");
    } catch (const std::exception&) {
      throw_invalid("malformed subset key '" + key + "'");
    }
  }
  if (labels.empty()) throw_invalid("empty subset key");
  return mask_of(labels);
}

Mask compress(Mask m, Mask within) {
  Mask out = 0;
  int pos = 0;
  for (int b = 0; b < 32; ++b) {
    const Mask bb = Mask{1} << b;
    if (!(within & bb)) continue;
    if (m & bb) out |= Mask{1} << pos;
    ++pos;
  }
  return out;
}

Mask expand(Mask local, Mask within) {
  Mask out = 0;
  int pos = 0;
  for (int b = 0; b < 32; ++b) {
    const Mask bb = Mask{1} << b;
    if (!(within & bb)) continue;
    if (local & (Mask{1} << pos)) out |= bb;
    ++pos;
  }
  return out;
}

Surjection::Surjection(std::vector<int> images, int target_size)
    : images_(std::move(images)), target_size_(target_size), fibers_(target_size, 0) {
  if (target_size < 1 || images_.empty()) throw_invalid("surjection needs nonempty source and target");
  if (images_.size() > 31) throw_invalid("surjection source larger than 31");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const int r = images_[i];
    if (r < 1 || r > target_size) throw_invalid("surjection image " + std::to_string(r) + " out of range");
    fibers_[r - 1] |= bit(static_cast<int>(i) + 1);
  }
  for (int r = 1; r <= target_size; ++r)
    if (fibers_[r - 1] == 0) throw_invalid("map is not surjective: " + std::to_string(r) + " has empty fiber");
}

Surjection Surjection::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  return Surjection(std::move(im), n);
}

Surjection Surjection::parse(const std::string& text) {
  std::vector<int> im;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      im.push_back(std::stoi(part, &used));
      if (used != part.size()) throw InvalidInput("trailing");
    } catch (const std::exception&) {
      throw_invalid("malformed surjection '" + text + "'");
    }
  }
  if (im.empty()) throw_invalid("empty surjection");
  return Surjection(im, *std::max_element(im.begin(), im.end()));
}

int Surjection::local_index(int i) const {
  const Mask f = fibers_[images_[i - 1] - 1];
  return popcount(f & (bit(i) - 1)) + 1;
}

Mask Surjection::image(Mask source) const {
  Mask out = 0;
  for (int i : labels_of(source)) out |= bit(images_[i - 1]);
  return out;
}

Mask Surjection::preimage(Mask target) const {
  Mask out = 0;
  for (int r : labels_of(target)) out |= fibers_[r - 1];
  return out;
}

Surjection Surjection::after(const Surjection& inner) const {
  if (inner.target_size() != source_size()) throw_invalid("surjections are not composable");
  std::vector<int> im(inner.source_size());
  for (int i = 1; i <= inner.source_size(); ++i) im[i - 1] = (*this)(inner(i));
  return Surjection(std::move(im), target_size_);
}

Surjection Surjection::restrict_over(const Surjection& outer, int r) const {
  const Mask target = outer.fiber_mask(r);
  const Mask source = preimage(target);
  std::vector<int> im;
  for (int i : labels_of(source)) im.push_back(popcount(target & (bit(images_[i - 1]) - 1)) + 1);
  return Surjection(std::move(im), popcount(target));
}

std::string Surjection::to_string() const {
  std::string out;
  for (int r : images_) {
    if (!out.empty()) out += ',';
    out += std::to_string(r);
  }
  return out;
}

namespace {

void surjections_rec(int m, int n, std::vector<int>& cur, std::vector<Surjection>& out) {
  if (static_cast<int>(cur.size()) == m) {
    Mask hit = 0;
    for (int r : cur) hit |= bit(r);
    if (hit == full_mask(n)) out.emplace_back(cur, n);
    return;
  }
  for (int r = 1; r <= n; ++r) {
    cur.push_back(r);
    surjections_rec(m, n, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Surjection> all_surjections(int m, int n) {
  std::vector<Surjection> out;
  if (m < n || n < 1) return out;
  std::vector<int> cur;
  surjections_rec(m, n, cur, out);
  return out;
}

std::vector<Surjection> all_surjections(int m) {
  std::vector<Surjection> out;
  for (int n = 1; n <= m; ++n) {
    auto part = all_surjections(m, n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  Mask seen = 0;
  const int n = size();
  for (int v : images_) {
    if (v < 1 || v > n || (seen & bit(v))) throw_invalid("not a permutation");
    seen |= bit(v);
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= size(); ++i) inv[images_[i - 1] - 1] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::after(const Permutation& other) const {
  if (other.size() != size()) throw_invalid("permutation sizes differ");
  std::vector<int> im(images_.size());
  for (int i = 1; i <= size(); ++i) im[i - 1] = (*this)(other(i));
  return Permutation(std::move(im));
}

Mask Permutation::apply(Mask m) const {
  Mask out = 0;
  for (int i : labels_of(m)) out |= bit(images_[i - 1]);
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

std::vector<Permutation> adjacent_transpositions(int n) {
  std::vector<Permutation> out;
  for (int i = 1; i < n; ++i) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    std::swap(im[i - 1], im[i]);
    out.emplace_back(std::move(im));
  }
  return out;
}

}  // namespace fmlog
