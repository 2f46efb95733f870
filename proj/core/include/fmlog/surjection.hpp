#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fmlog {

using Mask = std::uint32_t;

inline int popcount(Mask m) { return __builtin_popcount(m); }
inline Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1); }
inline Mask bit(int label) { return Mask{1} << (label - 1); }
inline bool contains(Mask outer, Mask inner) { return (outer & inner) == inner; }

/// Sorted 1-based labels of a mask.
std::vector<int> labels_of(Mask m);
Mask mask_of(const std::vector<int>& labels);
/// "1,2,4"
std::string subset_key(Mask m);
Mask parse_subset_key(const std::string& key);

/// Compresses the bits of `m` lying inside `within` to consecutive low bits
/// (order preserving), i.e. relabels a subset of `within` to 1..|within|.
Mask compress(Mask m, Mask within);
/// Inverse of compress.
Mask expand(Mask local, Mask within);

/// A surjection q: {1..m} -> {1..n}. Fibers are order-preserving identified
/// with {1..|fiber|} wherever a factor of arity |fiber| is indexed locally.
class Surjection {
 public:
  Surjection() = default;
  /// images[i-1] = q(i). Throws InvalidInput unless onto {1..target_size}.
  Surjection(std::vector<int> images, int target_size);
  static Surjection identity(int n);
  /// Parses "1,1,2"; the target size is the largest image.
  static Surjection parse(const std::string& text);

  int source_size() const { return static_cast<int>(images_.size()); }
  int target_size() const { return target_size_; }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  Mask fiber_mask(int r) const { return fibers_[r - 1]; }
  std::vector<int> fiber(int r) const { return labels_of(fibers_[r - 1]); }
  int fiber_size(int r) const { return popcount(fibers_[r - 1]); }
  /// 1-based position of i inside its fiber.
  int local_index(int i) const;

  Mask image(Mask source) const;
  Mask preimage(Mask target) const;

  /// (this o inner): {1..inner.source} -> {1..this.target}.
  Surjection after(const Surjection& inner) const;
  /// Restriction of this to the fiber (outer o this)^{-1}(r) mapping onto
  /// outer^{-1}(r), both relabeled order-preservingly.
  Surjection restrict_over(const Surjection& outer, int r) const;

  std::string to_string() const;
  bool operator==(const Surjection&) const = default;

 private:
  std::vector<int> images_;
  int target_size_ = 0;
  std::vector<Mask> fibers_;
};

/// All surjections {1..m} -> {1..n}, lexicographic in the image sequence.
std::vector<Surjection> all_surjections(int m, int n);
/// All surjections with source size m and any target size, by target then lex.
std::vector<Surjection> all_surjections(int m);

/// A permutation of {1..n}; images[i-1] = sigma(i).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }
  Permutation inverse() const;
  /// (this o other)(i) = this(other(i))
  Permutation after(const Permutation& other) const;
  Mask apply(Mask m) const;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

std::vector<Permutation> all_permutations(int n);
/// Adjacent transpositions (i i+1), i = 1..n-1; generate the symmetric group.
std::vector<Permutation> adjacent_transpositions(int n);

}  // namespace fmlog
