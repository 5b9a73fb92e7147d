#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "commtrace/rational.hpp"

namespace commtrace {

// Element of S_k acting on {1..k}, with its cycle decomposition and sign computed once.
class Permutation {
 public:
  // One-line notation: images[p-1] is the image of p. Throws std::invalid_argument
  // unless the images form a bijection of {1..k}, k >= 1.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int k);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point - 1]; }
  std::span<const int> images() const { return images_; }

  // Every cycle starts at its least point; cycles are ordered by that point and
  // fixed points appear as 1-cycles. A cycle (a b c) maps a -> b -> c -> a.
  const std::vector<std::vector<int>>& cycles() const { return cycles_; }
  int sign() const { return sign_; }
  bool is_identity() const;

  // Composition: (p * q)(x) = p(q(x)).
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;

  bool operator==(const Permutation& rhs) const { return images_ == rhs.images_; }

 private:
  std::vector<int> images_;
  std::vector<std::vector<int>> cycles_;
  int sign_ = 1;
};

// All k! permutations in lexicographic order of their one-line images.
// Throws std::invalid_argument for k < 1.
std::vector<Permutation> enumerate_permutations(int k);

// Cycle notation including fixed points: "(1 2 3)(4)".
std::string to_string(const Permutation& p);

// Partition of {1..m} into nonempty blocks. Blocks are sorted internally and ordered
// by their least element.
class SetPartition {
 public:
  // Canonicalizes block order. Throws std::invalid_argument unless the blocks are
  // nonempty, pairwise disjoint and cover {1..m} for some m >= 1.
  explicit SetPartition(std::vector<std::vector<int>> blocks);

  // From a restricted growth string (0-based labels, rgs[0] == 0, each entry at most
  // one above the running maximum).
  static SetPartition from_rgs(std::span<const int> rgs);

  int ground_size() const { return ground_size_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  // 1-based index of the block containing `element`.
  int block_of(int element) const;

  // Every block of *this lies inside some block of `coarser` (reflexive).
  bool refines(const SetPartition& coarser) const;

  auto operator<=>(const SetPartition&) const = default;

 private:
  SetPartition() = default;

  std::vector<std::vector<int>> blocks_;
  int ground_size_ = 0;
};

// "{1,3|2}".
std::string to_string(const SetPartition& partition);

// Inverse of to_string; throws std::invalid_argument.
SetPartition parse_partition(std::string_view text);

// A map [m] -> [n], stored as the word (f(1), ..., f(m)).
class FunctionWord {
 public:
  // Throws std::invalid_argument unless every letter lies in 1..n.
  FunctionWord(std::vector<int> letters, int n);

  int length() const { return static_cast<int>(letters_.size()); }
  int alphabet_size() const { return n_; }
  int operator()(int position) const { return letters_[position - 1]; }
  std::span<const int> letters() const { return letters_; }

  bool operator==(const FunctionWord&) const = default;

 private:
  std::vector<int> letters_;
  int n_;
};

// Partitions of {1..m} with at most max_blocks blocks, in lexicographic order of their
// restricted growth strings. Throws std::invalid_argument for m < 1 or max_blocks < 1.
std::vector<SetPartition> enumerate_set_partitions(int m, int max_blocks);

// f_Lambda: takes the value i on the i-th block. Throws std::invalid_argument when the
// partition has more than n blocks.
FunctionWord canonical_function(const SetPartition& partition, int n);

// Nonempty fibers of f.
SetPartition fiber_partition(const FunctionWord& f);

// Representative of the S_n-orbit of f (S_n permuting the letters): relabel letters in
// order of first occurrence. Equals canonical_function(fiber_partition(f), n).
FunctionWord canonical_representative(const FunctionWord& f);

// Partitions of the supports of the cycles of p.
SetPartition cycle_partition(const Permutation& p);

// All partitions whose blocks are unions of blocks of `partition`, `partition` itself
// first, ordered by decreasing number of blocks and then by restricted growth string
// of the merge pattern.
std::vector<SetPartition> coarsenings(const SetPartition& partition);

// Stirling number of the second kind: partitions of an m-set into exactly k blocks.
BigInt stirling2(int m, int k);

BigInt factorial(int k);

}  // namespace commtrace
