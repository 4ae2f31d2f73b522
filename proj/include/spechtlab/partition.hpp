#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "spechtlab/prime.hpp"

namespace spechtlab {

/// Enumeration routines refuse sizes above this unless a larger cap is passed.
inline constexpr int kDefaultSizeCap = 64;

class Partition;

/// A finite sequence of non-negative integers. Zeros may appear anywhere;
/// normalized() drops them.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  int size() const noexcept;
  /// 1-based; zero past the end.
  int part(std::size_t i) const noexcept;

  Composition normalized() const;
  /// Throws Errc::InvalidPartition unless the non-zero parts are weakly decreasing.
  Partition to_partition() const;
  /// Non-zero parts sorted decreasingly.
  Partition sorted() const;

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

/// Weakly decreasing sequence of positive integers; the empty sequence is the
/// unique partition of 0. Trailing zeros passed to the constructor are dropped.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }

  /// 1-based row length; zero past the last row.
  int part(std::size_t i) const noexcept {
    return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0;
  }
  int operator[](std::size_t i) const noexcept { return parts_[i]; }

  Composition composition() const { return Composition(parts_); }
  bool contains(const Partition& inner) const noexcept;

  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// (left|right) with both components allowed to be empty.
struct PartitionPair {
  Partition left;
  Partition right;

  int size() const noexcept { return left.size() + right.size(); }
  friend bool operator==(const PartitionPair&, const PartitionPair&) = default;
  friend auto operator<=>(const PartitionPair&, const PartitionPair&) = default;
};

std::ostream& operator<<(std::ostream& os, const PartitionPair& p);

/// 1-based node (row, column) of a Young diagram.
struct Node {
  int row;
  int col;
  friend bool operator==(const Node&, const Node&) = default;
};

Partition conjugate(const Partition& lambda);

Composition add(const Composition& a, const Composition& b);
Composition scale(int k, const Composition& a);
/// Pointwise difference; Errc::NotSubtractable if some a_i < b_i.
Composition subtract(const Composition& a, const Composition& b);
/// Errc::NotDivisible unless k divides every part.
Composition divide(const Composition& a, int k);

// Partition-valued shorthands; the pointwise results of partitions are partitions.
Partition add(const Partition& a, const Partition& b);
Partition scale(int k, const Partition& a);
/// Throws Errc::NotSubtractable or, if the difference is not a partition,
/// Errc::InvalidPartition.
Partition subtract(const Partition& a, const Partition& b);
Partition divide(const Partition& a, int k);

/// Parts of a followed by parts of b, re-sorted into a partition.
Partition concat(const Partition& a, const Partition& b);

/// h(i,j) = (λ_i − j) + (λ'_j − i) + 1. Errc::NodeOutsideDiagram unless (i,j) ∈ [λ].
int hook_length(const Partition& lambda, int row, int col);

int p_residue(int row, int col, OddPrime p) noexcept;
/// (c_0, …, c_{p−1}); c_r counts nodes of residue r.
std::vector<int> p_content(const Partition& lambda, OddPrime p);

/// Usual dominance order; Errc::SizeMismatch on different sizes.
bool dominates(const Partition& lambda, const Partition& alpha);
/// Dominance on pairs: for every k, Σ_{i≤k} λ_i ≥ Σ_{i≤k} α_i and
/// |λ| + Σ_{i≤k} ζ_i ≥ |α| + Σ_{i≤k} β_i.
bool dominates_pair(const PartitionPair& a, const PartitionPair& b);

/// Largest v with p^v | m. Errc::ZeroInput for m < 1.
int p_valuation(long long m, int p);

/// All partitions of n, reverse-lexicographic (starting from (n)).
std::vector<Partition> partitions_of(int n, int cap = kDefaultSizeCap);
/// All (λ|ζ) with |λ| + |ζ| = n.
std::vector<PartitionPair> pairs_of(int n, int cap = kDefaultSizeCap);

/// (n − r, 1^r).
Partition hook_partition(int n, int r);

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

}  // namespace spechtlab
