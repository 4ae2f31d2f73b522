#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spechtlab/partition.hpp"

namespace spechtlab {

/// k or k'. Ordered 1 < 1' < 2 < 2' < ⋯.
struct SignedEntry {
  int value = 0;
  bool primed = false;

  std::string str() const;
  friend bool operator==(const SignedEntry&, const SignedEntry&) = default;
  friend auto operator<=>(const SignedEntry&, const SignedEntry&) = default;
};

/// Unprimed entries fill a subdiagram, weakly increasing along rows and strictly
/// down columns; primed entries fill the rest, strictly along rows and weakly
/// down columns.
struct SignedTableau {
  Partition shape;
  std::vector<std::vector<SignedEntry>> rows;

  const SignedEntry& at(int row, int col) const {
    return rows[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)];
  }
  /// Rows separated by '/', e.g. "1 1 1' / 2 2'".
  std::string str() const;
  friend bool operator==(const SignedTableau&, const SignedTableau&) = default;
};

/// Semistandard λ-tableaux of type (α|β): α_i copies of i and β_j copies of j'.
/// Row-major lexicographic order. Errc::SizeMismatch unless |λ| = |α| + |β|.
std::vector<SignedTableau> enumerate_signed(const Partition& lambda, const PartitionPair& type);
std::uint64_t count_signed(const Partition& lambda, const PartitionPair& type);

/// Number of semistandard λ-tableaux of content α.
std::uint64_t kostka(const Partition& lambda, const Partition& alpha);

/// c^λ_{γ,ξ} via lattice-word fillings of λ/γ with content ξ; 0 when the
/// shapes are incompatible.
std::uint64_t lr_coefficient(const Partition& gamma, const Partition& xi, const Partition& lambda);

/// n! / ∏ hooks. Errc::SizeCapExceeded if the value does not fit in 64 bits.
std::uint64_t specht_dimension(const Partition& lambda);

/// Σ_{γ ⊢ |α|, ξ ⊢ |β|} y_{α,γ} · y_{β,ξ'} · c^λ_{γ,ξ}.
std::uint64_t kostka_lr_sum(const Partition& lambda, const PartitionPair& type);

}  // namespace spechtlab
