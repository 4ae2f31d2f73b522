#pragma once

#include <string>
#include <vector>

#include "spechtlab/partition.hpp"
#include "spechtlab/prime.hpp"

namespace spechtlab {

/// Bead configuration on p runners. Position k sits in row k / p on runner k % p;
/// smaller positions are "higher".
class Abacus {
 public:
  /// Beads need not be sorted; duplicates are rejected.
  Abacus(OddPrime p, std::vector<int> beads);

  OddPrime p() const noexcept { return p_; }
  int bead_count() const noexcept { return static_cast<int>(beads_.size()); }
  /// Ascending bead positions.
  const std::vector<int>& beads() const noexcept { return beads_; }
  bool occupied(int position) const noexcept;
  int max_position() const noexcept { return beads_.empty() ? -1 : beads_.back(); }

  /// Text picture, one abacus row per line, 'o' for a bead and '-' for a gap.
  std::string ascii() const;

  friend bool operator==(const Abacus&, const Abacus&) = default;

 private:
  OddPrime p_;
  std::vector<int> beads_;
};

/// Smallest multiple of p that is at least the number of parts of λ.
int canonical_bead_count(const Partition& lambda, OddPrime p);

/// β-set {λ_i − i + s}. Errc::TooFewBeads if s < len(λ).
Abacus from_partition(const Partition& lambda, OddPrime p, int s);
Abacus from_partition(const Partition& lambda, OddPrime p);

/// Each bead contributes the number of vacant positions above it.
Partition to_partition(const Abacus& abacus);

Partition p_core(const Partition& lambda, OddPrime p);
int p_weight(const Partition& lambda, OddPrime p);
bool is_p_core(const Partition& lambda, OddPrime p);

/// Component i is read from runner i of the s-bead display.
std::vector<Partition> p_quotient(const Partition& lambda, OddPrime p, int s);
std::vector<Partition> p_quotient(const Partition& lambda, OddPrime p);
/// Quotient read directly off an abacus.
std::vector<Partition> p_quotient(const Abacus& abacus);

std::vector<int> runner_bead_counts(const Abacus& abacus);

/// Exchanges runners ℓ−1 and ℓ row by row. Errc::BadRunnerIndex unless 1 ≤ ℓ ≤ p−1.
Abacus swap_runners(const Abacus& abacus, int runner);

/// s ↦ s + p: shifts every bead down one row and fills the new top row.
Abacus add_full_row(const Abacus& abacus);

/// All p-cores of size n.
std::vector<Partition> p_cores_of(int n, OddPrime p, int cap = kDefaultSizeCap);

}  // namespace spechtlab
