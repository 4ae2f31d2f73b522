#pragma once

#include <vector>

#include "spechtlab/partition.hpp"
#include "spechtlab/prime.hpp"

namespace spechtlab {

/// No p equal positive parts.
bool is_p_regular(const Partition& lambda, OddPrime p);
/// λ_i − λ_{i+1} < p for every i (rows past the end read as 0).
bool is_p_restricted(const Partition& lambda, OddPrime p);

/// λ = Σ p^i · parts[i] with every parts[i] p-restricted. parts is never empty;
/// parts.back() is non-empty unless λ = ∅, in which case parts = {∅}.
struct PadicExpansion {
  OddPrime p;
  std::vector<Partition> parts;

  /// r_λ, the index of the last term.
  int top() const noexcept { return static_cast<int>(parts.size()) - 1; }
  /// λ(i), empty past the last term.
  Partition term(int i) const;

  friend bool operator==(const PadicExpansion&, const PadicExpansion&) = default;
};

PadicExpansion expand(const Partition& lambda, OddPrime p);
/// λ minus all horizontal rim p-hooks stripped bottom row first; the term λ(0).
Partition restricted_part(const Partition& lambda, OddPrime p);

/// Σ p^i · parts[i]. Errc::InvalidExpansion if a term is not p-restricted.
Partition reconstruct(const PadicExpansion& e);

}  // namespace spechtlab
