#pragma once

#include <vector>

#include "spechtlab/partition.hpp"
#include "spechtlab/prime.hpp"

namespace spechtlab {

/// Columns (a_k, r_k): nodes removed by the k-th p-rim strip and the number of
/// rows of the partition it was stripped from.
struct MullineuxSymbol {
  std::vector<int> removed;
  std::vector<int> rows;

  friend bool operator==(const MullineuxSymbol&, const MullineuxSymbol&) = default;
};

/// Removes the p-rim: runs of p rim nodes from the top right, each new run
/// starting at the end of the row below the previous run. Returns the number of
/// nodes removed and writes the remaining partition to rest.
int strip_p_rim(const Partition& lambda, OddPrime p, Partition& rest);

/// Errc::NotRegular unless λ is p-regular.
MullineuxSymbol mullineux_symbol(const Partition& lambda, OddPrime p);
/// Inverse of mullineux_symbol; Errc::InvalidPartition if no p-regular
/// partition has this symbol.
Partition from_mullineux_symbol(const MullineuxSymbol& symbol, OddPrime p);

/// M on p-regular partitions: keep a_k, replace r_k by a_k − r_k + ε_k where
/// ε_k = 0 if p | a_k and 1 otherwise.
Partition mullineux_regular(const Partition& lambda, OddPrime p);
/// m on p-restricted partitions, m(λ) = M(λ')'. Errc::NotRestricted otherwise.
Partition mullineux_restricted(const Partition& lambda, OddPrime p);

/// James's p-regularization: every node slides as far up its ladder
/// {(i, j) : i + (p−1)(j−1) = const} as possible.
Partition regularize(const Partition& alpha, OddPrime p);

}  // namespace spechtlab
