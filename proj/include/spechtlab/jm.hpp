#pragma once

#include <optional>
#include <vector>

#include "spechtlab/abacus.hpp"
#include "spechtlab/partition.hpp"
#include "spechtlab/prime.hpp"

namespace spechtlab {

/// Hook-valuation test: λ fails iff some node (a,b) with ν_p(h(a,b)) > 0 has a
/// node (x,b) and a node (a,y) whose hook valuations both differ from it.
bool is_jm_hook(const Partition& lambda, OddPrime p);

struct JmWitness {
  bool is_jm = false;
  std::optional<int> i;
  std::optional<int> j;
  Partition quotient_i;
  Partition quotient_j;
  Abacus display{OddPrime(3), {}};
};

/// Runner test on the abacus: for each of p consecutive bead counts some pair of
/// runners (i, j) must carry the whole quotient, with the vacancy/occupancy
/// conditions and recursively JM components (λ^(i) p-regular, λ^(j) p-restricted).
/// The witness runners and components come from the canonical display.
JmWitness is_jm_abacus(const Partition& lambda, OddPrime p);

/// Checks the runner conditions on one display only. Returns the lexicographically
/// first (i, j) that works.
std::optional<std::pair<int, int>> jm_runners(const Abacus& display);

/// ((λ'(0))' | λ' − λ'(0)). Total on all partitions.
PartitionPair phi(const Partition& lambda, OddPrime p);
/// (κ_p(λ) + p·λ^(i) | p·(λ^(j))'). Errc::NotJm for non-JM input.
PartitionPair phi_via_quotient(const Partition& lambda, OddPrime p);

/// Some display has c_{k+1} ≥ c_k + (w − 1) for every runner k < p − 1.
/// Errc::NotACore unless core is a p-core.
bool is_rouquier(const Partition& core, int weight, OddPrime p);

struct AdjacencyStep {
  Partition source;
  Partition target;
  int runner = 0;       // ℓ
  int bead_count = 0;   // s of the display the swap was made on
  int nodes_added = 0;  // r
  int residue = 0;      // (ℓ − s) mod p

  friend bool operator==(const AdjacencyStep&, const AdjacencyStep&) = default;
};

/// True when runner ℓ−1 has more beads than runner ℓ and every bead on runner ℓ
/// sits beside a bead on runner ℓ−1.
bool swap_is_legal(const Abacus& display, int runner);

/// Swaps runners ℓ−1 and ℓ on the s-bead display. Errc::SwapNotLegal or
/// Errc::BadRunnerIndex when the swap does not add nodes.
AdjacencyStep adjacent_successor(const Partition& lambda, OddPrime p, int runner, int s);

struct ChainBound {
  int max_length = 64;
  long max_states = 200000;
};

/// Shortest sequence of adjacent steps from λ to a partition in a Rouquier
/// block, found breadth first with a deterministic move order. Empty when λ's
/// block is already Rouquier. Errc::NotJm on non-JM input and
/// Errc::ChainNotFoundWithinBound when the bound is exhausted.
std::vector<AdjacencyStep> rouquier_chain(const Partition& lambda, OddPrime p,
                                          const ChainBound& bound = {});

/// All JM partitions of n in the order of partitions_of.
std::vector<Partition> jm_partitions_of(int n, OddPrime p, int cap = kDefaultSizeCap);

}  // namespace spechtlab
