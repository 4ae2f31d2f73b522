#include "spechtlab/jm.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <unordered_set>

#include "spechtlab/error.hpp"
#include "spechtlab/padic.hpp"

namespace spechtlab {

bool is_jm_hook(const Partition& lambda, OddPrime p) {
  const std::size_t rows = lambda.length();
  if (rows == 0) return true;
  const std::size_t cols = static_cast<std::size_t>(lambda[0]);
  std::vector<std::vector<int>> nu(rows, std::vector<int>(cols, -1));
  for (std::size_t a = 0; a < rows; ++a)
    for (int b = 0; b < lambda[a]; ++b)
      nu[a][static_cast<std::size_t>(b)] =
          p_valuation(hook_length(lambda, static_cast<int>(a) + 1, b + 1), p.value());
  for (std::size_t a = 0; a < rows; ++a) {
    for (std::size_t b = 0; b < static_cast<std::size_t>(lambda[a]); ++b) {
      const int v = nu[a][b];
      if (v == 0) continue;
      bool row_differs = false;
      for (std::size_t y = 0; y < static_cast<std::size_t>(lambda[a]) && !row_differs; ++y)
        row_differs = nu[a][y] != v;
      bool col_differs = false;
      for (std::size_t x = 0; x < rows && lambda[x] > static_cast<int>(b) && !col_differs; ++x)
        col_differs = nu[x][b] != v;
      if (row_differs && col_differs) return false;
    }
  }
  return true;
}

namespace {

bool component_ok(const Partition& q, OddPrime p, bool regular) {
  if (q.empty()) return true;
  if (regular ? !is_p_regular(q, p) : !is_p_restricted(q, p)) return false;
  return is_jm_abacus(q, p).is_jm;
}

}  // namespace

std::optional<std::pair<int, int>> jm_runners(const Abacus& display) {
  const OddPrime p = display.p();
  const int pv = p.value();
  const auto quotient = p_quotient(display);
  const auto& beads = display.beads();

  std::vector<int> first_gap(static_cast<std::size_t>(pv));
  std::vector<int> last_bead(static_cast<std::size_t>(pv), -1);
  for (int r = 0; r < pv; ++r) {
    int pos = r;
    while (display.occupied(pos)) pos += pv;
    first_gap[static_cast<std::size_t>(r)] = pos;
  }
  for (int b : beads) last_bead[static_cast<std::size_t>(b % pv)] = b;

  auto f2 = [&](int i) {
    const int gap = first_gap[static_cast<std::size_t>(i)];
    return std::all_of(beads.begin(), beads.end(), [&](int b) { return b < gap || b % pv == i; });
  };
  auto f3 = [&](int j) {
    const int last = last_bead[static_cast<std::size_t>(j)];
    for (int d = 0; d < last; ++d)
      if (d % pv != j && !display.occupied(d)) return false;
    return true;
  };

  std::map<std::pair<int, bool>, bool> memo;
  auto recursive_ok = [&](int k, bool regular) {
    auto [it, fresh] = memo.try_emplace({k, regular}, false);
    if (fresh) it->second = component_ok(quotient[static_cast<std::size_t>(k)], p, regular);
    return it->second;
  };

  for (int i = 0; i < pv; ++i) {
    for (int j = 0; j < pv; ++j) {
      bool others_empty = true;
      for (int k = 0; k < pv && others_empty; ++k)
        if (k != i && k != j && !quotient[static_cast<std::size_t>(k)].empty()) others_empty = false;
      if (!others_empty || !f2(i) || !f3(j)) continue;
      if (recursive_ok(i, true) && recursive_ok(j, false)) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

JmWitness is_jm_abacus(const Partition& lambda, OddPrime p) {
  const int base = canonical_bead_count(lambda, p);
  JmWitness w;
  w.display = from_partition(lambda, p, base);
  const auto runners = jm_runners(w.display);
  if (!runners) return w;
  for (int s = base + 1; s < base + p.value(); ++s)
    if (!jm_runners(from_partition(lambda, p, s))) return w;
  const auto quotient = p_quotient(w.display);
  w.is_jm = true;
  w.i = runners->first;
  w.j = runners->second;
  w.quotient_i = quotient[static_cast<std::size_t>(runners->first)];
  w.quotient_j = quotient[static_cast<std::size_t>(runners->second)];
  return w;
}

PartitionPair phi(const Partition& lambda, OddPrime p) {
  const Partition conj = conjugate(lambda);
  const Partition head = restricted_part(conj, p);
  return {conjugate(head), subtract(conj, head)};
}

PartitionPair phi_via_quotient(const Partition& lambda, OddPrime p) {
  const JmWitness w = is_jm_abacus(lambda, p);
  if (!w.is_jm) throw Error(Errc::NotJm, lambda.str());
  const Partition core = p_core(lambda, p);
  return {add(core, scale(p.value(), w.quotient_i)), scale(p.value(), conjugate(w.quotient_j))};
}

namespace {

/// max over displays of min_k (c_{k+1} − c_k).
int rouquier_gap(const Partition& core, OddPrime p) {
  const int base = canonical_bead_count(core, p);
  int best = std::numeric_limits<int>::min();
  for (int s = base; s < base + p.value(); ++s) {
    const auto c = runner_bead_counts(from_partition(core, p, s));
    int gap = std::numeric_limits<int>::max();
    for (std::size_t k = 0; k + 1 < c.size(); ++k) gap = std::min(gap, c[k + 1] - c[k]);
    best = std::max(best, gap);
  }
  return best;
}

}  // namespace

bool is_rouquier(const Partition& core, int weight, OddPrime p) {
  if (!is_p_core(core, p)) throw Error(Errc::NotACore, core.str());
  return rouquier_gap(core, p) >= weight - 1;
}

bool swap_is_legal(const Abacus& display, int runner) {
  const int pv = display.p().value();
  if (runner < 1 || runner > pv - 1)
    throw Error(Errc::BadRunnerIndex, std::to_string(runner) + " not in 1.." + std::to_string(pv - 1));
  const auto c = runner_bead_counts(display);
  if (c[static_cast<std::size_t>(runner - 1)] <= c[static_cast<std::size_t>(runner)]) return false;
  for (int b : display.beads())
    if (b % pv == runner && !display.occupied(b - 1)) return false;
  return true;
}

AdjacencyStep adjacent_successor(const Partition& lambda, OddPrime p, int runner, int s) {
  const Abacus display = from_partition(lambda, p, s);
  if (!swap_is_legal(display, runner))
    throw Error(Errc::SwapNotLegal, "runner " + std::to_string(runner) + " on the " +
                                        std::to_string(s) + "-bead display of " + lambda.str());
  const auto c = runner_bead_counts(display);
  AdjacencyStep step;
  step.source = lambda;
  step.target = to_partition(swap_runners(display, runner));
  step.runner = runner;
  step.bead_count = s;
  step.nodes_added = c[static_cast<std::size_t>(runner - 1)] - c[static_cast<std::size_t>(runner)];
  step.residue = ((runner - s) % p.value() + p.value()) % p.value();
  return step;
}

std::vector<AdjacencyStep> rouquier_chain(const Partition& lambda, OddPrime p, const ChainBound& bound) {
  if (!is_jm_hook(lambda, p)) throw Error(Errc::NotJm, lambda.str());
  const int weight = p_weight(lambda, p);
  auto gap_of = [&](const Partition& mu) { return rouquier_gap(p_core(mu, p), p); };
  if (gap_of(lambda) >= weight - 1) return {};

  struct Node {
    AdjacencyStep step;
    long parent;
    int depth;
    int gap;
  };
  std::vector<Node> nodes;
  std::deque<long> frontier;
  std::unordered_set<Partition, PartitionHash> seen{lambda};

  auto chain_to = [&](long idx) {
    std::vector<AdjacencyStep> out;
    for (; idx >= 0; idx = nodes[static_cast<std::size_t>(idx)].parent)
      out.push_back(nodes[static_cast<std::size_t>(idx)].step);
    std::reverse(out.begin(), out.end());
    return out;
  };

  auto expand = [&](const Partition& mu, long parent, int depth) -> std::optional<long> {
    std::vector<Node> moves;
    if (depth >= bound.max_length) return std::nullopt;
    const int base = canonical_bead_count(mu, p);
    for (int s = base; s < base + p.value(); ++s) {
      const Abacus display = from_partition(mu, p, s);
      for (int l = 1; l < p.value(); ++l) {
        if (!swap_is_legal(display, l)) continue;
        AdjacencyStep step = adjacent_successor(mu, p, l, s);
        if (seen.count(step.target)) continue;
        const int g = gap_of(step.target);
        moves.push_back({std::move(step), parent, depth + 1, g});
      }
    }
    std::stable_sort(moves.begin(), moves.end(), [&](const Node& a, const Node& b) {
      if (a.gap != b.gap) return a.gap > b.gap;
      if (a.step.runner != b.step.runner) return a.step.runner < b.step.runner;
      return a.step.bead_count < b.step.bead_count;
    });
    for (auto& m : moves) {
      if (!seen.insert(m.step.target).second) continue;
      nodes.push_back(std::move(m));
      const long idx = static_cast<long>(nodes.size()) - 1;
      if (nodes.back().gap >= weight - 1) return idx;
      if (static_cast<long>(nodes.size()) >= bound.max_states)
        throw Error(Errc::ChainNotFoundWithinBound,
                    "state limit " + std::to_string(bound.max_states) + " reached from " + lambda.str());
      frontier.push_back(idx);
    }
    return std::nullopt;
  };

  if (auto hit = expand(lambda, -1, 0)) return chain_to(*hit);
  while (!frontier.empty()) {
    const long idx = frontier.front();
    frontier.pop_front();
    const Node& n = nodes[static_cast<std::size_t>(idx)];
    const Partition mu = n.step.target;
    if (auto hit = expand(mu, idx, n.depth)) return chain_to(*hit);
  }
  throw Error(Errc::ChainNotFoundWithinBound, "no chain of length <= " +
                                                  std::to_string(bound.max_length) + " from " + lambda.str());
}

std::vector<Partition> jm_partitions_of(int n, OddPrime p, int cap) {
  std::vector<Partition> out;
  for (auto& lambda : partitions_of(n, cap))
    if (is_jm_hook(lambda, p)) out.push_back(std::move(lambda));
  return out;
}

}  // namespace spechtlab
