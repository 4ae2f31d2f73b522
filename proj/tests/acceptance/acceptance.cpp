// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "oracles.hpp"
#include "spechtlab/abacus.hpp"
#include "spechtlab/error.hpp"
#include "spechtlab/jm.hpp"
#include "spechtlab/labels.hpp"
#include "spechtlab/mullineux.hpp"
#include "spechtlab/padic.hpp"
#include "spechtlab/specht.hpp"
#include "spechtlab/tableaux.hpp"

using namespace spechtlab;
using Clock = std::chrono::steady_clock;

namespace {

std::uint64_t g_seed = 0;

/// Collects mismatches; the first few are kept for the report.
struct Tally {
  long checked = 0;
  long failed = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failed++ < 3) first += (first.empty() ? "" : "; ") + what;
  }
  bool ok() const { return failed == 0; }
  std::string summary() const {
    std::ostringstream os;
    os << checked << " checks, " << failed << " mismatches";
    if (!first.empty()) os << " [" << first << "]";
    return os.str();
  }
};

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string sigma_beta(const Partition& lambda, OddPrime p) {
  const PartitionPair f = phi(lambda, p);
  return divide(subtract(f.left, p_core(lambda, p)), p.value()).str() + "|" + divide(f.right, p.value()).str();
}

Outcome worked_example() {
  const OddPrime p(3);
  const Partition lambda{6, 5, 5, 1, 1, 1};
  const auto t0 = Clock::now();
  const Partition core = p_core(lambda, p);
  const int weight = p_weight(lambda, p);
  const auto quotient = p_quotient(lambda, p, 9);
  const double ms = seconds_since(t0) * 1e3;

  Tally t;
  t.expect(core == Partition{3, 1}, "core " + core.str());
  t.expect(weight == 5, "weight " + std::to_string(weight));
  t.expect(quotient == std::vector<Partition>{Partition{2, 1}, Partition{}, Partition{1, 1}}, "quotient");
  t.expect(ms < 1.0, "took " + std::to_string(ms) + " ms");
  std::mt19937_64 rng(g_seed);
  for (int k = 0; k < 20; ++k) t.expect(oracle::random_core(lambda, 3, rng) == core, "random rim-hook removal");
  std::ostringstream os;
  os << t.summary() << ", " << ms << " ms";
  return {t.ok(), os.str()};
}

Outcome jm_oracles() {
  const auto t0 = Clock::now();
  Tally t;
  for (int pv : {3, 5}) {
    const OddPrime p(pv);
    for (int n = 0; n <= 14; ++n)
      for (const auto& l : partitions_of(n)) {
        const bool hook = oracle::jm_by_hooks(l, pv);
        t.expect(is_jm_hook(l, p) == hook, "hook test on " + l.str());
        t.expect(is_jm_abacus(l, p).is_jm == hook, "abacus test on " + l.str() + " p=" + std::to_string(pv));
      }
  }
  const double s = seconds_since(t0);
  t.expect(s < 60.0, "took " + std::to_string(s) + " s");
  return {t.ok(), t.summary() + ", " + std::to_string(s) + " s"};
}

Outcome phi_consistency() {
  Tally t;
  for (int pv : {3, 5}) {
    const OddPrime p(pv);
    for (int n = 0; n <= 14; ++n)
      for (const auto& l : jm_partitions_of(n, p)) {
        t.expect(phi(l, p) == phi_via_quotient(l, p), "quotient form on " + l.str());
        if (is_p_regular(l, p)) t.expect(phi(l, p) == PartitionPair{l, {}}, "regular " + l.str());
      }
  }
  return {t.ok(), t.summary()};
}

Outcome twist_of_conjugate() {
  Tally t;
  for (int pv : {3, 5}) {
    const OddPrime p(pv);
    for (int n = 0; n <= 14; ++n)
      for (const auto& l : jm_partitions_of(n, p))
        t.expect(twist(signed_label(l, p)) == signed_label(conjugate(l), p), l.str());
  }
  return {t.ok(), t.summary()};
}

Outcome twist_involution() {
  Tally t;
  for (int pv : {3, 5}) {
    const OddPrime p(pv);
    for (int n = 0; n <= 12; ++n)
      for (int m = 0; m * pv <= n; ++m)
        for (const auto& l : partitions_of(n - m * pv))
          for (const auto& mu : partitions_of(m)) {
            const SignedLabel L{l, mu, p};
            t.expect(twist(twist(L)) == L, l.str() + "|" + mu.str());
          }
  }
  return {t.ok(), t.summary()};
}

Outcome mullineux_suite() {
  Tally t;
  for (int pv : {3, 5}) {
    const OddPrime p(pv);
    for (int n = 0; n <= 14; ++n) {
      for (const auto& l : partitions_of(n)) {
        if (is_p_regular(l, p)) {
          const Partition m = mullineux_regular(l, p);
          t.expect(m.size() == n && mullineux_regular(m, p) == l, "M on " + l.str());
        }
        if (is_p_restricted(l, p)) {
          const Partition m = mullineux_restricted(l, p);
          t.expect(m.size() == n && mullineux_restricted(m, p) == l, "m on " + l.str());
        }
      }
      for (const auto& c : p_cores_of(n, p)) t.expect(mullineux_restricted(c, p) == conjugate(c), "core " + c.str());
    }
  }
  const OddPrime p(3);
  for (int n = 0; n <= 12; ++n)
    for (const auto& l : partitions_of(n))
      if (is_p_regular(l, p))
        t.expect(mullineux_regular(l, p) == oracle::mullineux_by_crystal(l, 3), "crystal on " + l.str());
  return {t.ok(), t.summary()};
}

Outcome complexity_equals_weight() {
  Tally t;
  for (int pv : {3, 5}) {
    const OddPrime p(pv);
    for (int n = 0; n <= 14; ++n)
      for (const auto& l : jm_partitions_of(n, p))
        t.expect(complexity(signed_label(l, p)) == p_weight(l, p), l.str());
  }
  return {t.ok(), t.summary()};
}

Outcome hook_partitions() {
  Tally t;
  for (int pv : {3, 5}) {
    const OddPrime p(pv);
    for (int n = 1; n <= 20; ++n) {
      if (n % pv == 0) continue;
      for (int r = 0; r < n; ++r) {
        const auto s = oracle::digits(n - r - 1, pv);
        const auto d = oracle::digits(r, pv);
        const std::size_t len = std::max(s.size(), d.size());
        auto digit = [](const std::vector<int>& v, std::size_t i) { return i < v.size() ? v[i] : 0; };
        int high_s = 0, high_r = 0;
        std::map<int, int> sylow{{1, 1}};
        for (std::size_t i = 0, pw = 1; i < len; ++i, pw *= static_cast<std::size_t>(pv)) {
          if (i > 0) {
            high_s += digit(s, i) * static_cast<int>(pw);
            high_r += digit(d, i) * static_cast<int>(pw);
          }
          if (const int c = digit(s, i) + digit(d, i)) sylow[static_cast<int>(pw)] += c;
        }
        std::vector<int> left{1 + digit(s, 0) + high_s};
        left.insert(left.end(), static_cast<std::size_t>(digit(d, 0)), 1);
        const Partition hook = hook_partition(n, r);
        const SignedLabel L = signed_label(hook, p);
        t.expect(L.pair() == PartitionPair{oracle::make(left), oracle::make({high_r})}, "label of " + hook.str());
        std::map<int, int> parts;
        const VertexDescriptor v = rho(L);
        for (int x : v.rho.parts()) ++parts[x];
        t.expect(parts == sylow, "vertex of " + hook.str());
      }
    }
  }
  return {t.ok(), t.summary()};
}

Outcome signed_young_rule() {
  const auto t0 = Clock::now();
  Tally t;
  const Partition shape{4, 3, 2, 2};
  const PartitionPair type{Partition{3, 3, 1}, Partition{2, 2}};
  const auto count = count_signed(shape, type);
  t.expect(count == 5, "count for " + shape.str() + " of type (3,3,1|2,2) is " + std::to_string(count) + ", expected 5");
  for (int n = 0; n <= 8; ++n)
    for (const auto& l : partitions_of(n))
      for (const auto& ty : pairs_of(n))
        t.expect(count_signed(l, ty) == kostka_lr_sum(l, ty), "Kostka-LR sum on " + l.str());
  for (int n = 0; n <= 7; ++n)
    for (const auto& ty : pairs_of(n)) {
      std::uint64_t total = 0;
      for (const auto& l : partitions_of(n)) total += count_signed(l, ty) * specht_dimension(l);
      std::uint64_t denom = 1;
      for (int a : ty.left.parts()) denom *= oracle::factorial(a);
      for (int b : ty.right.parts()) denom *= oracle::factorial(b);
      t.expect(total == oracle::factorial(n) / denom, "dimension sum for n=" + std::to_string(n));
    }
  const double s = seconds_since(t0);
  t.expect(s < 300.0, "took " + std::to_string(s) + " s");
  return {t.ok(), t.summary() + ", " + std::to_string(s) + " s"};
}

Outcome rouquier_chains() {
  const OddPrime p(3);
  Tally t;
  long steps = 0;
  for (int n = 0; n <= 12; ++n)
    for (const auto& l : jm_partitions_of(n, p)) {
      std::vector<AdjacencyStep> chain;
      try {
        chain = rouquier_chain(l, p);
      } catch (const Error& e) {
        t.expect(false, l.str() + ": " + e.what());
        continue;
      }
      Partition cur = l;
      for (const auto& st : chain) {
        ++steps;
        t.expect(st.source == cur, "chain continuity at " + cur.str());
        t.expect(swap_is_legal(from_partition(st.source, p, st.bead_count), st.runner) &&
                     adjacent_successor(st.source, p, st.runner, st.bead_count) == st,
                 "legal step from " + st.source.str());
        t.expect(is_jm_hook(st.target, p), "JM target " + st.target.str());
        t.expect(sigma_beta(st.source, p) == sigma_beta(st.target, p), "shared sigma, beta on " + st.source.str());
        cur = st.target;
      }
      t.expect(is_rouquier(p_core(cur, p), p_weight(cur, p), p), "terminal block of " + l.str());
    }
  return {t.ok(), t.summary() + ", " + std::to_string(steps) + " steps"};
}

Outcome weight_one_resolutions() {
  Tally t;
  for (int pv : {3, 5}) {
    const OddPrime p(pv);
    for (int n = 0; n <= 8; ++n)
      for (const auto& core : p_cores_of(n, p)) {
        const ResolutionDescriptor r = weight1_resolution(core, p);
        const std::string tag = core.str() + " p=" + std::to_string(pv);
        std::vector<Partition> expected;
        for (const auto& l : partitions_of(n + pv))
          if (p_core(l, p) == core && p_weight(l, p) == 1) expected.push_back(l);
        t.expect(r.labels.size() == static_cast<std::size_t>(pv), "label count over " + tag);
        t.expect(r.labels == expected, "labels over " + tag);
        if (r.labels.size() != static_cast<std::size_t>(pv)) continue;
        for (int k = 0; k + 1 < pv; ++k) {
          const auto& a = r.labels[static_cast<std::size_t>(k)];
          const auto& b = r.labels[static_cast<std::size_t>(k) + 1];
          t.expect(a != b && dominates(a, b), "dominance chain over " + tag);
        }
        auto rho_at = [&](int k) { return r.labels[static_cast<std::size_t>(k)]; };
        std::vector<Partition> terms;
        for (int k = pv - 1; k >= 1; --k) terms.push_back(rho_at(k));
        for (int k = 1; k <= pv - 1; ++k) terms.push_back(rho_at(k));
        t.expect(r.terms == terms, "resolution terms over " + tag);
        t.expect(r.heller.size() == static_cast<std::size_t>(2 * pv - 2), "table size over " + tag);
        if (r.heller.size() != static_cast<std::size_t>(2 * pv - 2)) continue;
        for (int i = 1; i <= 2 * pv - 2; ++i) {
          HellerEntry want;
          if (i < pv - 1)
            want.layers = {rho_at(pv - 1 - i), rho_at(pv - i)};
          else if (i == pv - 1)
            want.layers = {rho_at(1)};
          else if (i < 2 * pv - 2)
            want.layers = {rho_at(i - pv + 2), rho_at(i - pv + 1)};
          else
            want.self = true;
          t.expect(r.heller[static_cast<std::size_t>(i) - 1] == want, "syzygy " + std::to_string(i) + " over " + tag);
        }
        const auto& mid = r.heller[static_cast<std::size_t>(pv) - 2];
        t.expect(!mid.self && mid.layers.size() == 1, "middle syzygy is simple over " + tag);
        t.expect(r.heller.back().self, "last syzygy returns over " + tag);
      }
  }
  return {t.ok(), t.summary()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  g_seed = oracle::seed();
  app.add_option("--seed", g_seed, "Seed for randomized cross-checks");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"core, weight and quotient of (6,5,5,1,1,1) at p=3", worked_example},
      {"hook and abacus JM tests agree, n<=14, p in {3,5}", jm_oracles},
      {"phi equals its quotient form; regular JM gives (l|0)", phi_consistency},
      {"twist of the label of l is the label of l'", twist_of_conjugate},
      {"twist is an involution on labels, n<=12", twist_involution},
      {"Mullineux involutions, cores, crystal agreement", mullineux_suite},
      {"complexity of the label equals the p-weight", complexity_equals_weight},
      {"hook partitions: digit formula and vertex shape, n<=20", hook_partitions},
      {"signed Young rule: worked count, Kostka-LR sum, dimensions", signed_young_rule},
      {"Rouquier chains: legal steps, shared sigma/beta, Rouquier end", rouquier_chains},
      {"weight-one resolutions and syzygy table, |core|<=8", weight_one_resolutions},
  };

  std::printf("seed %llu\n", static_cast<unsigned long long>(g_seed));
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s %2zu. %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failures), criteria.size());
  return failures == 0 ? 0 : 1;
}
