#include "spechtlab/abacus.hpp"

#include <algorithm>
#include <sstream>

#include "spechtlab/error.hpp"

namespace spechtlab {

Abacus::Abacus(OddPrime p, std::vector<int> beads) : p_(p), beads_(std::move(beads)) {
  std::sort(beads_.begin(), beads_.end());
  if (!beads_.empty() && beads_.front() < 0)
    throw Error(Errc::InvalidPartition, "negative bead position");
  if (std::adjacent_find(beads_.begin(), beads_.end()) != beads_.end())
    throw Error(Errc::InvalidPartition, "two beads in one position");
}

bool Abacus::occupied(int position) const noexcept {
  return std::binary_search(beads_.begin(), beads_.end(), position);
}

std::string Abacus::ascii() const {
  std::ostringstream os;
  const int p = p_.value();
  const int rows = beads_.empty() ? 1 : beads_.back() / p + 1;
  for (int r = 0; r < rows; ++r) {
    for (int j = 0; j < p; ++j) os << (occupied(r * p + j) ? 'o' : '-') << (j + 1 < p ? " " : "");
    os << '\n';
  }
  return os.str();
}

int canonical_bead_count(const Partition& lambda, OddPrime p) {
  const int len = static_cast<int>(lambda.length());
  return (len + p.value() - 1) / p.value() * p.value();
}

Abacus from_partition(const Partition& lambda, OddPrime p, int s) {
  if (s < static_cast<int>(lambda.length()))
    throw Error(Errc::TooFewBeads, std::to_string(s) + " beads for " + lambda.str());
  std::vector<int> beads;
  beads.reserve(static_cast<std::size_t>(s));
  for (int i = 1; i <= s; ++i) beads.push_back(lambda.part(static_cast<std::size_t>(i)) - i + s);
  return Abacus(p, std::move(beads));
}

Abacus from_partition(const Partition& lambda, OddPrime p) {
  return from_partition(lambda, p, canonical_bead_count(lambda, p));
}

Partition to_partition(const Abacus& abacus) {
  std::vector<int> parts;
  const auto& beads = abacus.beads();
  parts.reserve(beads.size());
  // The k-th bead (ascending) has k beads above it, so position − k gaps.
  for (std::size_t k = beads.size(); k-- > 0;) parts.push_back(beads[k] - static_cast<int>(k));
  return Partition(std::move(parts));
}

std::vector<int> runner_bead_counts(const Abacus& abacus) {
  std::vector<int> counts(static_cast<std::size_t>(abacus.p().value()), 0);
  for (int b : abacus.beads()) ++counts[static_cast<std::size_t>(b % abacus.p().value())];
  return counts;
}

namespace {

/// Pushes every bead as high as possible on its runner.
Abacus slide_up(const Abacus& abacus) {
  const int p = abacus.p().value();
  std::vector<int> beads;
  const auto counts = runner_bead_counts(abacus);
  for (int j = 0; j < p; ++j)
    for (int row = 0; row < counts[static_cast<std::size_t>(j)]; ++row) beads.push_back(row * p + j);
  return Abacus(abacus.p(), std::move(beads));
}

}  // namespace

Partition p_core(const Partition& lambda, OddPrime p) {
  return to_partition(slide_up(from_partition(lambda, p)));
}

int p_weight(const Partition& lambda, OddPrime p) {
  return (lambda.size() - p_core(lambda, p).size()) / p.value();
}

bool is_p_core(const Partition& lambda, OddPrime p) { return p_core(lambda, p) == lambda; }

std::vector<Partition> p_quotient(const Abacus& abacus) {
  const int p = abacus.p().value();
  std::vector<Partition> out;
  out.reserve(static_cast<std::size_t>(p));
  for (int j = 0; j < p; ++j) {
    // Beads on runner j in ascending row order; the one in row r with k beads
    // above it on the runner sees r − k gaps.
    std::vector<int> parts;
    int k = 0;
    for (int b : abacus.beads()) {
      if (b % p != j) continue;
      parts.push_back(b / p - k);
      ++k;
    }
    std::reverse(parts.begin(), parts.end());
    out.emplace_back(std::move(parts));
  }
  return out;
}

std::vector<Partition> p_quotient(const Partition& lambda, OddPrime p, int s) {
  return p_quotient(from_partition(lambda, p, s));
}

std::vector<Partition> p_quotient(const Partition& lambda, OddPrime p) {
  return p_quotient(from_partition(lambda, p));
}

Abacus swap_runners(const Abacus& abacus, int runner) {
  const int p = abacus.p().value();
  if (runner < 1 || runner > p - 1)
    throw Error(Errc::BadRunnerIndex, std::to_string(runner) + " not in 1.." + std::to_string(p - 1));
  std::vector<int> beads;
  beads.reserve(abacus.beads().size());
  for (int b : abacus.beads()) {
    const int j = b % p;
    if (j == runner - 1)
      beads.push_back(b + 1);
    else if (j == runner)
      beads.push_back(b - 1);
    else
      beads.push_back(b);
  }
  return Abacus(abacus.p(), std::move(beads));
}

Abacus add_full_row(const Abacus& abacus) {
  const int p = abacus.p().value();
  std::vector<int> beads;
  for (int j = 0; j < p; ++j) beads.push_back(j);
  for (int b : abacus.beads()) beads.push_back(b + p);
  return Abacus(abacus.p(), std::move(beads));
}

std::vector<Partition> p_cores_of(int n, OddPrime p, int cap) {
  std::vector<Partition> out;
  for (auto& lambda : partitions_of(n, cap))
    if (is_p_core(lambda, p)) out.push_back(std::move(lambda));
  return out;
}

}  // namespace spechtlab
