#include "spechtlab/partition.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "spechtlab/error.hpp"

namespace spechtlab {

namespace {

void check_non_negative(const std::vector<int>& parts) {
  for (int x : parts)
    if (x < 0) throw Error(Errc::InvalidPartition, "negative part " + std::to_string(x));
}

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Composition

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  check_non_negative(parts_);
}

int Composition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Composition::part(std::size_t i) const noexcept {
  return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0;
}

Composition Composition::normalized() const {
  std::vector<int> out;
  std::copy_if(parts_.begin(), parts_.end(), std::back_inserter(out), [](int x) { return x != 0; });
  return Composition(std::move(out));
}

Partition Composition::to_partition() const { return Partition(normalized().parts_); }

Partition Composition::sorted() const {
  auto v = normalized().parts_;
  std::sort(v.begin(), v.end(), std::greater<>());
  return Partition(std::move(v));
}

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw Error(Errc::InvalidPartition, join(parts_) + " has a non-positive interior part");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw Error(Errc::InvalidPartition, join(parts_) + " is not weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& inner) const noexcept {
  if (inner.length() > length()) return false;
  for (std::size_t i = 0; i < inner.length(); ++i)
    if (inner[i] > parts_[i]) return false;
  return true;
}

std::string Partition::str() const { return join(parts_); }

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

std::ostream& operator<<(std::ostream& os, const PartitionPair& p) {
  return os << '(' << p.left << '|' << p.right << ')';
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
  return h;
}

// ---------------------------------------------------------------------------
// Arithmetic

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> out(static_cast<std::size_t>(lambda[0]), 0);
  for (int row : lambda.parts())
    for (int j = 0; j < row; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

Composition add(const Composition& a, const Composition& b) {
  std::vector<int> out(std::max(a.length(), b.length()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.part(i + 1) + b.part(i + 1);
  return Composition(std::move(out));
}

Composition scale(int k, const Composition& a) {
  if (k < 1) throw Error(Errc::ZeroInput, "scale factor must be positive");
  std::vector<int> out = a.parts();
  for (int& x : out) x *= k;
  return Composition(std::move(out));
}

Composition subtract(const Composition& a, const Composition& b) {
  std::vector<int> out(std::max(a.length(), b.length()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.part(i + 1) - b.part(i + 1);
    if (out[i] < 0) throw Error(Errc::NotSubtractable, join(a.parts()) + " - " + join(b.parts()));
  }
  return Composition(std::move(out));
}

Composition divide(const Composition& a, int k) {
  if (k < 1) throw Error(Errc::ZeroInput, "divisor must be positive");
  std::vector<int> out = a.parts();
  for (int& x : out) {
    if (x % k != 0)
      throw Error(Errc::NotDivisible, join(a.parts()) + " / " + std::to_string(k));
    x /= k;
  }
  return Composition(std::move(out));
}

Partition add(const Partition& a, const Partition& b) {
  return add(a.composition(), b.composition()).to_partition();
}

Partition scale(int k, const Partition& a) { return scale(k, a.composition()).to_partition(); }

Partition subtract(const Partition& a, const Partition& b) {
  return subtract(a.composition(), b.composition()).to_partition();
}

Partition divide(const Partition& a, int k) { return divide(a.composition(), k).to_partition(); }

Partition concat(const Partition& a, const Partition& b) {
  std::vector<int> v = a.parts();
  v.insert(v.end(), b.parts().begin(), b.parts().end());
  return Composition(std::move(v)).sorted();
}

int hook_length(const Partition& lambda, int row, int col) {
  if (row < 1 || col < 1 || col > lambda.part(static_cast<std::size_t>(row)))
    throw Error(Errc::NodeOutsideDiagram, "(" + std::to_string(row) + "," + std::to_string(col) +
                                              ") not in " + lambda.str());
  int leg = 0;
  for (std::size_t i = static_cast<std::size_t>(row) + 1; lambda.part(i) >= col; ++i) ++leg;
  return lambda.part(static_cast<std::size_t>(row)) - col + leg + 1;
}

int p_residue(int row, int col, OddPrime p) noexcept {
  int r = (col - row) % p.value();
  return r < 0 ? r + p.value() : r;
}

std::vector<int> p_content(const Partition& lambda, OddPrime p) {
  std::vector<int> c(static_cast<std::size_t>(p.value()), 0);
  for (std::size_t i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j)
      ++c[static_cast<std::size_t>(p_residue(static_cast<int>(i), j, p))];
  return c;
}

bool dominates(const Partition& lambda, const Partition& alpha) {
  if (lambda.size() != alpha.size())
    throw Error(Errc::SizeMismatch, lambda.str() + " vs " + alpha.str());
  int sl = 0, sa = 0;
  const std::size_t len = std::max(lambda.length(), alpha.length());
  for (std::size_t k = 1; k <= len; ++k) {
    sl += lambda.part(k);
    sa += alpha.part(k);
    if (sl < sa) return false;
  }
  return true;
}

bool dominates_pair(const PartitionPair& a, const PartitionPair& b) {
  if (a.size() != b.size()) throw Error(Errc::SizeMismatch, "pairs of different sizes");
  const std::size_t len = std::max({a.left.length(), a.right.length(), b.left.length(), b.right.length()});
  int sl = 0, sa = 0;
  int zl = a.left.size(), zb = b.left.size();
  for (std::size_t k = 1; k <= len; ++k) {
    sl += a.left.part(k);
    sa += b.left.part(k);
    zl += a.right.part(k);
    zb += b.right.part(k);
    if (sl < sa || zl < zb) return false;
  }
  return true;
}

int p_valuation(long long m, int p) {
  if (m < 1) throw Error(Errc::ZeroInput, "valuation of a non-positive integer");
  int v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

namespace {

void check_cap(int n, int cap) {
  if (n < 0) throw Error(Errc::InvalidPartition, "negative size");
  if (n > cap)
    throw Error(Errc::SizeCapExceeded, std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

void generate(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int x = std::min(remaining, max_part); x >= 1; --x) {
    cur.push_back(x);
    generate(remaining - x, x, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int cap) {
  check_cap(n, cap);
  std::vector<Partition> out;
  std::vector<int> cur;
  generate(n, n, cur, out);
  return out;
}

std::vector<PartitionPair> pairs_of(int n, int cap) {
  check_cap(n, cap);
  std::vector<PartitionPair> out;
  for (int k = n; k >= 0; --k)
    for (const auto& l : partitions_of(k, cap))
      for (const auto& r : partitions_of(n - k, cap)) out.push_back({l, r});
  return out;
}

Partition hook_partition(int n, int r) {
  if (n < 1 || r < 0 || r >= n) throw Error(Errc::InvalidPartition, "hook needs 0 <= r < n");
  std::vector<int> v{n - r};
  v.insert(v.end(), static_cast<std::size_t>(r), 1);
  return Partition(std::move(v));
}

}  // namespace spechtlab
