#include "spechtlab/tableaux.hpp"

#include <limits>
#include <map>

#include "spechtlab/error.hpp"
#include "spechtlab/prime.hpp"

namespace spechtlab {

std::string SignedEntry::str() const { return std::to_string(value) + (primed ? "'" : ""); }

std::string SignedTableau::str() const {
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += " / ";
    for (std::size_t j = 0; j < rows[i].size(); ++j) out += (j ? " " : "") + rows[i][j].str();
  }
  return out;
}

namespace {

class SignedFiller {
 public:
  SignedFiller(const Partition& shape, const PartitionPair& type, bool keep)
      : shape_(shape), keep_(keep) {
    for (int x : type.left.parts()) unprimed_.push_back(x);
    for (int x : type.right.parts()) primed_.push_back(x);
    for (std::size_t i = 0; i < shape.length(); ++i)
      for (int j = 0; j < shape[i]; ++j) cells_.push_back({static_cast<int>(i), j});
    grid_.resize(shape.length());
    for (std::size_t i = 0; i < shape.length(); ++i) grid_[i].resize(static_cast<std::size_t>(shape[i]));
  }

  void run() { fill(0); }
  std::uint64_t count() const { return count_; }
  std::vector<SignedTableau>& found() { return found_; }

 private:
  bool fits(int r, int c, SignedEntry e) const {
    const SignedEntry* left = c > 0 ? &grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] : nullptr;
    const SignedEntry* up = r > 0 ? &grid_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] : nullptr;
    if (!e.primed) {
      if (left && (left->primed || left->value > e.value)) return false;
      if (up && (up->primed || up->value >= e.value)) return false;
    } else {
      if (left && left->primed && left->value >= e.value) return false;
      if (up && up->primed && up->value > e.value) return false;
    }
    return true;
  }

  void fill(std::size_t k) {
    if (k == cells_.size()) {
      ++count_;
      if (keep_) {
        SignedTableau t{shape_, grid_};
        found_.push_back(std::move(t));
      }
      return;
    }
    const auto [r, c] = cells_[k];
    const std::size_t top = std::max(unprimed_.size(), primed_.size());
    for (std::size_t v = 0; v < top; ++v) {
      for (bool primed : {false, true}) {
        auto& pool = primed ? primed_ : unprimed_;
        if (v >= pool.size() || pool[v] == 0) continue;
        const SignedEntry e{static_cast<int>(v) + 1, primed};
        if (!fits(r, c, e)) continue;
        --pool[v];
        grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = e;
        fill(k + 1);
        ++pool[v];
      }
    }
  }

  Partition shape_;
  bool keep_;
  std::vector<int> unprimed_;
  std::vector<int> primed_;
  std::vector<std::pair<int, int>> cells_;
  std::vector<std::vector<SignedEntry>> grid_;
  std::uint64_t count_ = 0;
  std::vector<SignedTableau> found_;
};

void check_sizes(const Partition& lambda, const PartitionPair& type) {
  if (lambda.size() != type.size())
    throw Error(Errc::SizeMismatch, "shape " + lambda.str() + " has size " + std::to_string(lambda.size()) +
                                        ", type has size " + std::to_string(type.size()));
}

}  // namespace

std::vector<SignedTableau> enumerate_signed(const Partition& lambda, const PartitionPair& type) {
  check_sizes(lambda, type);
  SignedFiller f(lambda, type, true);
  f.run();
  return std::move(f.found());
}

std::uint64_t count_signed(const Partition& lambda, const PartitionPair& type) {
  check_sizes(lambda, type);
  SignedFiller f(lambda, type, false);
  f.run();
  return f.count();
}

std::uint64_t kostka(const Partition& lambda, const Partition& alpha) {
  return count_signed(lambda, {alpha, {}});
}

namespace {

class LrFiller {
 public:
  LrFiller(const Partition& gamma, const Partition& xi, const Partition& lambda)
      : gamma_(gamma), lambda_(lambda), remaining_(xi.parts()), used_(xi.length(), 0) {
    grid_.resize(lambda.length());
    for (std::size_t i = 0; i < lambda.length(); ++i) {
      grid_[i].assign(static_cast<std::size_t>(lambda[i]), 0);
      for (int j = lambda[i] - 1; j >= gamma.part(i + 1); --j) cells_.push_back({static_cast<int>(i), j});
    }
  }

  std::uint64_t run() {
    fill(0);
    return count_;
  }

 private:
  void fill(std::size_t k) {
    if (k == cells_.size()) {
      ++count_;
      return;
    }
    const auto [r, c] = cells_[k];
    const std::size_t ri = static_cast<std::size_t>(r);
    const std::size_t ci = static_cast<std::size_t>(c);
    const bool has_right = c + 1 < lambda_[ri];
    const bool has_up = r > 0 && c >= gamma_.part(ri);
    for (std::size_t v = 0; v < remaining_.size(); ++v) {
      if (remaining_[v] == 0) continue;
      const int val = static_cast<int>(v) + 1;
      if (has_right && grid_[ri][ci + 1] < val) continue;
      if (has_up && grid_[ri - 1][ci] >= val) continue;
      if (v > 0 && used_[v] + 1 > used_[v - 1]) continue;
      --remaining_[v];
      ++used_[v];
      grid_[ri][ci] = val;
      fill(k + 1);
      grid_[ri][ci] = 0;
      --used_[v];
      ++remaining_[v];
    }
  }

  Partition gamma_;
  Partition lambda_;
  std::vector<int> remaining_;
  std::vector<int> used_;
  std::vector<std::pair<int, int>> cells_;
  std::vector<std::vector<int>> grid_;
  std::uint64_t count_ = 0;
};

}  // namespace

std::uint64_t lr_coefficient(const Partition& gamma, const Partition& xi, const Partition& lambda) {
  if (gamma.size() + xi.size() != lambda.size() || !lambda.contains(gamma)) return 0;
  return LrFiller(gamma, xi, lambda).run();
}

std::uint64_t specht_dimension(const Partition& lambda) {
  std::map<int, int> exponent;
  auto factor_into = [&](int m, int sign) {
    for (int q = 2; q * q <= m; ++q)
      while (m % q == 0) {
        exponent[q] += sign;
        m /= q;
      }
    if (m > 1) exponent[m] += sign;
  };
  for (int k = 2; k <= lambda.size(); ++k) factor_into(k, 1);
  for (std::size_t i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) factor_into(hook_length(lambda, static_cast<int>(i), j), -1);
  std::uint64_t out = 1;
  for (const auto& [q, e] : exponent)
    for (int t = 0; t < e; ++t) {
      if (out > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(q))
        throw Error(Errc::SizeCapExceeded, "dimension of " + lambda.str() + " overflows 64 bits");
      out *= static_cast<std::uint64_t>(q);
    }
  return out;
}

std::uint64_t kostka_lr_sum(const Partition& lambda, const PartitionPair& type) {
  check_sizes(lambda, type);
  std::uint64_t total = 0;
  for (const auto& gamma : partitions_of(type.left.size())) {
    const std::uint64_t a = kostka(gamma, type.left);
    if (a == 0) continue;
    for (const auto& xi : partitions_of(type.right.size())) {
      const std::uint64_t b = kostka(conjugate(xi), type.right);
      if (b == 0) continue;
      total += a * b * lr_coefficient(gamma, xi, lambda);
    }
  }
  return total;
}

}  // namespace spechtlab
