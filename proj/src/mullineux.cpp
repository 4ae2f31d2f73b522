#include "spechtlab/mullineux.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "spechtlab/error.hpp"
#include "spechtlab/padic.hpp"

namespace spechtlab {

int strip_p_rim(const Partition& lambda, OddPrime p, Partition& rest) {
  std::vector<int> rows = lambda.parts();
  const std::size_t r = rows.size();
  int removed = 0;
  int in_run = 0;
  for (std::size_t i = 0; i < r; ++i) {
    const int right = lambda[i];
    const int left = i + 1 < r ? lambda[i + 1] : 1;
    const int available = right - left + 1;
    const int need = p.value() - in_run;
    if (available >= need) {
      rows[i] = right - need;
      removed += need;
      in_run = 0;
    } else {
      rows[i] = left - 1;
      removed += available;
      in_run += available;
    }
  }
  rest = Partition(std::move(rows));
  return removed;
}

MullineuxSymbol mullineux_symbol(const Partition& lambda, OddPrime p) {
  if (!is_p_regular(lambda, p)) throw Error(Errc::NotRegular, lambda.str());
  MullineuxSymbol s;
  Partition cur = lambda;
  while (!cur.empty()) {
    Partition next;
    s.rows.push_back(static_cast<int>(cur.length()));
    s.removed.push_back(strip_p_rim(cur, p, next));
    cur = std::move(next);
  }
  return s;
}

namespace {

/// Finds every λ with `rows` rows whose p-rim has `removed` nodes and leaves `inner`.
class RimInverter {
 public:
  RimInverter(const Partition& inner, int removed, int rows, OddPrime p)
      : p_(p.value()), rows_(rows), total_(removed) {
    for (int i = 1; i <= rows; ++i) mu_.push_back(inner.part(static_cast<std::size_t>(i)));
    ok_ = static_cast<int>(inner.length()) <= rows;
  }

  std::vector<Partition> solve() {
    if (!ok_) return {};
    search(0, 0, false, total_);
    return solutions_;
  }

 private:
  // forced: row i must have length mu[i−1] + 1 because the previous run continued;
  // otherwise the row is bounded above by mu[i−1] + 1.
  bool search(int i, int in_run, bool forced, int remaining) {
    const auto key = std::make_tuple(i, in_run, forced, remaining);
    if (dead_.count(key)) return false;
    const int mu_i = mu_[static_cast<std::size_t>(i)];
    int lo = mu_i + 1;
    int hi = mu_i + remaining;
    if (i > 0) hi = std::min(hi, mu_[static_cast<std::size_t>(i - 1)] + 1);
    if (forced) lo = hi = mu_[static_cast<std::size_t>(i - 1)] + 1;
    bool found = false;
    for (int len = lo; len <= hi; ++len) {
      const int t = len - mu_i;
      if (t < 1 || t > remaining || in_run + t > p_) continue;
      cur_.push_back(len);
      const bool last = i + 1 == rows_;
      if (in_run + t == p_) {
        if (last) {
          if (remaining == t) found |= record();
        } else {
          found |= search(i + 1, 0, false, remaining - t);
        }
      } else if (last) {
        if (mu_i == 0 && remaining == t) found |= record();
      } else {
        found |= search(i + 1, in_run + t, true, remaining - t);
      }
      cur_.pop_back();
    }
    if (!found) dead_.insert(key);
    return found;
  }

  bool record() {
    solutions_.emplace_back(cur_);
    return true;
  }

  int p_;
  int rows_;
  int total_;
  bool ok_ = true;
  std::vector<int> mu_;
  std::vector<int> cur_;
  std::vector<Partition> solutions_;
  std::set<std::tuple<int, int, bool, int>> dead_;
};

}  // namespace

Partition from_mullineux_symbol(const MullineuxSymbol& symbol, OddPrime p) {
  if (symbol.removed.size() != symbol.rows.size())
    throw Error(Errc::InvalidPartition, "malformed Mullineux symbol");
  Partition cur;
  for (std::size_t k = symbol.removed.size(); k-- > 0;) {
    std::vector<Partition> candidates;
    for (auto& c : RimInverter(cur, symbol.removed[k], symbol.rows[k], p).solve()) {
      Partition rest;
      if (is_p_regular(c, p) && strip_p_rim(c, p, rest) == symbol.removed[k] && rest == cur)
        candidates.push_back(std::move(c));
    }
    if (candidates.size() != 1)
      throw Error(Errc::InvalidPartition, "symbol column " + std::to_string(k) + " has " +
                                              std::to_string(candidates.size()) + " preimages");
    cur = std::move(candidates.front());
  }
  return cur;
}

Partition mullineux_regular(const Partition& lambda, OddPrime p) {
  MullineuxSymbol s = mullineux_symbol(lambda, p);
  for (std::size_t k = 0; k < s.removed.size(); ++k) {
    const int eps = s.removed[k] % p.value() == 0 ? 0 : 1;
    s.rows[k] = s.removed[k] - s.rows[k] + eps;
  }
  return from_mullineux_symbol(s, p);
}

Partition mullineux_restricted(const Partition& lambda, OddPrime p) {
  if (!is_p_restricted(lambda, p)) throw Error(Errc::NotRestricted, lambda.str());
  return conjugate(mullineux_regular(conjugate(lambda), p));
}

Partition regularize(const Partition& alpha, OddPrime p) {
  const int step = p.value() - 1;
  std::map<int, int> ladder_sizes;
  for (std::size_t i = 1; i <= alpha.length(); ++i)
    for (int j = 1; j <= alpha.part(i); ++j) ++ladder_sizes[static_cast<int>(i) + step * (j - 1)];
  std::vector<int> rows;
  for (const auto& [ladder, count] : ladder_sizes) {
    // Ladder positions from the top: column jmax, jmax − 1, …
    int col = (ladder - 1) / step + 1;
    for (int placed = 0; placed < count; ++placed, --col) {
      const int row = ladder - step * (col - 1);
      if (static_cast<int>(rows.size()) < row) rows.resize(static_cast<std::size_t>(row), 0);
      rows[static_cast<std::size_t>(row - 1)] = std::max(rows[static_cast<std::size_t>(row - 1)], col);
    }
  }
  Partition out(rows);
  if (out.size() != alpha.size())
    throw Error(Errc::InvalidPartition, "regularization of " + alpha.str() + " is not a diagram");
  return out;
}

}  // namespace spechtlab
