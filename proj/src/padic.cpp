#include "spechtlab/padic.hpp"

#include "spechtlab/error.hpp"

namespace spechtlab {

bool is_p_regular(const Partition& lambda, OddPrime p) {
  int run = 0;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    run = (i > 0 && lambda[i] == lambda[i - 1]) ? run + 1 : 1;
    if (run >= p.value()) return false;
  }
  return true;
}

bool is_p_restricted(const Partition& lambda, OddPrime p) {
  for (std::size_t i = 1; i <= lambda.length(); ++i)
    if (lambda.part(i) - lambda.part(i + 1) >= p.value()) return false;
  return true;
}

Partition PadicExpansion::term(int i) const {
  return i >= 0 && i < static_cast<int>(parts.size()) ? parts[static_cast<std::size_t>(i)] : Partition{};
}

Partition restricted_part(const Partition& lambda, OddPrime p) {
  std::vector<int> rows = lambda.parts();
  // A horizontal rim p-hook leaves row i only while the row stays >= row i+1.
  for (std::size_t i = rows.size(); i-- > 0;) {
    const int below = i + 1 < rows.size() ? rows[i + 1] : 0;
    while (rows[i] - p.value() >= below) rows[i] -= p.value();
  }
  return Partition(std::move(rows));
}

PadicExpansion expand(const Partition& lambda, OddPrime p) {
  PadicExpansion e{p, {}};
  Partition rest = lambda;
  do {
    Partition head = restricted_part(rest, p);
    rest = divide(subtract(rest, head), p.value());
    e.parts.push_back(std::move(head));
  } while (!rest.empty());
  return e;
}

Partition reconstruct(const PadicExpansion& e) {
  Partition out;
  long long factor = 1;
  for (const auto& term : e.parts) {
    if (!is_p_restricted(term, e.p))
      throw Error(Errc::InvalidExpansion, term.str() + " is not p-restricted");
    out = add(out, scale(static_cast<int>(factor), term));
    factor *= e.p.value();
  }
  return out;
}

}  // namespace spechtlab
