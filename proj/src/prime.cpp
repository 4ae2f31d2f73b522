#include "spechtlab/prime.hpp"

#include <string>

#include "spechtlab/error.hpp"

namespace spechtlab {

bool is_prime(int n) noexcept {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

OddPrime::OddPrime(int p) : p_(p) {
  if (p == 2) throw Error(Errc::UnsupportedPrime, "p = 2 is not supported");
  if (!is_prime(p)) throw Error(Errc::InvalidPrime, std::to_string(p) + " is not an odd prime");
}

}  // namespace spechtlab
