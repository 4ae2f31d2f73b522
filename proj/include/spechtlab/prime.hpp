#pragma once

namespace spechtlab {

bool is_prime(int n) noexcept;

/// An odd prime p >= 3; the characteristic every p-dependent operation works in.
/// Construction from 2 throws Errc::UnsupportedPrime, from any other non-prime
/// Errc::InvalidPrime.
class OddPrime {
 public:
  explicit OddPrime(int p);

  int value() const noexcept { return p_; }
  operator int() const noexcept { return p_; }

  friend bool operator==(OddPrime, OddPrime) = default;

 private:
  int p_;
};

}  // namespace spechtlab
