#include <doctest.h>

#include "oracles.hpp"
#include "spechtlab/abacus.hpp"
#include "spechtlab/error.hpp"
#include "spechtlab/mullineux.hpp"
#include "spechtlab/padic.hpp"

using namespace spechtlab;

TEST_CASE("symbols") {
  const OddPrime p(3);
  const MullineuxSymbol s = mullineux_symbol(Partition{2, 2}, p);
  CHECK(s.removed == std::vector<int>{3, 1});
  CHECK(s.rows == std::vector<int>{2, 1});
  CHECK(from_mullineux_symbol(s, p) == Partition{2, 2});
  CHECK(mullineux_symbol(Partition{}, p).removed.empty());
  CHECK_THROWS_AS(mullineux_symbol(Partition{1, 1, 1}, p), Error);
}

TEST_CASE("rim stripping") {
  const OddPrime p(3);
  Partition rest;
  CHECK(strip_p_rim(Partition{4}, p, rest) == 3);
  CHECK(rest == Partition{1});
  CHECK(strip_p_rim(Partition{2, 2}, p, rest) == 3);
  CHECK(rest == Partition{1});
}

TEST_CASE("map examples") {
  const OddPrime p(3);
  CHECK(mullineux_regular(Partition{2, 2}, p) == Partition{4});
  CHECK(mullineux_regular(Partition{4}, p) == Partition{2, 2});
  CHECK(mullineux_regular(Partition{1}, p) == Partition{1});
  CHECK(mullineux_restricted(Partition{3, 1}, p) == Partition{2, 1, 1});
  CHECK(mullineux_restricted(Partition{}, p) == Partition{});
  CHECK(mullineux_restricted(Partition{2, 2}, p) == Partition{1, 1, 1, 1});
  CHECK_THROWS_AS(mullineux_regular(Partition{1, 1, 1}, p), Error);
  CHECK_THROWS_AS(mullineux_restricted(Partition{4}, p), Error);
}

TEST_CASE("both maps are size-preserving involutions up to 14") {
  for (int pv : {3, 5}) {
    const OddPrime p(pv);
    for (int n = 0; n <= 14; ++n)
      for (const auto& l : partitions_of(n)) {
        if (is_p_regular(l, p)) {
          REQUIRE(from_mullineux_symbol(mullineux_symbol(l, p), p) == l);
          const Partition m = mullineux_regular(l, p);
          REQUIRE(m.size() == n);
          REQUIRE(is_p_regular(m, p));
          REQUIRE(mullineux_regular(m, p) == l);
        }
        if (is_p_restricted(l, p)) {
          const Partition m = mullineux_restricted(l, p);
          REQUIRE(m.size() == n);
          REQUIRE(is_p_restricted(m, p));
          REQUIRE(mullineux_restricted(m, p) == l);
        }
      }
  }
}

TEST_CASE("cores go to their conjugates") {
  for (int pv : {3, 5}) {
    const OddPrime p(pv);
    for (int n = 0; n <= 14; ++n)
      for (const auto& c : p_cores_of(n, p)) REQUIRE(mullineux_restricted(c, p) == conjugate(c));
  }
}

TEST_CASE("the map conjugates the core") {
  for (int pv : {3, 5}) {
    const OddPrime p(pv);
    for (int n = 0; n <= 12; ++n)
      for (const auto& l : partitions_of(n))
        if (is_p_restricted(l, p)) REQUIRE(p_core(mullineux_restricted(l, p), p) == conjugate(p_core(l, p)));
  }
}

TEST_CASE("agrees with the crystal description up to 12") {
  const OddPrime p(3);
  for (int n = 0; n <= 12; ++n)
    for (const auto& l : partitions_of(n))
      if (is_p_regular(l, p)) REQUIRE(mullineux_regular(l, p) == oracle::mullineux_by_crystal(l, 3));
}

TEST_CASE("regularization") {
  const OddPrime p(3);
  CHECK(regularize(Partition{1, 1, 1}, p) == Partition{2, 1});
  CHECK(regularize(Partition{1, 1, 1, 1}, p) == Partition{2, 2});
  CHECK(regularize(Partition{}, p) == Partition{});
  for (int pv : {3, 5}) {
    const OddPrime q(pv);
    for (int n = 0; n <= 12; ++n)
      for (const auto& l : partitions_of(n)) {
        const Partition r = regularize(l, q);
        REQUIRE(r.size() == n);
        REQUIRE(is_p_regular(r, q));
        if (is_p_regular(l, q)) REQUIRE(r == l);
        // The regularization dominates the original.
        REQUIRE(dominates(r, l));
      }
  }
}
