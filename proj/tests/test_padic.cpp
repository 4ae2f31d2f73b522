#include <doctest.h>

#include "oracles.hpp"
#include "spechtlab/error.hpp"
#include "spechtlab/padic.hpp"

using namespace spechtlab;

TEST_CASE("regular and restricted predicates") {
  const OddPrime p(3);
  CHECK(is_p_regular(Partition{3, 1}, p));
  CHECK(is_p_restricted(Partition{3, 1}, p));
  CHECK_FALSE(is_p_regular(Partition{1, 1, 1}, p));
  CHECK(is_p_restricted(Partition{1, 1, 1}, p));
  CHECK_FALSE(is_p_restricted(Partition{4}, p));
  CHECK(is_p_regular(Partition{}, p));
  CHECK(is_p_restricted(Partition{}, p));
}

TEST_CASE("restricted exactly when the conjugate is regular") {
  for (int pv : {3, 5}) {
    const OddPrime p(pv);
    for (int n = 0; n <= 14; ++n)
      for (const auto& l : partitions_of(n)) {
        REQUIRE(is_p_restricted(l, p) == is_p_regular(conjugate(l), p));
        REQUIRE(is_p_restricted(l, p) == oracle::restricted(l.parts(), pv));
      }
  }
}

TEST_CASE("expansion examples") {
  const OddPrime p(3);
  CHECK(expand(Partition{14, 3}, p).parts == std::vector<Partition>{Partition{2}, Partition{1, 1}, Partition{1}});
  CHECK(expand(Partition{31, 4}, p).parts ==
        std::vector<Partition>{Partition{1, 1}, Partition{1, 1}, Partition{}, Partition{1}});
  CHECK(expand(Partition{}, p).parts == std::vector<Partition>{Partition{}});
  CHECK(expand(Partition{}, p).top() == 0);
  CHECK(expand(Partition{2, 1}, p).parts == std::vector<Partition>{Partition{2, 1}});
  CHECK(restricted_part(Partition{14, 3}, p) == Partition{2});
  CHECK(expand(Partition{14, 3}, p).term(7) == Partition{});
}

TEST_CASE("reconstruct rejects terms that are not restricted") {
  const OddPrime p(3);
  CHECK_THROWS_AS(reconstruct(PadicExpansion{p, {Partition{4}}}), Error);
  CHECK(reconstruct(PadicExpansion{p, {Partition{1}, Partition{1}}}) == Partition{4});
}

TEST_CASE("expansion round trip up to 14") {
  for (int pv : {3, 5}) {
    const OddPrime p(pv);
    for (int n = 0; n <= 14; ++n)
      for (const auto& l : partitions_of(n)) {
        const PadicExpansion e = expand(l, p);
        REQUIRE(reconstruct(e) == l);
        for (const auto& t : e.parts) REQUIRE(is_p_restricted(t, p));
        if (!l.empty()) REQUIRE_FALSE(e.parts.back().empty());
        if (is_p_restricted(l, p)) REQUIRE(e.parts == std::vector<Partition>{l});
      }
  }
}

TEST_CASE("the expansion is the only one") {
  for (int pv : {3, 5})
    for (int n = 0; n <= 8; ++n)
      for (const auto& l : partitions_of(n)) REQUIRE(oracle::count_expansions(l.parts(), pv) == 1);
}

TEST_CASE("shift law") {
  const OddPrime p(3);
  for (int a = 0; a <= 6; ++a)
    for (const auto& nu : partitions_of(a)) {
      if (!is_p_restricted(nu, p)) continue;
      for (int b = 0; b <= 4; ++b)
        for (const auto& mu : partitions_of(b)) {
          const auto e = expand(add(nu, scale(3, mu)), p);
          REQUIRE(e.term(0) == nu);
          if (mu.empty()) {
            REQUIRE(e.top() == 0);
          } else {
            const std::vector<Partition> tail(e.parts.begin() + 1, e.parts.end());
            REQUIRE(tail == expand(mu, p).parts);
          }
        }
    }
}
