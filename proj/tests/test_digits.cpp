#include "doctest.h"
#include "galscaf/digits.hpp"
#include "oracles.hpp"

using namespace galscaf;

TEST_CASE("digit order agrees with binomials mod p (exhaustive, small)") {
  // Full Lucas sweep lives in the acceptance suite; here a p = 5 slice.
  const std::int64_t p = 5, pn = 125;
  for (std::int64_t t = 0; t < pn; t += 7) {
    for (std::int64_t s = 0; s < pn; ++s) {
      CHECK(preceq(p, s, t) == (oracles::binom_mod_p(p, t, s) != 0));
    }
  }
}

TEST_CASE("digit order spot values") {
  CHECK(preceq(2, 1, 3));
  CHECK(preceq(2, 2, 3));
  CHECK(!preceq(2, 1, 2));  // C(2,1) = 2 is even
}

TEST_CASE("weighted digit sum pairs digit i with break b_{n-i}") {
  const DigitTables d23(2, 2, {1, 3});
  CHECK(d23.bfun(0) == 0);
  CHECK(d23.bfun(1) == 3);
  CHECK(d23.bfun(2) == 2);
  CHECK(d23.bfun(3) == 5);

  const DigitTables d31(3, 1, {1});
  for (std::int64_t s = 0; s < 3; ++s) CHECK(d31.bfun(s) == s);
}

TEST_CASE("inverse permutation tables") {
  const DigitTables d23(2, 2, {1, 3});
  for (std::int64_t s = 0; s < 4; ++s) CHECK(d23.afun(s) == s);  // -b(s) = s mod 4

  const DigitTables d31(3, 1, {1});
  CHECK(d31.afun(0) == 0);
  CHECK(d31.afun(1) == 2);
  CHECK(d31.afun(2) == 1);

  const DigitTables d25(2, 2, {1, 5});
  CHECK(d25.afun(0) == 0);
  CHECK(d25.afun(1) == 3);
  CHECK(d25.afun(2) == 2);
  CHECK(d25.afun(3) == 1);
}

TEST_CASE("a inverts r(-b(.)) for every valid break vector") {
  for (std::int64_t p : {2, 3, 5}) {
    for (std::int64_t b1 = 1; b1 <= 7; ++b1) {
      if (b1 % p == 0) continue;
      for (std::int64_t b2 = b1; b2 <= 9; ++b2) {
        if (b2 % p == 0) continue;
        const DigitTables d(p, 2, {b1, b2});
        for (std::int64_t s = 0; s < d.pn(); ++s)
          CHECK(d.afun(d.rfun(-d.bfun(s))) == s);
      }
    }
  }
}

TEST_CASE("p dividing a break is rejected") {
  CHECK_THROWS_AS(DigitTables(3, 1, {3}), InvalidInput);
  CHECK_THROWS_AS(DigitTables(2, 2, {1, 4}), InvalidInput);
}

TEST_CASE("least nonnegative residues") {
  const DigitTables d(2, 2, {1, 3});
  CHECK(d.rfun(-5) == 3);
  CHECK(d.rfun(0) == 0);
  for (std::int64_t k = -3; k <= 3; ++k)
    for (std::int64_t j = 0; j < 4; ++j) CHECK(d.rfun(4 * k + j) == j);
}

TEST_CASE("weighted sum is strictly monotone along digit-order chains") {
  const DigitTables d(3, 2, {2, 5});
  for (std::int64_t s = 0; s < 9; ++s)
    for (std::int64_t t = 0; t < 9; ++t)
      if (s != t && preceq(3, s, t)) CHECK(d.bfun(s) < d.bfun(t));
}
