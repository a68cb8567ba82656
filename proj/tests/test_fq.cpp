#include "doctest.h"
#include "galscaf/fq.hpp"

using namespace galscaf;

TEST_CASE("prime fields behave like Z/p") {
  for (std::int64_t p : {2, 3, 5}) {
    const FqField& F = FqField::get(p, 1);
    CHECK(F.q() == p);
    for (std::int64_t a = 0; a < p; ++a) {
      for (std::int64_t b = 0; b < p; ++b) {
        CHECK(F.add(static_cast<FqElem>(a), static_cast<FqElem>(b)) == (a + b) % p);
        CHECK(F.mul(static_cast<FqElem>(a), static_cast<FqElem>(b)) == (a * b) % p);
      }
      if (a != 0) CHECK(F.mul(static_cast<FqElem>(a), F.inv(static_cast<FqElem>(a))) == 1);
    }
    CHECK(F.from_int(-1) == p - 1);
  }
}

TEST_CASE("field axioms hold for every supported table") {
  for (auto [p, m] : {std::pair<std::int64_t, int>{2, 2}, {3, 2}, {5, 2}}) {
    const FqField& F = FqField::get(p, m);
    const std::int64_t q = F.q();
    for (std::int64_t a = 0; a < q; ++a) {
      const FqElem x = static_cast<FqElem>(a);
      CHECK(F.add(x, F.neg(x)) == 0);
      CHECK(F.mul(x, F.one()) == x);
      if (a != 0) CHECK(F.mul(x, F.inv(x)) == 1);
      for (std::int64_t b = 0; b < q; ++b) {
        const FqElem y = static_cast<FqElem>(b);
        CHECK(F.add(x, y) == F.add(y, x));
        CHECK(F.mul(x, y) == F.mul(y, x));
        for (std::int64_t c = 0; c < q; ++c) {
          const FqElem z = static_cast<FqElem>(c);
          CHECK(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
        }
      }
    }
  }
}

TEST_CASE("frobenius is an additive automorphism fixing the prime field") {
  for (auto [p, m] : {std::pair<std::int64_t, int>{2, 2}, {3, 2}, {5, 2}, {5, 1}}) {
    const FqField& F = FqField::get(p, m);
    for (std::int64_t a = 0; a < F.q(); ++a) {
      const FqElem x = static_cast<FqElem>(a);
      CHECK(F.frobenius(x) == F.pow(x, p));
      CHECK(F.frobenius_inv(F.frobenius(x)) == x);
      for (std::int64_t b = 0; b < F.q(); ++b) {
        const FqElem y = static_cast<FqElem>(b);
        CHECK(F.frobenius(F.add(x, y)) == F.add(F.frobenius(x), F.frobenius(y)));
        CHECK(F.frobenius(F.mul(x, y)) == F.mul(F.frobenius(x), F.frobenius(y)));
      }
    }
    for (std::int64_t a = 0; a < p; ++a)
      CHECK(F.frobenius(static_cast<FqElem>(a)) == a);
  }
}

TEST_CASE("pinned moduli match the recorded tables") {
  CHECK(FqField::get(2, 2).modulus() == std::vector<int>{1, 1, 1});
  CHECK(FqField::get(3, 2).modulus() == std::vector<int>{2, 2, 1});
  CHECK(FqField::get(5, 2).modulus() == std::vector<int>{2, 4, 1});
  CHECK_THROWS_AS(FqField::get(11, 3), InvalidInput);
}

TEST_CASE("F_9 spot checks against the modulus z^2 + 2z + 2") {
  const FqField& F = FqField::get(3, 2);
  // z is encoded as 3; z^2 = -2z - 2 = z + 1 -> 3 + 1 = 4.
  CHECK(F.mul(3, 3) == 4);
  // (1 + z)(2 + z) = 2 + 3z + z^2 = 2 + (z + 1) = z mod 3, encoded 3.
  CHECK(F.mul(4, 5) == 3);
}
