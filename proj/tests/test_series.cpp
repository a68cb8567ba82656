#include "doctest.h"
#include "galscaf/rng.hpp"
#include "galscaf/series.hpp"

using namespace galscaf;

namespace {

Series random_series(Rng& rng, const FqField& F, std::int64_t cap) {
  Series s = Series::zero(F, cap);
  const int terms = 1 + static_cast<int>(rng.below(4));
  for (int i = 0; i < terms; ++i) {
    const std::int64_t e = rng.range(-6, cap - 1);
    const FqElem c = static_cast<FqElem>(rng.below(static_cast<std::uint64_t>(F.q())));
    s = s + Series::monomial(F, c, e, cap);
  }
  return s;
}

}  // namespace

TEST_CASE("additive inverse gives zero up to cap") {
  const FqField& F = FqField::get(3, 1);
  const Series t = Series::monomial(F, 1, 1, 10);
  const Series sum = t + (-t);
  CHECK(sum.is_zero());
  CHECK(sum.cap() == 10);
}

TEST_CASE("characteristic collapses coefficients") {
  const FqField& F2 = FqField::get(2, 1);
  const Series one_plus_t = Series::from_terms(F2, {{0, 1}, {1, 1}});
  const Series t = Series::monomial(F2, 1, 1);
  const Series sum = one_plus_t + t;  // 1 + 2t = 1
  CHECK(sum.terms() == std::vector<std::pair<std::int64_t, FqElem>>{{0, 1}});
}

TEST_CASE("precision propagates through sums") {
  const FqField& F = FqField::get(3, 1);
  const Series a = Series::monomial(F, 1, 0, 10);
  const Series b = Series::monomial(F, 1, 1, 5);
  CHECK((a + b).cap() == 5);
}

TEST_CASE("product examples and valuation additivity") {
  const FqField& F = FqField::get(5, 1);
  const Series a = Series::from_terms(F, {{1, 1}, {2, 1}});  // t + t^2
  const Series b = Series::monomial(F, 1, -1);
  const Series prod = a * b;  // 1 + t
  CHECK(prod.terms() == std::vector<std::pair<std::int64_t, FqElem>>{{0, 1}, {1, 1}});

  const Series x = Series::monomial(F, 2, 2, 30);
  const Series y = Series::from_terms(F, {{3, 1}, {4, 3}}, 30);
  CHECK((x * y).exact_val() == 5);
}

TEST_CASE("product cap follows min(cap_a + v_b, cap_b + v_a)") {
  const FqField& F = FqField::get(3, 1);
  const Series a = Series::from_terms(F, {{1, 1}, {2, 1}}, 10);
  const Series b = Series::monomial(F, 1, -1, 5);
  CHECK((a * b).cap() == 6);  // min(10 - 1, 5 + 1)
}

TEST_CASE("inverse roundtrip for random units and monomials") {
  const FqField& F = FqField::get(3, 1);
  CHECK(Series::monomial(F, 1, 2).inverse().terms() ==
        std::vector<std::pair<std::int64_t, FqElem>>{{-2, 1}});
  // 1/(1+t) = 1 - t + t^2 - ...
  const Series g = Series::from_terms(F, {{0, 1}, {1, 1}}, 6).inverse();
  CHECK(g.at(0) == 1);
  CHECK(g.at(1) == 2);
  CHECK(g.at(2) == 1);
  CHECK(g.at(3) == 2);

  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Series s = random_series(rng, FqField::get(5, 1), 20);
    if (s.is_zero()) continue;
    const Series prod = s * s.inverse();
    const Series diff = prod - Series::constant(FqField::get(5, 1), 1);
    CHECK(diff.is_zero());
    CHECK(diff.cap() >= 1);
  }
}

TEST_CASE("inverse of zero-up-to-cap fails loudly") {
  const FqField& F = FqField::get(2, 1);
  CHECK_THROWS_AS(Series::zero(F, 12).inverse(), InsufficientPrecision);
}

TEST_CASE("valuation reporting") {
  const FqField& F = FqField::get(3, 1);
  CHECK(Series::from_terms(F, {{3, 1}, {5, 1}}).exact_val() == 3);
  const Valuation v = Series::zero(F, 7).val();
  CHECK(!v.is_exact());
  CHECK(v.lower_bound() == 7);
  // pi^m * unit
  const Series u = Series::from_terms(F, {{0, 2}, {1, 1}}, 9);
  CHECK((Series::monomial(F, 1, 4) * u).exact_val() == 4);
}

TEST_CASE("ultrametric valuation laws on random pairs") {
  Rng rng(11);
  const FqField& F = FqField::get(3, 1);
  for (int trial = 0; trial < 200; ++trial) {
    const Series a = random_series(rng, F, 24);
    const Series b = random_series(rng, F, 24);
    if (a.is_zero() || b.is_zero()) continue;
    const std::int64_t va = a.exact_val(), vb = b.exact_val();
    CHECK((a * b).exact_val() == va + vb);
    const Series sum = a + b;
    if (!sum.is_zero()) CHECK(sum.exact_val() >= std::min(va, vb));
    if (va != vb) CHECK(sum.exact_val() == std::min(va, vb));
  }
}

TEST_CASE("precision monotonicity: a larger cap never changes an exact valuation") {
  Rng rng(13);
  const FqField& F = FqField::get(5, 1);
  for (int trial = 0; trial < 50; ++trial) {
    const Series wide = random_series(rng, F, 40);
    const Series narrow = wide.truncated(12);
    if (narrow.is_zero() || wide.is_zero()) continue;
    CHECK(narrow.exact_val() == wide.exact_val());
  }
}

TEST_CASE("pow handles negative exponents via inversion") {
  const FqField& F = FqField::get(3, 1);
  const Series u = Series::from_terms(F, {{1, 2}, {2, 1}}, 12);
  const Series w = u.pow(-2) * u.pow(2);
  CHECK((w - Series::constant(F, 1)).is_zero());
}
