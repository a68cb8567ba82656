#include "doctest.h"
#include "galscaf/diagram.hpp"
#include "galscaf/tensor.hpp"
#include "helpers.hpp"

using namespace galscaf;
using helpers::spec_of;

namespace {

GroupAlgebraElem sigma_minus_one(const Extension& E) {
  std::vector<int> t(static_cast<std::size_t>(E.n()), 0);
  t[0] = 1;
  return GroupAlgebraElem::of(E, E.sigma(t)) - GroupAlgebraElem::identity(E);
}

}  // namespace

TEST_CASE("f for a scalar multiple of the identity") {
  auto E = Extension::build(spec_of(3, {1}), 64);
  const Series c = Series::monomial(E->field(), 2, 3);  // v_K = 3, v_L = 9
  const GroupAlgebraElem xi = GroupAlgebraElem::identity(*E).scaled(c);
  for (std::int64_t a = -5; a <= 5; ++a)
    CHECK(f_xi(xi, a, E->lambda()).value() == a + 9);
}

TEST_CASE("f for sigma - 1 in degree 3 with break 1") {
  auto E = Extension::build(spec_of(3, {1}), 64);
  const GroupAlgebraElem xi = sigma_minus_one(*E);
  for (std::int64_t a = -7; a <= 7; ++a) {
    const std::int64_t want = (((a % 3) + 3) % 3 == 0) ? a + 2 : a + 1;
    CHECK(f_xi(xi, a, E->lambda()).value() == want);
  }
}

TEST_CASE("f laws: nondecreasing and periodic, random xi") {
  Rng rng(21);
  for (auto spec : {spec_of(2, {1}), spec_of(3, {1}), spec_of(2, {1, 3})}) {
    auto E = Extension::build(spec, 128);
    for (int trial = 0; trial < 10; ++trial) {
      const GroupAlgebraElem xi = helpers::random_xi(*E, rng);
      FXi f(xi, E->lambda());
      const std::int64_t pn = E->degree();
      std::int64_t prev = f.exact_at(-pn);
      for (std::int64_t a = -pn + 1; a <= 2 * pn; ++a) {
        const std::int64_t cur = f.exact_at(a);
        CHECK(cur >= prev);
        prev = cur;
      }
      for (std::int64_t a = -pn; a <= pn; ++a)
        CHECK(f.exact_at(a + pn) == f.exact_at(a) + pn);
    }
  }
}

TEST_CASE("window reduction matches random sampling of the ideal") {
  Rng rng(22);
  auto E = Extension::build(spec_of(3, {2}), 96);
  const LambdaFamily& lam = E->lambda();
  for (int trial = 0; trial < 6; ++trial) {
    const GroupAlgebraElem xi = helpers::random_xi(*E, rng);
    FXi f(xi, lam);
    for (std::int64_t a = -3; a <= 3; ++a) {
      const std::int64_t fa = f.exact_at(a);
      // random y in M^a: O_K-combinations of the λ window
      for (int s = 0; s < 10; ++s) {
        ExtElem y = E->zero();
        for (std::int64_t t = a; t < a + E->degree(); ++t) {
          const FqElem c = static_cast<FqElem>(
              rng.below(static_cast<std::uint64_t>(E->field().q())));
          const std::int64_t j = static_cast<std::int64_t>(rng.below(2));
          y = y + lam.at(t).scaled(Series::monomial(E->field(), c, j));
        }
        if (y.is_zero()) continue;
        const Valuation v = E->v_l(xi.apply(y));
        CHECK(v.lower_bound() >= fa);
      }
      // attained by the window minimizer
      bool attained = false;
      for (std::int64_t t = a; t < a + E->degree(); ++t) {
        const Valuation v = E->v_l(xi.apply(lam.at(t)));
        if (v.is_exact() && v.value() == fa) attained = true;
      }
      CHECK(attained);
    }
  }
}

TEST_CASE("diagram of the identity in degree 2") {
  auto E = Extension::build(spec_of(2, {1}), 64);
  const Diagram d = big_g(GroupAlgebraElem::identity(*E), E->lambda());
  CHECK(d.d == -E->i0());
  CHECK(d.d == -1);
  REQUIRE(d.g_min.size() == 2);
  CHECK(d.g_min == std::vector<Coset>{Coset::of(2, -1, 0), Coset::of(2, 0, -1)});
  CHECK(d.n_diag == d.g_min);
  CHECK(!d.precision.has_value());
  const WitnessVerdict v = is_stable_witness(GroupAlgebraElem::identity(*E), E->lambda());
  CHECK(v.semistable);
  CHECK(v.stable);
}

TEST_CASE("diagram of sigma - 1 in degree 3") {
  auto E = Extension::build(spec_of(3, {1}), 64);
  const GroupAlgebraElem xi = sigma_minus_one(*E);
  const Diagram d = big_g(xi, E->lambda());
  CHECK(d.d == -1);  // -b_n
  CHECK(d.n_diag == std::vector<Coset>{Coset::of(3, -1, 0), Coset::of(3, 0, -1)});
  CHECK(d.g_min == d.n_diag);
  CHECK(!d.precision.has_value());
}

TEST_CASE("identity in odd degree is not a semistable witness") {
  auto E = Extension::build(spec_of(3, {1}), 64);
  const WitnessVerdict v = is_semistable_witness(GroupAlgebraElem::identity(*E),
                                                 E->lambda());
  CHECK(!v.semistable);
  CHECK(v.diagram.n_diag.size() == 3);
}

TEST_CASE("membership in D via f agrees with the definition of d") {
  auto E = Extension::build(spec_of(3, {1}), 64);
  const GroupAlgebraElem xi = sigma_minus_one(*E);
  const Diagram dia = big_g(xi, E->lambda());
  for (const Coset& c : dia.g_min) CHECK(big_d_member(xi, c, E->lambda()));
  for (std::int64_t b = 0; b < 3; ++b)
    CHECK(!big_d_member(xi, Coset::of(3, dia.d - b - 1, b), E->lambda()));
}

TEST_CASE("D from f equals the up-closure of the tensor support") {
  Rng rng(23);
  for (auto spec : {spec_of(2, {1}), spec_of(3, {1})}) {
    auto E = Extension::build(spec, 128);
    const std::int64_t pn = E->degree();
    for (int trial = 0; trial < 6; ++trial) {
      const GroupAlgebraElem xi = helpers::random_xi(*E, rng);
      const Diagram dia = big_g(xi, E->lambda());
      const std::int64_t amax = dia.d + 2 * pn;
      const std::vector<Coset> support = tensor_support(phi_inverse(xi), amax + pn);
      for (std::int64_t b = 0; b < pn; ++b) {
        for (std::int64_t a = dia.d - 2 * pn; a <= amax; ++a) {
          const Coset x = Coset::of(pn, a, b);
          bool in_up_closure = false;
          for (const Coset& r : support)
            if (coset_le(pn, r, x)) in_up_closure = true;
          CHECK(big_d_member(xi, x, E->lambda()) == in_up_closure);
        }
      }
    }
  }
}

TEST_CASE("valuation shifts realized on elements of prescribed valuation") {
  Rng rng(24);
  auto E = Extension::build(spec_of(3, {1}), 96);
  const GroupAlgebraElem xi = sigma_minus_one(*E);
  const Diagram dia = big_g(xi, E->lambda());
  for (const Coset& c : dia.g_min) {
    for (int s = 0; s < 8; ++s) {
      // y = λ_{-b-i0} plus a strictly higher random tail
      ExtElem y = E->lambda().at(-c.b - E->i0());
      for (int k = 1; k <= 2; ++k) {
        const FqElem cc = static_cast<FqElem>(
            rng.below(static_cast<std::uint64_t>(E->field().q())));
        y = y + E->lambda().at(-c.b - E->i0() + k).scaled(
                    Series::constant(E->field(), cc));
      }
      CHECK(E->v_l(xi.apply(y)).value() == c.a);
    }
  }
}

TEST_CASE("diagram does not depend on the unit choices in the grading") {
  auto E = Extension::build(spec_of(3, {1}), 96);
  const GroupAlgebraElem xi = sigma_minus_one(*E);
  const Diagram d1 = big_g(xi, E->lambda());
  // scale λ̂_1, λ̂_2 by the units 1 + t and 2
  const LambdaFamily lam2 = E->lambda_with_units(
      {Series::from_terms(E->field(), {{0, 1}, {1, 1}}),
       Series::constant(E->field(), 2)});
  const Diagram d2 = big_g(xi, lam2);
  CHECK(d1.g_min == d2.g_min);
  CHECK(d1.n_diag == d2.n_diag);
  CHECK(d1.d == d2.d);
  CHECK(d1.precision == d2.precision);
}

TEST_CASE("normalization shifts the diagonal to {[h,0],[0,h]}") {
  auto E = Extension::build(spec_of(3, {1}), 64);
  const GroupAlgebraElem xi = sigma_minus_one(*E);
  // d = -1, h = 2, m = (-1 - 2)/3 = -1: normalized witness is pi_K * xi
  const GroupAlgebraElem norm = normalize_witness(xi, E->lambda());
  const Diagram d = big_g(norm, E->lambda());
  CHECK(d.d == 2);
  CHECK(d.n_diag == std::vector<Coset>{Coset::of(3, 2, 0), Coset::of(3, 0, 2)});
  const GroupAlgebraElem expected = xi.scaled(Series::monomial(E->field(), 1, 1));
  CHECK((norm - expected).is_zero());
  // an already-normalized witness is unchanged
  const GroupAlgebraElem norm2 = normalize_witness(norm, E->lambda());
  CHECK((norm2 - norm).is_zero());
}

TEST_CASE("pi_K shifts the diagram without changing the verdict") {
  auto E = Extension::build(spec_of(3, {1}), 64);
  const GroupAlgebraElem xi = sigma_minus_one(*E);
  const GroupAlgebraElem shifted = xi.scaled(Series::monomial(E->field(), 1, 1));
  const WitnessVerdict v0 = is_semistable_witness(xi, E->lambda());
  const WitnessVerdict v1 = is_semistable_witness(shifted, E->lambda());
  CHECK(v0.semistable);
  CHECK(v1.semistable);
  CHECK(v1.diagram.d == v0.diagram.d + E->degree());
}

TEST_CASE("normalize rejects non-witnesses") {
  auto E = Extension::build(spec_of(3, {1}), 64);
  CHECK_THROWS_AS(normalize_witness(GroupAlgebraElem::identity(*E), E->lambda()),
                  InvalidInput);
}
