#pragma once

#include <memory>
#include <vector>

#include "galscaf/extension.hpp"
#include "galscaf/group_algebra.hpp"
#include "galscaf/rng.hpp"
#include "galscaf/tensor.hpp"

namespace helpers {

using namespace galscaf;

inline ExtensionSpec spec_of(std::int64_t p, std::vector<std::int64_t> e, int m = 1) {
  ExtensionSpec s;
  s.p = p;
  s.m = m;
  s.n = static_cast<int>(e.size());
  s.e = std::move(e);
  for (std::size_t j = 0; j < s.e.size(); ++j) s.u.push_back({{0, 1}});
  return s;
}

inline GroupAlgebraElem random_xi(const Extension& E, Rng& rng, int max_support = 3) {
  GroupAlgebraElem xi(E);
  const int support = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_support)));
  for (int s = 0; s < support; ++s) {
    const int g = static_cast<int>(rng.below(static_cast<std::uint64_t>(E.degree())));
    const FqElem c =
        static_cast<FqElem>(1 + rng.below(static_cast<std::uint64_t>(E.field().q() - 1)));
    const std::int64_t e = rng.range(-2, 2);
    xi = xi + GroupAlgebraElem::of(E, Automorphism{g})
                  .scaled(Series::monomial(E.field(), c, e));
  }
  if (xi.is_zero()) return GroupAlgebraElem::identity(E);
  return xi;
}

// Short tensors with monomial-flavoured factors.
inline TensorElem random_tensor(const Extension& E, Rng& rng, int max_pairs = 2) {
  TensorElem beta(E);
  const int pairs = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_pairs)));
  for (int i = 0; i < pairs; ++i) {
    const FqElem c =
        static_cast<FqElem>(1 + rng.below(static_cast<std::uint64_t>(E.field().q() - 1)));
    const ExtElem a =
        E.uniformizer_pow(rng.range(-2, 3)).scaled(Series::constant(E.field(), c));
    const ExtElem b = E.uniformizer_pow(rng.range(0, 3)) +
                      E.one().scaled(Series::monomial(
                          E.field(),
                          static_cast<FqElem>(rng.below(static_cast<std::uint64_t>(
                              E.field().q()))),
                          rng.range(0, 1)));
    beta.add_pair(a, b);
  }
  return beta;
}

inline bool same_lg(const LGroupAlgebraElem& a, const LGroupAlgebraElem& b) {
  return (a - b).is_zero();
}

}  // namespace helpers
