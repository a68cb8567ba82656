#include "galscaf/tensor.hpp"

#include <algorithm>

namespace galscaf {

TensorElem TensorElem::operator*(const TensorElem& o) const {
  TensorElem out(*E_);
  for (const auto& [a, b] : pairs_)
    for (const auto& [c, d] : o.pairs_) out.add_pair(a * c, b * d);
  return out;
}

TensorElem TensorElem::pow(std::int64_t k) const {
  if (k < 0) throw InvalidInput("tensor power must be nonnegative");
  TensorElem r(*E_);
  r.add_pair(E_->one(), E_->one());
  TensorElem base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

LGroupAlgebraElem phi_forward(const TensorElem& beta) {
  const Extension& E = beta.ext();
  std::vector<ExtElem> coeffs;
  coeffs.reserve(static_cast<std::size_t>(E.degree()));
  for (int g = 0; g < static_cast<int>(E.degree()); ++g) {
    ExtElem acc = E.zero();
    for (const auto& [a, b] : beta.pairs()) acc = acc + a * E.apply(Automorphism{g}, b);
    coeffs.push_back(std::move(acc));
  }
  return LGroupAlgebraElem(E, std::move(coeffs));
}

TensorElem phi_inverse(const GroupAlgebraElem& xi) {
  const Extension& E = xi.ext();
  const std::size_t pn = static_cast<std::size_t>(E.degree());
  // Unknowns: the coefficients c_j in L of β = Σ c_j ⊗ π_L^j. Each σ
  // gives one equation Σ_j c_j σ(π_L^j) = ξ_σ over L; eliminate over L
  // with the pivot of minimal v_L (division in L via a linear solve).
  std::vector<std::vector<ExtElem>> m(pn, std::vector<ExtElem>(pn, E.zero()));
  std::vector<ExtElem> rhs(pn, E.zero());
  for (std::size_t g = 0; g < pn; ++g) {
    for (std::size_t j = 0; j < pn; ++j)
      m[g][j] = E.apply(Automorphism{static_cast<int>(g)},
                        E.uniformizer_pow(static_cast<std::int64_t>(j)));
    rhs[g] = E.from_k(xi.coeffs()[g]);
  }
  std::vector<ExtElem> pivinv;
  for (std::size_t k = 0; k < pn; ++k) {
    std::size_t best = pn;
    std::int64_t bestv = 0;
    for (std::size_t r = k; r < pn; ++r) {
      const Valuation v = E.v_l(m[r][k]);
      if (v.is_exact() && (best == pn || v.value() < bestv)) {
        best = r;
        bestv = v.value();
      }
    }
    if (best == pn)
      throw InsufficientPrecision("phi inverse: no pivot resolves under the cap");
    if (best != k) {
      std::swap(m[best], m[k]);
      std::swap(rhs[best], rhs[k]);
    }
    const ExtElem pinv = m[k][k].inverse();
    pivinv.push_back(pinv);
    for (std::size_t r = k + 1; r < pn; ++r) {
      if (m[r][k].is_zero()) continue;
      const ExtElem f = m[r][k] * pinv;
      for (std::size_t c = k; c < pn; ++c) m[r][c] = m[r][c] - f * m[k][c];
      rhs[r] = rhs[r] - f * rhs[k];
    }
  }
  std::vector<ExtElem> sol(pn, E.zero());
  for (std::size_t kk = pn; kk-- > 0;) {
    ExtElem acc = rhs[kk];
    for (std::size_t c = kk + 1; c < pn; ++c) acc = acc - m[kk][c] * sol[c];
    sol[kk] = acc * pivinv[kk];
  }
  TensorElem beta(E);
  for (std::size_t j = 0; j < pn; ++j) {
    if (sol[j].is_zero()) continue;
    beta.add_pair(sol[j], E.uniformizer_pow(static_cast<std::int64_t>(j)));
  }
  if (beta.pairs().empty()) beta.add_pair(E.zero(), E.one());
  return beta;
}

std::vector<Coset> tensor_support(const TensorElem& beta, std::int64_t max_i) {
  const Extension& E = beta.ext();
  const std::int64_t pn = E.degree();
  // Collect c_j per residue class j of the second factor: β = Σ c_j ⊗ π^j
  // demands second factors be π_L powers; general pairs are reduced by
  // expanding b in the λ grading (π_L powers with K-coefficients).
  std::vector<ExtElem> cj(static_cast<std::size_t>(pn), E.zero());
  for (const auto& [a, b] : beta.pairs()) {
    const std::vector<Series> parts = E.lambda().expand(b);
    for (std::int64_t r = 0; r < pn; ++r) {
      const Series& k = parts[static_cast<std::size_t>(r)];
      if (k.is_zero() && k.is_exact()) continue;
      cj[static_cast<std::size_t>(r)] = cj[static_cast<std::size_t>(r)] + a.scaled(k);
    }
  }
  std::vector<Coset> support;
  for (std::int64_t j = 0; j < pn; ++j) {
    const ExtElem& c = cj[static_cast<std::size_t>(j)];
    if (c.is_zero()) continue;
    for (const auto& [i, digit] : E.pi_adic_digits(c, max_i)) {
      (void)digit;
      support.push_back(Coset::of(pn, i, j));
    }
  }
  std::sort(support.begin(), support.end(), [](const Coset& x, const Coset& y) {
    return x.b != y.b ? x.b < y.b : x.a < y.a;
  });
  return support;
}

}  // namespace galscaf
