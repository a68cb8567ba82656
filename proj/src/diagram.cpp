#include "galscaf/diagram.hpp"

#include <algorithm>

namespace galscaf {

FXi::FXi(const GroupAlgebraElem& xi, const LambdaFamily& lam) : xi_(&xi), lam_(&lam) {
  if (xi.is_zero()) throw InvalidInput("f_xi needs a nonzero group algebra element");
}

Valuation FXi::term(std::int64_t t) {
  auto it = term_cache_.find(t);
  if (it != term_cache_.end()) return it->second;
  // v_L(ξ(λ_t)) is p^n-periodic up to the shift t -> t + p^n, so cache one
  // strip and translate.
  const std::int64_t pn = xi_->ext().degree();
  if (t < 0 || t >= pn) {
    std::int64_t r = t % pn;
    if (r < 0) r += pn;
    const Valuation base = term(r);
    const Valuation v = base + (t - r);
    term_cache_.emplace(t, v);
    return v;
  }
  const Valuation v = xi_->ext().v_l(xi_->apply(lam_->at(t)));
  term_cache_.emplace(t, v);
  return v;
}

Valuation FXi::at(std::int64_t a) {
  const std::int64_t pn = xi_->ext().degree();
  Valuation acc = Valuation::infinite();
  for (std::int64_t t = a; t < a + pn; ++t) acc = Valuation::min(acc, term(t));
  return acc;
}

std::int64_t FXi::exact_at(std::int64_t a) {
  const Valuation v = at(a);
  if (!v.is_exact())
    throw InsufficientPrecision("f_xi(" + std::to_string(a) +
                                ") unresolved under the cap (" + v.to_string() + ")");
  return v.value();
}

Valuation f_xi(const GroupAlgebraElem& xi, std::int64_t a, const LambdaFamily& lam) {
  FXi f(xi, lam);
  return f.at(a);
}

Diagram big_g(const GroupAlgebraElem& xi, const LambdaFamily& lam) {
  const Extension& E = xi.ext();
  const std::int64_t pn = E.degree();
  const std::int64_t i0 = E.i0();
  FXi f(xi, lam);
  // One period of m = -b - i0, b in [0, p^n), plus one extra point for the
  // final jump test.
  Diagram dia;
  std::vector<Coset> g;
  for (std::int64_t b = pn - 1; b >= 0; --b) {
    const std::int64_t m = -b - i0;
    const std::int64_t fm = f.exact_at(m);
    const std::int64_t fm1 = f.exact_at(m + 1);
    if (fm1 > fm) g.push_back(Coset{fm, b});  // already 0 <= b < p^n
  }
  std::sort(g.begin(), g.end(),
            [](const Coset& x, const Coset& y) { return x.b < y.b; });
  dia.g_min = g;
  dia.d = g.front().sum();
  for (const Coset& c : g) dia.d = std::min(dia.d, c.sum());
  for (const Coset& c : g)
    if (c.sum() == dia.d) dia.n_diag.push_back(c);
  std::optional<std::int64_t> prec;
  for (const Coset& c : g) {
    if (c.sum() == dia.d) continue;
    const std::int64_t gap = c.sum() - dia.d;
    if (!prec || gap < *prec) prec = gap;
  }
  dia.precision = prec;  // nullopt: G = N, infinite precision
  return dia;
}

bool big_d_member(const GroupAlgebraElem& xi, const Coset& x, const LambdaFamily& lam) {
  FXi f(xi, lam);
  return f.exact_at(-x.b - xi.ext().i0()) <= x.a;
}

WitnessVerdict is_semistable_witness(const GroupAlgebraElem& xi, const LambdaFamily& lam) {
  WitnessVerdict v;
  v.diagram = big_g(xi, lam);
  const Extension& E = xi.ext();
  if (v.diagram.d % E.p() == 0) {
    v.reason = "p divides d = " + std::to_string(v.diagram.d);
    return v;
  }
  if (v.diagram.n_diag.size() != 2) {
    v.reason = "|N| = " + std::to_string(v.diagram.n_diag.size()) + " (want 2)";
    return v;
  }
  v.semistable = true;
  v.stable = !v.diagram.precision.has_value();
  return v;
}

WitnessVerdict is_stable_witness(const GroupAlgebraElem& xi, const LambdaFamily& lam) {
  WitnessVerdict v = is_semistable_witness(xi, lam);
  if (v.semistable && !v.stable && v.reason.empty())
    v.reason = "G != N (finite gap " + std::to_string(*v.diagram.precision) + ")";
  return v;
}

GroupAlgebraElem normalize_witness(const GroupAlgebraElem& xi, const LambdaFamily& lam) {
  const Extension& E = xi.ext();
  const std::int64_t pn = E.degree();
  const WitnessVerdict v = is_semistable_witness(xi, lam);
  if (!v.semistable)
    throw InvalidInput("normalize_witness needs a semistable witness (" + v.reason + ")");
  const std::int64_t h = ((E.i0() % pn) + pn) % pn;
  const std::int64_t d = v.diagram.d;
  if (((d - h) % pn + pn) % pn != 0)
    throw ImportedFactViolation("witness has d = " + std::to_string(d) +
                                " not congruent to i0 = " + std::to_string(E.i0()) +
                                " mod p^n");
  // Imported diagonal shape: N = {[d,0],[0,d]} as cosets.
  const Coset want1 = Coset::of(pn, d, 0);
  const Coset want2 = Coset::of(pn, 0, d);
  const bool shape_ok =
      (v.diagram.n_diag[0] == want1 && v.diagram.n_diag[1] == want2) ||
      (v.diagram.n_diag[0] == want2 && v.diagram.n_diag[1] == want1);
  if (!shape_ok)
    throw ImportedFactViolation(
        "diagonal shape violation: N = {" + v.diagram.n_diag[0].to_string() + "," +
        v.diagram.n_diag[1].to_string() + "} is not {[d,0],[0,d]} for d = " +
        std::to_string(d));
  const std::int64_t m = (d - h) / pn;
  GroupAlgebraElem out =
      xi.scaled(Series::monomial(E.field(), 1, -m));  // π_K^{-m} ξ
  // Recheck the shifted diagonal.
  const WitnessVerdict v2 = is_semistable_witness(out, lam);
  const Coset n1 = Coset::of(pn, h, 0);
  const Coset n2 = Coset::of(pn, 0, h);
  if (!v2.semistable || v2.diagram.d != h ||
      !((v2.diagram.n_diag[0] == n1 && v2.diagram.n_diag[1] == n2) ||
        (v2.diagram.n_diag[0] == n2 && v2.diagram.n_diag[1] == n1)))
    throw ImportedFactViolation("normalized witness lost the diagonal shape");
  return out;
}

}  // namespace galscaf
