#include "galscaf/scaffold.hpp"

#include <algorithm>
#include <functional>
#include <thread>

namespace galscaf {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b, r = a % b;
  return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

std::int64_t pow_i64(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Index-sliced worker pool; item order in the output containers is fixed
// by index, so results do not depend on the thread count.
void run_parallel(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const std::size_t k = std::min(static_cast<std::size_t>(threads), count);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < k; ++w) {
    pool.emplace_back([&, w]() {
      for (std::size_t i = w; i < count; i += k) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

CaseMargin congruence_margin(const GroupAlgebraElem& xi, const LambdaFamily& lam,
                             std::int64_t t, std::int64_t shift, bool hit, int i) {
  const Extension& E = xi.ext();
  const std::int64_t pn = E.degree();
  CaseMargin out;
  out.i = i;
  out.t = t;
  out.shift = shift;
  out.hit = hit;
  const ExtElem z = xi.apply(lam.at(t));
  const std::int64_t target = t + shift;
  if (!hit) {
    out.margin = E.v_l(z) + (-target);
    return out;
  }
  // Hit case: the component of z along the grading class of `target` must
  // be a unit multiple of λ_target.
  const std::vector<Series> comp = lam.expand(z);
  const std::int64_t rt = ((target % pn) + pn) % pn;
  const std::int64_t fl = floor_div(target, pn);
  const Series u = comp[static_cast<std::size_t>(rt)].shifted(-fl);
  const Valuation vu = u.val();
  if (vu.is_exact() && vu.value() == 0) {
    out.unit = u;
    const ExtElem diff = z - lam.at(target).scaled(u);
    out.margin = E.v_l(diff) + (-target);
    return out;
  }
  if (vu.lower_bound() > 0) {
    // The component sits strictly above λ_target: no unit can match, and
    // the defect is exactly at the target level.
    out.margin = Valuation::exact(0);
    return out;
  }
  if (vu.is_exact()) {
    // Component below the target level: margin is negative by that amount.
    out.margin = Valuation::exact(vu.value() * pn);
    return out;
  }
  throw InsufficientPrecision("congruence case (i=" + std::to_string(i) +
                              ", t=" + std::to_string(t) + ") unresolved under the cap");
}

VerifyReport verify_scaffold(const std::vector<GroupAlgebraElem>& psi,
                             const LambdaFamily& lam, std::int64_t max_c,
                             int threads) {
  if (psi.empty()) throw InvalidInput("scaffold needs at least one element");
  const Extension& E = psi.front().ext();
  const int n = E.n();
  if (static_cast<int>(psi.size()) != n)
    throw InvalidInput("scaffold needs exactly n elements");
  if (max_c < 1) throw InvalidInput("max_c must be >= 1");
  const std::int64_t pn = E.degree();
  const DigitTables& dig = E.digits();

  struct CaseSpec {
    int i;
    std::int64_t t, shift;
    bool hit;
  };
  std::vector<CaseSpec> specs;
  for (int i = 1; i <= n; ++i) {
    const std::int64_t shift =
        pow_i64(E.p(), n - i) * dig.breaks()[static_cast<std::size_t>(i - 1)];
    for (std::int64_t t = 0; t < pn; ++t)
      specs.push_back({i, t, shift, digit(E.p(), dig.afun(dig.rfun(t)), n - i) >= 1});
  }

  // Evaluate the independent cases, then fold sequentially so that the
  // report (and any error) is identical for every thread count.
  std::vector<std::optional<CaseMargin>> results(specs.size());
  std::vector<std::string> errors(specs.size());
  const auto eval = [&](std::size_t idx) {
    const CaseSpec& cs = specs[idx];
    try {
      results[idx] = congruence_margin(psi[static_cast<std::size_t>(cs.i - 1)], lam,
                                       cs.t, cs.shift, cs.hit, cs.i);
    } catch (const InsufficientPrecision& e) {
      errors[idx] = e.what();
    }
  };
  run_parallel(specs.size(), threads, eval);

  VerifyReport rep;
  rep.certified = max_c;
  bool definite_fail = false;
  for (std::size_t idx = 0; idx < specs.size(); ++idx) {
    if (!results[idx]) throw InsufficientPrecision(errors[idx]);
    CaseMargin& cm = *results[idx];
    const std::int64_t lb = cm.margin.lower_bound();
    if (cm.margin.is_exact() && cm.margin.value() < 1 && !definite_fail) {
      definite_fail = true;
      rep.failure = "case (i=" + std::to_string(cm.i) + ", t=" + std::to_string(cm.t) +
                    ") has margin " + cm.margin.to_string();
    }
    if (!cm.margin.is_exact() && lb < 1)
      throw InsufficientPrecision("scaffold case (i=" + std::to_string(cm.i) +
                                  ", t=" + std::to_string(cm.t) +
                                  ") margin hidden by cap");
    if (lb < rep.certified) {
      rep.certified = lb;
      rep.cap_limited = !cm.margin.is_exact() && lb < max_c;
    }
    rep.cases.push_back(std::move(cm));
  }
  if (rep.certified < 0) rep.certified = 0;
  rep.is_scaffold = rep.certified >= 1;
  return rep;
}

GroupAlgebraElem scaffold_monomial(const Scaffold& sc, std::int64_t s) {
  const Extension& E = sc.psi.front().ext();
  const int n = E.n();
  GroupAlgebraElem acc = GroupAlgebraElem::identity(E);
  std::int64_t rest = s;
  for (int k = 0; k < n; ++k) {
    const std::int64_t dk = rest % E.p();
    rest /= E.p();
    // digit k pairs with Ψ_{n-k}
    acc = acc * sc.psi[static_cast<std::size_t>(n - k - 1)].pow(dk);
  }
  return acc;
}

std::vector<GroupAlgebraElem> default_candidate(const Extension& ext) {
  std::vector<GroupAlgebraElem> psi;
  for (int i = 1; i <= ext.n(); ++i) {
    std::vector<int> tuple(static_cast<std::size_t>(ext.n()), 0);
    tuple[static_cast<std::size_t>(i - 1)] = 1;
    const GroupAlgebraElem base = GroupAlgebraElem::of(ext, ext.sigma(tuple)) -
                                  GroupAlgebraElem::identity(ext);
    psi.push_back(base.pow(pow_i64(ext.p(), ext.n() - i)));
  }
  return psi;
}

Scaffold build_from_phi(const std::vector<GroupAlgebraElem>& phi,
                        const LambdaFamily& lam, std::int64_t max_c) {
  if (phi.empty()) throw InvalidInput("need n group algebra elements");
  const Extension& E = phi.front().ext();
  const int n = E.n();
  const std::int64_t pn = E.degree();
  const DigitTables& dig = E.digits();
  // Exact/strict valuation hypotheses over one period.
  for (int i = 1; i <= n; ++i) {
    const std::int64_t shift =
        pow_i64(E.p(), n - i) * dig.breaks()[static_cast<std::size_t>(i - 1)];
    for (std::int64_t t = 0; t < pn; ++t) {
      const bool hit = digit(E.p(), dig.afun(dig.rfun(t)), n - i) >= 1;
      const Valuation v =
          E.v_l(phi[static_cast<std::size_t>(i - 1)].apply(lam.at(t)));
      const std::int64_t target = t + shift;
      if (hit) {
        if (!v.is_exact()) {
          if (v.lower_bound() > target)
            throw InvalidInput("hypothesis violation at (i=" + std::to_string(i) +
                               ", t=" + std::to_string(t) + "): valuation " +
                               v.to_string() + ", expected " + std::to_string(target));
          throw InsufficientPrecision("hypothesis check hidden by cap");
        }
        if (v.value() != target)
          throw InvalidInput("hypothesis violation at (i=" + std::to_string(i) +
                             ", t=" + std::to_string(t) + "): valuation " +
                             std::to_string(v.value()) + ", expected " +
                             std::to_string(target));
      } else {
        if (v.lower_bound() > target) continue;  // strictly above, as required
        if (v.is_exact())
          throw InvalidInput("hypothesis violation at (i=" + std::to_string(i) +
                             ", t=" + std::to_string(t) + "): valuation " +
                             std::to_string(v.value()) + ", expected > " +
                             std::to_string(target));
        throw InsufficientPrecision("hypothesis check hidden by cap");
      }
    }
  }
  std::vector<GroupAlgebraElem> psi;
  for (const auto& f : phi)
    psi.push_back(f - GroupAlgebraElem::identity(f.ext()).scaled(f.augmentation()));
  VerifyReport rep = verify_scaffold(psi, lam, max_c);
  if (!rep.is_scaffold)
    throw ImportedFactViolation("construction produced a non-scaffold: " + rep.failure);
  Scaffold sc{std::move(psi), lam, rep.certified, ""};
  return sc;
}

SemistableBuild build_from_semistable(const GroupAlgebraElem& xi_normalized,
                                      const LambdaFamily& lam, std::int64_t max_c) {
  const Extension& E = xi_normalized.ext();
  const std::int64_t pn = E.degree();
  const std::int64_t h = ((E.i0() % pn) + pn) % pn;
  // Precondition: normalized witness with diagonal {[h,0],[0,h]}.
  const WitnessVerdict v = is_semistable_witness(xi_normalized, lam);
  if (!v.semistable || v.diagram.d != h)
    throw InvalidInput("input is not a normalized semistable witness (d = " +
                       std::to_string(v.diagram.d) + ", want " + std::to_string(h) + ")");
  const int n = E.n();
  std::vector<GroupAlgebraElem> phi;
  std::vector<std::int64_t> scales;
  for (int i = 1; i <= n; ++i) {
    const std::int64_t pni = pow_i64(E.p(), n - i);
    const std::int64_t k = pn - pni - 1;
    GroupAlgebraElem theta = xi_normalized.hadamard_pow(k);
    const std::int64_t bi = E.ramification().breaks[static_cast<std::size_t>(i - 1)];
    const std::int64_t num = k * h + E.i0() - pni * bi;
    if (num % pn != 0)
      throw ImportedFactViolation("scale exponent not integral at i = " +
                                  std::to_string(i) + " (" + std::to_string(num) + "/" +
                                  std::to_string(pn) + ")");
    const std::int64_t vi = num / pn;
    scales.push_back(vi);
    phi.push_back(theta.scaled(Series::monomial(E.field(), 1, -vi)));
  }
  Scaffold sc = build_from_phi(phi, lam, max_c);
  return SemistableBuild{std::move(sc), std::move(scales)};
}

ScaffoldWitness semistable_from_scaffold(const Scaffold& sc) {
  const Extension& E = sc.psi.front().ext();
  const std::int64_t pn = E.degree();
  const GroupAlgebraElem xi = scaffold_monomial(sc, pn - 2);
  WitnessVerdict v = is_semistable_witness(xi, sc.lambda);
  const std::int64_t bn = E.ramification().breaks.back();
  if (!v.semistable)
    throw ImportedFactViolation("scaffold witness is not semistable: " + v.reason);
  if (v.diagram.d != -bn)
    throw ImportedFactViolation("witness d = " + std::to_string(v.diagram.d) +
                                ", expected -b_n = " + std::to_string(-bn));
  const Coset n1 = Coset::of(pn, -bn, 0);
  const Coset n2 = Coset::of(pn, 0, -bn);
  const bool shape_ok =
      (v.diagram.n_diag[0] == n1 && v.diagram.n_diag[1] == n2) ||
      (v.diagram.n_diag[0] == n2 && v.diagram.n_diag[1] == n1);
  if (!shape_ok)
    throw ImportedFactViolation("witness diagonal is not {[-b_n,0],[0,-b_n]}");
  if (sc.certified.has_value()) {
    if (v.diagram.precision.has_value() && *v.diagram.precision < *sc.certified)
      throw ImportedFactViolation(
          "witness precision " + std::to_string(*v.diagram.precision) +
          " below scaffold precision " + std::to_string(*sc.certified));
  } else {
    if (v.diagram.precision.has_value())
      throw ImportedFactViolation("infinite-precision scaffold gave a finite-gap witness");
  }
  return ScaffoldWitness{xi, std::move(v)};
}

std::int64_t stability_threshold(const Extension& ext) {
  const std::int64_t pn = ext.degree();
  const std::int64_t h = ((ext.i0() % pn) + pn) % pn;
  return std::max(h - 1, pn - h - 1);
}

std::vector<bool> breaks_congruence(const Extension& ext) {
  const std::int64_t pn = ext.degree();
  std::vector<bool> ok;
  for (std::int64_t b : ext.ramification().breaks)
    ok.push_back(((b + ext.i0()) % pn + pn) % pn == 0);
  return ok;
}

bool breaks_congruent(const Extension& ext) {
  for (bool b : breaks_congruence(ext))
    if (!b) return false;
  return true;
}

FalsifierResult criterion_c_falsifier(const Extension& ext, const LambdaFamily& lam,
                                      std::int64_t budget, std::uint64_t seed) {
  const std::int64_t pn = ext.degree();
  const std::int64_t t_rho = ((-ext.i0()) % pn + pn) % pn;
  const ExtElem rho = lam.at(t_rho);

  FalsifierResult res;
  res.seed = seed;
  Rng rng(seed);

  // Family: identity, σ - 1 for every σ != 1, the trace element, then
  // seeded small-support elements until the budget runs out.
  std::vector<std::pair<GroupAlgebraElem, std::string>> family;
  family.emplace_back(GroupAlgebraElem::identity(ext), "id");
  for (int g = 1; g < static_cast<int>(pn); ++g) {
    family.emplace_back(GroupAlgebraElem::of(ext, Automorphism{g}) -
                            GroupAlgebraElem::identity(ext),
                        "s" + std::to_string(g) + "-1");
  }
  family.emplace_back(GroupAlgebraElem::trace(ext), "trace");
  while (static_cast<std::int64_t>(family.size()) < budget) {
    GroupAlgebraElem xi(ext);
    const int support = 1 + static_cast<int>(rng.below(3));
    std::string desc = "rand(";
    for (int s = 0; s < support; ++s) {
      const int g = static_cast<int>(rng.below(static_cast<std::uint64_t>(pn)));
      const FqElem c = static_cast<FqElem>(1 + rng.below(static_cast<std::uint64_t>(
                                                   ext.field().q() - 1)));
      const std::int64_t e = rng.range(-2, 2);
      xi = xi + GroupAlgebraElem::of(ext, Automorphism{g})
                    .scaled(Series::monomial(ext.field(), c, e));
      desc += (s ? "," : "") + std::to_string(g) + ":" + std::to_string(c) + "t^" +
              std::to_string(e);
    }
    desc += ")";
    if (xi.is_zero()) continue;
    family.emplace_back(std::move(xi), std::move(desc));
  }

  for (const auto& [xi, desc] : family) {
    ++res.tested;
    const Valuation vrho = ext.v_l(xi.apply(rho));
    if (vrho.is_infinite()) continue;  // lhs = -infinity, nothing to violate
    if (!vrho.is_exact())
      throw InsufficientPrecision("falsifier: v_L(xi(rho)) hidden by cap");
    const std::int64_t lhs = vrho.value() - t_rho;
    for (std::int64_t t = 0; t < pn; ++t) {
      const Valuation vt = ext.v_l(xi.apply(lam.at(t)));
      if (vt.is_infinite()) continue;  // rhs infinite for this λ
      if (!vt.is_exact())
        throw InsufficientPrecision("falsifier: v_L(xi(lambda)) hidden by cap");
      const std::int64_t rhs = vt.value() - t;
      if (lhs > rhs) {
        res.falsified = true;
        res.xi_desc = desc;
        res.t = t;
        res.lhs = lhs;
        res.rhs = rhs;
        return res;
      }
    }
  }
  return res;
}

PromotionResult charp_promotion(const Scaffold& sc) {
  const Extension& E = sc.psi.front().ext();
  PromotionResult out{false, "", sc};
  for (std::size_t i = 0; i < sc.psi.size(); ++i) {
    const GroupAlgebraElem pth = sc.psi[i].pow(E.p());
    bool exact_zero = true;
    for (const auto& c : pth.coeffs()) {
      if (!c.is_zero()) {
        out.reason = "psi_" + std::to_string(i + 1) + "^p has nonzero coefficient " +
                     c.to_string();
        return out;
      }
      if (!c.is_exact()) exact_zero = false;
    }
    if (!exact_zero) {
      out.reason = "psi_" + std::to_string(i + 1) +
                   "^p vanishes only up to the cap; no algebraic certificate";
      return out;
    }
  }
  out.promoted = true;
  out.scaffold.certified = std::nullopt;
  out.scaffold.infinite_reason = "p-th powers vanish identically in K[G]";
  return out;
}

}  // namespace galscaf
