#include "galscaf/extension.hpp"

#include <algorithm>
#include <map>

namespace galscaf {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b, r = a % b;
  return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

int binom_small(int a, int b) {
  if (b < 0 || b > a) return 0;
  int r = 1;
  for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
  return r;
}

struct DetResult {
  bool complete = false;
  Series det;            // valid when complete
  std::int64_t bound = 0;  // valuation lower bound when not complete
  DetResult(const FqField& f) : det(Series::zero(f)) {}
};

// Gaussian elimination over K with the pivot of minimal exact valuation.
// Consumes the matrix. The determinant equals the signed product of the
// pivots; when some column has no resolvable pivot, only a lower bound on
// v(det) is available.
DetResult eliminate_det(std::vector<std::vector<Series>>& m, const FqField& F) {
  const std::size_t nn = m.size();
  DetResult res(F);
  Series det = Series::constant(F, 1);
  bool flip = false;
  for (std::size_t k = 0; k < nn; ++k) {
    std::size_t best = nn;
    std::int64_t bestv = 0;
    for (std::size_t r = k; r < nn; ++r) {
      const Valuation v = m[r][k].val();
      if (v.is_exact() && (best == nn || v.value() < bestv)) {
        best = r;
        bestv = v.value();
      }
    }
    if (best == nn) {
      // det = (pivots so far) * minor; bound the minor columnwise.
      std::int64_t bound = det.val().lower_bound();
      for (std::size_t c = k; c < nn; ++c) {
        std::int64_t colmin = kCapInf;
        for (std::size_t r = k; r < nn; ++r)
          colmin = std::min(colmin, m[r][c].val().lower_bound());
        bound = cap_add(bound, colmin);
      }
      res.complete = false;
      res.bound = std::min(bound, kCapInf);
      return res;
    }
    if (best != k) {
      std::swap(m[best], m[k]);
      flip = !flip;
    }
    det = det * m[k][k];
    const Series pinv = m[k][k].inverse();
    for (std::size_t r = k + 1; r < nn; ++r) {
      if (m[r][k].is_zero() && m[r][k].is_exact()) continue;
      const Series f = m[r][k] * pinv;
      for (std::size_t c = k; c < nn; ++c) m[r][c] = m[r][c] - f * m[k][c];
    }
  }
  res.complete = true;
  res.det = flip ? -det : det;
  return res;
}

}  // namespace

// ---------------------------------------------------------------- spec ---

void ExtensionSpec::validate() const {
  FqField::get(p, m);  // throws when unsupported
  if (n < 1) throw InvalidInput("extension needs n >= 1 generators");
  if (static_cast<int>(e.size()) != n || static_cast<int>(u.size()) != n)
    throw InvalidInput("need exactly n exponents e_j and n units u_j");
  const FqField& F = FqField::get(p, m);
  for (int j = 0; j < n; ++j) {
    if (e[j] < 1) throw InvalidInput("exponent e_" + std::to_string(j + 1) + " must be >= 1");
    if (e[j] % p == 0)
      throw InvalidInput("p divides e_" + std::to_string(j + 1));
    if (j > 0 && e[j] <= e[j - 1])
      throw InvalidInput("exponents must be strictly increasing");
    bool unit = false;
    for (const auto& [exp, c] : u[j]) {
      if (c >= F.q()) throw InvalidInput("unit coefficient out of range for F_q");
      if (exp < 0) throw InvalidInput("unit u_" + std::to_string(j + 1) + " must lie in O_K");
      if (exp == 0 && c != 0) unit = true;
    }
    if (!unit) throw InvalidInput("u_" + std::to_string(j + 1) + " is not a unit of O_K");
  }
}

// ------------------------------------------------------------- elements ---

ExtElem::ExtElem(const Extension& ext, std::vector<Series> coords)
    : E_(&ext), c_(std::move(coords)) {
  if (static_cast<std::int64_t>(c_.size()) != ext.degree())
    throw InvalidInput("coordinate vector has wrong length");
}

bool ExtElem::is_zero() const {
  for (const auto& s : c_)
    if (!s.is_zero()) return false;
  return true;
}

ExtElem ExtElem::operator+(const ExtElem& o) const {
  std::vector<Series> out;
  out.reserve(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out.push_back(c_[i] + o.c_[i]);
  return ExtElem(*E_, std::move(out));
}

ExtElem ExtElem::operator-(const ExtElem& o) const { return *this + (-o); }

ExtElem ExtElem::operator-() const {
  std::vector<Series> out;
  out.reserve(c_.size());
  for (const auto& s : c_) out.push_back(-s);
  return ExtElem(*E_, std::move(out));
}

ExtElem ExtElem::operator*(const ExtElem& o) const {
  return ExtElem(*E_, E_->mul_raw(c_, o.c_));
}

ExtElem ExtElem::scaled(const Series& k) const {
  std::vector<Series> out;
  out.reserve(c_.size());
  for (const auto& s : c_) out.push_back(s * k);
  return ExtElem(*E_, std::move(out));
}

ExtElem ExtElem::pow(std::int64_t k) const {
  ExtElem base = *this;
  if (k < 0) {
    base = base.inverse();
    k = -k;
  }
  ExtElem r = E_->one();
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

ExtElem ExtElem::inverse() const {
  auto mat = E_->mult_matrix(truncated(E_->cap()));
  std::vector<Series> rhs(static_cast<std::size_t>(E_->degree()),
                          Series::zero(E_->field()));
  rhs[0] = Series::constant(E_->field(), 1);
  return ExtElem(*E_, Extension::solve(std::move(mat), std::move(rhs)));
}

ExtElem ExtElem::truncated(std::int64_t cap) const {
  std::vector<Series> out;
  out.reserve(c_.size());
  for (const auto& s : c_) out.push_back(s.truncated(cap));
  return ExtElem(*E_, std::move(out));
}

std::string ExtElem::to_string() const {
  std::string s;
  for (std::size_t code = 0; code < c_.size(); ++code) {
    if (c_[code].is_zero() && c_[code].is_exact()) continue;
    if (!s.empty()) s += " + ";
    std::string mono;
    std::size_t rest = code;
    for (int j = 1; j <= E_->n(); ++j) {
      const int cj = static_cast<int>(rest % E_->p());
      rest /= static_cast<std::size_t>(E_->p());
      if (cj == 0) continue;
      mono += "*x" + std::to_string(j);
      if (cj > 1) mono += "^" + std::to_string(cj);
    }
    s += "(" + c_[code].to_string() + ")" + mono;
  }
  return s.empty() ? "0" : s;
}

// -------------------------------------------------------------- builder ---

std::shared_ptr<const Extension> Extension::build(const ExtensionSpec& spec,
                                                  std::int64_t cap) {
  spec.validate();
  if (cap <= 0 || cap >= kCapInf) throw InvalidInput("working cap must be positive and finite");
  std::shared_ptr<Extension> E(new Extension());
  E->spec_ = spec;
  E->F_ = &FqField::get(spec.p, spec.m);
  E->cap_ = cap;
  const std::int64_t p = spec.p;
  E->pn_ = 1;
  for (int i = 0; i < spec.n; ++i) E->pn_ *= p;
  const std::size_t pn = static_cast<std::size_t>(E->pn_);
  const FqField& F = *E->F_;

  // Defining constants a_j = u_j t^(-e_j).
  std::vector<Series> a;
  for (int j = 0; j < spec.n; ++j)
    a.push_back(Series::from_terms(F, spec.u[static_cast<std::size_t>(j)])
                    .shifted(-spec.e[static_cast<std::size_t>(j)]));

  // Multiplication table: reduce x_j^E for E >= p via x_j^p = x_j + a_j.
  E->mult_table_.assign(pn, std::vector<std::vector<Series>>(
                                pn, std::vector<Series>(pn, Series::zero(F))));
  for (std::size_t cc = 0; cc < pn; ++cc) {
    for (std::size_t d = 0; d <= cc; ++d) {
      // Work list of (exponent vector, coefficient in K).
      std::vector<std::pair<std::vector<int>, Series>> terms;
      std::vector<int> ev(static_cast<std::size_t>(spec.n));
      std::size_t rc = cc, rd = d;
      for (int j = 0; j < spec.n; ++j) {
        ev[static_cast<std::size_t>(j)] =
            static_cast<int>(rc % static_cast<std::size_t>(p)) +
            static_cast<int>(rd % static_cast<std::size_t>(p));
        rc /= static_cast<std::size_t>(p);
        rd /= static_cast<std::size_t>(p);
      }
      terms.emplace_back(ev, Series::constant(F, 1));
      std::vector<Series> out(pn, Series::zero(F));
      while (!terms.empty()) {
        auto [exps, coef] = terms.back();
        terms.pop_back();
        int j = -1;
        for (int i = 0; i < spec.n; ++i)
          if (exps[static_cast<std::size_t>(i)] >= p) {
            j = i;
            break;
          }
        if (j < 0) {
          std::size_t code = 0, pw = 1;
          for (int i = 0; i < spec.n; ++i) {
            code += static_cast<std::size_t>(exps[static_cast<std::size_t>(i)]) * pw;
            pw *= static_cast<std::size_t>(p);
          }
          out[code] = out[code] + coef;
          continue;
        }
        auto e1 = exps;
        e1[static_cast<std::size_t>(j)] -= static_cast<int>(p) - 1;  // x^(E-p+1)
        auto e2 = exps;
        e2[static_cast<std::size_t>(j)] -= static_cast<int>(p);  // a_j x^(E-p)
        terms.emplace_back(e1, coef);
        terms.emplace_back(e2, coef * a[static_cast<std::size_t>(j)]);
      }
      E->mult_table_[cc][d] = out;
      E->mult_table_[d][cc] = std::move(out);
    }
  }

  // Valuations of the basis monomials, used to bound hidden coordinates.
  E->basis_vl_.assign(pn, 0);
  for (std::size_t c = 1; c < pn; ++c) {
    std::vector<Series> coords(pn, Series::zero(F));
    coords[c] = Series::constant(F, 1);
    auto m = E->mult_matrix(ExtElem(*E, std::move(coords)));
    DetResult res = eliminate_det(m, F);
    if (!res.complete || !res.det.val().is_exact())
      throw InsufficientPrecision("basis valuation hidden by cap");
    E->basis_vl_[c] = res.det.val().value();
  }

  // Galois action matrices over F_p: σ(x^c) expands binomially.
  E->act_.assign(pn, std::vector<FqElem>(pn * pn, 0));
  for (std::size_t g = 0; g < pn; ++g) {
    for (std::size_t cc = 0; cc < pn; ++cc) {
      for (std::size_t r = 0; r < pn; ++r) {
        std::int64_t coef = 1;
        std::size_t rg = g, rc = cc, rr = r;
        for (int j = 0; j < spec.n; ++j) {
          const int ij = static_cast<int>(rg % static_cast<std::size_t>(p));
          const int cj = static_cast<int>(rc % static_cast<std::size_t>(p));
          const int rj = static_cast<int>(rr % static_cast<std::size_t>(p));
          rg /= static_cast<std::size_t>(p);
          rc /= static_cast<std::size_t>(p);
          rr /= static_cast<std::size_t>(p);
          if (rj > cj) {
            coef = 0;
            break;
          }
          std::int64_t term = binom_small(cj, rj) % p;
          std::int64_t ipow = 1;
          for (int k = 0; k < cj - rj; ++k) ipow = (ipow * ij) % p;
          coef = (coef * term % p) * ipow % p;
          if (coef == 0) break;
        }
        E->act_[g][cc * pn + r] = static_cast<FqElem>(coef);
      }
    }
  }

  // Generators.
  E->gens_.clear();
  {
    std::size_t pw = 1;
    for (int j = 0; j < spec.n; ++j) {
      std::vector<Series> coords(pn, Series::zero(F));
      coords[pw] = Series::constant(F, 1);
      E->gens_.push_back(std::move(coords));
      pw *= static_cast<std::size_t>(p);
    }
  }

  // Tower reduction: stage by stage, replace x_j by y_j = x_j - w so that
  // the defining constant has valuation prime to p, then refresh the
  // uniformizer by an extended-gcd monomial in the previous uniformizer
  // and y_j.
  ExtElem pi_prev = E->from_k(Series::monomial(F, 1, 1));  // t
  std::int64_t rel_index = E->pn_;                         // e(L / F_{j-1})
  for (int j = 1; j <= spec.n; ++j) {
    ExtElem alpha = E->from_k(a[static_cast<std::size_t>(j - 1)]);
    ExtElem corr = E->zero();
    ExtElem pi_prev_inv = pi_prev.inverse();
    std::int64_t v_alpha = 0;
    std::int64_t prev_v = -(kCapInf);
    for (int guard = 0;; ++guard) {
      if (guard > 4096)
        throw ImportedFactViolation("tower reduction failed to terminate");
      const Valuation vv = E->v_l(alpha);
      if (!vv.is_exact())
        throw InsufficientPrecision("tower reduction: valuation hidden by cap " +
                                    std::to_string(cap));
      if (vv.value() % rel_index != 0)
        throw ImportedFactViolation("defining constant leaves the subfield");
      v_alpha = vv.value() / rel_index;
      if (v_alpha <= prev_v)
        throw ImportedFactViolation("tower reduction did not make progress");
      prev_v = v_alpha;
      if (v_alpha >= 0)
        throw InvalidInput("not totally ramified (generator " + std::to_string(j) +
                           " reduces to an unramified or split class)");
      if (v_alpha % p != 0) break;
      const std::int64_t k = v_alpha / p;  // negative
      ExtElem upart = alpha * pi_prev.pow(-v_alpha);
      const FqElem c = E->residue(upart);
      ExtElem w = pi_prev_inv.pow(-k).scaled(
          Series::constant(F, F.frobenius_inv(c)));
      alpha = alpha - (w.pow(p) - w);
      corr = corr + w;
    }
    ExtElem y = ExtElem(*E, E->gens_[static_cast<std::size_t>(j - 1)]) - corr;
    E->reduced_.push_back(y.coords());
    const std::int64_t b_rel = -v_alpha;
    // Positive-exponent monomial with v = 1 in the new stage:
    // A*p - C*b_rel = 1 with 1 <= A, 0 <= C < p.
    std::int64_t A = 1;
    if (b_rel > 1) {
      for (A = 1; A < b_rel; ++A)
        if ((A * p) % b_rel == 1) break;
      if (A >= b_rel) throw ImportedFactViolation("no inverse of p mod break");
    }
    const std::int64_t C = (A * p - 1) / b_rel;
    pi_prev = pi_prev.pow(A) * y.pow(C);
    rel_index /= p;
  }

  E->pi_ = std::make_unique<ExtElem>(pi_prev.truncated(cap));
  {
    const Valuation v = E->v_l(*E->pi_);
    if (!v.is_exact())
      throw InsufficientPrecision("uniformizer valuation hidden by cap");
    if (v.value() != 1)
      throw InvalidInput("not totally ramified (uniformizer search failed)");
  }
  E->pi_inv_ = std::make_unique<ExtElem>(E->pi_->inverse());
  {
    const Valuation vt = E->v_l(E->from_k(Series::monomial(F, 1, 1)));
    if (!vt.is_exact() || vt.value() != E->pn_)
      throw InvalidInput("not totally ramified (v_L(t) != degree)");
  }

  E->pi_pows_.clear();
  {
    ExtElem acc = E->one();
    for (std::size_t r = 0; r < pn; ++r) {
      E->pi_pows_.push_back(acc);
      acc = acc * *E->pi_;
    }
  }

  // Ramification: i_G(σ) = v_L(σ(π_L) - π_L).
  E->ram_.i_values.assign(pn, 0);
  std::vector<std::int64_t> ivals;
  for (std::size_t g = 1; g < pn; ++g) {
    const ExtElem diff = E->apply(Automorphism{static_cast<int>(g)}, *E->pi_) - *E->pi_;
    const Valuation v = E->v_l(diff);
    if (!v.is_exact())
      throw InsufficientPrecision("ramification number hidden by cap");
    E->ram_.i_values[g] = v.value();
    ivals.push_back(v.value());
  }
  std::sort(ivals.begin(), ivals.end());
  E->ram_.different = 0;
  for (std::int64_t v : ivals) E->ram_.different += v;
  E->ram_.i0 = E->ram_.different - E->pn_ + 1;
  // Breaks with multiplicity from the drops of |G_u|.
  E->ram_.breaks.clear();
  std::vector<std::int64_t> distinct = ivals;
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (std::int64_t v : distinct) {
    const auto ge = [&](std::int64_t x) {
      return static_cast<std::int64_t>(ivals.end() -
                                       std::lower_bound(ivals.begin(), ivals.end(), x));
    };
    const std::int64_t before = 1 + ge(v);      // |G_{v-1}|
    const std::int64_t after = 1 + ge(v + 1);   // |G_v|
    std::int64_t ratio = before / after;
    if (ratio * after != before)
      throw ImportedFactViolation("ramification filtration sizes are not p-powers");
    int mult = 0;
    while (ratio > 1) {
      if (ratio % p != 0)
        throw ImportedFactViolation("ramification filtration sizes are not p-powers");
      ratio /= p;
      ++mult;
    }
    for (int i = 0; i < mult; ++i) E->ram_.breaks.push_back(v - 1);
  }
  if (static_cast<int>(E->ram_.breaks.size()) != spec.n)
    throw ImportedFactViolation("break multiplicities do not sum to n");

  E->digits_ = std::make_unique<DigitTables>(p, spec.n, E->ram_.breaks);
  if (E->digits_->bfun(E->pn_ - 1) != E->ram_.i0)
    throw ImportedFactViolation(
        "weighted digit sum at p^n-1 disagrees with the index of inseparability");

  E->lambda_ = std::make_unique<LambdaFamily>(*E, E->pi_pows_);
  return E;
}

Extension::~Extension() = default;

// ------------------------------------------------------------- raw ops ---

std::vector<Series> Extension::mul_raw(const std::vector<Series>& x,
                                       const std::vector<Series>& y) const {
  const std::size_t pn = static_cast<std::size_t>(pn_);
  std::vector<Series> out(pn, Series::zero(*F_));
  for (std::size_t c = 0; c < pn; ++c) {
    if (x[c].is_zero() && x[c].is_exact()) continue;
    for (std::size_t d = 0; d < pn; ++d) {
      if (y[d].is_zero() && y[d].is_exact()) continue;
      const Series prod = x[c] * y[d];
      for (std::size_t r = 0; r < pn; ++r) {
        const Series& tr = mult_table_[c][d][r];
        if (tr.is_zero() && tr.is_exact()) continue;
        out[r] = out[r] + prod * tr;
      }
    }
  }
  return out;
}

std::vector<std::vector<Series>> Extension::mult_matrix(const ExtElem& y) const {
  const std::size_t pn = static_cast<std::size_t>(pn_);
  const ExtElem yt = y.truncated(cap_);
  std::vector<std::vector<Series>> m(pn, std::vector<Series>(pn, Series::zero(*F_)));
  for (std::size_t c = 0; c < pn; ++c) {
    const Series& yc = yt.coords()[c];
    if (yc.is_zero() && yc.is_exact()) continue;
    for (std::size_t d = 0; d < pn; ++d) {
      for (std::size_t r = 0; r < pn; ++r) {
        const Series& tr = mult_table_[c][d][r];
        if (tr.is_zero() && tr.is_exact()) continue;
        m[r][d] = m[r][d] + yc * tr;
      }
    }
  }
  return m;
}

Valuation Extension::v_l(const ExtElem& y) const {
  if (y.is_zero()) {
    // Zero up to the coordinate caps: exact zero when every cap is
    // infinite, otherwise bound the hidden part coordinatewise.
    std::int64_t bound = kCapInf;
    for (std::size_t c = 0; c < y.coords().size(); ++c) {
      const Series& s = y.coords()[c];
      if (s.is_exact()) continue;
      bound = std::min(bound, cap_add(pn_ * s.cap(), basis_vl_[c]));
    }
    return Valuation::at_least(bound);
  }
  auto m = mult_matrix(y);
  DetResult res = eliminate_det(m, *F_);
  if (!res.complete) return Valuation::at_least(res.bound);
  return res.det.val();
}

FqElem Extension::residue(const ExtElem& y) const {
  auto m = mult_matrix(y);
  DetResult res = eliminate_det(m, *F_);
  if (!res.complete)
    throw InsufficientPrecision("residue: norm valuation hidden by cap");
  const Valuation v = res.det.val();
  if (!v.is_exact() || v.value() != 0)
    throw InvalidInput("residue of a non-unit (v = " + v.to_string() + ")");
  // N(y) ≡ res(y)^(p^n) mod M_K; undo the n-fold Frobenius.
  return F_->frobenius_iter(res.det.at(0), -spec_.n);
}

std::vector<std::pair<std::int64_t, FqElem>> Extension::pi_adic_digits(
    const ExtElem& y, std::int64_t max_exp) const {
  std::vector<std::pair<std::int64_t, FqElem>> digits;
  ExtElem rest = y.truncated(cap_);
  for (;;) {
    const Valuation v = v_l(rest);
    if (!v.is_exact()) {
      if (v.lower_bound() > max_exp) return digits;
      throw InsufficientPrecision("pi-adic digit below " + std::to_string(max_exp) +
                                  " hidden by cap");
    }
    const std::int64_t e = v.value();
    if (e > max_exp) return digits;
    const FqElem c = residue(rest * uniformizer_pow(-e));
    digits.emplace_back(e, c);
    rest = rest - uniformizer_pow(e).scaled(Series::constant(*F_, c));
  }
}

// --------------------------------------------------------------- action ---

Automorphism Extension::sigma(const std::vector<int>& tuple) const {
  if (static_cast<int>(tuple.size()) != spec_.n)
    throw InvalidInput("automorphism tuple has wrong length");
  int code = 0, pw = 1;
  for (int j = 0; j < spec_.n; ++j) {
    int ij = tuple[static_cast<std::size_t>(j)] % static_cast<int>(spec_.p);
    if (ij < 0) ij += static_cast<int>(spec_.p);
    code += ij * pw;
    pw *= static_cast<int>(spec_.p);
  }
  return Automorphism{code};
}

std::vector<int> Extension::tuple_of(Automorphism g) const {
  std::vector<int> t(static_cast<std::size_t>(spec_.n));
  int rest = g.code;
  for (int j = 0; j < spec_.n; ++j) {
    t[static_cast<std::size_t>(j)] = rest % static_cast<int>(spec_.p);
    rest /= static_cast<int>(spec_.p);
  }
  return t;
}

Automorphism Extension::compose(Automorphism g, Automorphism h) const {
  auto a = tuple_of(g), b = tuple_of(h);
  for (std::size_t j = 0; j < a.size(); ++j) a[j] += b[j];
  return sigma(a);
}

Automorphism Extension::inverse_of(Automorphism g) const {
  auto a = tuple_of(g);
  for (auto& x : a) x = -x;
  return sigma(a);
}

ExtElem Extension::apply(Automorphism g, const ExtElem& y) const {
  const std::size_t pn = static_cast<std::size_t>(pn_);
  if (g.code < 0 || g.code >= static_cast<int>(pn))
    throw InvalidInput("automorphism code out of range");
  const auto& mat = act_[static_cast<std::size_t>(g.code)];
  std::vector<Series> out(pn, Series::zero(*F_));
  for (std::size_t c = 0; c < pn; ++c) {
    const Series& yc = y.coords()[c];
    if (yc.is_zero() && yc.is_exact()) continue;
    for (std::size_t r = 0; r < pn; ++r) {
      const FqElem coef = mat[c * pn + r];
      if (coef == 0) continue;
      out[r] = out[r] + yc.scaled(coef);
    }
  }
  return ExtElem(*this, std::move(out));
}

std::vector<Automorphism> Extension::group() const {
  std::vector<Automorphism> g;
  for (int i = 0; i < static_cast<int>(pn_); ++i) g.push_back(Automorphism{i});
  return g;
}

// ------------------------------------------------------------- elements ---

ExtElem Extension::zero() const {
  return ExtElem(*this, std::vector<Series>(static_cast<std::size_t>(pn_),
                                            Series::zero(*F_)));
}

ExtElem Extension::one() const { return from_k(Series::constant(*F_, 1)); }

ExtElem Extension::from_k(const Series& s) const {
  std::vector<Series> coords(static_cast<std::size_t>(pn_), Series::zero(*F_));
  coords[0] = s;
  return ExtElem(*this, std::move(coords));
}

ExtElem Extension::basis_elem(std::size_t code) const {
  std::vector<Series> coords(static_cast<std::size_t>(pn_), Series::zero(*F_));
  coords.at(code) = Series::constant(*F_, 1);
  return ExtElem(*this, std::move(coords));
}

ExtElem Extension::generator(int j) const {
  return ExtElem(*this, gens_.at(static_cast<std::size_t>(j - 1)));
}

ExtElem Extension::reduced_generator(int j) const {
  return ExtElem(*this, reduced_.at(static_cast<std::size_t>(j - 1)));
}

ExtElem Extension::uniformizer_pow(std::int64_t k) const {
  if (k >= 0 && k < pn_) return pi_pows_[static_cast<std::size_t>(k)];
  if (k >= 0) return pi_->pow(k);
  return pi_inv_->pow(-k);
}

// ---------------------------------------------------------------- solve ---

std::vector<Series> Extension::solve(std::vector<std::vector<Series>> mat,
                                     std::vector<Series> rhs) {
  const std::size_t nn = mat.size();
  if (nn == 0) return {};
  const FqField& F = mat[0][0].field();
  std::vector<Series> pivinv;
  for (std::size_t k = 0; k < nn; ++k) {
    std::size_t best = nn;
    std::int64_t bestv = 0;
    for (std::size_t r = k; r < nn; ++r) {
      const Valuation v = mat[r][k].val();
      if (v.is_exact() && (best == nn || v.value() < bestv)) {
        best = r;
        bestv = v.value();
      }
    }
    if (best == nn)
      throw InsufficientPrecision("linear solve: no pivot resolves under the cap");
    if (best != k) {
      std::swap(mat[best], mat[k]);
      std::swap(rhs[best], rhs[k]);
    }
    const Series pinv = mat[k][k].inverse();
    pivinv.push_back(pinv);
    for (std::size_t r = k + 1; r < nn; ++r) {
      if (mat[r][k].is_zero() && mat[r][k].is_exact()) continue;
      const Series f = mat[r][k] * pinv;
      for (std::size_t c = k; c < nn; ++c) mat[r][c] = mat[r][c] - f * mat[k][c];
      rhs[r] = rhs[r] - f * rhs[k];
    }
  }
  std::vector<Series> w(nn, Series::zero(F));
  for (std::size_t kk = nn; kk-- > 0;) {
    Series acc = rhs[kk];
    for (std::size_t c = kk + 1; c < nn; ++c) acc = acc - mat[kk][c] * w[c];
    w[kk] = acc * pivinv[kk];
  }
  return w;
}

// ------------------------------------------------------------ λ family ---

LambdaFamily::LambdaFamily(const Extension& ext, std::vector<ExtElem> hats)
    : E_(&ext), hats_(std::move(hats)) {
  const std::size_t pn = static_cast<std::size_t>(ext.degree());
  if (hats_.size() != pn) throw InvalidInput("lambda family needs p^n representatives");
  // Columns of the basis matrix are the λ̂_r coordinates; invert it once
  // (Gauss-Jordan via repeated solves of the unit vectors).
  std::vector<std::vector<Series>> A(pn, std::vector<Series>(pn, Series::zero(ext.field())));
  for (std::size_t r = 0; r < pn; ++r) {
    const ExtElem h = hats_[r].truncated(ext.cap());
    for (std::size_t row = 0; row < pn; ++row) A[row][r] = h.coords()[row];
  }
  expand_inv_.assign(pn, std::vector<Series>(pn, Series::zero(ext.field())));
  for (std::size_t k = 0; k < pn; ++k) {
    std::vector<Series> rhs(pn, Series::zero(ext.field()));
    rhs[k] = Series::constant(ext.field(), 1);
    std::vector<Series> col = Extension::solve(A, std::move(rhs));
    for (std::size_t r = 0; r < pn; ++r) expand_inv_[r][k] = col[r];
  }
}

ExtElem LambdaFamily::at(std::int64_t t) const {
  const std::int64_t pn = E_->degree();
  const std::int64_t q = floor_div(t, pn);
  const std::int64_t r = t - q * pn;
  const ExtElem& hat = hats_[static_cast<std::size_t>(r)];
  std::vector<Series> coords;
  coords.reserve(hat.coords().size());
  for (const auto& s : hat.coords()) coords.push_back(s.shifted(q));
  return ExtElem(*E_, std::move(coords));
}

std::vector<Series> LambdaFamily::expand(const ExtElem& y) const {
  const std::size_t pn = static_cast<std::size_t>(E_->degree());
  const ExtElem yt = y.truncated(E_->cap());
  std::vector<Series> out(pn, Series::zero(E_->field()));
  for (std::size_t r = 0; r < pn; ++r) {
    for (std::size_t c = 0; c < pn; ++c) {
      const Series& m = expand_inv_[r][c];
      if (m.is_zero() && m.is_exact()) continue;
      out[r] = out[r] + m * yt.coords()[c];
    }
  }
  return out;
}

LambdaFamily Extension::lambda_with_units(const std::vector<Series>& units) const {
  if (static_cast<std::int64_t>(units.size()) != pn_ - 1)
    throw InvalidInput("need p^n - 1 units (for residues 1..p^n-1)");
  std::vector<ExtElem> hats;
  hats.push_back(one());
  for (std::size_t r = 1; r < static_cast<std::size_t>(pn_); ++r) {
    const Series& u = units[r - 1];
    const Valuation v = u.val();
    if (!v.is_exact() || v.value() != 0)
      throw InvalidInput("lambda multiplier must be a unit of O_K");
    hats.push_back(pi_pows_[r].scaled(u));
  }
  return LambdaFamily(*this, std::move(hats));
}

}  // namespace galscaf
