#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "galscaf/digits.hpp"
#include "galscaf/fq.hpp"
#include "galscaf/series.hpp"
#include "galscaf/valuation.hpp"

namespace galscaf {

class Extension;

// Input description of L/K: q = p^m, and n defining relations
// x_j^p - x_j = u_j * t^(-e_j) with p ∤ e_j, e_1 < e_2 < ..., u_j a unit
// of O_K given by its (exponent, coefficient) terms.
struct ExtensionSpec {
  std::int64_t p = 0;
  int m = 1;
  int n = 0;
  std::vector<std::int64_t> e;
  std::vector<std::vector<std::pair<std::int64_t, FqElem>>> u;

  void validate() const;
};

// Element of G = Gal(L/K) ≅ (Z/p)^n, acting by x_j -> x_j + i_j. The code
// packs the tuple (i_1, ..., i_n) in base p.
struct Automorphism {
  int code = 0;
  bool operator==(const Automorphism& o) const { return code == o.code; }
  bool operator!=(const Automorphism& o) const { return code != o.code; }
};

// Element of L as a coefficient vector over K in the monomial basis
// x_1^{c_1} ... x_n^{c_n}, 0 <= c_j < p, basis index = Σ c_j p^(j-1).
class ExtElem {
 public:
  ExtElem(const Extension& ext, std::vector<Series> coords);

  const Extension& ext() const { return *E_; }
  const std::vector<Series>& coords() const { return c_; }
  const Series& coord(std::size_t i) const { return c_[i]; }

  bool is_zero() const;  // all coordinates zero up to their caps

  ExtElem operator+(const ExtElem& o) const;
  ExtElem operator-(const ExtElem& o) const;
  ExtElem operator-() const;
  ExtElem operator*(const ExtElem& o) const;
  ExtElem scaled(const Series& k) const;  // multiply by an element of K
  ExtElem pow(std::int64_t k) const;      // negative k inverts first
  ExtElem inverse() const;
  ExtElem truncated(std::int64_t cap) const;

  bool agrees_with(const ExtElem& o) const { return (*this - o).is_zero(); }

  std::string to_string() const;

 private:
  const Extension* E_;
  std::vector<Series> c_;
};

// Lower ramification breaks (with multiplicity), different exponent, and
// the 0th index of inseparability.
struct RamificationData {
  std::vector<std::int64_t> breaks;  // b_1 <= ... <= b_n
  std::int64_t different = 0;        // d = Σ_{σ≠1} i_G(σ)
  std::int64_t i0 = 0;               // d - p^n + 1
  std::vector<std::int64_t> i_values;  // i_G(σ) indexed by group code (0 at identity)
};

// A valuation-graded family λ_t (v_L(λ_t) = t, λ_{t1}/λ_{t2} in K when
// t1 ≡ t2 mod p^n), determined by representatives λ̂_0 = 1, λ̂_1, ...,
// λ̂_{p^n - 1}. Carries the expansion data needed to write elements of L
// as Σ c_r λ̂_r with c_r in K.
class LambdaFamily {
 public:
  LambdaFamily(const Extension& ext, std::vector<ExtElem> hats);

  const Extension& ext() const { return *E_; }
  const ExtElem& hat(std::int64_t r) const { return hats_[static_cast<std::size_t>(r)]; }
  ExtElem at(std::int64_t t) const;  // λ_t for any integer t

  // Coefficients c_0..c_{p^n-1} with y = Σ c_r λ̂_r.
  std::vector<Series> expand(const ExtElem& y) const;

 private:
  const Extension* E_;
  std::vector<ExtElem> hats_;
  std::vector<std::vector<Series>> expand_inv_;  // inverse of the basis matrix
};

// Immutable handle for L/K: multiplication tables, Galois action,
// a uniformizer, ramification data and digit tables, all computed at a
// fixed working precision cap.
class Extension {
 public:
  static std::shared_ptr<const Extension> build(const ExtensionSpec& spec, std::int64_t cap);

  const ExtensionSpec& spec() const { return spec_; }
  const FqField& field() const { return *F_; }
  std::int64_t p() const { return spec_.p; }
  int n() const { return spec_.n; }
  std::int64_t degree() const { return pn_; }
  std::int64_t cap() const { return cap_; }

  const RamificationData& ramification() const { return ram_; }
  std::int64_t i0() const { return ram_.i0; }
  const DigitTables& digits() const { return *digits_; }

  // --- elements ---
  ExtElem zero() const;
  ExtElem one() const;
  ExtElem from_k(const Series& s) const;          // K -> L
  ExtElem basis_elem(std::size_t code) const;     // monomial x^c
  ExtElem generator(int j) const;                 // x_j (1-based)
  ExtElem reduced_generator(int j) const;         // y_j after tower reduction
  const ExtElem& uniformizer() const { return *pi_; }
  const ExtElem& uniformizer_inv() const { return *pi_inv_; }
  // π_L^k for any integer k.
  ExtElem uniformizer_pow(std::int64_t k) const;

  // --- valuation ---
  // v_L(y) = v_K(det of multiplication by y), totally ramified case.
  Valuation v_l(const ExtElem& y) const;
  // Residue of a unit of O_L in F_q (requires v_L = 0).
  FqElem residue(const ExtElem& y) const;
  // Leading Teichmüller digits of the π_L-adic expansion of y, up to
  // exponent max_exp inclusive. Throws InsufficientPrecision when the
  // cap hides a digit in range.
  std::vector<std::pair<std::int64_t, FqElem>> pi_adic_digits(const ExtElem& y,
                                                              std::int64_t max_exp) const;

  // --- Galois action ---
  Automorphism identity() const { return Automorphism{0}; }
  Automorphism sigma(const std::vector<int>& tuple) const;
  std::vector<int> tuple_of(Automorphism g) const;
  Automorphism compose(Automorphism g, Automorphism h) const;
  Automorphism inverse_of(Automorphism g) const;
  ExtElem apply(Automorphism g, const ExtElem& y) const;
  std::vector<Automorphism> group() const;

  // --- λ families ---
  const LambdaFamily& lambda() const { return *lambda_; }
  // Same grading with λ̂_r scaled by the given units for r >= 1
  // (units[r-1] must be a unit of O_K); λ̂_0 stays 1.
  LambdaFamily lambda_with_units(const std::vector<Series>& units) const;

  // Linear solve M w = rhs over K with valuation-aware pivoting; used for
  // inverses and expansion data. Throws InsufficientPrecision when no
  // pivot resolves.
  static std::vector<Series> solve(std::vector<std::vector<Series>> mat,
                                   std::vector<Series> rhs);

  ~Extension();

 private:
  friend class ExtElem;
  friend class LambdaFamily;
  Extension() = default;

  std::vector<Series> mul_raw(const std::vector<Series>& a,
                              const std::vector<Series>& b) const;
  std::vector<std::vector<Series>> mult_matrix(const ExtElem& y) const;
  Valuation det_valuation(std::vector<std::vector<Series>> mat) const;

  ExtensionSpec spec_;
  const FqField* F_ = nullptr;
  std::int64_t pn_ = 0;
  std::int64_t cap_ = 0;
  // mult_table_[c][d] = coordinates of basis_c * basis_d.
  std::vector<std::vector<std::vector<Series>>> mult_table_;
  // act_[g] : row-major p^n x p^n matrix over F_p; σ(basis_c) = Σ_r act[c][r] basis_r.
  std::vector<std::vector<FqElem>> act_;
  std::vector<std::vector<Series>> gens_;     // x_j coords
  std::vector<std::vector<Series>> reduced_;  // y_j coords
  std::vector<std::int64_t> basis_vl_;        // v_L of the basis monomials
  std::unique_ptr<ExtElem> pi_, pi_inv_;
  std::vector<ExtElem> pi_pows_;  // π_L^r, r in [0, p^n)
  std::unique_ptr<LambdaFamily> lambda_;
  std::unique_ptr<DigitTables> digits_;
  RamificationData ram_;
};

}  // namespace galscaf
