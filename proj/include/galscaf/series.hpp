#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "galscaf/fq.hpp"
#include "galscaf/valuation.hpp"

namespace galscaf {

// Element of K = F_q((t)) known below an absolute precision cap.
//
// Storage: coefficients of t^(lead), ..., t^(lead+size-1); everything from
// lead+size up to (but excluding) cap is known to be zero; at cap and
// beyond nothing is known. cap = kCapInf marks exactly-known values
// (Laurent polynomials). A series with no stored terms is "zero up to cap".
//
// Normal form: first and last stored coefficients are nonzero.
class Series {
 public:
  explicit Series(const FqField& f) : F_(&f), lead_(0), cap_(kCapInf) {}

  static Series zero(const FqField& f, std::int64_t cap = kCapInf);
  static Series constant(const FqField& f, FqElem c);
  static Series monomial(const FqField& f, FqElem c, std::int64_t exp,
                         std::int64_t cap = kCapInf);
  // Build from (exponent, coefficient) terms; duplicates are summed.
  static Series from_terms(const FqField& f,
                           const std::vector<std::pair<std::int64_t, FqElem>>& terms,
                           std::int64_t cap = kCapInf);

  const FqField& field() const { return *F_; }
  std::int64_t cap() const { return cap_; }
  bool is_zero() const { return c_.empty(); }  // zero up to cap
  bool is_exact() const { return cap_ >= kCapInf; }
  // Exactly-known nonzero monomial (or constant)?
  bool is_monomial() const { return is_exact() && c_.size() == 1; }

  Valuation val() const {
    if (c_.empty()) return Valuation::at_least(cap_);
    return Valuation::exact(lead_);
  }
  // Leading exponent; requires a nonzero known coefficient.
  std::int64_t exact_val() const { return val().value(); }

  // Coefficient of t^e; requires e < cap.
  FqElem at(std::int64_t e) const;
  // Stored (exponent, coefficient) pairs in increasing exponent order.
  std::vector<std::pair<std::int64_t, FqElem>> terms() const;

  Series truncated(std::int64_t new_cap) const;
  Series shifted(std::int64_t k) const;  // multiply by t^k

  Series operator-() const;
  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator*(const Series& o) const;
  Series scaled(FqElem c) const;

  // Multiplicative inverse. For exact monomials the result is exact; a
  // finite cap is propagated as cap - 2*val. Throws InsufficientPrecision
  // on zero-up-to-cap input and InvalidInput on an exact non-monomial
  // (callers truncate first).
  Series inverse() const;
  Series pow(std::int64_t k) const;  // negative k inverts first

  // Equality of everything both sides know (below min cap).
  bool agrees_with(const Series& o) const { return (*this - o).is_zero(); }
  // Identical stored data, including caps.
  bool identical(const Series& o) const {
    return lead_ == o.lead_ && cap_ == o.cap_ && c_ == o.c_;
  }

  std::string to_string() const;

 private:
  void normalize();

  const FqField* F_;
  std::int64_t lead_;
  std::vector<FqElem> c_;
  std::int64_t cap_;
};

}  // namespace galscaf
