#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "galscaf/errors.hpp"

namespace galscaf {

// Element of F_q, q = p^m, encoded as an integer in [0, q) whose base-p
// digits are the coefficients of the residue polynomial.
using FqElem = std::uint16_t;

// Arithmetic context for F_q = F_p[z]/(f) with a pinned irreducible f
// (Conway polynomial for the supported (p, m); see fq.cpp). Operations are
// table lookups; tables are built once per (p, m) and cached globally.
class FqField {
 public:
  // Shared immutable instance for (p, m). Throws InvalidInput when the
  // pair is unsupported.
  static const FqField& get(std::int64_t p, int m);

  std::int64_t p() const { return p_; }
  int m() const { return m_; }
  std::int64_t q() const { return q_; }

  FqElem zero() const { return 0; }
  FqElem one() const { return 1; }

  // Image of an integer under Z -> F_p c F_q (negatives allowed).
  FqElem from_int(std::int64_t v) const {
    std::int64_t r = v % p_;
    if (r < 0) r += p_;
    return static_cast<FqElem>(r);
  }

  FqElem add(FqElem a, FqElem b) const { return add_[idx(a, b)]; }
  FqElem sub(FqElem a, FqElem b) const { return add_[idx(a, neg_[b])]; }
  FqElem neg(FqElem a) const { return neg_[a]; }
  FqElem mul(FqElem a, FqElem b) const { return mul_[idx(a, b)]; }
  FqElem inv(FqElem a) const {
    if (a == 0) throw InvalidInput("division by zero in F_q");
    return inv_[a];
  }
  FqElem pow(FqElem a, std::int64_t k) const;
  FqElem frobenius(FqElem a) const { return frob_[a]; }          // x -> x^p
  FqElem frobenius_inv(FqElem a) const { return frobinv_[a]; }   // p-th root
  // x -> x^(p^k) for any k (negative = inverse iterates).
  FqElem frobenius_iter(FqElem a, std::int64_t k) const;

  // Coefficients f_0..f_m of the pinned modulus, f_m = 1.
  const std::vector<int>& modulus() const { return modulus_; }

  std::string to_string(FqElem a) const;

 private:
  FqField(std::int64_t p, int m);

  std::size_t idx(FqElem a, FqElem b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + b;
  }

  std::int64_t p_;
  int m_;
  std::int64_t q_;
  std::vector<int> modulus_;
  std::vector<FqElem> add_, mul_, neg_, inv_, frob_, frobinv_;
};

}  // namespace galscaf
