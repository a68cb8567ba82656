#pragma once

#include <cstdint>
#include <vector>

#include "galscaf/errors.hpp"

namespace galscaf {

// Base-p digit d_i (the p^i place) of a nonnegative integer.
inline int digit(std::int64_t p, std::int64_t s, int i) {
  for (int k = 0; k < i; ++k) s /= p;
  return static_cast<int>(s % p);
}

// Digitwise partial order on {0, ..., p^n - 1}: s <= t in every base-p
// place. Equivalent to p not dividing binom(t, s).
bool preceq(std::int64_t p, std::int64_t s, std::int64_t t);

// Digit combinatorics attached to a break vector b_1 <= ... <= b_n with
// p not dividing any b_i. Indices s range over S = {0, ..., p^n - 1}.
class DigitTables {
 public:
  DigitTables(std::int64_t p, int n, std::vector<std::int64_t> breaks);

  std::int64_t p() const { return p_; }
  int n() const { return n_; }
  std::int64_t pn() const { return pn_; }
  const std::vector<std::int64_t>& breaks() const { return breaks_; }

  // Least nonnegative residue mod p^n.
  std::int64_t rfun(std::int64_t a) const {
    std::int64_t r = a % pn_;
    return r < 0 ? r + pn_ : r;
  }

  // Weighted digit sum: digit i (the p^i place) pairs with break b_{n-i}.
  std::int64_t bfun(std::int64_t s) const { return btab_[static_cast<std::size_t>(s)]; }

  // Inverse permutation of s -> rfun(-bfun(s)).
  std::int64_t afun(std::int64_t s) const { return atab_[static_cast<std::size_t>(s)]; }

  const std::vector<std::int64_t>& bfun_table() const { return btab_; }
  const std::vector<std::int64_t>& afun_table() const { return atab_; }

 private:
  std::int64_t p_;
  int n_;
  std::int64_t pn_;
  std::vector<std::int64_t> breaks_;
  std::vector<std::int64_t> btab_, atab_;
};

}  // namespace galscaf
