#include "galscaf/digits.hpp"

#include <string>

namespace galscaf {

bool preceq(std::int64_t p, std::int64_t s, std::int64_t t) {
  if (s < 0 || t < 0) throw InvalidInput("digit order needs nonnegative arguments");
  while (s > 0 || t > 0) {
    if (s % p > t % p) return false;
    s /= p;
    t /= p;
  }
  return true;
}

DigitTables::DigitTables(std::int64_t p, int n, std::vector<std::int64_t> breaks)
    : p_(p), n_(n), breaks_(std::move(breaks)) {
  if (n_ < 1 || static_cast<int>(breaks_.size()) != n_)
    throw InvalidInput("break vector must have length n >= 1");
  for (std::int64_t b : breaks_)
    if (b % p_ == 0)
      throw InvalidInput("p divides break " + std::to_string(b));
  pn_ = 1;
  for (int i = 0; i < n_; ++i) pn_ *= p_;

  btab_.resize(static_cast<std::size_t>(pn_));
  for (std::int64_t s = 0; s < pn_; ++s) {
    std::int64_t acc = 0, pw = 1, rest = s;
    for (int i = 0; i < n_; ++i) {
      acc += (rest % p_) * pw * breaks_[static_cast<std::size_t>(n_ - 1 - i)];
      rest /= p_;
      pw *= p_;
    }
    btab_[static_cast<std::size_t>(s)] = acc;
  }

  // a = inverse of s -> r(-b(s)); a bijection exactly because p ∤ b_i.
  atab_.assign(static_cast<std::size_t>(pn_), -1);
  for (std::int64_t s = 0; s < pn_; ++s) {
    std::int64_t r = rfun(-btab_[static_cast<std::size_t>(s)]);
    if (atab_[static_cast<std::size_t>(r)] != -1)
      throw InvalidInput("digit map is not a bijection (p divides a break?)");
    atab_[static_cast<std::size_t>(r)] = s;
  }
}

}  // namespace galscaf
