#pragma once

#include <cstdint>
#include <string>

#include "galscaf/errors.hpp"

namespace galscaf {

// Caps are absolute exponents; kCapInf marks exactly-known values.
// Chosen so that sums of a few caps never overflow int64.
inline constexpr std::int64_t kCapInf = std::int64_t(1) << 58;

inline std::int64_t cap_add(std::int64_t a, std::int64_t b) {
  if (a >= kCapInf || b >= kCapInf) return kCapInf;
  return a + b;
}

// Truncation-honest valuation report. Exact(v) means a nonzero coefficient
// at v has been exhibited; AtLeast(c) means every coefficient below c is
// known to vanish and c is as far as the data can see. AtLeast(kCapInf)
// plays the role of v = infinity (exact zero).
class Valuation {
 public:
  static Valuation exact(std::int64_t v) { return Valuation(true, v); }
  static Valuation at_least(std::int64_t c) { return Valuation(false, c); }
  static Valuation infinite() { return Valuation(false, kCapInf); }

  bool is_exact() const { return exact_; }
  bool is_infinite() const { return !exact_ && v_ >= kCapInf; }

  // The exhibited valuation; throws unless exact.
  std::int64_t value() const {
    if (!exact_) throw InsufficientPrecision("valuation not resolved: " + to_string());
    return v_;
  }
  // Best known lower bound (= value() when exact).
  std::int64_t lower_bound() const { return v_; }

  Valuation operator+(std::int64_t shift) const {
    if (is_infinite()) return *this;
    return Valuation(exact_, v_ + shift);
  }

  // Valuation of a sum/min of two quantities: exact when one side is
  // provably smaller than everything the other side could be.
  static Valuation min(const Valuation& a, const Valuation& b) {
    if (a.exact_ && b.exact_) return a.v_ <= b.v_ ? a : b;
    if (a.exact_) return a.v_ <= b.v_ ? a : Valuation(false, b.v_);
    if (b.exact_) return b.v_ <= a.v_ ? b : Valuation(false, a.v_);
    return Valuation(false, a.v_ <= b.v_ ? a.v_ : b.v_);
  }

  bool operator==(const Valuation& o) const { return exact_ == o.exact_ && v_ == o.v_; }
  bool operator!=(const Valuation& o) const { return !(*this == o); }

  // True when the valuation is known to be >= bound.
  bool known_at_least(std::int64_t bound) const { return v_ >= bound; }

  std::string to_string() const {
    if (is_infinite()) return "inf";
    if (exact_) return std::to_string(v_);
    return ">=" + std::to_string(v_);
  }

 private:
  Valuation(bool exact, std::int64_t v) : exact_(exact), v_(v) {}
  bool exact_;
  std::int64_t v_;
};

}  // namespace galscaf
