#pragma once

#include <cstdint>
#include <string>

namespace galscaf {

// Class [a, b] in (Z x Z)/H, H generated by (p^n, -p^n), stored with the
// unique representative having 0 <= b < p^n.
struct Coset {
  std::int64_t a;
  std::int64_t b;

  static Coset of(std::int64_t pn, std::int64_t a, std::int64_t b) {
    std::int64_t k = b % pn;
    if (k < 0) k += pn;
    // b - (b - k) = k; shift a the opposite way.
    return Coset{a + (b - k), k};
  }

  // Invariant under the H-shift; the coordinate sum of any representative.
  std::int64_t sum() const { return a + b; }

  bool operator==(const Coset& o) const { return a == o.a && b == o.b; }
  bool operator!=(const Coset& o) const { return !(*this == o); }

  std::string to_string() const {
    return "[" + std::to_string(a) + "," + std::to_string(b) + "]";
  }
};

// Partial order: [a,b] <= [c,d] iff some representative (c', d') of [c,d]
// dominates (a, b) componentwise. Representative shifts are (c + k*p^n,
// d - k*p^n), so the test is ceil((a-c)/p^n) <= floor((d-b)/p^n).
bool coset_le(std::int64_t pn, const Coset& x, const Coset& y);

// Complement identity of the lattice: not(x <= y) iff
// [c+1, d-p^n+1] <= [a,b] where x=[a,b], y=[c,d]. Exposed as a self-check.
bool coset_complement_rule_holds(std::int64_t pn, const Coset& x, const Coset& y);

}  // namespace galscaf
