#include "galscaf/coset.hpp"

namespace galscaf {

namespace {
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b, r = a % b;
  return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}
std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }
}  // namespace

bool coset_le(std::int64_t pn, const Coset& x, const Coset& y) {
  // Need k with x.a <= y.a + k*pn and x.b <= y.b - k*pn.
  return ceil_div(x.a - y.a, pn) <= floor_div(y.b - x.b, pn);
}

bool coset_complement_rule_holds(std::int64_t pn, const Coset& x, const Coset& y) {
  const bool lhs = !coset_le(pn, x, y);
  const bool rhs = coset_le(pn, Coset::of(pn, y.a + 1, y.b - pn + 1), x);
  return lhs == rhs;
}

}  // namespace galscaf
