#include "galscaf/series.hpp"

#include <algorithm>

namespace galscaf {

void Series::normalize() {
  std::size_t lo = 0;
  while (lo < c_.size() && c_[lo] == 0) ++lo;
  std::size_t hi = c_.size();
  while (hi > lo && c_[hi - 1] == 0) --hi;
  if (lo == hi) {
    c_.clear();
    lead_ = 0;
    return;
  }
  if (lo > 0) c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lo));
  c_.resize(hi - lo);
  lead_ += static_cast<std::int64_t>(lo);
  // Stored window must stay below the cap.
  if (lead_ + static_cast<std::int64_t>(c_.size()) > cap_) {
    if (lead_ >= cap_) {
      c_.clear();
      lead_ = 0;
      return;
    }
    c_.resize(static_cast<std::size_t>(cap_ - lead_));
    normalize();
  }
}

Series Series::zero(const FqField& f, std::int64_t cap) {
  Series s(f);
  s.cap_ = cap;
  return s;
}

Series Series::constant(const FqField& f, FqElem c) { return monomial(f, c, 0); }

Series Series::monomial(const FqField& f, FqElem c, std::int64_t exp, std::int64_t cap) {
  Series s(f);
  s.cap_ = cap;
  if (c != 0 && exp < cap) {
    s.lead_ = exp;
    s.c_.assign(1, c);
  }
  return s;
}

Series Series::from_terms(const FqField& f,
                          const std::vector<std::pair<std::int64_t, FqElem>>& terms,
                          std::int64_t cap) {
  Series s = zero(f, cap);
  for (const auto& [e, c] : terms) s = s + monomial(f, c, e, cap);
  return s;
}

FqElem Series::at(std::int64_t e) const {
  if (e >= cap_) throw InsufficientPrecision("coefficient at t^" + std::to_string(e) +
                                             " is beyond the precision cap");
  if (c_.empty() || e < lead_ || e >= lead_ + static_cast<std::int64_t>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(e - lead_)];
}

std::vector<std::pair<std::int64_t, FqElem>> Series::terms() const {
  std::vector<std::pair<std::int64_t, FqElem>> out;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) out.emplace_back(lead_ + static_cast<std::int64_t>(i), c_[i]);
  return out;
}

Series Series::truncated(std::int64_t new_cap) const {
  if (new_cap >= cap_) return *this;
  Series s = *this;
  s.cap_ = new_cap;
  s.normalize();
  return s;
}

Series Series::shifted(std::int64_t k) const {
  Series s = *this;
  s.lead_ += k;
  s.cap_ = cap_add(cap_, k);
  return s;
}

Series Series::operator-() const {
  Series s = *this;
  for (auto& c : s.c_) c = F_->neg(c);
  return s;
}

Series Series::operator+(const Series& o) const {
  const std::int64_t cap = std::min(cap_, o.cap_);
  if (c_.empty() && o.c_.empty()) return zero(*F_, cap);
  if (c_.empty()) return o.truncated(cap);
  if (o.c_.empty()) return truncated(cap);
  const std::int64_t lo = std::min(lead_, o.lead_);
  const std::int64_t hi =
      std::max(lead_ + static_cast<std::int64_t>(c_.size()),
               o.lead_ + static_cast<std::int64_t>(o.c_.size()));
  Series s(*F_);
  s.cap_ = cap;
  s.lead_ = lo;
  s.c_.assign(static_cast<std::size_t>(hi - lo), 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    s.c_[static_cast<std::size_t>(lead_ - lo) + i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    auto& slot = s.c_[static_cast<std::size_t>(o.lead_ - lo) + i];
    slot = F_->add(slot, o.c_[i]);
  }
  s.normalize();
  return s;
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator*(const Series& o) const {
  // cap = min over operands of (own cap + other's valuation); a zero
  // factor contributes its cap as a valuation bound.
  const std::int64_t va = c_.empty() ? cap_ : lead_;
  const std::int64_t vb = o.c_.empty() ? o.cap_ : o.lead_;
  const std::int64_t cap = std::min(cap_add(cap_, vb), cap_add(o.cap_, va));
  if (c_.empty() || o.c_.empty()) return zero(*F_, cap);
  Series s(*F_);
  s.cap_ = cap;
  s.lead_ = lead_ + o.lead_;
  const std::size_t n = c_.size() + o.c_.size() - 1;
  s.c_.assign(n, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      auto& slot = s.c_[i + j];
      slot = F_->add(slot, F_->mul(c_[i], o.c_[j]));
    }
  }
  s.normalize();
  return s;
}

Series Series::scaled(FqElem c) const {
  if (c == 0) return zero(*F_, kCapInf);
  Series s = *this;
  for (auto& x : s.c_) x = F_->mul(x, c);
  s.normalize();
  return s;
}

Series Series::inverse() const {
  if (c_.empty())
    throw InsufficientPrecision("inverse of a series that is zero up to its cap");
  if (is_monomial())
    return monomial(*F_, F_->inv(c_[0]), -lead_);
  if (is_exact())
    throw InvalidInput("inverse of an exact non-monomial series needs a finite cap");
  // Back-substitution on the unit part: relative precision is preserved,
  // so the result is known below cap - 2*lead.
  const std::size_t n = static_cast<std::size_t>(cap_ - lead_);
  std::vector<FqElem> u(n, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) u[i] = c_[i];
  std::vector<FqElem> w(n, 0);
  const FqElem u0inv = F_->inv(u[0]);
  w[0] = u0inv;
  for (std::size_t k = 1; k < n; ++k) {
    FqElem acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc = F_->add(acc, F_->mul(u[j], w[k - j]));
    w[k] = F_->neg(F_->mul(u0inv, acc));
  }
  Series s(*F_);
  s.lead_ = -lead_;
  s.cap_ = cap_ - 2 * lead_;
  s.c_ = std::move(w);
  s.normalize();
  return s;
}

Series Series::pow(std::int64_t k) const {
  Series base = *this;
  if (k < 0) {
    base = base.inverse();
    k = -k;
  }
  Series r = constant(*F_, 1);
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

std::string Series::to_string() const {
  std::string s;
  for (const auto& [e, c] : terms()) {
    if (!s.empty()) s += " + ";
    std::string coef = F_->to_string(c);
    if (e == 0) {
      s += coef;
    } else {
      std::string mono = "t^" + std::to_string(e);
      s += (c == 1 && F_->m() == 1) ? mono : coef + "*" + mono;
    }
  }
  if (s.empty()) s = "0";
  if (cap_ < kCapInf) s += " + O(t^" + std::to_string(cap_) + ")";
  return s;
}

}  // namespace galscaf
