#include "galscaf/group_algebra.hpp"

namespace galscaf {

GroupAlgebraElem::GroupAlgebraElem(const Extension& ext)
    : E_(&ext),
      c_(static_cast<std::size_t>(ext.degree()), Series::zero(ext.field())) {}

GroupAlgebraElem::GroupAlgebraElem(const Extension& ext, std::vector<Series> coeffs)
    : E_(&ext), c_(std::move(coeffs)) {
  if (static_cast<std::int64_t>(c_.size()) != ext.degree())
    throw InvalidInput("group algebra coefficient family has wrong size");
}

GroupAlgebraElem GroupAlgebraElem::identity(const Extension& ext) {
  return of(ext, ext.identity());
}

GroupAlgebraElem GroupAlgebraElem::of(const Extension& ext, Automorphism g) {
  GroupAlgebraElem x(ext);
  x.c_[static_cast<std::size_t>(g.code)] = Series::constant(ext.field(), 1);
  return x;
}

GroupAlgebraElem GroupAlgebraElem::trace(const Extension& ext) { return all_ones(ext); }

GroupAlgebraElem GroupAlgebraElem::all_ones(const Extension& ext) {
  GroupAlgebraElem x(ext);
  for (auto& s : x.c_) s = Series::constant(ext.field(), 1);
  return x;
}

bool GroupAlgebraElem::is_zero() const {
  for (const auto& s : c_)
    if (!s.is_zero()) return false;
  return true;
}

GroupAlgebraElem GroupAlgebraElem::operator+(const GroupAlgebraElem& o) const {
  std::vector<Series> out;
  out.reserve(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out.push_back(c_[i] + o.c_[i]);
  return GroupAlgebraElem(*E_, std::move(out));
}

GroupAlgebraElem GroupAlgebraElem::operator-(const GroupAlgebraElem& o) const {
  return *this + (-o);
}

GroupAlgebraElem GroupAlgebraElem::operator-() const {
  std::vector<Series> out;
  out.reserve(c_.size());
  for (const auto& s : c_) out.push_back(-s);
  return GroupAlgebraElem(*E_, std::move(out));
}

GroupAlgebraElem GroupAlgebraElem::operator*(const GroupAlgebraElem& o) const {
  GroupAlgebraElem out(*E_);
  const int pn = static_cast<int>(E_->degree());
  for (int g = 0; g < pn; ++g) {
    if (c_[static_cast<std::size_t>(g)].is_zero() &&
        c_[static_cast<std::size_t>(g)].is_exact())
      continue;
    for (int h = 0; h < pn; ++h) {
      if (o.c_[static_cast<std::size_t>(h)].is_zero() &&
          o.c_[static_cast<std::size_t>(h)].is_exact())
        continue;
      const int gh = E_->compose(Automorphism{g}, Automorphism{h}).code;
      out.c_[static_cast<std::size_t>(gh)] =
          out.c_[static_cast<std::size_t>(gh)] +
          c_[static_cast<std::size_t>(g)] * o.c_[static_cast<std::size_t>(h)];
    }
  }
  return out;
}

GroupAlgebraElem GroupAlgebraElem::scaled(const Series& k) const {
  std::vector<Series> out;
  out.reserve(c_.size());
  for (const auto& s : c_) out.push_back(s * k);
  return GroupAlgebraElem(*E_, std::move(out));
}

GroupAlgebraElem GroupAlgebraElem::pow(std::int64_t k) const {
  if (k < 0) throw InvalidInput("group algebra power must be nonnegative");
  GroupAlgebraElem base = *this;
  GroupAlgebraElem r = identity(*E_);
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

GroupAlgebraElem GroupAlgebraElem::hadamard_pow(std::int64_t k) const {
  if (k < 0) throw InvalidInput("coefficientwise power must be nonnegative");
  if (k == 0) return all_ones(*E_);
  std::vector<Series> out;
  out.reserve(c_.size());
  for (const auto& s : c_) out.push_back(s.pow(k));
  return GroupAlgebraElem(*E_, std::move(out));
}

ExtElem GroupAlgebraElem::apply(const ExtElem& y) const {
  ExtElem acc = E_->zero();
  for (std::size_t g = 0; g < c_.size(); ++g) {
    if (c_[g].is_zero() && c_[g].is_exact()) continue;
    acc = acc + E_->apply(Automorphism{static_cast<int>(g)}, y).scaled(c_[g]);
  }
  return acc;
}

Series GroupAlgebraElem::augmentation() const {
  Series acc = Series::zero(E_->field());
  for (const auto& s : c_) acc = acc + s;
  return acc;
}

std::string GroupAlgebraElem::to_string() const {
  std::string out;
  for (std::size_t g = 0; g < c_.size(); ++g) {
    if (c_[g].is_zero() && c_[g].is_exact()) continue;
    if (!out.empty()) out += " + ";
    std::string sig = "s(";
    const auto t = E_->tuple_of(Automorphism{static_cast<int>(g)});
    for (std::size_t j = 0; j < t.size(); ++j)
      sig += (j ? "," : "") + std::to_string(t[j]);
    sig += ")";
    out += "(" + c_[g].to_string() + ")" + sig;
  }
  return out.empty() ? "0" : out;
}

// ------------------------------------------------------------------ L[G] ---

LGroupAlgebraElem::LGroupAlgebraElem(const Extension& ext, std::vector<ExtElem> coeffs)
    : E_(&ext), c_(std::move(coeffs)) {
  if (static_cast<std::int64_t>(c_.size()) != ext.degree())
    throw InvalidInput("group algebra coefficient family has wrong size");
}

LGroupAlgebraElem LGroupAlgebraElem::operator-(const LGroupAlgebraElem& o) const {
  std::vector<ExtElem> out;
  out.reserve(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out.push_back(c_[i] - o.c_[i]);
  return LGroupAlgebraElem(*E_, std::move(out));
}

bool LGroupAlgebraElem::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

LGroupAlgebraElem LGroupAlgebraElem::hadamard(const LGroupAlgebraElem& o) const {
  std::vector<ExtElem> out;
  out.reserve(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out.push_back(c_[i] * o.c_[i]);
  return LGroupAlgebraElem(*E_, std::move(out));
}

GroupAlgebraElem LGroupAlgebraElem::as_k_algebra() const {
  std::vector<Series> out;
  out.reserve(c_.size());
  for (const auto& x : c_) {
    for (std::size_t i = 1; i < x.coords().size(); ++i) {
      const Series& s = x.coords()[i];
      if (!s.is_zero()) throw InvalidInput("coefficient does not lie in K");
      if (!s.is_exact())
        throw InsufficientPrecision("coefficient only lies in K up to the cap");
    }
    out.push_back(x.coords()[0]);
  }
  return GroupAlgebraElem(*E_, std::move(out));
}

LGroupAlgebraElem LGroupAlgebraElem::lift(const GroupAlgebraElem& xi) {
  std::vector<ExtElem> out;
  const Extension& E = xi.ext();
  out.reserve(xi.coeffs().size());
  for (const auto& s : xi.coeffs()) out.push_back(E.from_k(s));
  return LGroupAlgebraElem(E, std::move(out));
}

}  // namespace galscaf
