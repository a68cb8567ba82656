#include "galscaf/fq.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace galscaf {

namespace {

// Pinned irreducible moduli (Conway polynomials), coefficients f_0..f_m.
// For m = 1 the field is Z/p and the modulus is recorded for reference only.
const std::map<std::pair<std::int64_t, int>, std::vector<int>>& modulus_table() {
  static const std::map<std::pair<std::int64_t, int>, std::vector<int>> table = {
      {{2, 1}, {1, 1}},        // z + 1
      {{3, 1}, {1, 1}},        // z + 1
      {{5, 1}, {3, 1}},        // z + 3
      {{7, 1}, {4, 1}},        // z + 4
      {{2, 2}, {1, 1, 1}},     // z^2 + z + 1
      {{3, 2}, {2, 2, 1}},     // z^2 + 2z + 2
      {{5, 2}, {2, 4, 1}},     // z^2 + 4z + 2
  };
  return table;
}

// Multiply two residue polynomials (base-p digit encodings) mod f.
FqElem poly_mul(std::int64_t p, int m, const std::vector<int>& f, FqElem a, FqElem b) {
  // Expand digits.
  std::vector<std::int64_t> da(m, 0), db(m, 0), prod(2 * m - 1, 0);
  std::int64_t ta = a, tb = b;
  for (int i = 0; i < m; ++i) {
    da[i] = ta % p;
    ta /= p;
    db[i] = tb % p;
    tb /= p;
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  // Reduce by f (monic): z^m = -(f_0 + f_1 z + ... + f_{m-1} z^{m-1}).
  for (int d = 2 * m - 2; d >= m; --d) {
    std::int64_t c = prod[d] % p;
    if (c == 0) continue;
    prod[d] = 0;
    for (int i = 0; i < m; ++i) {
      prod[d - m + i] = ((prod[d - m + i] - c * f[i]) % p + p) % p;
    }
  }
  std::int64_t enc = 0, pw = 1;
  for (int i = 0; i < m; ++i) {
    enc += prod[i] * pw;
    pw *= p;
  }
  return static_cast<FqElem>(enc);
}

}  // namespace

FqField::FqField(std::int64_t p, int m) : p_(p), m_(m) {
  auto it = modulus_table().find({p, m});
  if (it == modulus_table().end())
    throw InvalidInput("unsupported residue field F_" + std::to_string(p) + "^" +
                       std::to_string(m) + " (no pinned modulus)");
  modulus_ = it->second;
  q_ = 1;
  for (int i = 0; i < m; ++i) q_ *= p;

  const std::size_t q = static_cast<std::size_t>(q_);
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  frob_.resize(q);
  frobinv_.resize(q);

  for (std::size_t a = 0; a < q; ++a) {
    // Digitwise negation.
    std::int64_t ta = static_cast<std::int64_t>(a), enc = 0, pw = 1;
    for (int i = 0; i < m; ++i) {
      std::int64_t d = ta % p;
      ta /= p;
      enc += ((p - d) % p) * pw;
      pw *= p;
    }
    neg_[a] = static_cast<FqElem>(enc);
  }
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      // Digitwise addition.
      std::int64_t ta = static_cast<std::int64_t>(a), tb = static_cast<std::int64_t>(b);
      std::int64_t enc = 0, pw = 1;
      for (int i = 0; i < m; ++i) {
        enc += ((ta % p + tb % p) % p) * pw;
        ta /= p;
        tb /= p;
        pw *= p;
      }
      add_[idx(static_cast<FqElem>(a), static_cast<FqElem>(b))] = static_cast<FqElem>(enc);
      mul_[idx(static_cast<FqElem>(a), static_cast<FqElem>(b))] =
          poly_mul(p, m, modulus_, static_cast<FqElem>(a), static_cast<FqElem>(b));
    }
  }
  for (std::size_t a = 1; a < q; ++a) {
    for (std::size_t b = 1; b < q; ++b) {
      if (mul_[idx(static_cast<FqElem>(a), static_cast<FqElem>(b))] == 1) {
        inv_[a] = static_cast<FqElem>(b);
        break;
      }
    }
  }
  for (std::size_t a = 0; a < q; ++a) {
    FqElem r = static_cast<FqElem>(a);
    for (std::int64_t i = 0; i < p; ++i) {
      if (i > 0) r = mul_[idx(r, static_cast<FqElem>(a))];
    }
    // r = a^p after the loop (p-1 multiplications starting from a).
    frob_[a] = r;
  }
  for (std::size_t a = 0; a < q; ++a) frobinv_[frob_[a]] = static_cast<FqElem>(a);
}

const FqField& FqField::get(std::int64_t p, int m) {
  static std::mutex mu;
  static std::map<std::pair<std::int64_t, int>, const FqField*> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, m);
  auto it = cache.find(key);
  if (it == cache.end()) {
    const FqField* f = new FqField(p, m);  // lives for the process
    it = cache.emplace(key, f).first;
  }
  return *it->second;
}

FqElem FqField::pow(FqElem a, std::int64_t k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  FqElem r = 1;
  while (k > 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

FqElem FqField::frobenius_iter(FqElem a, std::int64_t k) const {
  std::int64_t r = k % m_;
  if (r < 0) r += m_;
  for (std::int64_t i = 0; i < r; ++i) a = frob_[a];
  return a;
}

std::string FqField::to_string(FqElem a) const {
  if (m_ == 1) return std::to_string(a);
  std::string s;
  std::int64_t t = a;
  for (int i = 0; i < m_; ++i) {
    std::int64_t d = t % p_;
    t /= p_;
    if (d == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0)
      s += std::to_string(d);
    else if (d == 1)
      s += "z" + std::string(i > 1 ? "^" + std::to_string(i) : "");
    else
      s += std::to_string(d) + "z" + std::string(i > 1 ? "^" + std::to_string(i) : "");
  }
  return s.empty() ? "0" : s;
}

}  // namespace galscaf
