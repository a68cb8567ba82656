#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "galscaf/extension.hpp"

namespace galscaf {

// Element of K[G]: one coefficient in K per group element, indexed by the
// automorphism code. Acts K-linearly on L.
class GroupAlgebraElem {
 public:
  explicit GroupAlgebraElem(const Extension& ext);
  GroupAlgebraElem(const Extension& ext, std::vector<Series> coeffs);

  static GroupAlgebraElem identity(const Extension& ext);
  // Σ_σ σ (the trace element).
  static GroupAlgebraElem trace(const Extension& ext);
  // σ as a group algebra element.
  static GroupAlgebraElem of(const Extension& ext, Automorphism g);
  // All coefficients equal to 1 (image of 1 ⊗ 1 under φ).
  static GroupAlgebraElem all_ones(const Extension& ext);

  const Extension& ext() const { return *E_; }
  const std::vector<Series>& coeffs() const { return c_; }
  const Series& coeff(Automorphism g) const {
    return c_[static_cast<std::size_t>(g.code)];
  }

  bool is_zero() const;

  GroupAlgebraElem operator+(const GroupAlgebraElem& o) const;
  GroupAlgebraElem operator-(const GroupAlgebraElem& o) const;
  GroupAlgebraElem operator-() const;
  // Group algebra product (convolution over G).
  GroupAlgebraElem operator*(const GroupAlgebraElem& o) const;
  GroupAlgebraElem scaled(const Series& k) const;
  GroupAlgebraElem pow(std::int64_t k) const;  // k >= 0

  // Coefficientwise k-th power; k = 0 gives the all-ones family.
  GroupAlgebraElem hadamard_pow(std::int64_t k) const;

  // ξ(y) = Σ c_σ σ(y).
  ExtElem apply(const ExtElem& y) const;
  // ξ(1) = Σ c_σ as an element of K.
  Series augmentation() const;

  std::string to_string() const;

 private:
  const Extension* E_;
  std::vector<Series> c_;
};

// Element of L[G]; arises as φ(β) before its coefficients are recognized
// as elements of K.
class LGroupAlgebraElem {
 public:
  LGroupAlgebraElem(const Extension& ext, std::vector<ExtElem> coeffs);

  const Extension& ext() const { return *E_; }
  const std::vector<ExtElem>& coeffs() const { return c_; }

  LGroupAlgebraElem operator-(const LGroupAlgebraElem& o) const;
  bool is_zero() const;

  // Coefficientwise product (the image of a tensor product under φ).
  LGroupAlgebraElem hadamard(const LGroupAlgebraElem& o) const;

  // Reinterpret as an element of K[G]; requires every coefficient to lie
  // in K up to its cap (coordinates off K must vanish).
  GroupAlgebraElem as_k_algebra() const;

  static LGroupAlgebraElem lift(const GroupAlgebraElem& xi);

 private:
  const Extension* E_;
  std::vector<ExtElem> c_;
};

}  // namespace galscaf
