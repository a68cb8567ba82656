#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "galscaf/coset.hpp"
#include "galscaf/group_algebra.hpp"

namespace galscaf {

// Finite formal sum Σ a_k ⊗ b_k in L ⊗_K L. No normal form is kept;
// equality is decided through φ.
class TensorElem {
 public:
  explicit TensorElem(const Extension& ext) : E_(&ext) {}
  TensorElem(const Extension& ext, std::vector<std::pair<ExtElem, ExtElem>> pairs)
      : E_(&ext), pairs_(std::move(pairs)) {}

  const Extension& ext() const { return *E_; }
  const std::vector<std::pair<ExtElem, ExtElem>>& pairs() const { return pairs_; }

  void add_pair(ExtElem a, ExtElem b) { pairs_.emplace_back(std::move(a), std::move(b)); }

  // (Σ a⊗b)(Σ c⊗d) = Σ ac ⊗ bd.
  TensorElem operator*(const TensorElem& o) const;
  TensorElem pow(std::int64_t k) const;  // k >= 0

 private:
  const Extension* E_;
  std::vector<std::pair<ExtElem, ExtElem>> pairs_;
};

// φ(a ⊗ b) = Σ_σ a·σ(b)·σ, extended linearly. A K-linear isomorphism
// L ⊗_K L -> L[G] under which the tensor product becomes the
// coefficientwise product.
LGroupAlgebraElem phi_forward(const TensorElem& beta);

// Inverse of φ for ξ ∈ K[G] ⊂ L[G]: finds β = Σ_j c_j ⊗ π_L^j by a
// valuation-aware solve of σ(π_L^j)-matrix against the coefficients.
// This is the testing route; diagrams are computed without it.
TensorElem phi_inverse(const GroupAlgebraElem& xi);

// Support classes [i, j] of the expansion β = Σ a_ij π_L^i ⊗ π_L^j with
// Teichmüller digits a_ij ≠ 0, listing only classes with i <= max_i.
std::vector<Coset> tensor_support(const TensorElem& beta, std::int64_t max_i);

}  // namespace galscaf
