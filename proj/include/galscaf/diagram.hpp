#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "galscaf/coset.hpp"
#include "galscaf/group_algebra.hpp"

namespace galscaf {

// f_ξ(a) = min v_L(ξ(y)) over y in M_L^a. Computed as the minimum of
// v_L(ξ(λ_t)) over one window t in [a, a + p^n) — the λ_t generate M_L^a
// over O_K and ξ is O_K-linear, so the window minimum is the true
// minimum (no ultrametric cancellation can go below it).
Valuation f_xi(const GroupAlgebraElem& xi, std::int64_t a, const LambdaFamily& lam);

// Evaluator with a shared cache of v_L(ξ(λ_t)); diagram scans reuse
// overlapping windows. Throws InsufficientPrecision when a needed value
// is unresolved.
class FXi {
 public:
  FXi(const GroupAlgebraElem& xi, const LambdaFamily& lam);
  Valuation at(std::int64_t a);
  std::int64_t exact_at(std::int64_t a);  // throws unless resolvable

 private:
  const GroupAlgebraElem* xi_;
  const LambdaFamily* lam_;
  std::map<std::int64_t, Valuation> term_cache_;
  Valuation term(std::int64_t t);
};

// The diagram data of β with φ(β) = ξ: minimal elements G, the diagonal
// N, d(β) and the certified precision (nullopt = infinite, i.e. G = N).
struct Diagram {
  std::vector<Coset> g_min;              // sorted by normalized b
  std::vector<Coset> n_diag;             // subset of g_min with minimal sum
  std::int64_t d = 0;                    // min coordinate sum
  std::optional<std::int64_t> precision;  // min over G\N of sum - d
};

// Scan of one period of f_ξ via the jump characterization: [a, b] lies in
// G(β) iff f(-b - i0) = a and f(-b - i0 + 1) > a.
Diagram big_g(const GroupAlgebraElem& xi, const LambdaFamily& lam);

// Membership test for D(β) without tensor expansions:
// [a, b] in D(β) iff f_ξ(-b - i0) <= a.
bool big_d_member(const GroupAlgebraElem& xi, const Coset& x, const LambdaFamily& lam);

struct WitnessVerdict {
  bool semistable = false;
  bool stable = false;        // semistable and G = N
  Diagram diagram;
  std::string reason;         // set when not semistable
};

// Semistability of the β with φ(β) = ξ: p ∤ d(β) and |N(β)| = 2.
WitnessVerdict is_semistable_witness(const GroupAlgebraElem& xi, const LambdaFamily& lam);
// Adds the G = N requirement.
WitnessVerdict is_stable_witness(const GroupAlgebraElem& xi, const LambdaFamily& lam);

// Shift a semistable witness by a power of π_K so that its diagonal
// becomes {[h,0],[0,h]} with h = i0 mod p^n. Verifies the imported
// diagonal shape and the congruence d(β) ≡ i0 mod p^n; throws
// ImportedFactViolation when either fails.
GroupAlgebraElem normalize_witness(const GroupAlgebraElem& xi, const LambdaFamily& lam);

}  // namespace galscaf
