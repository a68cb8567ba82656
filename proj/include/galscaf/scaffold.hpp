#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galscaf/diagram.hpp"
#include "galscaf/group_algebra.hpp"
#include "galscaf/rng.hpp"

namespace galscaf {

// Galois scaffold data: Ψ_1..Ψ_n in K[G] together with a λ grading and a
// certified precision (nullopt = infinite).
struct Scaffold {
  std::vector<GroupAlgebraElem> psi;
  LambdaFamily lambda;
  std::optional<std::int64_t> certified;
  std::string infinite_reason;  // set when certified is infinite
};

// Margin of one congruence case: the number of extra valuation units by
// which Ψ(λ_t) matches u·λ_{t+shift} (hit case) or vanishes past the
// shift (miss case).
struct CaseMargin {
  int i = 0;               // scaffold index (1-based); 0 for ad-hoc checks
  std::int64_t t = 0;
  std::int64_t shift = 0;
  bool hit = false;
  Valuation margin = Valuation::infinite();
  std::optional<Series> unit;  // u with v(u) = 0, present in resolved hit cases
};

// Margin of the congruence ξ(λ_t) ≡ u·λ_{t+shift} (hit) or ≡ 0 (miss),
// both modulo λ_{t+shift} M_L^c. Definitive failures give an exact margin
// <= 0; unresolved cases throw InsufficientPrecision.
CaseMargin congruence_margin(const GroupAlgebraElem& xi, const LambdaFamily& lam,
                             std::int64_t t, std::int64_t shift, bool hit, int i = 0);

struct VerifyReport {
  std::int64_t certified = 0;  // max c <= max_c passing every case; 0 = not a scaffold
  bool is_scaffold = false;
  bool cap_limited = false;  // the binding margin was only a bound
  std::vector<CaseMargin> cases;
  std::string failure;  // first definitive failure, when any
};

// Check the scaffold congruences for every i and one full period of t,
// reporting the best precision <= max_c. Definitive sub-unit margins make
// the candidate "not a scaffold" rather than an error. The (i, t) cases
// are independent; threads > 1 splits the sweep with a deterministic merge.
VerifyReport verify_scaffold(const std::vector<GroupAlgebraElem>& psi,
                             const LambdaFamily& lam, std::int64_t max_c,
                             int threads = 1);

// Ordered monomial Ψ_n^{s_(0)} Ψ_{n-1}^{s_(1)} ... Ψ_1^{s_(n-1)}.
GroupAlgebraElem scaffold_monomial(const Scaffold& sc, std::int64_t s);

// Candidate scaffold for the built extension: Ψ_i = (σ_i - 1)^(p^(n-i))
// with σ_i the i-th coordinate generator. Always a scaffold in degree p;
// for larger towers the verifier decides.
std::vector<GroupAlgebraElem> default_candidate(const Extension& ext);

// From Φ_i with exact valuation behaviour on the λ grading to a scaffold
// with Ψ_i(1) = 0 and precision >= 1, verified up to max_c.
Scaffold build_from_phi(const std::vector<GroupAlgebraElem>& phi,
                        const LambdaFamily& lam, std::int64_t max_c);

struct SemistableBuild {
  Scaffold scaffold;
  std::vector<std::int64_t> v_scale;  // π_K exponents used per index
};

// Witness-to-scaffold direction: Θ_i as coefficientwise powers of a
// normalized witness, rescaled by π_K^(-v_i) and fed to build_from_phi.
SemistableBuild build_from_semistable(const GroupAlgebraElem& xi_normalized,
                                      const LambdaFamily& lam, std::int64_t max_c);

struct ScaffoldWitness {
  GroupAlgebraElem xi;
  WitnessVerdict verdict;
};

// Scaffold-to-witness direction: ξ = Ψ^(p^n - 2); asserts the predicted
// diagram (d = -b_n, diagonal {[-b_n,0],[0,-b_n]}) and that the witness
// precision is at least the scaffold's certified precision.
ScaffoldWitness semistable_from_scaffold(const Scaffold& sc);

// max{h-1, p^n - h - 1} with h = i0 mod p^n: witnesses certified to at
// least this precision force stability.
std::int64_t stability_threshold(const Extension& ext);

// Per-index necessary congruence b_i ≡ -i0 mod p^n.
std::vector<bool> breaks_congruence(const Extension& ext);
bool breaks_congruent(const Extension& ext);

struct FalsifierResult {
  bool falsified = false;
  std::string xi_desc;
  std::int64_t t = 0;  // λ index of the violating comparison
  std::int64_t lhs = 0, rhs = 0;
  std::int64_t tested = 0;
  std::uint64_t seed = 0;
};

// One-sided search for a counterexample to the valuation-shift criterion:
// ρ of valuation ≡ -i0 mod p^n must minimize v_L(ξ(y)) - v_L(y) over all
// ξ and y. "Not falsified" is evidence, not proof.
FalsifierResult criterion_c_falsifier(const Extension& ext, const LambdaFamily& lam,
                                      std::int64_t budget, std::uint64_t seed);

struct PromotionResult {
  bool promoted = false;
  std::string reason;
  Scaffold scaffold;  // certified = infinite when promoted
};

// In residue characteristic p with elementary abelian G, Ψ_i^p = 0 turns
// precision 1 into precision infinity. The identity is checked by an
// exact group algebra power; a power that only vanishes up to a cap does
// not qualify.
PromotionResult charp_promotion(const Scaffold& sc);

}  // namespace galscaf
