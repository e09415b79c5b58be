#pragma once

#include <cstdint>
#include <vector>

#include "e7/gift.hpp"
#include "e7/hermitian.hpp"
#include "e7/report.hpp"

namespace e7 {

/// Parameters of the symplectic descent: K = F(√alpha), Q = (alpha, beta)_F,
/// quadratic spaces <a_i> and twisting constants c_i.
struct SymplemParams {
  Rational alpha;
  Rational beta;
  RationalVector a;
  RationalVector c;
};

struct SymplemReport {
  /// homomorphism, fixed, involution (transpose display), involution
  /// (adjoint display), hermitian coefficients.
  std::vector<CheckResult> checks;
  /// <c_1 a_1, ..., c_n a_n> over Q.
  HermitianForm form;
  bool passed() const { return all_passed(checks); }
};

/// Verifies the matrices of the descent lemma exactly: gf is an algebra map
/// on the basis of Q ⊗ M_n(F), its image is fixed by Int(m) ∘ ι, the two
/// involution identities hold, and the adjoint involution is Int of
/// diag(c_i (√alpha a_i)^{-1}), i.e. the hermitian form <c_i a_i>.
/// Throws std::domain_error when alpha is a square and std::invalid_argument
/// for zero parameters or mismatched lengths.
SymplemReport symplem_verify(const SymplemParams& params);

/// Random parameters with n blocks (alpha a non-square).
SymplemParams random_symplem_params(std::size_t n, std::uint64_t seed);

/// The similarity t(α, j, j', β) = (α/b, b j, j', b² β) of M(J^d).
RationalMatrix quatconst_similarity(const Rational& b);
/// M = t ϖ, the matrix of the twisted Galois action x -> t ϖ ι(x) on V ⊗ K.
RationalMatrix quatconst_twist(const Rational& b);

struct QuatConstResult {
  Gift gift;
  /// similarity, iota isometry, cocycle, fixed dimension, hermitian form.
  std::vector<CheckResult> checks;
  /// <b^{-1}> ⊥ <b> T from the descent parameters.
  HermitianForm hermitian;
};

/// The gift (M_28(Q), σ, π) for Q = (a, b)_F and J = J^d, presented as the
/// subalgebra of M_56(K) fixed by x -> M ι(x) M^{-1}. Throws std::domain_error
/// when a is a square and std::invalid_argument when b = 0.
QuatConstResult quatconst_build(const Rational& a, const Rational& b);

/// check_involution (σ order 2, anti-automorphism, closure of A under
/// products, σ and π) followed by G1..G5.
std::vector<CheckResult> quatconst_check(const QuatConstResult& built, const Budget& budget);

}  // namespace e7
