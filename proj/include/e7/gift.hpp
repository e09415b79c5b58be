#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "e7/fts.hpp"
#include "e7/quadext.hpp"
#include "e7/rank.hpp"
#include "e7/report.hpp"

namespace e7 {

/// Sparse n×n matrix over K as (row, col, value) triples.
using SparseQuadMatrix = std::vector<std::tuple<std::uint16_t, std::uint16_t, QuadExt>>;
/// Column of a linear map on A = M_n(F); entries indexed by r * n + s.
using SparseColumn = std::vector<std::pair<std::uint32_t, Rational>>;

/// Sparse rows of an n×n rational matrix.
struct SparseRationalMatrix {
  std::size_t n = 0;
  std::vector<std::vector<std::pair<std::uint32_t, Rational>>> rows;

  explicit SparseRationalMatrix(const RationalMatrix& m);
  SparseRationalMatrix() = default;

  /// m * x.
  template <class S>
  Matrix<S> left_times(const Matrix<S>& x) const {
    Matrix<S> out(n, x.cols());
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [k, v] : rows[i])
        for (std::size_t j = 0; j < x.cols(); ++j)
          if (!is_zero(x(k, j))) out(i, j) += scale(v, x(k, j));
    return out;
  }
  /// x * m.
  template <class S>
  Matrix<S> right_times(const Matrix<S>& x) const {
    Matrix<S> out(x.rows(), n);
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (is_zero(x(i, k))) continue;
        for (const auto& [j, v] : rows[k]) out(i, j) += scale(v, x(i, k));
      }
    return out;
  }
};

/// Data of a gift obtained by Galois descent from a split gift over K:
/// A = {x in M_n(K) : M ι(x) M^{-1} = x}.
struct GiftDescent {
  QuadFieldPtr field;
  RationalMatrix twist;
  RationalMatrix twist_inv;
  /// F-basis of A.
  std::vector<SparseQuadMatrix> basis;
};

enum class GiftKind { split, descended };
std::string to_string(GiftKind k);

/// (A, σ, π) with A carried by its faithful n×n representation:
/// σ(f) = G^{-1} f^T G is the b-adjoint involution, π(f) = p(φ_b^{-1}(f)),
/// φ_b(x⊗y) w = x b(y, w), and Trd is the matrix trace. A descended gift
/// keeps the same σ and π over K and restricts to the fixed subalgebra.
class Gift {
 public:
  /// Throws std::domain_error when b is degenerate.
  Gift(std::shared_ptr<const TripleSystem> system, std::string label,
       std::optional<GiftDescent> descent = std::nullopt);

  GiftKind kind() const { return descent_ ? GiftKind::descended : GiftKind::split; }
  bool is_split() const { return !descent_.has_value(); }
  const std::string& label() const { return label_; }
  std::size_t degree() const { return n_; }
  /// dim_F A.
  std::size_t dimension() const { return n_ * n_; }
  const TripleSystem& system() const { return *system_; }
  const RationalMatrix& b_gram() const { return system_->b_gram(); }
  const std::optional<GiftDescent>& descent() const { return descent_; }

  /// Same σ and A, π replaced by zero.
  Gift with_zero_pi() const;
  bool pi_is_zero() const { return zero_pi_; }

  template <class S>
  Matrix<S> sigma(const Matrix<S>& f) const {
    return gram_.right_times(gram_inv_.left_times(f.transpose()));
  }

  template <class S>
  Matrix<S> pi(const Matrix<S>& f) const {
    Matrix<S> out(n_, n_);
    if (zero_pi_) return out;
    const Matrix<S> x = gram_inv_.right_times(f);
    const TrilinearTensor& t = system_->tensor();
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) {
        const S& xab = x(a, b);
        if (is_zero(xab)) continue;
        const auto [lo, hi] = t.range(a, b);
        const auto& entries = t.entries();
        for (std::size_t k = lo; k < hi; ++k)
          out(entries[k].out, entries[k].c) += scale(entries[k].value, xab);
      }
    out += gram_.right_times(x + x.transpose());
    return out;
  }

  template <class S>
  S trd(const Matrix<S>& f) const {
    return f.trace();
  }

  /// φ_b(x⊗y) = x (G^T y)^T.
  template <class S>
  Matrix<S> phi(const Vec<S>& x, const Vec<S>& y) const {
    Vec<S> row(n_, S(0));
    const RationalMatrix& g = b_gram();
    for (std::size_t i = 0; i < n_; ++i) {
      if (is_zero(y[i])) continue;
      for (std::size_t w = 0; w < n_; ++w)
        if (g(i, w) != 0) row[w] += scale(g(i, w), y[i]);
    }
    return outer(x, row);
  }

  /// Exact π(E_cd) for every basis matrix, as sparse columns indexed by
  /// c * n + d. Computed once (OpenMP over columns) and shared by copies.
  const std::vector<SparseColumn>& pi_columns() const;
  /// Same computation without threads; kept as the reference.
  std::vector<SparseColumn> pi_columns_serial() const;

  /// For descended gifts: x lies in the fixed subalgebra.
  bool contains(const Matrix<QuadExt>& x) const;
  /// The semilinear map x -> M ι(x) M^{-1}.
  Matrix<QuadExt> twist_action(const Matrix<QuadExt>& x) const;
  Matrix<QuadExt> densify(const SparseQuadMatrix& m) const;

 private:
  struct PiCache {
    std::once_flag once;
    std::vector<SparseColumn> columns;
  };

  std::vector<SparseColumn> compute_pi_columns(bool parallel) const;

  std::shared_ptr<const TripleSystem> system_;
  std::string label_;
  std::size_t n_ = 0;
  SparseRationalMatrix gram_;
  SparseRationalMatrix gram_inv_;
  RationalMatrix gram_inv_dense_;
  SparseRationalMatrix twist_;
  SparseRationalMatrix twist_inv_;
  bool zero_pi_ = false;
  std::optional<GiftDescent> descent_;
  std::shared_ptr<PiCache> pi_cache_;
};

/// End(M) = (End_F(V), σ, π). Throws std::domain_error when b is degenerate.
Gift end_of(const TripleSystem& ts);

/// A pair list representing an element of A ⊗ A.
template <class S>
using TensorPairs = std::vector<std::pair<Matrix<S>, Matrix<S>>>;

/// σ₂(φ_b(x1⊗x2) ⊗ φ_b(x3⊗x4)) = -φ_b(x1⊗x3) ⊗ φ_b(x2⊗x4). Valid for split
/// representations, including a descended gift after extending scalars to K.
template <class S>
TensorPairs<S> sigma2_split(const Gift& g, const Vec<S>& x1, const Vec<S>& x2, const Vec<S>& x3,
                            const Vec<S>& x4) {
  TensorPairs<S> out;
  out.emplace_back(-g.phi(x1, x3), g.phi(x2, x4));
  return out;
}

/// Sand(u)(x) = Σ a x b.
template <class S>
Matrix<S> sand(const TensorPairs<S>& u, const Matrix<S>& x) {
  Matrix<S> out(x.rows(), x.cols());
  for (const auto& [a, b] : u) out += a * x * b;
  return out;
}

/// The coefficient in G5: Trd(π(a)π(a')) = kG5Coefficient Trd(π(a)a').
/// With p(u⊗v)w = t(u,v,w) - b(w,u)v - b(w,v)u and φ_b(x⊗y)w = x b(y,w) the
/// trace identity forces +24.
inline constexpr int kG5Coefficient = 24;
/// G4 uses h = π + kG4SigmaSign σ - id. Under the same conventions
/// h(φ(x1⊗x2)) x3 = t(x1,x2,x3) + (1 - s) b(x1,x3) x2 for sign s, so G4 is
/// equivalent to t(x1,x2,x3) = t(x1,x3,x2) only for s = +1.
inline constexpr int kG4SigmaSign = 1;

struct GiftCheckOptions {
  /// Random skew elements tried before G2 is reported inconclusive.
  std::size_t g2_budget = 200;
  int g4_sigma_sign = kG4SigmaSign;
  int g5_coefficient = kG5Coefficient;
};

/// G1..G5 in order. G1, G3, G5 on random elements (G3 on skew ones), G2 by
/// witness search, G4 on random decomposables a = φ(x1⊗x2), a' = φ(x3⊗x4):
/// h(a) a' = -ĥ(σ₂(a ⊗ a')).
std::vector<CheckResult> check_gift_axioms(const Gift& g, const Budget& budget,
                                           const GiftCheckOptions& options = {});

/// σ(ab) = σ(b)σ(a) and σ² = id on random elements; for descended gifts
/// also σ(A) ⊆ A, π(A) ⊆ A and closure under products.
std::vector<CheckResult> check_involution(const Gift& g, const Budget& budget);

/// t(x, y, w) = π(φ_b(x⊗y)) w + b(w, x) y + b(w, y) x for the b the gift
/// carries. Throws std::invalid_argument for a descended gift.
TripleSystem gift_to_fts(const Gift& g);
/// Same with an explicitly supplied b; σ must be its adjoint involution.
TripleSystem gift_to_fts(const Gift& g, const RationalMatrix& b_gram);

/// π agrees on every basis matrix, and the forms agree up to a scalar.
bool same_gift(const Gift& a, const Gift& b);

/// f is a derivation: σ(f) = -f and π(fa) - π(af) = fπ(a) - π(a)f.
template <class S>
bool satisfies_gd(const Gift& g, const Matrix<S>& f, const Matrix<S>& a) {
  const Matrix<S> lhs = g.pi(f * a) - g.pi(a * f);
  const Matrix<S> pa = g.pi(a);
  return lhs == f * pa - pa * f;
}

struct DerivationReport {
  CheckResult gd;
  RankReport pi_rank;
};

/// GD for π(a) on `budget.samples` random a (each against a fresh random
/// element), plus the rank of π modulo `budget.primes` primes.
DerivationReport derivation_suite(const Gift& g, const Budget& budget);

/// Rank of π : A -> A modulo each prime (sparse elimination).
RankReport pi_rank(const Gift& g, const std::vector<std::uint64_t>& primes, bool parallel = true);

/// σ(f) f = 1 and π(f a f^{-1}) = f π(a) f^{-1} on random a.
CheckResult check_isometry(const Gift& g, const RationalMatrix& f, std::size_t samples,
                           std::uint64_t seed);

struct SymmetryDimensions {
  std::size_t skew = 0;
  std::size_t sym = 0;
  /// Rank of Skew + Sym inside A.
  std::size_t sum = 0;
};
/// Exact dimensions of Skew(A, σ) and Sym(A, σ) for a split gift.
SymmetryDimensions symmetry_dimensions(const Gift& g);

/// Right ideal of a split A = End_F(V). Every right ideal is Hom(V, U) for the
/// subspace U spanned by the images of its elements.
class RightIdeal {
 public:
  /// Hom(V, U) for U spanned by the given vectors.
  static RightIdeal hom_into(std::size_t n, const std::vector<RationalVector>& spanning);
  /// The subspace spanned by `elements`. Throws std::invalid_argument when it
  /// is not closed under right multiplication.
  static RightIdeal from_elements(std::size_t n, const std::vector<RationalMatrix>& elements);

  /// Basis of U.
  const std::vector<RationalVector>& image_basis() const { return image_; }
  std::size_t dimension() const { return n_ * image_.size(); }
  /// dim_F I / deg A.
  std::size_t rank() const { return image_.size(); }
  bool contains(const RationalMatrix& f) const;

 private:
  std::size_t n_ = 0;
  std::vector<RationalVector> image_;
};

struct IdealPredicates {
  bool inner = false;
  bool singular = false;
  bool isotropic = false;
  std::size_t rank = 0;
};

/// inner: π(Iσ(I)) ⊆ I; singular: π(Iσ(I)) = 0; isotropic: σ(I)I = 0.
/// I σ(I) is spanned by φ_b(u⊗u') for u, u' in U, which is what is tested.
IdealPredicates ideal_predicates(const Gift& g, const RightIdeal& ideal);

/// Random elements used by the checkers.
RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t n);
/// Random F-combination of the fixed basis of a descended gift.
Matrix<QuadExt> random_fixed_element(const Gift& g, std::mt19937_64& rng);

Json matrix_witness(const RationalMatrix& m);
Json matrix_witness(const Matrix<QuadExt>& m);

}  // namespace e7
