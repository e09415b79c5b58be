#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "e7/albert.hpp"
#include "e7/quadext.hpp"

namespace e7 {

/// B(J, F×F) = [[F, J], [J, F]] with coordinates 0 = α, 1..27 = j,
/// 28..54 = j', 55 = β and product
///   (α1α2 + T(j1,j2'), α1 j2 + β2 j1 + j1'×j2', α2 j1' + β1 j2' + j1×j2, β1β2 + T(j2,j1')).
class BrownAlgebra {
 public:
  static constexpr std::size_t kDim = 2 * AlbertAlgebra::kDim + 2;
  static constexpr std::size_t kAlpha = 0;
  static constexpr std::size_t kBeta = kDim - 1;
  static constexpr std::size_t j_index(std::size_t k) { return 1 + k; }
  static constexpr std::size_t jp_index(std::size_t k) { return 1 + AlbertAlgebra::kDim + k; }

  explicit BrownAlgebra(std::shared_ptr<const AlbertAlgebra> J) : J_(std::move(J)) {}

  const AlbertAlgebra& albert() const { return *J_; }
  std::shared_ptr<const AlbertAlgebra> albert_ptr() const { return J_; }

  template <class R>
  Vec<R> multiply(const Vec<R>& x, const Vec<R>& y) const {
    check(x);
    check(y);
    const auto [a1, j1, jp1, b1] = parts(x);
    const auto [a2, j2, jp2, b2] = parts(y);
    const AlbertAlgebra& J = *J_;
    Vec<R> j = J.cross(jp1, jp2);
    Vec<R> jp = J.cross(j1, j2);
    for (std::size_t k = 0; k < AlbertAlgebra::kDim; ++k) {
      j[k] += a1 * j2[k] + b2 * j1[k];
      jp[k] += a2 * jp1[k] + b1 * jp2[k];
    }
    return join(R(a1 * a2 + J.trace(j1, jp2)), j, jp, R(b1 * b2 + J.trace(j2, jp1)));
  }

  /// (α, j, j', β) -> (β, j, j', α).
  template <class R>
  static Vec<R> conj(const Vec<R>& x) {
    Vec<R> out = x;
    std::swap(out[kAlpha], out[kBeta]);
    return out;
  }

  /// ϖ(α, j, j', β) = (β, j', j, α).
  template <class R>
  static Vec<R> varpi(const Vec<R>& x) {
    Vec<R> out(kDim);
    out[kAlpha] = x[kBeta];
    out[kBeta] = x[kAlpha];
    for (std::size_t k = 0; k < AlbertAlgebra::kDim; ++k) {
      out[j_index(k)] = x[jp_index(k)];
      out[jp_index(k)] = x[j_index(k)];
    }
    return out;
  }

  template <class R>
  static Vec<R> unit() {
    Vec<R> e(kDim, R(0));
    e[kAlpha] = R(1);
    e[kBeta] = R(1);
    return e;
  }

  static RationalMatrix conj_matrix();
  static RationalMatrix varpi_matrix();

 private:
  template <class R>
  static std::tuple<R, Vec<R>, Vec<R>, R> parts(const Vec<R>& x) {
    constexpr std::size_t d = AlbertAlgebra::kDim;
    return {x[kAlpha], Vec<R>(x.begin() + 1, x.begin() + 1 + d),
            Vec<R>(x.begin() + 1 + d, x.begin() + 1 + 2 * d), x[kBeta]};
  }
  template <class R>
  static Vec<R> join(R a, const Vec<R>& j, const Vec<R>& jp, R b) {
    Vec<R> out;
    out.reserve(kDim);
    out.push_back(std::move(a));
    out.insert(out.end(), j.begin(), j.end());
    out.insert(out.end(), jp.begin(), jp.end());
    out.push_back(std::move(b));
    return out;
  }
  template <class R>
  static void check(const Vec<R>& x) {
    if (x.size() != kDim) throw std::invalid_argument("Brown algebra elements have 56 coordinates");
  }

  std::shared_ptr<const AlbertAlgebra> J_;
};

enum class BrownFlavor { split, field };

/// An element of B(J, F×F) or of B(J, Δ) ⊂ B(J, F×F) ⊗ Δ for Δ = F(√a).
/// Coordinates live in Δ; split elements have rational coordinates.
struct BrownElement {
  std::shared_ptr<const BrownAlgebra> parent;
  BrownFlavor flavor = BrownFlavor::split;
  QuadFieldPtr field;
  Vec<QuadExt> coords;
};

BrownElement brown_element(std::shared_ptr<const BrownAlgebra> parent, const RationalVector& coords);
/// Throws std::invalid_argument unless coords are fixed by ϖ ⊗ ι.
BrownElement brown_element(std::shared_ptr<const BrownAlgebra> parent, QuadFieldPtr field,
                           Vec<QuadExt> coords);

/// Throws std::invalid_argument on a flavor or parent mismatch.
BrownElement brown_mul(const BrownElement& x, const BrownElement& y);
BrownElement brown_conj(const BrownElement& x);
BrownElement brown_varpi(const BrownElement& x);

/// x fixed by ϖ ⊗ ι.
bool is_descended(const Vec<QuadExt>& x);

/// F-basis of B(J, Δ): the fixed space of ϖ ⊗ ι inside B(J, F×F) ⊗ Δ.
/// Δ = F(√a); throws std::domain_error when a is a square.
std::vector<Vec<QuadExt>> brown_descend(const Rational& a);
/// s0 = (√a, 0, 0, -√a), which spans the skew space of B(J, Δ).
Vec<QuadExt> brown_s0(const QuadFieldPtr& field);

}  // namespace e7
