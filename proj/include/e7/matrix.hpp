#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "e7/quadext.hpp"
#include "e7/rational.hpp"

namespace e7 {

inline Rational scale(const Rational& r, const Rational& x) { return r * x; }
inline QuadExt scale(const Rational& r, const QuadExt& x) { return r * x; }

template <class S>
using Vec = std::vector<S>;

inline void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string("dimension mismatch in ") + what + ": " +
                                std::to_string(a) + " vs " + std::to_string(b));
  }
}

template <class S>
S dot(const Vec<S>& x, const Vec<S>& y) {
  require_same_size(x.size(), y.size(), "dot");
  S acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!is_zero(x[i]) && !is_zero(y[i])) acc += x[i] * y[i];
  }
  return acc;
}

template <class S>
Vec<S> operator+(Vec<S> x, const Vec<S>& y) {
  require_same_size(x.size(), y.size(), "vector +");
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return x;
}

template <class S>
Vec<S> operator-(Vec<S> x, const Vec<S>& y) {
  require_same_size(x.size(), y.size(), "vector -");
  for (std::size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
  return x;
}

template <class S>
Vec<S> scaled(const S& c, Vec<S> x) {
  for (auto& v : x) v = c * v;
  return x;
}

template <class S>
void axpy(const S& c, const Vec<S>& x, Vec<S>& y) {
  require_same_size(x.size(), y.size(), "axpy");
  if (is_zero(c)) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!is_zero(x[i])) y[i] += c * x[i];
  }
}

template <class S>
bool is_zero_vector(const Vec<S>& x) {
  for (const auto& v : x) {
    if (!is_zero(v)) return false;
  }
  return true;
}

template <class S>
Vec<S> basis_vector(std::size_t n, std::size_t i) {
  Vec<S> e(n, S(0));
  e.at(i) = 1;
  return e;
}

/// Dense row-major matrix; the shape is fixed at construction.
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<S>& data() const { return data_; }
  std::vector<S>& data() { return data_; }

  Vec<S> row(std::size_t i) const {
    return Vec<S>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  Vec<S> col(std::size_t j) const {
    Vec<S> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  void set_col(std::size_t j, const Vec<S>& c) {
    require_same_size(c.size(), rows_, "set_col");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  S trace() const {
    if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
    S acc = 0;
    for (std::size_t i = 0; i < rows_; ++i) acc += (*this)(i, i);
    return acc;
  }

  bool is_zero_matrix() const {
    for (const auto& v : data_) {
      if (!is_zero(v)) return false;
    }
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_shape(o, "matrix +");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_shape(o, "matrix -");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& v : a.data_) v = -v;
    return a;
  }
  friend Matrix operator*(const S& c, Matrix a) {
    for (auto& v : a.data_) v = c * v;
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const S& bkj = b(k, j);
          if (!is_zero(bkj)) c(i, j) += aik * bkj;
        }
      }
    }
    return c;
  }

  friend Vec<S> operator*(const Matrix& a, const Vec<S>& x) {
    require_same_size(a.cols_, x.size(), "matrix-vector product");
    Vec<S> y(a.rows_, S(0));
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (!is_zero(a(i, k)) && !is_zero(x[k])) y[i] += a(i, k) * x[k];
      }
    }
    return y;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  void check_shape(const Matrix& o, const char* what) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw std::invalid_argument(std::string("shape mismatch in ") + what);
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

/// tr(a b) without forming the product.
template <class S>
S trace_of_product(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.cols() || a.cols() != b.rows()) {
    throw std::invalid_argument("trace_of_product shape mismatch");
  }
  S acc = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!is_zero(a(i, k)) && !is_zero(b(k, i))) acc += a(i, k) * b(k, i);
  return acc;
}

/// x y^T.
template <class S>
Matrix<S> outer(const Vec<S>& x, const Vec<S>& y) {
  Matrix<S> m(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!is_zero(y[j])) m(i, j) = x[i] * y[j];
  }
  return m;
}

template <class S>
Matrix<S> convert_matrix(const Matrix<Rational>& m) {
  Matrix<S> out(m.rows(), m.cols());
  for (std::size_t k = 0; k < m.data().size(); ++k) out.data()[k] = S(m.data()[k]);
  return out;
}

template <class S>
Vec<S> convert_vector(const RationalVector& v) {
  return Vec<S>(v.begin(), v.end());
}

/// Gauss-Jordan inverse. Throws std::domain_error when singular.
template <class S>
Matrix<S> inverse(const Matrix<S>& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix<S> a = m;
  Matrix<S> inv = Matrix<S>::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = n;
    for (std::size_t r = c; r < n; ++r) {
      if (!is_zero(a(r, c))) {
        pivot = r;
        break;
      }
    }
    if (pivot == n) throw std::domain_error("matrix is singular");
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(c, j));
        std::swap(inv(pivot, j), inv(c, j));
      }
    }
    S p_inv = S(1) / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_zero(a(c, j))) a(c, j) = a(c, j) * p_inv;
      if (!is_zero(inv(c, j))) inv(c, j) = inv(c, j) * p_inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || is_zero(a(r, c))) continue;
      S f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        if (!is_zero(a(c, j))) a(r, j) -= f * a(c, j);
        if (!is_zero(inv(c, j))) inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

template <class S>
Matrix<S> conj(const Matrix<S>& m) {
  Matrix<S> out(m.rows(), m.cols());
  for (std::size_t k = 0; k < m.data().size(); ++k) out.data()[k] = conj(m.data()[k]);
  return out;
}

template <class S>
Vec<S> conj(const Vec<S>& v) {
  Vec<S> out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = conj(v[k]);
  return out;
}

using RationalMatrix = Matrix<Rational>;

}  // namespace e7
