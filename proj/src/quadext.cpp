#include "e7/quadext.hpp"

#include <stdexcept>

namespace e7 {

QuadField::QuadField(Rational a) : a_(std::move(a)) {
  if (a_ == 0 || is_rational_square(a_)) {
    throw std::domain_error("quadratic extension parameter " + to_fraction_string(a_) +
                            " is a square");
  }
}

QuadFieldPtr make_quad_field(const Rational& a) { return std::make_shared<const QuadField>(a); }

QuadExt::QuadExt(Rational u, Rational v, QuadFieldPtr field)
    : u_(std::move(u)), v_(std::move(v)), field_(std::move(field)) {
  if (v_ != 0 && !field_) throw std::invalid_argument("irrational QuadExt needs a field");
}

void QuadExt::adopt_field(const QuadExt& o) {
  if (!o.field_) return;
  if (!field_) {
    field_ = o.field_;
    return;
  }
  if (field_ != o.field_ && field_->parameter() != o.field_->parameter()) {
    throw std::invalid_argument("QuadExt operands live in different extensions");
  }
}

QuadExt QuadExt::conj() const { return QuadExt(u_, -v_, field_); }

Rational QuadExt::norm() const {
  if (v_ == 0) return u_ * u_;
  return u_ * u_ - field_->parameter() * v_ * v_;
}

QuadExt QuadExt::inverse() const {
  Rational n = norm();
  if (n == 0) throw std::domain_error("division by zero in QuadExt");
  return QuadExt(u_ / n, -v_ / n, field_);
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  adopt_field(o);
  u_ += o.u_;
  v_ += o.v_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  adopt_field(o);
  u_ -= o.u_;
  v_ -= o.v_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  adopt_field(o);
  if (v_ == 0) {
    if (o.v_ == 0) {
      u_ *= o.u_;
    } else {
      v_ = u_ * o.v_;
      u_ *= o.u_;
    }
    return *this;
  }
  if (o.v_ == 0) {
    u_ *= o.u_;
    v_ *= o.u_;
    return *this;
  }
  Rational nu = u_ * o.u_ + field_->parameter() * v_ * o.v_;
  Rational nv = u_ * o.v_ + v_ * o.u_;
  u_ = std::move(nu);
  v_ = std::move(nv);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) {
  os << x.u_;
  if (x.v_ != 0) os << (x.v_ > 0 ? "+" : "") << x.v_ << "*sqrt(" << x.field_->parameter() << ")";
  return os;
}

}  // namespace e7
