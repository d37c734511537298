#pragma once

#include <string>

#include "kms/exact/poly.hpp"

namespace kms {

/// Element of Q(t): reduced quotient of rational polynomials, monic denominator.
class RatFunc {
 public:
  using P = Poly<Rational>;

  RatFunc() : den_(Rational(1)) {}
  RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RatFunc(long c) : RatFunc(Rational(c)) {}                    // NOLINT
  RatFunc(P num, P den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RatFunc variable() { return RatFunc(P::x(), P(Rational(1))); }

  const P& num() const { return num_; }
  const P& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  Rational constant() const { return num_.coeff(0); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_constant() && b.is_constant()) return RatFunc(Rational(a.constant() + b.constant()));
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a) {
    RatFunc r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_constant() && b.is_constant()) return RatFunc(Rational(a.constant() * b.constant()));
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  RatFunc inverse() const {
    if (is_zero()) fail(ErrorCode::Internal, "division by zero in Q(t)");
    if (is_constant()) return RatFunc(Rational(1 / constant()));
    return RatFunc(den_, num_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (a.is_constant() && b.is_constant()) {
      if (sgn(b.constant()) == 0) fail(ErrorCode::Internal, "division by zero");
      return RatFunc(Rational(a.constant() / b.constant()));
    }
    return a * b.inverse();
  }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string to_string(const std::string& var) const {
    if (den_.degree() == 0) return poly_to_string(num_, var);
    std::string n = poly_to_string(num_, var);
    if (num_.coeffs().size() > 1 && count_terms(num_) > 1) n = "(" + n + ")";
    return n + "/(" + poly_to_string(den_, var) + ")";
  }

 private:
  static int count_terms(const P& p) {
    int n = 0;
    for (const auto& c : p.coeffs())
      if (sgn(c) != 0) ++n;
    return n;
  }
  void normalize() {
    if (den_.is_zero()) fail(ErrorCode::Internal, "zero denominator in Q(t)");
    if (num_.is_zero()) {
      den_ = P(Rational(1));
      return;
    }
    if (den_.degree() > 0) {
      P g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = P::divmod(num_, g).first;
        den_ = P::divmod(den_, g).first;
      }
    }
    Rational lc = den_.leading();
    if (lc != 1) {
      Rational inv = 1 / lc;
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  P num_;
  P den_;
};

template <>
struct FieldOps<RatFunc> {
  static bool is_zero(const RatFunc& x) { return x.is_zero(); }
  static RatFunc zero() { return RatFunc(); }
  static RatFunc one() { return RatFunc(1L); }
};

}  // namespace kms
