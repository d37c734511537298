#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kms/exact/field.hpp"

namespace kms {

/// Exact element of a coefficient field. Plain rationals take a fast path and
/// are compatible with every field.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : q_(v) {}                 // NOLINT
  Scalar(int v) : q_(v) {}                  // NOLINT
  Scalar(const Rational& q) : q_(q) {}      // NOLINT
  Scalar(long num, long den) : q_(num, den) { q_.canonicalize(); }

  static Scalar parameter(const FieldPtr& f) {
    if (!f || !f->has_parameter()) fail(ErrorCode::FieldMismatch, "field has no parameter");
    return from_poly(f, Poly<RatFunc>(RatFunc::variable()));
  }
  static Scalar generator(const FieldPtr& f) {
    if (!f || !f->has_generator()) fail(ErrorCode::FieldMismatch, "field has no algebraic generator");
    return from_poly(f, Poly<RatFunc>::x());
  }
  static Scalar from_poly(const FieldPtr& f, Poly<RatFunc> p) {
    if (f && f->has_generator() && p.degree() >= f->degree()) p = Poly<RatFunc>::divmod(p, f->modulus()).second;
    Scalar s;
    if (p.degree() <= 0 && p.coeff(0).is_constant()) {
      s.q_ = p.coeff(0).constant();
      return s;
    }
    if (!f) fail(ErrorCode::FieldMismatch, "non-rational value without a field");
    s.simple_ = false;
    s.f_ = f;
    s.c_ = p.coeffs();
    return s;
  }

  bool is_rational() const { return simple_; }
  const Rational& rational() const {
    if (!simple_) fail(ErrorCode::ParameterizedInput, "value " + to_string() + " is not rational");
    return q_;
  }
  bool is_zero() const { return simple_ && sgn(q_) == 0; }
  bool is_one() const { return simple_ && q_ == 1; }
  const FieldPtr& field() const { return f_; }

  Poly<RatFunc> to_poly() const {
    if (simple_) return Poly<RatFunc>(RatFunc(q_));
    return Poly<RatFunc>(c_);
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.simple_ && b.simple_) return Scalar(Rational(a.q_ + b.q_));
    return from_poly(join(a, b), a.to_poly() + b.to_poly());
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.simple_ && b.simple_) return Scalar(Rational(a.q_ - b.q_));
    return from_poly(join(a, b), a.to_poly() - b.to_poly());
  }
  friend Scalar operator-(const Scalar& a) {
    if (a.simple_) return Scalar(Rational(-a.q_));
    return from_poly(a.f_, -a.to_poly());
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.simple_ && b.simple_) return Scalar(Rational(a.q_ * b.q_));
    if (a.simple_) return from_poly(b.f_, b.to_poly().scaled(RatFunc(a.q_)));
    if (b.simple_) return from_poly(a.f_, a.to_poly().scaled(RatFunc(b.q_)));
    return from_poly(join(a, b), a.to_poly() * b.to_poly());
  }
  Scalar inverse() const {
    if (is_zero()) fail(ErrorCode::Internal, "division by zero");
    if (simple_) return Scalar(Rational(1 / q_));
    if (!f_->has_generator()) return from_poly(f_, Poly<RatFunc>(c_.front().inverse()));
    auto [g, s, t] = Poly<RatFunc>::ext_gcd(to_poly(), f_->modulus());
    if (g.degree() != 0) fail(ErrorCode::ReducibleMinpoly, "minimal polynomial is reducible");
    return from_poly(f_, s);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (a.simple_ && b.simple_) {
      if (sgn(b.q_) == 0) fail(ErrorCode::Internal, "division by zero");
      return Scalar(Rational(a.q_ / b.q_));
    }
    if (b.simple_) return a * b.inverse();
    return a * b.inverse();
  }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.simple_ != b.simple_) return false;
    if (a.simple_) return a.q_ == b.q_;
    return same_field(a.f_, b.f_) && a.c_ == b.c_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Canonical string; parsing it back in the same field yields the same value.
  std::string to_string() const {
    if (simple_) return q_.get_str();
    const std::string var = f_->parameter();
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const RatFunc& c = c_[k];
      if (c.is_zero()) continue;
      std::string term;
      if (k == 0) {
        term = c.to_string(var);
      } else {
        std::string g = f_->generator();
        if (k > 1) g += "^" + std::to_string(k);
        if (c.is_constant()) {
          Rational q = c.constant();
          if (q == 1) term = g;
          else if (q == -1) term = "-" + g;
          else term = q.get_str() + "*" + g;
        } else if (c.den().degree() == 0 && single_term(c.num())) {
          term = c.to_string(var) + "*" + g;
        } else {
          term = "(" + c.to_string(var) + ")*" + g;
        }
      }
      if (!out.empty() && term.front() != '-') out += "+";
      out += term;
    }
    return out.empty() ? "0" : out;
  }

 private:
  static bool single_term(const Poly<Rational>& p) {
    int n = 0;
    for (const auto& c : p.coeffs())
      if (sgn(c) != 0) ++n;
    return n <= 1;
  }
  static FieldPtr join(const Scalar& a, const Scalar& b) {
    if (a.simple_) return b.f_;
    if (b.simple_) return a.f_;
    if (!same_field(a.f_, b.f_)) fail(ErrorCode::FieldMismatch, "operands live in different fields");
    return a.f_;
  }

  bool simple_ = true;
  Rational q_;
  FieldPtr f_;
  std::vector<RatFunc> c_;
};

inline std::string to_string(const Scalar& s) { return s.to_string(); }

}  // namespace kms
