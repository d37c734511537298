#pragma once

#include <gmpxx.h>

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "kms/error.hpp"

namespace kms {

using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

template <class K>
struct FieldOps;

template <>
struct FieldOps<Rational> {
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
};

/// Dense univariate polynomial with coefficients in a field K, lowest degree first.
template <class K>
class Poly {
 public:
  using Ops = FieldOps<K>;

  Poly() = default;
  explicit Poly(K c) {
    if (!Ops::is_zero(c)) c_.push_back(std::move(c));
  }
  explicit Poly(std::vector<K> c) : c_(std::move(c)) { trim(); }

  static Poly monomial(K c, std::size_t deg) {
    if (Ops::is_zero(c)) return Poly();
    std::vector<K> v(deg + 1, Ops::zero());
    v[deg] = std::move(c);
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(Ops::one(), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Ops::zero(); }
  K leading() const { return c_.empty() ? Ops::zero() : c_.back(); }

  Poly monic() const {
    if (c_.empty()) return *this;
    Poly r = *this;
    K lc = c_.back();
    for (auto& c : r.c_) c = c / lc;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Ops::zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Ops::zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, Ops::zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (Ops::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  Poly scaled(const K& k) const {
    if (Ops::is_zero(k)) return Poly();
    Poly r = *this;
    for (auto& c : r.c_) c = c * k;
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) fail(ErrorCode::Internal, "polynomial division by zero");
    Poly q, r = a;
    const int db = b.degree();
    const K lb = b.leading();
    while (!r.is_zero() && r.degree() >= db) {
      const int shift = r.degree() - db;
      K f = r.leading() / lb;
      Poly t = monomial(f, static_cast<std::size_t>(shift));
      q += t;
      r -= t * b;
    }
    return {q, r};
  }

  /// Monic gcd.
  friend Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// Returns (g, s, t) with s*a + t*b = g and g monic.
  static std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b, s0(Ops::one()), s1, t0, t1(Ops::one());
    while (!r1.is_zero()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      Poly s2 = s0 - q * s1;
      s0 = std::move(s1);
      s1 = std::move(s2);
      Poly t2 = t0 - q * t1;
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    K lc = r0.leading();
    K inv = Ops::one() / lc;
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
  }

  template <class T>
  T evaluate(const T& x, const T& zero) const {
    T acc = zero;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + T(c_[i]);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && Ops::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

/// Prints a rational polynomial in variable `var`, highest degree first.
inline std::string poly_to_string(const Poly<Rational>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int d = p.degree(); d >= 0; --d) {
    Rational c = p.coeff(static_cast<std::size_t>(d));
    if (sgn(c) == 0) continue;
    const bool neg = sgn(c) < 0;
    Rational a = abs(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    if (d == 0) {
      out += a.get_str();
      continue;
    }
    if (a != 1) out += a.get_str() + "*";
    out += var;
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out;
}

}  // namespace kms
