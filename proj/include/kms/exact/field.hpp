#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kms/exact/ratfunc.hpp"

namespace kms {

/// Coefficient field Q(t)[θ]/(f) with at most one transcendental parameter t
/// and an optional algebraic generator θ of minimal polynomial f over Q.
class Field {
 public:
  struct Spec {
    std::vector<std::string> parameters;
    std::string generator = "θ";
    std::vector<Rational> minpoly;  // highest degree first; empty when there is no θ
    std::vector<std::string> nonzero_assumptions;
    std::optional<std::pair<Rational, Rational>> root_interval;
  };

  explicit Field(Spec spec) : spec_(std::move(spec)) {
    if (spec_.parameters.size() > 1)
      fail(ErrorCode::Unsupported, "at most one formal parameter is supported");
    if (!spec_.minpoly.empty()) {
      if (spec_.minpoly.size() < 3) fail(ErrorCode::ReducibleMinpoly, "minimal polynomial must have degree >= 2");
      if (sgn(spec_.minpoly.front()) == 0) fail(ErrorCode::ReducibleMinpoly, "leading coefficient is zero");
      Rational lc = spec_.minpoly.front();
      for (auto& c : spec_.minpoly) c /= lc;
      std::vector<Rational> asc(spec_.minpoly.rbegin(), spec_.minpoly.rend());
      fq_ = Poly<Rational>(asc);
      std::vector<RatFunc> ascf;
      for (const auto& c : asc) ascf.emplace_back(c);
      modulus_ = Poly<RatFunc>(ascf);
      check_no_rational_root();
      if (spec_.root_interval) check_interval();
    }
  }

  const Spec& spec() const { return spec_; }
  bool has_parameter() const { return !spec_.parameters.empty(); }
  const std::string& parameter() const {
    static const std::string dflt = "t";
    return has_parameter() ? spec_.parameters.front() : dflt;
  }
  bool has_generator() const { return !spec_.minpoly.empty(); }
  const std::string& generator() const { return spec_.generator; }
  int degree() const { return has_generator() ? fq_.degree() : 1; }
  const Poly<RatFunc>& modulus() const { return modulus_; }
  const Poly<Rational>& rational_modulus() const { return fq_; }
  bool trivial() const { return !has_parameter() && !has_generator(); }

  friend bool operator==(const Field& a, const Field& b) {
    return a.spec_.parameters == b.spec_.parameters && a.spec_.generator == b.spec_.generator &&
           a.spec_.minpoly == b.spec_.minpoly;
  }

 private:
  static Rational eval(const Poly<Rational>& p, const Rational& x) {
    Rational acc = 0;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + p.coeffs()[i];
    return acc;
  }
  void check_no_rational_root() const {
    // Rational root theorem on the integral multiple of f.
    Integer l = 1;
    for (const auto& c : fq_.coeffs()) l = lcm(l, Integer(c.get_den()));
    std::vector<Integer> z;
    for (const auto& c : fq_.coeffs()) z.push_back(Integer(c * Rational(l)));
    if (z.front() == 0) fail(ErrorCode::ReducibleMinpoly, "zero is a root of the minimal polynomial");
    auto divisors = [](Integer n) {
      std::vector<Integer> d;
      n = abs(n);
      for (Integer i = 1; i * i <= n; ++i)
        if (n % i == 0) {
          d.push_back(i);
          if (i * i != n) d.push_back(n / i);
        }
      return d;
    };
    if (abs(z.front()) > 1000000 || abs(z.back()) > 1000000) return;
    for (const auto& p : divisors(z.front()))
      for (const auto& q : divisors(z.back()))
        for (int s : {1, -1}) {
          Rational r(Integer(p * s), q);
          r.canonicalize();
          if (sgn(eval(fq_, r)) == 0)
            fail(ErrorCode::ReducibleMinpoly, "minimal polynomial has rational root " + r.get_str());
        }
    if (fq_.degree() == 2) {
      Rational disc = fq_.coeff(1) * fq_.coeff(1) - 4 * fq_.coeff(0);
      Integer n = disc.get_num(), d = disc.get_den();
      if (sgn(disc) >= 0 && mpz_perfect_square_p(Integer(n * d).get_mpz_t()))
        fail(ErrorCode::ReducibleMinpoly, "discriminant is a rational square");
    }
  }
  void check_interval() const {
    const auto& [lo, hi] = *spec_.root_interval;
    if (!(lo < hi) || sgn(eval(fq_, lo)) * sgn(eval(fq_, hi)) >= 0)
      fail(ErrorCode::InvalidParameters, "root interval does not isolate a sign change");
  }

  Spec spec_;
  Poly<Rational> fq_;
  Poly<RatFunc> modulus_;
};

using FieldPtr = std::shared_ptr<const Field>;

inline FieldPtr make_field(Field::Spec spec) { return std::make_shared<const Field>(std::move(spec)); }

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return (!a || a->trivial()) && (!b || b->trivial());
  return *a == *b;
}

}  // namespace kms
