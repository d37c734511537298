#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "kms/groupoid/vertex.hpp"

namespace kms {

using QVec = std::vector<Rational>;

/// Simple roots written in a named ambient basis with a symmetric form.
struct Realization {
  std::vector<std::string> names;
  SMatrix gram;                       // form on the ambient basis
  std::vector<std::uint8_t> parity;   // parity of ambient basis vectors
  std::vector<QVec> simple;           // Σ_v in ambient coordinates
  std::vector<std::uint8_t> simple_parity;

  std::size_t dim() const { return names.size(); }

  QVec basis(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) {
        QVec v(dim(), Rational(0));
        v[i] = 1;
        return v;
      }
    fail(ErrorCode::InvalidParameters, "unknown basis vector " + name);
  }

  Scalar form(const QVec& u, const QVec& v) const {
    Scalar s(0);
    for (std::size_t i = 0; i < dim(); ++i) {
      if (sgn(u[i]) == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j)
        if (sgn(v[j]) != 0 && !gram(i, j).is_zero()) s += Scalar(Rational(u[i] * v[j])) * gram(i, j);
    }
    return s;
  }

  /// Gram matrix of Σ_v.
  SMatrix cartan() const {
    const std::size_t n = simple.size();
    SMatrix A(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) A(i, j) = form(simple[i], simple[j]);
    return A;
  }

  /// Coordinates of an ambient vector in the basis Σ_v, if it lies in their span.
  std::optional<QVec> coords(const QVec& v) const {
    QMatrix m(dim(), simple.size());
    for (std::size_t j = 0; j < simple.size(); ++j)
      for (std::size_t i = 0; i < dim(); ++i) m(i, j) = simple[j][i];
    auto x = solve(m, v);
    if (!x) return std::nullopt;
    QVec back(dim(), Rational(0));
    for (std::size_t j = 0; j < simple.size(); ++j)
      for (std::size_t i = 0; i < dim(); ++i) back[i] += (*x)[j] * simple[j][i];
    if (back != v) return std::nullopt;
    return x;
  }

  QVec ambient(const IntVec& c) const {
    QVec v(dim(), Rational(0));
    for (std::size_t j = 0; j < simple.size(); ++j)
      for (std::size_t i = 0; i < dim(); ++i) v[i] += Rational(static_cast<long>(c[j])) * simple[j][i];
    return v;
  }

  /// Parses combinations such as "δ-2δ_1", "ε_1+δ_2" or "1/2δ".
  QVec parse(std::string_view s) const {
    QVec v(dim(), Rational(0));
    std::size_t pos = 0;
    auto skip = [&] {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    bool first = true;
    skip();
    while (pos < s.size()) {
      int sign = 1;
      if (s[pos] == '+' || s[pos] == '-') {
        if (s[pos] == '-') sign = -1;
        ++pos;
        skip();
      } else if (!first) {
        fail(ErrorCode::ParseError, "expected + or - in root '" + std::string(s) + "'");
      }
      first = false;
      Rational coef = 1;
      std::size_t start = pos;
      while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
      if (pos > start) {
        coef = Rational(std::string(s.substr(start, pos - start)));
        coef.canonicalize();
      }
      skip();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        skip();
      }
      std::size_t best = names.size(), best_len = 0;
      for (std::size_t i = 0; i < names.size(); ++i)
        if (s.substr(pos, names[i].size()) == names[i] && names[i].size() > best_len) {
          best = i;
          best_len = names[i].size();
        }
      if (best == names.size()) {
        if (pos > start && (pos >= s.size() || s[pos] == '+' || s[pos] == '-'))
          fail(ErrorCode::ParseError, "bare number in root '" + std::string(s) + "'");
        fail(ErrorCode::ParseError, "unknown basis name in root '" + std::string(s) + "'");
      }
      pos += best_len;
      v[best] += coef * sign;
      skip();
    }
    return v;
  }

  std::string format(const QVec& v) const {
    std::string out;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (sgn(v[i]) == 0) continue;
      Rational a = abs(v[i]);
      if (sgn(v[i]) < 0) out += "-";
      else if (!out.empty()) out += "+";
      if (a != 1) out += a.get_str();
      out += names[i];
    }
    return out.empty() ? "0" : out;
  }
};

/// Incremental builder for orthogonal-basis realizations.
class RealizationBuilder {
 public:
  std::size_t add(const std::string& name, const Scalar& square, std::uint8_t parity) {
    r_.names.push_back(name);
    r_.parity.push_back(parity);
    squares_.push_back(square);
    return r_.names.size() - 1;
  }
  void set_product(std::size_t i, std::size_t j, const Scalar& v) { extra_.push_back({i, j, v}); }
  QVec zero() const { return QVec(r_.names.size(), Rational(0)); }
  QVec e(std::size_t i) const {
    QVec v = zero();
    v[i] = 1;
    return v;
  }
  void simple(const QVec& v) { simple_.push_back(v); }
  void simple(const QVec& v, std::uint8_t parity) {
    simple_.push_back(v);
    forced_.push_back({simple_.size() - 1, parity});
  }

  Realization build() {
    const std::size_t d = r_.names.size();
    r_.gram = SMatrix(d, d);
    for (std::size_t i = 0; i < d; ++i) r_.gram(i, i) = squares_[i];
    for (const auto& [i, j, v] : extra_) {
      r_.gram(i, j) = v;
      r_.gram(j, i) = v;
    }
    r_.simple = simple_;
    for (const auto& s : simple_) {
      Rational p = 0;
      for (std::size_t i = 0; i < d; ++i)
        if (r_.parity[i]) p += s[i];
      std::uint8_t par = 0;
      if (is_integral(p)) par = static_cast<std::uint8_t>(((p.get_num().get_si() % 2) + 2) % 2);
      r_.simple_parity.push_back(par);
    }
    for (const auto& [i, p] : forced_) r_.simple_parity[i] = p;
    return r_;
  }

 private:
  struct Product {
    std::size_t i, j;
    Scalar v;
  };
  Realization r_;
  std::vector<Scalar> squares_;
  std::vector<Product> extra_;
  std::vector<QVec> simple_;
  std::vector<std::pair<std::size_t, std::uint8_t>> forced_;
};

inline QVec operator+(QVec a, const QVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
inline QVec operator-(QVec a, const QVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
inline QVec operator*(const Rational& k, QVec a) {
  for (auto& x : a) x *= k;
  return a;
}

}  // namespace kms
