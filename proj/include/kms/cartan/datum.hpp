#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kms/exact/matrix.hpp"
#include "kms/exact/probe.hpp"

namespace kms {

/// Cartan datum (A, p): a_xy = <a(x), b(y)>, row x, column y.
struct CartanDatum {
  SMatrix A;
  std::vector<std::uint8_t> parity;
  FieldPtr field;

  std::size_t size() const { return parity.size(); }
  const Scalar& a(std::size_t x, std::size_t y) const { return A(x, y); }
  bool odd(std::size_t x) const { return parity[x] != 0; }

  std::string parity_string() const {
    std::string s;
    for (auto p : parity) s += p ? '1' : '0';
    return s;
  }

  friend bool operator==(const CartanDatum& a, const CartanDatum& b) {
    return a.A == b.A && a.parity == b.parity;
  }
};

inline void validate(const CartanDatum& d) {
  if (d.A.rows() != d.size() || d.A.cols() != d.size())
    fail(ErrorCode::InvalidParameters, "Cartan matrix shape does not match the parity vector");
  for (auto p : d.parity)
    if (p > 1) fail(ErrorCode::InvalidParameters, "parity entries must be 0 or 1");
}

enum class ReflexionKind { None, Isotropic, Anisotropic };

/// Classifies x: isotropic when a_xx = 0 and p(x) = 1; anisotropic when
/// a_xx != 0 and every 2a_xy/a_xx (even) or a_xy/a_xx (odd) is a nonpositive integer.
inline ReflexionKind reflexion_kind(const CartanDatum& d, std::size_t x) {
  const Scalar& axx = d.a(x, x);
  if (axx.is_zero()) return d.odd(x) ? ReflexionKind::Isotropic : ReflexionKind::None;
  const Scalar f = d.odd(x) ? axx.inverse() : Scalar(2) / axx;
  for (std::size_t y = 0; y < d.size(); ++y) {
    if (y == x) continue;
    if (!integrality_probe(d.a(x, y) * f).nonpositive()) return ReflexionKind::None;
  }
  return ReflexionKind::Anisotropic;
}

inline bool reflectable(const CartanDatum& d, std::size_t x) { return reflexion_kind(d, x) != ReflexionKind::None; }

inline bool is_isotropic_reflectable(const CartanDatum& d, std::size_t x) {
  return reflexion_kind(d, x) == ReflexionKind::Isotropic;
}

/// D with D*A symmetric, D(first index of each connected block) = 1.
inline std::optional<std::vector<Scalar>> symmetrize(const SMatrix& A) {
  const std::size_t n = A.rows();
  std::vector<std::optional<Scalar>> d(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (d[s]) continue;
    d[s] = Scalar(1);
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const bool zij = A(i, j).is_zero(), zji = A(j, i).is_zero();
        if (zij != zji) return std::nullopt;
        if (zij) continue;
        Scalar dj = *d[i] * A(i, j) / A(j, i);
        if (!d[j]) {
          d[j] = dj;
          stack.push_back(j);
        } else if (*d[j] != dj) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<Scalar> out;
  for (auto& v : d) out.push_back(*v);
  return out;
}

/// Row-scaled canonical form: each row divided by its first nonzero entry.
inline SMatrix row_normalized(const SMatrix& A) {
  SMatrix N = A;
  for (std::size_t i = 0; i < A.rows(); ++i) {
    std::size_t j = 0;
    while (j < A.cols() && A(i, j).is_zero()) ++j;
    if (j == A.cols()) continue;
    Scalar inv = A(i, j).inverse();
    for (std::size_t k = 0; k < A.cols(); ++k) N(i, k) = A(i, k) * inv;
  }
  return N;
}

/// Key identifying the D-equivalence class of a datum.
inline std::string d_class_key(const CartanDatum& d) {
  SMatrix N = row_normalized(d.A);
  std::string k = d.parity_string() + "|";
  for (const auto& s : N.data()) k += s.to_string() + ",";
  return k;
}

/// Diagonal D with d2.A = D * d1.A and equal parities, if it exists.
inline std::optional<std::vector<Scalar>> d_equivalence(const CartanDatum& d1, const CartanDatum& d2) {
  if (d1.parity != d2.parity || d1.A.rows() != d2.A.rows()) return std::nullopt;
  const std::size_t n = d1.size();
  std::vector<Scalar> D;
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<Scalar> di;
    for (std::size_t j = 0; j < n; ++j) {
      const bool z1 = d1.A(i, j).is_zero(), z2 = d2.A(i, j).is_zero();
      if (z1 != z2) return std::nullopt;
      if (z1) continue;
      Scalar r = d2.A(i, j) / d1.A(i, j);
      if (!di) di = r;
      else if (*di != r) return std::nullopt;
    }
    D.push_back(di ? *di : Scalar(1));
  }
  return D;
}

struct VertexFlags {
  bool fully_reflectable = false;
  bool weakly_symmetrizable = false;
  bool symmetrizable = false;
  bool indecomposable = false;
};

/// Indecomposability read as: A = (0), or the directed graph x -> y (a_xy != 0)
/// admits a closed walk through every index.
inline bool indecomposable(const SMatrix& A) {
  const std::size_t n = A.rows();
  if (n <= 1) return true;
  auto reach = [&](bool transpose) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> st{0};
    seen[0] = true;
    while (!st.empty()) {
      std::size_t i = st.back();
      st.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& e = transpose ? A(j, i) : A(i, j);
        if (i != j && !seen[j] && !e.is_zero()) {
          seen[j] = true;
          st.push_back(j);
        }
      }
    }
    for (bool b : seen)
      if (!b) return false;
    return true;
  };
  return reach(false) && reach(true);
}

inline VertexFlags vertex_flags(const CartanDatum& d) {
  VertexFlags f;
  f.fully_reflectable = true;
  f.weakly_symmetrizable = true;
  for (std::size_t x = 0; x < d.size(); ++x) {
    if (!reflectable(d, x)) {
      f.fully_reflectable = false;
      continue;
    }
    for (std::size_t y = 0; y < d.size(); ++y)
      if (d.a(x, y).is_zero() && !d.a(y, x).is_zero()) f.weakly_symmetrizable = false;
  }
  f.symmetrizable = symmetrize(d.A).has_value();
  f.indecomposable = indecomposable(d.A);
  return f;
}

}  // namespace kms
