#pragma once

#include <memory>
#include <vector>

#include "kms/cartan/datum.hpp"

namespace kms {

using DatumPtr = std::shared_ptr<const CartanDatum>;

/// Vertex of the groupoid, stored relative to a base vertex v:
/// row x of `b` is b_u(x) in the basis Σ_v, row x of `a` is a_u(x) in the basis {a_v}.
struct Vertex {
  DatumPtr base;
  IntMatrix b;
  SMatrix a;
  CartanDatum cartan;

  static Vertex base_vertex(DatumPtr d) {
    validate(*d);
    const std::size_t n = d->size();
    Vertex v;
    v.b = IntMatrix::identity(n);
    v.a = SMatrix::identity(n);
    v.cartan = *d;
    v.base = std::move(d);
    return v;
  }

  std::size_t size() const { return cartan.size(); }
  IntVec root(std::size_t x) const { return b.row(x); }
  const IntVec& key() const { return b.data(); }
};

/// A_u recomputed from coordinates: C_a * A_v * C_b^T.
inline SMatrix recompute_cartan(const Vertex& u) {
  return u.a * u.base->A * to_scalar(u.b).transpose();
}

/// Parity of an integer combination of Σ_v.
inline std::uint8_t root_parity(const CartanDatum& base, const IntVec& v) {
  Int s = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (base.parity[i]) s += v[i];
  return static_cast<std::uint8_t>(((s % 2) + 2) % 2);
}

/// r_x: the reflexion of u at x.
inline Vertex apply_reflexion(const Vertex& u, std::size_t x) {
  const CartanDatum& d = u.cartan;
  const std::size_t n = d.size();
  if (x >= n) fail(ErrorCode::NotReflectable, "index out of range");
  const ReflexionKind kind = reflexion_kind(d, x);
  if (kind == ReflexionKind::None) fail(ErrorCode::NotReflectable, "x_" + std::to_string(x + 1) + " is not reflectable");

  // b'(y) = b(y) - c_y b(x), a'(y) = a(y) - k_y a(x).
  std::vector<Int> c(n, 0);
  std::vector<Scalar> k(n, Scalar(0));
  std::vector<std::uint8_t> flip(n, 0);
  c[x] = 2;
  k[x] = Scalar(2);
  if (kind == ReflexionKind::Anisotropic) {
    const Scalar two_over = Scalar(2) / d.a(x, x);
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      auto p = integrality_probe(d.a(x, y) * two_over);
      c[y] = static_cast<Int>(p.value.get_si());
      k[y] = d.a(y, x) * two_over;
    }
  } else {
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x || d.a(x, y).is_zero()) continue;
      c[y] = -1;
      k[y] = -(d.a(y, x) / d.a(x, y));
      flip[y] = 1;
    }
  }

  Vertex w;
  w.base = u.base;
  w.b = u.b;
  w.a = u.a;
  for (std::size_t y = 0; y < n; ++y) {
    if (c[y] != 0)
      for (std::size_t j = 0; j < n; ++j) w.b(y, j) = checked_add(u.b(y, j), -checked_mul(c[y], u.b(x, j)));
    if (!k[y].is_zero())
      for (std::size_t j = 0; j < n; ++j) w.a(y, j) = u.a(y, j) - k[y] * u.a(x, j);
  }
  w.cartan.field = d.field;
  w.cartan.parity = d.parity;
  for (std::size_t y = 0; y < n; ++y) w.cartan.parity[y] ^= flip[y];
  w.cartan.A = SMatrix(n, n);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z) {
      Scalar v = d.a(y, z);
      if (c[z] != 0) v -= Scalar(static_cast<long>(c[z])) * d.a(y, x);
      if (!k[y].is_zero()) {
        v -= k[y] * d.a(x, z);
        if (c[z] != 0) v += k[y] * Scalar(static_cast<long>(c[z])) * d.a(x, x);
      }
      w.cartan.A(y, z) = v;
    }
  return w;
}

}  // namespace kms
