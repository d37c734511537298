#pragma once

#include <vector>

#include "kms/exact/matrix.hpp"

namespace kms {

using ZMatrix = Matrix<Integer>;

/// M = U * D * V with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithForm {
  ZMatrix U, D, V;
  std::vector<Integer> invariants() const {
    std::vector<Integer> d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
  }
};

inline SmithForm smith_normal_form(const ZMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  ZMatrix D = m, U = ZMatrix::identity(r), V = ZMatrix::identity(c);
  // Row op on D: row_i += k*row_j. Keeps M = U D V by U col_j -= k*col_i.
  auto row_add = [&](std::size_t i, std::size_t j, const Integer& k) {
    for (std::size_t x = 0; x < c; ++x) D(i, x) += k * D(j, x);
    for (std::size_t x = 0; x < r; ++x) U(x, j) -= k * U(x, i);
  };
  auto col_add = [&](std::size_t i, std::size_t j, const Integer& k) {
    for (std::size_t x = 0; x < r; ++x) D(x, i) += k * D(x, j);
    for (std::size_t x = 0; x < c; ++x) V(j, x) -= k * V(i, x);
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t x = 0; x < c; ++x) std::swap(D(i, x), D(j, x));
    for (std::size_t x = 0; x < r; ++x) std::swap(U(x, i), U(x, j));
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t x = 0; x < r; ++x) std::swap(D(x, i), D(x, j));
    for (std::size_t x = 0; x < c; ++x) std::swap(V(i, x), V(j, x));
  };
  auto row_neg = [&](std::size_t i) {
    for (std::size_t x = 0; x < c; ++x) D(i, x) = -D(i, x);
    for (std::size_t x = 0; x < r; ++x) U(x, i) = -U(x, i);
  };

  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    for (;;) {
      std::size_t pi = r, pj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (sgn(D(i, j)) != 0 && (pi == r || abs(D(i, j)) < abs(D(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == r) return {U, D, V};
      row_swap(t, pi);
      col_swap(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (sgn(D(i, t)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        row_add(i, t, -q);
        if (sgn(D(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (sgn(D(t, j)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        col_add(j, t, -q);
        if (sgn(D(t, j)) != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (sgn(D(i, j) % D(t, t)) != 0) {
            row_add(t, i, Integer(1));
            divides = false;
            break;
          }
      if (!divides) continue;
      if (sgn(D(t, t)) < 0) row_neg(t);
      break;
    }
  }
  return {U, D, V};
}

inline ZMatrix to_z(const IntMatrix& m) {
  ZMatrix z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) z(i, j) = Integer(static_cast<long>(m(i, j)));
  return z;
}

/// Structure of Z^n / (column span of the generators): free rank and torsion.
struct LatticeQuotient {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
  bool is_z() const { return free_rank == 1 && torsion.empty(); }
  /// "Z^2 x Z/2", "0" for the trivial group.
  std::string to_string() const {
    std::string s;
    if (free_rank == 1) s = "Z";
    else if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
    for (const auto& t : torsion) s += (s.empty() ? "" : " x ") + std::string("Z/") + t.get_str();
    return s.empty() ? "0" : s;
  }
};

inline LatticeQuotient lattice_quotient(std::size_t n, const std::vector<IntVec>& gens) {
  LatticeQuotient q;
  if (gens.empty()) {
    q.free_rank = n;
    return q;
  }
  ZMatrix m(n, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = Integer(static_cast<long>(gens[j][i]));
  auto s = smith_normal_form(m);
  std::size_t nonzero = 0;
  for (const auto& d : s.invariants()) {
    if (sgn(d) == 0) continue;
    ++nonzero;
    if (d != 1) q.torsion.push_back(d);
  }
  q.free_rank = n - nonzero;
  return q;
}

}  // namespace kms
