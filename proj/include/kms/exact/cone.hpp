#pragma once

#include <optional>
#include <vector>

#include "kms/exact/matrix.hpp"

namespace kms {

/// Exact feasibility of G c = target with c >= 0 (phase one simplex, Bland's rule).
/// Returns a certificate c when feasible.
inline std::optional<std::vector<Rational>> cone_certificate(const std::vector<std::vector<Rational>>& gens,
                                                             const std::vector<Rational>& target) {
  const std::size_t m = target.size();
  const std::size_t k = gens.size();
  for (const auto& g : gens)
    if (g.size() != m) fail(ErrorCode::Internal, "generator dimension mismatch");
  bool all_zero = true;
  for (const auto& t : target)
    if (sgn(t) != 0) all_zero = false;
  if (all_zero) return std::vector<Rational>(k, Rational(0));
  if (k == 0) return std::nullopt;

  // Tableau columns: k structural, m artificial, then rhs.
  const std::size_t cols = k + m + 1;
  QMatrix t(m + 1, cols);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const int s = sgn(target[i]) < 0 ? -1 : 1;
    for (std::size_t j = 0; j < k; ++j) t(i, j) = gens[j][i] * s;
    t(i, k + i) = 1;
    t(i, cols - 1) = target[i] * s;
    basis[i] = k + i;
  }
  // Objective row: minimise the sum of artificials, written as reduced costs.
  for (std::size_t j = 0; j < cols; ++j) {
    Rational acc = 0;
    if (j < k || j == cols - 1)
      for (std::size_t i = 0; i < m; ++i) acc -= t(i, j);
    t(m, j) = acc;
  }
  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j)
      if (sgn(t(m, j)) < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t(i, enter)) <= 0) continue;
      Rational ratio = t(i, cols - 1) / t(i, enter);
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == m) break;
    Rational piv = t(leave, enter);
    for (std::size_t j = 0; j < cols; ++j) t(leave, j) /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || sgn(t(i, enter)) == 0) continue;
      Rational f = t(i, enter);
      for (std::size_t j = 0; j < cols; ++j) t(i, j) -= f * t(leave, j);
    }
    basis[leave] = enter;
  }
  if (sgn(t(m, cols - 1)) != 0) return std::nullopt;
  std::vector<Rational> c(k, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < k) c[basis[i]] = t(i, cols - 1);
  for (std::size_t i = 0; i < m; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < k; ++j) acc += c[j] * gens[j][i];
    if (acc != target[i]) return std::nullopt;
  }
  return c;
}

/// Membership of `target` in the closed cone spanned by `gens`, over Q.
inline bool cone_membership(const std::vector<std::vector<Scalar>>& gens, const std::vector<Scalar>& target) {
  auto rat = [](const std::vector<Scalar>& v) {
    std::vector<Rational> r;
    r.reserve(v.size());
    for (const auto& s : v) r.push_back(s.rational());
    return r;
  };
  std::vector<std::vector<Rational>> g;
  for (const auto& v : gens) g.push_back(rat(v));
  return cone_certificate(g, rat(target)).has_value();
}

inline bool cone_membership(const std::vector<IntVec>& gens, const IntVec& target) {
  std::vector<std::vector<Rational>> g;
  for (const auto& v : gens) {
    std::vector<Rational> r;
    for (Int x : v) r.emplace_back(static_cast<long>(x));
    g.push_back(std::move(r));
  }
  std::vector<Rational> t;
  for (Int x : target) t.emplace_back(static_cast<long>(x));
  return cone_certificate(g, t).has_value();
}

}  // namespace kms
