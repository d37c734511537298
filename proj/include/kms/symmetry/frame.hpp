#pragma once

#include "kms/roots/principal.hpp"
#include "kms/symmetry/group.hpp"

namespace kms {

using QVec = std::vector<Rational>;

/// V_b ⊕ (dual vectors to the radical) with a nondegenerate symmetric form.
/// Coordinates 0..rank-1 are Σ_v, the rest are the adjoined Λ_j with (r_k, Λ_j) = δ_kj.
struct AffineFrame {
  std::size_t rank = 0;
  std::size_t corank = 0;
  QMatrix gram;
  std::vector<IntVec> radical;  // primitive integral basis of ker of the Σ_v block

  std::size_t dim() const { return rank + corank; }

  Rational form(const QVec& a, const QVec& b) const {
    Rational s = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (sgn(a[i]) == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j) s += a[i] * gram(i, j) * b[j];
    }
    return s;
  }

  QVec embed(const IntVec& v) const {
    QVec out(dim(), Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(static_cast<long>(v[i]));
    return out;
  }
  QVec embed(const QVec& v) const {
    QVec out(dim(), Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
    return out;
  }
  QVec lambda(std::size_t j) const {
    QVec out(dim(), Rational(0));
    out[rank + j] = 1;
    return out;
  }
};

inline QVec qadd(QVec a, const QVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
inline QVec qscale(const Rational& c, QVec a) {
  for (auto& x : a) x *= c;
  return a;
}

inline IntVec primitive(const QVec& v) {
  Integer l = 1, g = 0;
  for (const auto& q : v) l = lcm(l, Integer(q.get_den()));
  for (const auto& q : v) g = gcd(g, Integer(q * Rational(l)));
  IntVec out;
  for (const auto& q : v) out.push_back(to_int(Rational(q * Rational(l) / Rational(g))));
  // first nonzero coordinate positive
  for (Int c : out)
    if (c != 0) {
      if (c < 0) out = negate(out);
      break;
    }
  return out;
}

/// Rational symmetric form on Σ_v: D·A for the symmetrizer D normalized at the first index.
inline QMatrix symmetric_gram(const CartanDatum& d) {
  auto D = symmetrize(d.A);
  if (!D) fail(ErrorCode::NotSymmetrizable, "no invariant form: the matrix is not symmetrizable");
  const std::size_t n = d.size();
  QMatrix G(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) G(i, j) = ((*D)[i] * d.A(i, j)).rational();
  return G;
}

/// Extends a symmetric form G_v on Σ_v to a nondegenerate one: [[G_v, Y], [Yᵀ, 0]] with
/// Y = R (RᵀR)^{-1} for an integral kernel basis R.
inline AffineFrame bilinear_frame(const QMatrix& Gv) {
  const std::size_t n = Gv.rows();
  if (Gv != Gv.transpose()) fail(ErrorCode::InvalidParameters, "the form is not symmetric");
  AffineFrame f;
  f.rank = n;
  for (const auto& k : nullspace(Gv)) f.radical.push_back(primitive(k));
  const std::size_t c = f.radical.size();
  f.corank = c;
  f.gram = QMatrix(n + c, n + c);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) f.gram(i, j) = Gv(i, j);
  if (c > 0) {
    QMatrix R(n, c);
    for (std::size_t j = 0; j < c; ++j)
      for (std::size_t i = 0; i < n; ++i) R(i, j) = Rational(static_cast<long>(f.radical[j][i]));
    QMatrix Y = R * *inverse(R.transpose() * R);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        f.gram(i, n + j) = Y(i, j);
        f.gram(n + j, i) = Y(i, j);
      }
  }
  if (sgn(determinant(f.gram)) == 0) fail(ErrorCode::Internal, "extended form is degenerate");
  return f;
}

inline QMatrix qidentity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

/// s_μ(λ) = λ - 2(λ,μ)/(μ,μ) μ.
inline QMatrix reflection_matrix(const AffineFrame& f, const QVec& mu) {
  const Rational mm = f.form(mu, mu);
  if (sgn(mm) == 0) fail(ErrorCode::InvalidParameters, "reflection in an isotropic vector");
  QMatrix m = qidentity(f.dim());
  for (std::size_t j = 0; j < f.dim(); ++j) {
    QVec e(f.dim(), Rational(0));
    e[j] = 1;
    const Rational c = Rational(2) * f.form(e, mu) / mm;
    for (std::size_t i = 0; i < f.dim(); ++i) m(i, j) -= c * mu[i];
  }
  return m;
}

/// t_ν(λ) = λ + kν - ((λ,ν) + (k/2)(ν,ν))δ with k = (λ,δ), for ν ∈ V_b.
inline QMatrix translation(const AffineFrame& f, const QVec& nu, const QVec& delta) {
  for (std::size_t i = f.rank; i < f.dim(); ++i)
    if (sgn(nu[i]) != 0) fail(ErrorCode::InvalidParameters, "ν must lie in V_b");
  const Rational nn = f.form(nu, nu);
  QMatrix m(f.dim(), f.dim());
  for (std::size_t j = 0; j < f.dim(); ++j) {
    QVec e(f.dim(), Rational(0));
    e[j] = 1;
    const Rational k = f.form(e, delta);
    const Rational c = f.form(e, nu) + k * nn / Rational(2);
    for (std::size_t i = 0; i < f.dim(); ++i) m(i, j) = e[i] + k * nu[i] - c * delta[i];
  }
  return m;
}

/// Matrix of an integral map of Q_v, extended to the frame by the identity on the Λ_j.
/// Only meaningful for checks restricted to V_b.
inline QMatrix on_vb(const AffineFrame& f, const QMatrix& m) {
  QMatrix out(f.rank, f.rank);
  for (std::size_t i = 0; i < f.rank; ++i)
    for (std::size_t j = 0; j < f.rank; ++j) out(i, j) = m(i, j);
  return out;
}

/// Form of a frame with radical vector δ: every s_α, α ∈ π, preserves it and agrees with the
/// integral reflection on Σ_v.
inline bool frame_compatible(const AffineFrame& f, const PrincipalData& pd) {
  for (std::size_t i = 0; i < pd.size(); ++i) {
    const QVec a = f.embed(pd.pi[i]);
    if (sgn(f.form(a, a)) == 0) return false;
    QMatrix s = reflection_matrix(f, a);
    if (s.transpose() * f.gram * s != f.gram) return false;
    if (on_vb(f, s) != to_rational(pd.reflection(i))) return false;
  }
  return true;
}

struct AffineDecomposition {
  std::size_t finite_order = 0;   // |Ẇ|
  std::size_t checked = 0;        // enumerated w examined
  std::size_t factored = 0;       // w = t_ν ẇ with ẇ ∈ Ẇ and ν in the span of π̇
  bool complete_finite = false;   // Ẇ closed below the cap
};

/// W = Ẇ ⋉ τ(M_π) on enumerated elements. `level` is the coefficient of δ in each simple root
/// (π̇ = elements of π of level 0); `delta` is the null root.
inline AffineDecomposition affine_decomposition(const PrincipalData& pd, const WeylEnumeration& W,
                                                const QMatrix& Gv, const std::vector<Rational>& level,
                                                const IntVec& delta, std::size_t cap = 100000) {
  AffineDecomposition out;
  const std::size_t n = pd.rank;
  auto lev = [&](const IntVec& v) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) s += level[i] * Rational(static_cast<long>(v[i]));
    return s;
  };
  std::vector<std::size_t> dot;
  for (std::size_t i = 0; i < pd.size(); ++i)
    if (sgn(lev(pd.pi[i])) == 0) dot.push_back(i);
  // Ẇ by closure; keyed by the action modulo δ, which on level-0 data is faithful.
  std::map<std::vector<Int>, IntMatrix> finite;
  std::vector<IntMatrix> frontier{IntMatrix::identity(n)};
  finite.emplace(IntMatrix::identity(n).data(), IntMatrix::identity(n));
  while (!frontier.empty() && finite.size() < cap) {
    std::vector<IntMatrix> next;
    for (const auto& m : frontier)
      for (std::size_t i : dot) {
        IntMatrix p = mul(pd.reflection(i), m);
        if (finite.emplace(p.data(), p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  out.complete_finite = frontier.empty();
  out.finite_order = finite.size();
  std::vector<IntVec> dot_roots;
  for (std::size_t i : dot) dot_roots.push_back(pd.pi[i]);
  // t = w ẇ^{-1} must fix V_b modulo δ: t(β) - β ∈ Qδ for every β.
  auto translation_part = [&](const IntMatrix& t) -> std::optional<QVec> {
    QVec f(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
      IntVec d(n);
      for (std::size_t i = 0; i < n; ++i) d[i] = t(i, j) - (i == j ? 1 : 0);
      // d must be a multiple of δ
      std::optional<Rational> c;
      for (std::size_t i = 0; i < n; ++i) {
        if (delta[i] == 0) {
          if (d[i] != 0) return std::nullopt;
          continue;
        }
        Rational q = Rational(static_cast<long>(d[i])) / Rational(static_cast<long>(delta[i]));
        if (c && *c != q) return std::nullopt;
        c = q;
      }
      f[j] = -*c;  // (b_v(j), ν)
    }
    auto nu = solve(Gv, f);
    if (!nu) return std::nullopt;
    return nu;
  };
  for (const auto& w : W.elements) {
    ++out.checked;
    for (const auto& [key, wd] : finite) {
      auto nu = translation_part(mul(w.matrix, unimodular_inverse(wd)));
      if (!nu) continue;
      // ν is determined modulo the radical; accept if some representative lies in span π̇.
      std::vector<IntVec> gens = dot_roots;
      for (const auto& k : nullspace(Gv)) gens.push_back(primitive(k));
      QMatrix m(n, gens.size());
      for (std::size_t j = 0; j < gens.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) m(i, j) = Rational(static_cast<long>(gens[j][i]));
      if (solve(m, *nu)) {
        ++out.factored;
        break;
      }
    }
  }
  return out;
}

}  // namespace kms
