#pragma once

#include <functional>
#include <set>

#include "kms/roots/pis.hpp"
#include "kms/roots/real.hpp"

namespace kms {

using RootBasis = std::set<IntVec>;  // unordered set of simple roots

/// Δ of a finite component: ±Σ_u over the complete skeleton (non-reflectable roots
/// only with their own sign) and 2α for odd anisotropic α.
inline RootSet finite_root_system(const MarkedGraph& skeleton) {
  if (!skeleton.complete()) fail(ErrorCode::InfiniteSystem, "skeleton exploration was truncated");
  RootSet d;
  for (const auto& u : skeleton.vertices)
    for (std::size_t x = 0; x < u.size(); ++x) {
      const IntVec a = u.root(x);
      const ReflexionKind k = reflexion_kind(u.cartan, x);
      d.insert(a);
      if (k != ReflexionKind::None) d.insert(negate(a));
      if (k == ReflexionKind::Anisotropic && u.cartan.odd(x)) {
        d.insert(scale(2, a));
        d.insert(scale(-2, a));
      }
    }
  return d;
}

inline RootBasis basis_of(const Vertex& u) {
  RootBasis b;
  for (std::size_t x = 0; x < u.size(); ++x) b.insert(u.root(x));
  return b;
}

inline RootBasis negated(const RootBasis& b) {
  RootBasis n;
  for (const auto& a : b) n.insert(negate(a));
  return n;
}

namespace detail {

inline std::optional<QMatrix> basis_inverse(const std::vector<IntVec>& S, std::size_t n) {
  if (S.size() != n) return std::nullopt;
  QMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = Rational(static_cast<long>(S[j][i]));
  return inverse(m);
}

inline std::vector<Rational> apply_q(const QMatrix& m, const IntVec& v) {
  std::vector<Rational> q;
  for (Int c : v) q.push_back(Rational(static_cast<long>(c)));
  return m.apply(q);
}

/// Coordinates integral and all of one sign.
inline bool coherent(const std::vector<Rational>& c) {
  bool pos = false, neg = false;
  for (const auto& q : c) {
    if (!is_integral(q)) return false;
    if (sgn(q) > 0) pos = true;
    if (sgn(q) < 0) neg = true;
  }
  return !(pos && neg);
}

}  // namespace detail

/// Every linearly independent S ⊂ Δ with Δ ⊂ Z_{>=0}S ∪ Z_{<=0}S.
inline std::set<RootBasis> root_bases(const RootSet& delta, std::size_t n) {
  std::vector<IntVec> roots(delta.begin(), delta.end());
  std::set<RootBasis> out;
  std::vector<std::size_t> pick(n);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t start) {
    if (k == n) {
      std::vector<IntVec> S;
      for (auto i : pick) S.push_back(roots[i]);
      auto inv = detail::basis_inverse(S, n);
      if (!inv) return;
      for (const auto& r : roots)
        if (!detail::coherent(detail::apply_q(*inv, r))) return;
      out.insert(RootBasis(S.begin(), S.end()));
      return;
    }
    for (std::size_t i = start; i < roots.size(); ++i) {
      pick[k] = i;
      rec(k + 1, i + 1);
    }
  };
  rec(0, 0);
  return out;
}

struct PositiveSystem {
  RootSet positive;
  std::vector<IntVec> simple;  // indecomposable elements of the positive half
};

/// Positive half for the functional with values h on Σ_v, and its indecomposables.
inline PositiveSystem positive_system(const RootSet& delta, const std::vector<Rational>& h) {
  PositiveSystem p;
  for (const auto& a : delta) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rational(static_cast<long>(a[i])) * h[i];
    if (sgn(s) == 0) fail(ErrorCode::InvalidParameters, "functional vanishes on a root");
    if (sgn(s) > 0) p.positive.insert(a);
  }
  for (const auto& a : indecomposables_oracle(p.positive)) p.simple.push_back(a);
  sort_roots(p.simple);
  return p;
}

enum class Verdict { Yes, No, Unknown };

inline const char* verdict_name(Verdict v) {
  return v == Verdict::Yes ? "yes" : v == Verdict::No ? "no" : "unknown";
}

struct RootBasisCheck {
  Verdict verdict = Verdict::Unknown;
  std::optional<IntVec> witness;  // a root outside Z_{>=0}S ∪ Z_{<=0}S
  std::string reason;
};

/// Checks Δ ⊂ Z_{>=0}S ∪ Z_{<=0}S on every root of height <= height_bound. A closed
/// (finite) enumeration gives Yes. For affine data with null root δ a periodic certificate
/// gives Yes: the residues of Δ modulo Zδ are finite, and for each residue r the k with
/// r + kδ of mixed sign form a bounded window that must lie inside the enumerated heights.
inline RootBasisCheck is_root_basis(const std::vector<IntVec>& S, const PrincipalData& pd, const MarkedGraph& spine,
                                    Int height_bound, const std::optional<IntVec>& delta = std::nullopt) {
  const std::size_t n = pd.rank;
  RootBasisCheck out;
  if (span_rank(S, n) != S.size()) fail(ErrorCode::InvalidParameters, "S is not linearly independent");
  const CartanDatum& base = *spine.vertices.at(0).base;
  if (S.size() != n) {
    for (std::size_t x = 0; x < n; ++x)
      if (!in_span(S, spine.vertices[0].root(x), n)) {
        out.verdict = Verdict::No;
        out.witness = spine.vertices[0].root(x);
        out.reason = "a simple root lies outside the span";
        return out;
      }
    out.reason = "S does not span Q_v";
    return out;
  }
  auto inv = *detail::basis_inverse(S, n);
  RealRoots rr = real_roots(pd, spine, height_bound);
  RootSet roots = real_and_doubled(rr, base);
  if (delta)
    for (Int k = 1; k * height(*delta) <= height_bound; ++k) {
      roots.insert(scale(k, *delta));
      roots.insert(scale(-k, *delta));
    }
  for (const auto& r : roots)
    if (!detail::coherent(detail::apply_q(inv, r))) {
      out.verdict = Verdict::No;
      out.witness = r;
      out.reason = "root with mixed or fractional coordinates";
      return out;
    }
  if (rr.complete) {
    out.verdict = Verdict::Yes;
    out.reason = "finite root system checked in full";
    return out;
  }
  if (!delta) {
    out.reason = "checked up to height " + std::to_string(height_bound);
    return out;
  }
  const IntVec& dl = *delta;
  for (std::size_t i = 0; i < pd.size(); ++i)
    if (pd.pairing(dl, i) != 0) {
      out.reason = "δ is not W-invariant";
      return out;
    }
  auto d = detail::apply_q(inv, dl);
  int sign = 0;
  for (const auto& q : d) {
    if (sgn(q) == 0 || (sign != 0 && sgn(q) != sign)) {
      out.reason = "δ does not have full one-signed support in S";
      return out;
    }
    sign = sgn(q);
  }
  std::size_t j0 = 0;
  while (dl[j0] == 0) ++j0;
  auto reduce = [&](const IntVec& g) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), Integer(static_cast<long>(g[j0])).get_mpz_t(), Integer(static_cast<long>(dl[j0])).get_mpz_t());
    return sub(g, scale(q.get_si(), dl));
  };
  RootSet residues;
  std::deque<IntVec> q;
  for (const auto& r : roots) {
    IntVec red = reduce(r);
    if (!is_zero_vec(red) && residues.insert(red).second) q.push_back(red);
  }
  while (!q.empty()) {
    IntVec r = q.front();
    q.pop_front();
    for (std::size_t i = 0; i < pd.size(); ++i) {
      IntVec s = reduce(pd.reflect(i, r));
      if (residues.insert(s).second) {
        if (residues.size() > 100000) {
          out.reason = "residues modulo δ did not close";
          return out;
        }
        q.push_back(s);
      }
    }
  }
  const Int hd = height(dl);
  for (const auto& r : residues) {
    auto c = detail::apply_q(inv, r);
    for (const auto& x : c)
      if (!is_integral(x)) {
        out.reason = "fractional residue coordinates with no witness inside the window";
        return out;
      }
    // c + k d = c + (sign k)|d|: nonnegative iff sign k >= lo, nonpositive iff sign k <= hi.
    Rational lo, hi;
    bool first = true;
    for (std::size_t j = 0; j < n; ++j) {
      Rational t = -c[j] / abs(d[j]);
      if (first || t > lo) lo = t;
      if (first || t < hi) hi = t;
      first = false;
    }
    Integer klo, khi;
    mpz_cdiv_q(klo.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    mpz_fdiv_q(khi.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
    for (Integer kk = khi + 1; kk < klo; ++kk) {
      const Int k = sign * kk.get_si();
      const Int h = height(r) + k * hd;
      if (h > height_bound || h < -height_bound) {
        out.reason = "a mixed-sign window exceeds the height bound";
        return out;
      }
    }
  }
  out.verdict = Verdict::Yes;
  out.reason = "periodic certificate modulo δ";
  return out;
}

}  // namespace kms
