#pragma once

#include <deque>

#include "kms/roots/weyl.hpp"

namespace kms {

struct RealRoots {
  RootSet anisotropic, isotropic, nonreflectable;
  Int height_bound = 0;
  bool complete = false;  // every orbit closed inside the window

  std::optional<RootClass> classify(const IntVec& v) const {
    if (anisotropic.count(v)) return RootClass::Anisotropic;
    if (isotropic.count(v)) return RootClass::Isotropic;
    if (nonreflectable.count(v)) return RootClass::NonReflectable;
    return std::nullopt;
  }
};

/// Closure of `seeds` under the reflections s_α, α ∈ π, inside |ht| <= bound.
/// Orbit points reachable only through higher intermediate roots are not found;
/// `clipped` reports whether the window cut anything off (if not, the orbit is complete).
inline RootSet orbit_within(const PrincipalData& pd, const std::vector<IntVec>& seeds, Int bound,
                            bool* clipped = nullptr) {
  RootSet out;
  std::deque<IntVec> q;
  if (clipped) *clipped = false;
  auto push = [&](const IntVec& v) {
    const Int h = height(v);
    if (h > bound || h < -bound) {
      if (clipped) *clipped = true;
      return;
    }
    if (out.insert(v).second) q.push_back(v);
  };
  for (const auto& s : seeds) push(s);
  while (!q.empty()) {
    IntVec v = q.front();
    q.pop_front();
    for (std::size_t i = 0; i < pd.size(); ++i) push(pd.reflect(i, v));
  }
  return out;
}

/// Δ_an, Δ_is and Δ_nr as W-orbits of simple roots at spine vertices.
inline RealRoots real_roots(const PrincipalData& pd, const MarkedGraph& spine, Int height_bound) {
  std::vector<IntVec> an, is, nr;
  for (const auto& alpha : pd.sigma_pr) {
    an.push_back(alpha);
    an.push_back(negate(alpha));
  }
  for (const auto& v : spine.vertices)
    for (std::size_t x = 0; x < v.size(); ++x) {
      switch (reflexion_kind(v.cartan, x)) {
        case ReflexionKind::Isotropic:
          is.push_back(v.root(x));
          is.push_back(negate(v.root(x)));
          break;
        case ReflexionKind::None: nr.push_back(v.root(x)); break;
        case ReflexionKind::Anisotropic: break;
      }
    }
  RealRoots r;
  r.height_bound = height_bound;
  bool c1, c2, c3;
  r.anisotropic = orbit_within(pd, an, height_bound, &c1);
  r.isotropic = orbit_within(pd, is, height_bound, &c2);
  r.nonreflectable = orbit_within(pd, nr, height_bound, &c3);
  r.complete = !c1 && !c2 && !c3 && spine.complete();
  for (const auto& v : r.isotropic)
    if (r.anisotropic.count(v)) fail(ErrorCode::Internal, "a root is both isotropic and anisotropic");
  for (const auto& v : r.nonreflectable)
    if (r.anisotropic.count(v) || r.isotropic.count(v)) fail(ErrorCode::Internal, "root classes overlap");
  return r;
}

/// Real roots together with 2α for odd anisotropic α, within the same window.
inline RootSet real_and_doubled(const RealRoots& r, const CartanDatum& base) {
  RootSet out = r.anisotropic;
  out.insert(r.isotropic.begin(), r.isotropic.end());
  out.insert(r.nonreflectable.begin(), r.nonreflectable.end());
  for (const auto& a : r.anisotropic)
    if (root_parity(base, a)) {
      IntVec d = scale(2, a);
      if (height(d) <= r.height_bound && height(d) >= -r.height_bound) out.insert(d);
    }
  return out;
}

}  // namespace kms
