#pragma once

#include <map>

#include "kms/roots/principal.hpp"

namespace kms {

struct PiS {
  std::vector<IntVec> elements;  // canonical root order
  std::vector<std::size_t> depth;  // spine depth where each element first appears
  bool saturated = false;
};

/// S-principal elements: b_u(x) with p_u(x) = 0, or 2b_u(x) with p_u(x) = 1 and a^u_xx != 0,
/// over the explored spine.
inline PiS pi_S_enumerate(const MarkedGraph& spine) {
  std::map<IntVec, std::size_t> first;
  for (std::size_t u = 0; u < spine.size(); ++u) {
    const Vertex& v = spine.vertices[u];
    for (std::size_t x = 0; x < v.size(); ++x) {
      if (!v.cartan.odd(x)) first.emplace(v.root(x), spine.depth[u]);
      else if (!v.cartan.a(x, x).is_zero()) first.emplace(scale(2, v.root(x)), spine.depth[u]);
    }
  }
  PiS p;
  for (const auto& [r, d] : first) p.elements.push_back(r);
  sort_roots(p.elements);
  for (const auto& r : p.elements) p.depth.push_back(first.at(r));
  if (spine.complete()) {
    p.saturated = true;
  } else if (spine.truncation_depth && *spine.truncation_depth >= 2) {
    p.saturated = true;
    for (const auto& [r, d] : first)
      if (d >= *spine.truncation_depth - 1) p.saturated = false;
  }
  return p;
}

inline std::size_t span_rank(const std::vector<IntVec>& vs, std::size_t dim) {
  if (vs.empty()) return 0;
  QMatrix m(vs.size(), dim);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = Rational(static_cast<long>(vs[i][j]));
  return rank(m);
}

inline bool in_span(const std::vector<IntVec>& vs, const IntVec& v, std::size_t dim) {
  auto w = vs;
  w.push_back(v);
  return span_rank(w, dim) == span_rank(vs, dim);
}

/// The implication C π_S ∩ Δ_is ≠ ∅ ⟹ C Δ = C π_S, tested with the isotropic simple roots
/// of the spine as witnesses. Returns whether some witness lies in the span.
inline bool check_pi_s_span(const PiS& p, const MarkedGraph& spine) {
  const std::size_t n = spine.vertices.at(0).size();
  bool meets = false;
  for (const auto& v : spine.vertices)
    for (std::size_t x = 0; x < v.size(); ++x)
      if (is_isotropic_reflectable(v.cartan, x) && in_span(p.elements, v.root(x), n)) meets = true;
  if (meets && p.saturated && span_rank(p.elements, n) != n)
    fail(ErrorCode::Internal, "π_S meets Δ_is but does not span");
  return meets;
}

}  // namespace kms
