#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kms/cartan/gcm.hpp"
#include "kms/groupoid/graph.hpp"
#include "kms/roots/root.hpp"

namespace kms {

/// Coordinates of β (given in Σ_v) in the basis Σ_u.
inline IntVec coords_at(const Vertex& u, const IntVec& beta) {
  return mul(unimodular_inverse(u.b.transpose()), beta);
}

/// Pairing row of the coroot of b_u(x): ⟨β, b_u(x)^∨⟩ = row · β.
inline IntVec coroot_row(const Vertex& u, std::size_t x) {
  const Scalar f = Scalar(2) / u.cartan.a(x, x);
  const std::size_t n = u.size();
  IntVec row(n);
  for (std::size_t j = 0; j < n; ++j) {
    Scalar s(0);
    for (std::size_t i = 0; i < n; ++i)
      if (!u.a(x, i).is_zero()) s += u.a(x, i) * u.base->A(i, j);
    auto p = integrality_probe(s * f);
    if (!p.integer()) fail(ErrorCode::NotAGCM, "coroot pairing is not an integer: " + (s * f).to_string());
    row[j] = static_cast<Int>(p.value.get_si());
  }
  return row;
}

struct PrincipalData {
  std::size_t rank = 0;                       // dim Q_v
  std::vector<IntVec> sigma_pr;               // canonical root order
  std::vector<std::uint8_t> parity;           // parity of sigma_pr[i]
  std::vector<IntVec> pi;                     // sigma_pr[i] or 2 sigma_pr[i] when odd
  std::vector<IntVec> coroot;                 // ⟨β, π_i^∨⟩ = coroot[i] · β
  IntMatrix b_pi;                             // b_pi(i, j) = ⟨π_j, π_i^∨⟩
  std::vector<std::pair<std::size_t, std::size_t>> source;  // first (spine vertex, x) with sigma_pr[i] = b_u(x)
  bool saturated = false;

  std::size_t size() const { return pi.size(); }
  Int pairing(const IntVec& beta, std::size_t i) const { return dot(coroot[i], beta); }
  IntVec reflect(std::size_t i, const IntVec& beta) const { return sub(beta, scale(pairing(beta, i), pi[i])); }

  /// s_i acting on column vectors of Σ_v coordinates.
  IntMatrix reflection(std::size_t i) const {
    IntMatrix m = IntMatrix::identity(rank);
    for (std::size_t r = 0; r < rank; ++r)
      for (std::size_t c = 0; c < rank; ++c) m(r, c) = checked_add(m(r, c), -checked_mul(pi[i][r], coroot[i][c]));
    return m;
  }

  std::optional<std::size_t> find_pi(const IntVec& v) const {
    for (std::size_t i = 0; i < pi.size(); ++i)
      if (pi[i] == v) return i;
    return std::nullopt;
  }
  std::optional<std::size_t> find_principal(const IntVec& v) const {
    for (std::size_t i = 0; i < sigma_pr.size(); ++i)
      if (sigma_pr[i] == v) return i;
    return std::nullopt;
  }
};

/// Σ_pr, π, coroots and B_π read off the spine.
inline PrincipalData principal_data(const MarkedGraph& spine) {
  if (spine.size() == 0) fail(ErrorCode::Internal, "empty spine");
  PrincipalData pd;
  pd.rank = spine.vertices[0].size();
  struct Found {
    std::uint8_t parity;
    IntVec coroot;
    std::pair<std::size_t, std::size_t> source;
    std::size_t depth;
  };
  std::map<IntVec, Found> found;
  std::map<std::string, std::size_t> classes;  // D-class key -> first depth
  for (std::size_t u = 0; u < spine.size(); ++u) {
    const Vertex& v = spine.vertices[u];
    classes.emplace(d_class_key(v.cartan), spine.depth[u]);
    for (std::size_t x = 0; x < v.size(); ++x) {
      if (reflexion_kind(v.cartan, x) != ReflexionKind::Anisotropic) continue;
      IntVec alpha = v.root(x);
      IntVec row = coroot_row(v, x);
      auto it = found.find(alpha);
      if (it == found.end()) {
        found.emplace(alpha, Found{v.cartan.parity[x], row, {u, x}, spine.depth[u]});
      } else if (it->second.coroot != row) {
        fail(ErrorCode::Internal, "principal root has two different coroots");
      }
    }
  }
  for (const auto& [alpha, f] : found) pd.sigma_pr.push_back(alpha);
  sort_roots(pd.sigma_pr);
  for (const auto& alpha : pd.sigma_pr) {
    const Found& f = found.at(alpha);
    pd.parity.push_back(f.parity);
    pd.source.push_back(f.source);
    if (f.parity) {
      pd.pi.push_back(scale(2, alpha));
      IntVec half = f.coroot;
      for (auto& c : half) {
        if (c % 2 != 0) fail(ErrorCode::NotAGCM, "odd principal root with odd coroot pairing");
        c /= 2;
      }
      pd.coroot.push_back(half);
    } else {
      pd.pi.push_back(alpha);
      pd.coroot.push_back(f.coroot);
    }
  }
  const std::size_t k = pd.pi.size();
  pd.b_pi = IntMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) pd.b_pi(i, j) = pd.pairing(pd.pi[j], i);
  if (k > 0 && !is_gcm(pd.b_pi)) fail(ErrorCode::NotAGCM, "B_π is not a generalized Cartan matrix");

  if (spine.complete()) {
    pd.saturated = true;
  } else if (spine.truncation_depth && *spine.truncation_depth >= 2) {
    const std::size_t last = *spine.truncation_depth - 1;
    bool fresh = false;
    for (const auto& [alpha, f] : found)
      if (f.depth >= last) fresh = true;
    for (const auto& [key, d] : classes)
      if (d >= last) fresh = true;
    pd.saturated = !fresh;
  }
  return pd;
}

/// Elements of a finite set that are not sums of two of its members.
inline RootSet indecomposables_oracle(const RootSet& roots) {
  RootSet out;
  for (const auto& r : roots) {
    bool dec = false;
    for (const auto& a : roots) {
      IntVec b = sub(r, a);
      if (roots.count(b)) {
        dec = true;
        break;
      }
    }
    if (!dec) out.insert(r);
  }
  return out;
}

}  // namespace kms
