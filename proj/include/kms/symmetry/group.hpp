#pragma once

#include <map>
#include <set>
#include <string>

#include "kms/roots/weyl.hpp"

namespace kms {

/// An element of Sp^D(v) or Sk^D(v): a vertex D-equivalent to the base.
struct DGroupElement {
  std::size_t vertex = 0;             // index in the explored graph
  std::vector<std::size_t> path;      // marks from the base vertex
  IntMatrix sigma_b;                  // column x is b_u(x): σ_b(b_v(x)) = b_u(x)
  std::vector<Scalar> diag_D;         // A_u = D · A_v
};

inline IntMatrix sigma_of(const Vertex& u) { return u.b.transpose(); }

/// Vertices of `g` that are D-equivalent to the base vertex, in exploration order.
inline std::vector<DGroupElement> d_equivalent_vertices(const MarkedGraph& g) {
  std::vector<DGroupElement> out;
  const Vertex& base = g.vertices.at(0);
  for (std::size_t u = 0; u < g.size(); ++u) {
    auto D = d_equivalence(base.cartan, g.vertices[u].cartan);
    if (!D) continue;
    out.push_back({u, g.path_to(u), sigma_of(g.vertices[u]), *D});
  }
  return out;
}

/// u1 * u2: the path from the base to u2, followed from u1. Checked against σ^{u1} σ^{u2}.
inline Vertex group_product(const MarkedGraph& g, const DGroupElement& a, const DGroupElement& b) {
  Vertex w = transport_namesake(b.path, g.vertices[0], g.vertices[a.vertex]);
  if (sigma_of(w) != mul(a.sigma_b, b.sigma_b))
    fail(ErrorCode::Internal, "namesake product disagrees with the matrix product");
  return w;
}

inline IntMatrix matrix_power(const IntMatrix& m, Int k) {
  IntMatrix base = k < 0 ? unimodular_inverse(m) : m;
  IntMatrix r = IntMatrix::identity(m.rows());
  for (Int i = 0; i < (k < 0 ? -k : k); ++i) r = mul(r, base);
  return r;
}

struct GroupReport {
  std::vector<DGroupElement> elements;  // elements[0] is the identity
  std::vector<std::size_t> generators;  // indices into elements
  bool complete = false;                // the exploration was complete, so `elements` is the group
  std::optional<std::size_t> order;
  bool abelian = true;
  std::vector<std::size_t> infinite_order;  // generators whose powers 1..power_bound are distinct
  std::optional<IntMatrix> infinite_witness;  // a generator or product of two with distinct powers
  std::size_t power_bound = 10;
  std::vector<std::string> relations_checked;

  std::optional<std::size_t> find(const IntMatrix& sigma) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (elements[i].sigma_b == sigma) return i;
    return std::nullopt;
  }
};

namespace detail {

/// Matrices generated by `gens` and their inverses, breadth-first, at most `cap` of them.
inline std::set<std::vector<Int>> generated(const std::vector<IntMatrix>& gens, std::size_t n, std::size_t cap) {
  std::vector<IntMatrix> step;
  for (const auto& g : gens) {
    step.push_back(g);
    step.push_back(unimodular_inverse(g));
  }
  std::set<std::vector<Int>> seen{IntMatrix::identity(n).data()};
  std::vector<IntMatrix> frontier{IntMatrix::identity(n)};
  while (!frontier.empty() && seen.size() < cap) {
    std::vector<IntMatrix> next;
    for (const auto& m : frontier)
      for (const auto& s : step) {
        IntMatrix p = mul(m, s);
        if (seen.insert(p.data()).second) next.push_back(p);
        if (seen.size() >= cap) return seen;
      }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace detail

/// Sp^D(v) from an explored spine: all D-equivalent spine vertices with the namesake group law.
/// On a complete spine the multiplication table is verified in full; otherwise generators are
/// picked greedily and infinite order is certified by distinct powers.
inline GroupReport sp_d_group(const MarkedGraph& spine, std::size_t power_bound = 10) {
  GroupReport r;
  r.power_bound = power_bound;
  r.complete = spine.complete();
  r.elements = d_equivalent_vertices(spine);
  const std::size_t n = spine.vertices[0].size();
  const std::size_t k = r.elements.size();
  // Group law on every pair whose product lies inside the explored graph.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Vertex w = group_product(spine, r.elements[i], r.elements[j]);
      auto id = spine.find(w.key());
      if (!id) {
        if (r.complete) fail(ErrorCode::Internal, "group product left a complete spine");
        continue;
      }
      if (!r.find(sigma_of(w))) fail(ErrorCode::Internal, "group product is not D-equivalent to the base");
      if (mul(r.elements[i].sigma_b, r.elements[j].sigma_b) != mul(r.elements[j].sigma_b, r.elements[i].sigma_b))
        r.abelian = false;
    }
  r.relations_checked.push_back("sigma_b(u1*u2) = sigma_b(u1) sigma_b(u2) on all explored pairs");
  if (r.complete) r.order = k;

  std::vector<IntMatrix> gens;
  for (std::size_t i = 1; i < k; ++i) {
    auto span = detail::generated(gens, n, 400);
    if (span.count(r.elements[i].sigma_b.data())) continue;
    gens.push_back(r.elements[i].sigma_b);
    r.generators.push_back(i);
  }
  auto distinct_powers = [&](const IntMatrix& g) {
    std::set<std::vector<Int>> powers{IntMatrix::identity(n).data()};
    IntMatrix p = IntMatrix::identity(n);
    for (std::size_t e = 1; e <= power_bound; ++e) {
      p = mul(p, g);
      if (!powers.insert(p.data()).second) return false;
    }
    return true;
  };
  for (std::size_t gi : r.generators)
    if (distinct_powers(r.elements[gi].sigma_b)) {
      r.infinite_order.push_back(gi);
      if (!r.infinite_witness) r.infinite_witness = r.elements[gi].sigma_b;
    }
  // Two involutions can generate an infinite group.
  for (std::size_t a = 0; a < r.generators.size() && !r.infinite_witness; ++a)
    for (std::size_t b = a + 1; b < r.generators.size() && !r.infinite_witness; ++b) {
      IntMatrix p = mul(r.elements[r.generators[a]].sigma_b, r.elements[r.generators[b]].sigma_b);
      if (distinct_powers(p)) r.infinite_witness = p;
    }
  if (r.infinite_witness)
    r.relations_checked.push_back("generator powers 1.." + std::to_string(power_bound) + " pairwise distinct");
  return r;
}

/// Σ_pr index of each σ_b(α): the Dynkin-diagram automorphism induced by g.
inline std::vector<std::size_t> dynkin_hom(const DGroupElement& g, const PrincipalData& pd) {
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < pd.sigma_pr.size(); ++i) {
    auto j = pd.find_principal(mul(g.sigma_b, pd.sigma_pr[i]));
    if (!j) fail(ErrorCode::NotAnAutomorphism, "σ_b does not preserve Σ_pr");
    if (pd.parity[*j] != pd.parity[i]) fail(ErrorCode::NotAnAutomorphism, "σ_b changes a parity");
    perm.push_back(*j);
  }
  std::set<std::size_t> img(perm.begin(), perm.end());
  if (img.size() != perm.size()) fail(ErrorCode::NotAnAutomorphism, "σ_b is not injective on Σ_pr");
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = 0; j < perm.size(); ++j)
      if (pd.b_pi(i, j) != pd.b_pi(perm[i], perm[j]))
        fail(ErrorCode::NotAnAutomorphism, "σ_b does not preserve the pairings");
  return perm;
}

/// Connected components of the Dynkin graph of B_π.
inline std::vector<std::size_t> pi_components(const PrincipalData& pd) {
  const std::size_t k = pd.size();
  std::vector<std::size_t> comp(k, k);
  std::size_t c = 0;
  for (std::size_t s = 0; s < k; ++s) {
    if (comp[s] != k) continue;
    std::vector<std::size_t> st{s};
    comp[s] = c;
    while (!st.empty()) {
      std::size_t i = st.back();
      st.pop_back();
      for (std::size_t j = 0; j < k; ++j)
        if (comp[j] == k && pd.b_pi(i, j) != 0) {
          comp[j] = c;
          st.push_back(j);
        }
    }
    ++c;
  }
  return comp;
}

/// Word w with M = s_{w[0]} … s_{w[k-1]}, found by stripping left descents, if M ∈ W.
inline std::optional<std::vector<std::size_t>> weyl_word(const PrincipalData& pd, IntMatrix M,
                                                         std::size_t max_steps = 10000) {
  std::vector<std::size_t> word;
  const IntMatrix I = IntMatrix::identity(pd.rank);
  for (std::size_t step = 0; step < max_steps; ++step) {
    if (M == I) return word;
    IntMatrix inv = unimodular_inverse(M);
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < pd.size() && !pick; ++i) {
      IntVec v = mul(inv, pd.pi[i]);
      if (!is_nonnegative(v)) pick = i;
    }
    if (!pick) return std::nullopt;
    M = mul(pd.reflection(*pick), M);
    word.push_back(*pick);
  }
  return std::nullopt;
}

struct SkDReport {
  std::size_t sk_d_count = 0;     // D-equivalent skeleton vertices found
  std::size_t factored = 0;       // of which σ_b = w σ_s with w ∈ W, s ∈ Sp^D found
  bool unique = true;             // every factorization found was unique
  bool w_meets_sp_trivially = true;
  bool commutes_with_w = true;    // Sp^D generators commute with every s_α, α ∈ π
  bool complete = false;
};

/// Sk^D(v) = W ⋊ Sp^D(v) checked on explored data.
inline SkDReport sk_d_structure(const MarkedGraph& skeleton, const GroupReport& sp, const PrincipalData& pd) {
  SkDReport r;
  r.complete = skeleton.complete() && sp.complete;
  std::vector<IntMatrix> sp_inv;
  for (const auto& s : sp.elements) sp_inv.push_back(unimodular_inverse(s.sigma_b));
  for (std::size_t i = 1; i < sp.elements.size(); ++i)
    if (weyl_word(pd, sp.elements[i].sigma_b)) r.w_meets_sp_trivially = false;
  for (const auto& u : d_equivalent_vertices(skeleton)) {
    ++r.sk_d_count;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < sp.elements.size(); ++i)
      if (weyl_word(pd, mul(u.sigma_b, sp_inv[i]))) ++hits;
    if (hits >= 1) ++r.factored;
    if (hits > 1) r.unique = false;
  }
  for (std::size_t gi : sp.generators)
    for (std::size_t i = 0; i < pd.size(); ++i) {
      const IntMatrix& g = sp.elements[gi].sigma_b;
      if (mul(g, pd.reflection(i)) != mul(pd.reflection(i), g)) r.commutes_with_w = false;
    }
  return r;
}

}  // namespace kms
