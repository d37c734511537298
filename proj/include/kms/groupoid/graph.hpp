#pragma once

#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "kms/groupoid/vertex.hpp"

namespace kms {

enum class ExploreMode { Spine, Skeleton };
enum class ExploreStatus { Complete, Truncated };

inline const char* status_name(ExploreStatus s) { return s == ExploreStatus::Complete ? "complete" : "truncated"; }

struct MarkedEdge {
  std::size_t from, to, mark;
};

/// Connected component of the groupoid explored breadth-first from vertex 0.
struct MarkedGraph {
  ExploreMode mode = ExploreMode::Skeleton;
  ExploreStatus status = ExploreStatus::Complete;
  std::size_t bound = 0;
  std::vector<Vertex> vertices;
  std::vector<std::size_t> depth;
  std::vector<std::vector<std::optional<std::size_t>>> adj;  // adj[u][x]
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> parent;  // (vertex, mark)
  std::optional<std::size_t> truncation_depth;  // depth of the first vertex that was dropped
  std::map<IntVec, std::size_t> index;

  std::size_t size() const { return vertices.size(); }
  bool complete() const { return status == ExploreStatus::Complete; }

  std::optional<std::size_t> find(const IntVec& key) const {
    auto it = index.find(key);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  std::vector<MarkedEdge> edges() const {
    std::vector<MarkedEdge> e;
    for (std::size_t u = 0; u < adj.size(); ++u)
      for (std::size_t x = 0; x < adj[u].size(); ++x)
        if (adj[u][x] && *adj[u][x] > u) e.push_back({u, *adj[u][x], x});
    return e;
  }

  std::size_t degree(std::size_t u) const {
    std::size_t k = 0;
    for (const auto& w : adj[u])
      if (w) ++k;
    return k;
  }

  /// Marks along the breadth-first tree path from the base vertex to u.
  std::vector<std::size_t> path_to(std::size_t u) const {
    std::vector<std::size_t> marks;
    while (parent[u]) {
      marks.push_back(parent[u]->second);
      u = parent[u]->first;
    }
    return {marks.rbegin(), marks.rend()};
  }

  std::size_t add(Vertex v, std::size_t d, std::optional<std::pair<std::size_t, std::size_t>> par) {
    const std::size_t id = vertices.size();
    index.emplace(v.key(), id);
    adj.emplace_back(v.size());
    vertices.push_back(std::move(v));
    depth.push_back(d);
    parent.push_back(par);
    return id;
  }
};

inline bool follows(ExploreMode mode, const CartanDatum& d, std::size_t x) {
  const ReflexionKind k = reflexion_kind(d, x);
  return mode == ExploreMode::Spine ? k == ReflexionKind::Isotropic : k != ReflexionKind::None;
}

/// Breadth-first exploration from `start` (x ascending), deduplicated by Σ_u.
inline MarkedGraph explore(const Vertex& start, ExploreMode mode, std::size_t max_vertices) {
  MarkedGraph g;
  g.mode = mode;
  g.bound = max_vertices;
  g.add(start, 0, std::nullopt);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t x = 0; x < g.vertices[u].size(); ++x) {
      if (g.adj[u][x] || !follows(mode, g.vertices[u].cartan, x)) continue;
      Vertex w = apply_reflexion(g.vertices[u], x);
      if (auto id = g.find(w.key())) {
        g.adj[u][x] = *id;
        g.adj[*id][x] = u;
        continue;
      }
      if (g.size() >= max_vertices) {
        g.status = ExploreStatus::Truncated;
        const std::size_t d = g.depth[u] + 1;
        if (!g.truncation_depth || d < *g.truncation_depth) g.truncation_depth = d;
        continue;
      }
      const std::size_t id = g.add(std::move(w), g.depth[u] + 1, std::make_pair(u, x));
      g.adj[u][x] = id;
      g.adj[id][x] = u;
      queue.push_back(id);
    }
  }
  return g;
}

inline MarkedGraph explore(const DatumPtr& base, ExploreMode mode, std::size_t max_vertices) {
  return explore(Vertex::base_vertex(base), mode, max_vertices);
}

/// Applies a sequence of reflexions starting at `start`.
inline Vertex follow_path(const Vertex& start, const std::vector<std::size_t>& marks) {
  Vertex u = start;
  for (std::size_t x : marks) {
    if (!reflectable(u.cartan, x)) fail(ErrorCode::PathBreaks, "path breaks at mark r_" + std::to_string(x + 1));
    u = apply_reflexion(u, x);
  }
  return u;
}

/// Namesake transport: the same marks followed from a D-equivalent start.
inline Vertex transport_namesake(const std::vector<std::size_t>& marks, const Vertex& origin, const Vertex& start) {
  if (!d_equivalence(origin.cartan, start.cartan))
    fail(ErrorCode::NotDEquivalent, "start is not D-equivalent to the path origin");
  Vertex end_origin = follow_path(origin, marks);
  Vertex end = follow_path(start, marks);
  if (!d_equivalence(end_origin.cartan, end.cartan))
    fail(ErrorCode::Internal, "namesake endpoints are not D-equivalent");
  return end;
}

/// Bare marked graph: adj[u][x] is the neighbour of u across the edge marked r_x.
struct SimpleGraph {
  std::vector<std::vector<std::optional<std::size_t>>> adj;
  std::size_t size() const { return adj.size(); }
  void connect(std::size_t u, std::size_t w, std::size_t x) {
    adj[u][x] = w;
    adj[w][x] = u;
  }
};

/// Mark-preserving isomorphism of connected graphs, as a vertex map, if any.
template <class G, class H>
std::optional<std::vector<std::size_t>> marked_isomorphism(const G& g, const H& h) {
  if (g.size() != h.size() || g.size() == 0) return std::nullopt;
  for (std::size_t target = 0; target < h.size(); ++target) {
    std::vector<std::optional<std::size_t>> map(g.size());
    std::vector<bool> used(h.size(), false);
    map[0] = target;
    used[target] = true;
    std::deque<std::size_t> q{0};
    bool ok = true;
    while (!q.empty() && ok) {
      std::size_t u = q.front();
      q.pop_front();
      const std::size_t fu = *map[u];
      if (g.adj[u].size() != h.adj[fu].size()) {
        ok = false;
        break;
      }
      for (std::size_t x = 0; x < g.adj[u].size(); ++x) {
        const auto& a = g.adj[u][x];
        const auto& b = h.adj[fu][x];
        if (a.has_value() != b.has_value()) {
          ok = false;
          break;
        }
        if (!a) continue;
        if (map[*a]) {
          if (*map[*a] != *b) ok = false;
        } else {
          if (used[*b]) {
            ok = false;
            break;
          }
          map[*a] = *b;
          used[*b] = true;
          q.push_back(*a);
        }
      }
    }
    if (!ok) continue;
    std::vector<std::size_t> out;
    for (auto& m : map) {
      if (!m) {
        ok = false;
        break;
      }
      out.push_back(*m);
    }
    if (ok) return out;
  }
  return std::nullopt;
}

}  // namespace kms
