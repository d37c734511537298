#pragma once

#include <json.hpp>
#include <sstream>
#include <string>

#include "kms/exact/parse.hpp"
#include "kms/roots.hpp"
#include "kms/symmetry.hpp"

namespace kms {

using Json = nlohmann::ordered_json;

// ---- scalars and data --------------------------------------------------------------------

inline Json to_json(const IntVec& v) {
  Json j = Json::array();
  for (Int c : v) j.push_back(c);
  return j;
}

inline Json to_json(const IntMatrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(to_json(m.row(i)));
  return j;
}

inline Json to_json(const SMatrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
    j.push_back(row);
  }
  return j;
}

inline Json roots_json(const std::vector<IntVec>& vs) {
  Json j = Json::array();
  for (const auto& v : vs) j.push_back(to_json(v));
  return j;
}

inline Json roots_json(const RootSet& s) {
  std::vector<IntVec> v(s.begin(), s.end());
  sort_roots(v);
  return roots_json(v);
}

inline Json field_json(const Field& f) {
  const auto& s = f.spec();
  Json j;
  j["parameters"] = s.parameters;
  if (!s.minpoly.empty()) {
    j["generator"] = s.generator;
    Json mp = Json::array();
    for (const auto& c : s.minpoly) mp.push_back(c.get_str());
    j["minpoly"] = mp;
  }
  j["nonzero_assumptions"] = s.nonzero_assumptions;
  if (s.root_interval) j["root_interval"] = {s.root_interval->first.get_str(), s.root_interval->second.get_str()};
  return j;
}

inline Json datum_json(const CartanDatum& d) {
  Json j;
  j["size"] = d.size();
  Json p = Json::array();
  for (auto x : d.parity) p.push_back(static_cast<int>(x));
  j["parity"] = p;
  j["matrix"] = to_json(d.A);
  if (d.field && !d.field->trivial()) j["field"] = field_json(*d.field);
  return j;
}

inline Rational parse_rational(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) fail(ErrorCode::ParseError, "expected a rational string");
  Rational q;
  if (q.set_str(v.get<std::string>(), 10) != 0) fail(ErrorCode::ParseError, "bad rational '" + v.get<std::string>() + "'");
  q.canonicalize();
  return q;
}

inline DatumPtr datum_from_json(const Json& j) {
  try {
    const std::size_t n = j.at("size").get<std::size_t>();
    auto d = std::make_shared<CartanDatum>();
    for (const auto& p : j.at("parity")) d->parity.push_back(static_cast<std::uint8_t>(p.get<int>()));
    if (j.contains("field")) {
      const Json& f = j.at("field");
      Field::Spec s;
      if (f.contains("parameters")) s.parameters = f.at("parameters").get<std::vector<std::string>>();
      if (f.contains("generator")) s.generator = f.at("generator").get<std::string>();
      if (f.contains("minpoly"))
        for (const auto& c : f.at("minpoly")) s.minpoly.push_back(parse_rational(c));
      if (f.contains("nonzero_assumptions"))
        s.nonzero_assumptions = f.at("nonzero_assumptions").get<std::vector<std::string>>();
      if (f.contains("root_interval"))
        s.root_interval = std::make_pair(parse_rational(f.at("root_interval").at(0)),
                                         parse_rational(f.at("root_interval").at(1)));
      d->field = make_field(s);
    }
    const Json& M = j.at("matrix");
    if (M.size() != n) fail(ErrorCode::InvalidParameters, "matrix has the wrong number of rows");
    d->A = SMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (M.at(i).size() != n) fail(ErrorCode::InvalidParameters, "matrix row has the wrong length");
      for (std::size_t k = 0; k < n; ++k) {
        const Json& e = M.at(i).at(k);
        d->A(i, k) = e.is_number_integer() ? Scalar(e.get<long>()) : parse_scalar(e.get<std::string>(), d->field);
      }
    }
    validate(*d);
    return d;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("malformed Cartan datum: ") + e.what());
  }
}

// ---- graphs --------------------------------------------------------------------------------

inline std::string mark_label(std::size_t x, std::size_t first) { return "r_" + std::to_string(x + first); }

inline Json graph_json(const MarkedGraph& g, std::size_t first = 1) {
  Json j;
  j["mode"] = g.mode == ExploreMode::Spine ? "spine" : "skeleton";
  j["status"] = status_name(g.status);
  j["bound"] = g.bound;
  j["vertex_count"] = g.size();
  j["first_mark"] = first;
  Json vs = Json::array();
  for (std::size_t u = 0; u < g.size(); ++u) {
    const Vertex& v = g.vertices[u];
    Json x;
    x["id"] = u;
    x["depth"] = g.depth[u];
    x["parity"] = v.cartan.parity_string();
    x["roots"] = to_json(v.b);
    x["coroots"] = to_json(v.a);
    x["matrix"] = to_json(v.cartan.A);
    if (g.parent[u]) x["parent"] = {{"vertex", g.parent[u]->first}, {"mark", mark_label(g.parent[u]->second, first)}};
    vs.push_back(x);
  }
  j["vertices"] = vs;
  Json es = Json::array();
  for (const auto& e : g.edges())
    es.push_back({{"from", e.from},
                  {"to", e.to},
                  {"mark", mark_label(e.mark, first)},
                  {"isotropic", is_isotropic_reflectable(g.vertices[e.from].cartan, e.mark)}});
  j["edges"] = es;
  return j;
}

inline std::string vec_string(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

/// Undirected DOT; isotropic (spine) edges are drawn bold.
inline std::string graph_dot(const MarkedGraph& g, std::size_t first = 1) {
  std::ostringstream os;
  os << "graph " << (g.mode == ExploreMode::Spine ? "spine" : "skeleton") << " {\n";
  os << "  // status=" << status_name(g.status) << " vertices=" << g.size() << "\n";
  for (std::size_t u = 0; u < g.size(); ++u) {
    const Vertex& v = g.vertices[u];
    os << "  v" << u << " [label=\"";
    for (std::size_t x = 0; x < v.size(); ++x) os << (x ? " " : "") << vec_string(v.root(x));
    os << "\\n" << v.cartan.parity_string() << "\"];\n";
  }
  for (const auto& e : g.edges()) {
    os << "  v" << e.from << " -- v" << e.to << " [label=\"" << mark_label(e.mark, first) << "\"";
    if (is_isotropic_reflectable(g.vertices[e.from].cartan, e.mark)) os << ", style=bold";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

// ---- reports -------------------------------------------------------------------------------

inline Json principal_json(const PrincipalData& pd) {
  Json j;
  j["sigma_pr"] = roots_json(pd.sigma_pr);
  j["pi"] = roots_json(pd.pi);
  j["b_pi"] = to_json(pd.b_pi);
  j["saturated"] = pd.saturated;
  return j;
}

inline Json classification_json(const PrincipalData& pd, const Classification& c) {
  Json j = principal_json(pd);
  j["type"] = gcm_type_name(c.type);
  j["parity_type"] = parity_type_name(c.parity_type);
  j["quotient"] = c.quotient.to_string();
  j["imaginary_height"] = c.imaginary_height;
  return j;
}

inline Json real_roots_json(const RealRoots& r) {
  Json j;
  j["height_bound"] = r.height_bound;
  j["status"] = r.complete ? "complete" : "truncated";
  j["anisotropic"] = roots_json(r.anisotropic);
  j["isotropic"] = roots_json(r.isotropic);
  j["nonreflectable"] = roots_json(r.nonreflectable);
  return j;
}

inline Json group_json(const GroupReport& g, std::size_t first = 1) {
  Json j;
  if (g.order) j["order"] = *g.order;
  else if (g.infinite_witness) j["order"] = "infinite";
  else j["order"] = "unknown";
  j["elements_found"] = g.elements.size();
  j["status"] = g.complete ? "complete" : "truncated";
  j["abelian"] = g.abelian;
  Json gens = Json::array();
  for (std::size_t gi : g.generators) {
    const auto& e = g.elements[gi];
    Json d = Json::array();
    for (const auto& s : e.diag_D) d.push_back(s.to_string());
    Json p = Json::array();
    for (auto x : e.path) p.push_back(mark_label(x, first));
    gens.push_back({{"vertex", e.vertex}, {"path", p}, {"sigma_b", to_json(e.sigma_b)}, {"diag_D", d}});
  }
  j["generators"] = gens;
  if (g.infinite_witness)
    j["infinite_order_witness"] = {{"sigma_b", to_json(*g.infinite_witness)}, {"powers_checked", g.power_bound}};
  j["relations_checked"] = g.relations_checked;
  return j;
}

inline Json skd_json(const SkDReport& r) {
  Json j;
  j["status"] = r.complete ? "complete" : "truncated";
  j["sk_d_found"] = r.sk_d_count;
  j["factored"] = r.factored;
  j["unique"] = r.unique;
  j["w_meets_sp_d_trivially"] = r.w_meets_sp_trivially;
  j["sp_d_commutes_with_w"] = r.commutes_with_w;
  return j;
}

}  // namespace kms
