// kms_cli: root groupoid explorations and reports from the command line.
//
// Exit status: 0 on success (including truncated explorations), 1 on a domain error,
// 2 on an invalid invocation.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "kms/families/registry.hpp"
#include "kms/io/json.hpp"

namespace {

using namespace kms;

struct Options {
  std::string family;
  std::string input;
  std::size_t max_vertices = 0;  // 0: per-verb default
  Int max_height = 10;
  std::size_t max_length = 6;
  std::string format = "json";
  std::string out;
  std::string root;
  std::string subset;
  bool list = false;
};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Loaded {
  std::string name;
  DatumPtr datum;
  std::optional<Family> family;
  std::size_t first = 1;
};

Loaded load(const Options& o) {
  if (o.family.empty() == o.input.empty()) throw Usage("exactly one of --family and --input is required");
  Loaded l;
  if (!o.family.empty()) {
    l.family = construct(o.family);
    l.name = l.family->name;
    l.datum = l.family->datum;
    l.first = first_mark(o.family);
    return l;
  }
  std::ifstream in(o.input);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + o.input);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  l.datum = datum_from_json(j.contains("datum") ? j.at("datum") : j);
  l.name = j.value("name", std::string("input"));
  return l;
}

/// "δ", "α_2", "[1,0,1]" or "1,0,1".
IntVec parse_root(const std::string& s, const Loaded& l) {
  std::string t;
  for (char c : s)
    if (c != '[' && c != ']' && c != ' ' && c != '(' && c != ')') t += c;
  bool numeric = !t.empty();
  for (char c : t)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == ',' || c == '-')) numeric = false;
  if (!numeric) {
    if (!l.family) fail(ErrorCode::ParseError, "named roots need --family");
    return l.family->root(s);
  }
  IntVec v;
  std::stringstream ss(t);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      v.push_back(std::stol(part));
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "bad coordinate '" + part + "'");
    }
  }
  if (v.size() != l.datum->size()) fail(ErrorCode::InvalidParameters, "root has the wrong number of coordinates");
  return v;
}

std::size_t bound(const Options& o, std::size_t dflt) { return o.max_vertices ? o.max_vertices : dflt; }

Json header(const std::string& verb, const Loaded& l) {
  Json j;
  j["command"] = verb;
  j["name"] = l.name;
  return j;
}

Json expected_json(const Expected& e) {
  Json j = Json::object();
  if (e.spine) j["spine"] = *e.spine;
  if (e.skeleton) j["skeleton"] = *e.skeleton;
  if (e.sp_d) j["sp_d"] = *e.sp_d;
  if (e.type) j["type"] = *e.type;
  if (e.parity_type) j["parity_type"] = *e.parity_type;
  return j;
}

std::string graph_text(const MarkedGraph& g, std::size_t first) {
  std::ostringstream os;
  os << (g.mode == ExploreMode::Spine ? "spine" : "skeleton") << ": " << g.size() << " vertices, "
     << status_name(g.status) << "\n";
  for (std::size_t u = 0; u < g.size(); ++u) {
    os << "v" << u << " " << g.vertices[u].cartan.parity_string();
    for (std::size_t x = 0; x < g.vertices[u].size(); ++x) os << " " << vec_string(g.vertices[u].root(x));
    os << "\n";
  }
  for (const auto& e : g.edges()) os << "v" << e.from << " -- v" << e.to << " " << mark_label(e.mark, first) << "\n";
  return os.str();
}

struct Output {
  std::string text;
  int code = 0;
};

Output json_out(const Json& j, int code = 0) { return {j.dump(2) + "\n", code}; }

Output run(const std::string& verb, const Options& o) {
  if (o.format != "json" && o.format != "dot" && o.format != "text") throw Usage("--format must be json, dot or text");
  if (verb == "export" && o.list) {
    Json j;
    j["command"] = "export";
    Json fs = Json::array();
    for (const auto& name : registry()) fs.push_back({{"name", name}, {"expected", expected_json(expected_metadata(name))}});
    j["families"] = fs;
    return json_out(j);
  }
  Loaded l = load(o);
  if (verb == "spine" || verb == "skeleton") {
    const auto mode = verb == "spine" ? ExploreMode::Spine : ExploreMode::Skeleton;
    auto g = explore(l.datum, mode, bound(o, verb == "spine" ? 500 : 2000));
    if (o.format == "dot") return {graph_dot(g, l.first), 0};
    if (o.format == "text") return {graph_text(g, l.first), 0};
    Json j = header(verb, l);
    j["graph"] = graph_json(g, l.first);
    return json_out(j);
  }
  if (o.format == "dot") {
    if (verb != "export") throw Usage("--format dot is only available for spine, skeleton and export");
    return {graph_dot(explore(l.datum, ExploreMode::Spine, bound(o, 500)), l.first), 0};
  }
  if (verb == "export") {
    Json j = header(verb, l);
    j["datum"] = datum_json(*l.datum);
    if (!o.family.empty()) j["expected"] = expected_json(expected_metadata(o.family));
    return json_out(j);
  }
  auto spine = explore(l.datum, ExploreMode::Spine, bound(o, 200));
  auto pd = principal_data(spine);
  Json j = header(verb, l);
  j["spine_status"] = status_name(spine.status);
  if (verb == "classify") {
    auto c = classify_component(pd, spine);
    j.update(classification_json(pd, c));
    return json_out(j);
  }
  if (verb == "roots") {
    j.update(real_roots_json(real_roots(pd, spine, o.max_height)));
    return json_out(j);
  }
  if (verb == "imaginary") {
    if (o.root.empty()) throw Usage("imaginary needs --root");
    IntVec mu = parse_root(o.root, l);
    j["root"] = to_json(mu);
    j["imaginary"] = is_imaginary(pd, spine, mu);
    return json_out(j);
  }
  if (verb == "bases") {
    if (!o.subset.empty()) {
      std::vector<IntVec> S;
      std::stringstream ss(o.subset);
      std::string part;
      while (std::getline(ss, part, ';')) S.push_back(parse_root(part, l));
      std::optional<IntVec> delta;
      if (l.family) delta = l.family->delta;
      auto r = is_root_basis(S, pd, spine, o.max_height, delta);
      j["subset"] = roots_json(S);
      j["verdict"] = verdict_name(r.verdict);
      j["reason"] = r.reason;
      if (r.witness) j["witness"] = to_json(*r.witness);
      return json_out(j);
    }
    auto sk = explore(l.datum, ExploreMode::Skeleton, bound(o, 2000));
    RootSet delta = finite_root_system(sk);
    auto found = root_bases(delta, l.datum->size());
    std::set<RootBasis> from_skeleton;
    for (const auto& u : sk.vertices) from_skeleton.insert(basis_of(u));
    j["roots"] = delta.size();
    j["root_bases"] = found.size();
    j["skeleton_vertices"] = sk.size();
    j["matches_skeleton"] = found == from_skeleton;
    Json bs = Json::array();
    for (const auto& b : found) bs.push_back(roots_json(std::vector<IntVec>(b.begin(), b.end())));
    j["bases"] = bs;
    return json_out(j);
  }
  if (verb == "spd") {
    auto g = sp_d_group(spine);
    j.update(group_json(g, l.first));
    Json hom = Json::array();
    for (std::size_t gi : g.generators) hom.push_back(dynkin_hom(g.elements[gi], pd));
    j["dynkin_hom"] = hom;
    return json_out(j);
  }
  if (verb == "skd") {
    auto g = sp_d_group(spine);
    auto sk = explore(l.datum, ExploreMode::Skeleton, o.max_vertices ? o.max_vertices : 500);
    j.update(skd_json(sk_d_structure(sk, g, pd)));
    return json_out(j);
  }
  if (verb == "oracle-check") {
    if (o.family.empty()) throw Usage("oracle-check needs --family");
    const Expected e = expected_metadata(o.family);
    Json checks = Json::array();
    bool all = true;
    auto add = [&](const std::string& what, const std::string& want, const std::string& got) {
      const bool ok = want == got;
      all = all && ok;
      checks.push_back({{"check", what}, {"expected", want}, {"computed", got}, {"ok", ok}});
    };
    if (auto model = spine_oracle(o.family)) {
      const bool iso = spine.complete() && marked_isomorphism(spine, *model).has_value();
      add("spine isomorphic to word model", "true", iso ? "true" : "false");
    }
    if (e.spine)
      add("spine size", *e.spine, spine.complete() ? std::to_string(spine.size()) : std::string("infinite"));
    if (e.skeleton && *e.skeleton != "infinite") {
      auto sk = explore(l.datum, ExploreMode::Skeleton, std::stoul(*e.skeleton) + 1);
      add("skeleton size", *e.skeleton, sk.complete() ? std::to_string(sk.size()) : std::string("larger"));
    }
    if (e.type || e.parity_type) {
      auto c = classify_component(pd, spine);
      if (e.type) add("type", *e.type, gcm_type_name(c.type));
      if (e.parity_type) add("parity type", *e.parity_type, parity_type_name(c.parity_type));
    }
    if (e.sp_d && (*e.sp_d == "1" || *e.sp_d == "Z_2") && spine.complete()) {
      auto g = sp_d_group(spine);
      add("Sp^D order", *e.sp_d == "1" ? "1" : "2", std::to_string(*g.order));
    }
    if (e.sp_d && (*e.sp_d == "Z" || *e.sp_d == "Z⋊Z_2")) {
      auto g = sp_d_group(spine);
      add("Sp^D infinite", "true", g.infinite_witness ? "true" : "false");
      add("Sp^D abelian", *e.sp_d == "Z" ? "true" : "false", g.abelian ? "true" : "false");
    }
    j["checks"] = checks;
    j["ok"] = all;
    return json_out(j, all ? 0 : 1);
  }
  throw Usage("unknown command " + verb);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Root groupoids of Cartan data: spines, skeletons, roots and symmetry groups"};
  app.require_subcommand(1, 1);
  Options o;
  const std::vector<std::pair<std::string, std::string>> verbs{
      {"classify", "type (Fin/Aff/Ind), parity type and principal roots"},
      {"spine", "explore the spine"},
      {"skeleton", "explore the skeleton"},
      {"roots", "real roots up to --max-height"},
      {"imaginary", "test whether --root is an imaginary root"},
      {"bases", "root bases of a finite system, or a --subset verdict"},
      {"spd", "the group Sp^D(v)"},
      {"skd", "Sk^D(v) = W x| Sp^D(v) on explored data"},
      {"oracle-check", "compare against word models and expected metadata"},
      {"export", "Cartan datum JSON, or the family list with --list"}};
  for (const auto& [name, help] : verbs) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--family", o.family, "family name, e.g. \"Q(1,1,2)\"");
    sub->add_option("--input", o.input, "Cartan datum JSON file");
    sub->add_option("--max-vertices", o.max_vertices, "exploration bound")->check(CLI::PositiveNumber);
    sub->add_option("--max-height", o.max_height, "root height bound")->check(CLI::PositiveNumber);
    sub->add_option("--max-length", o.max_length, "Weyl word length bound")->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "json, dot or text");
    sub->add_option("--out", o.out, "write the report here instead of stdout");
    sub->add_option("--root", o.root, "root: name or coordinates in the base simple roots");
    if (name == "bases") sub->add_option("--subset", o.subset, "candidate basis, roots separated by ';'");
    if (name == "export") sub->add_flag("--list", o.list, "list built-in families");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  const std::string verb = app.get_subcommands().front()->get_name();
  Output out;
  try {
    out = run(verb, o);
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    Json j;
    j["command"] = verb;
    j["error"] = error_name(e.code());
    j["message"] = e.what();
    out = json_out(j, 1);
  }
  if (o.out.empty()) {
    std::cout << out.text;
  } else {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return 2;
    }
    f << out.text;
  }
  return out.code;
}
