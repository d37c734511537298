// One PASS/FAIL line per acceptance criterion.
//
// Sub-checks marked `known_red` are unattainable as stated (see README); they print as
// FAIL with their reason but do not change the exit status. Anything else failing does.

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "kms/families/oracles.hpp"
#include "kms/families/registry.hpp"
#include "kms/io/json.hpp"
#include "kms/roots.hpp"
#include "kms/symmetry.hpp"

#ifndef KMS_TEST_DATA_DIR
#define KMS_TEST_DATA_DIR "tests/data"
#endif

using namespace kms;

namespace {

struct Outcome {
  std::vector<std::string> failed;  // unexpected
  std::vector<std::string> red;     // known unattainable
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    if (!ok) failed.push_back(what);
  }
  void known_red(bool ok, const std::string& what) {
    if (!ok) red.push_back(what);
    else notes.push_back("unexpectedly green: " + what);
  }
};

std::mt19937_64 rng(20261018);

std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
Int uniform(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }

// ---- test-side closed forms ------------------------------------------------------------------

unsigned long long choose(unsigned n, unsigned k) {
  if (k > n) return 0;
  unsigned long long r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
unsigned long long fact(unsigned n) { return n == 0 ? 1 : n * fact(n - 1); }

// ---- graph helpers ---------------------------------------------------------------------------

/// A connected graph with every degree <= 2 and no cycle, read end to end as its marks.
std::optional<std::vector<std::size_t>> line_marks(const MarkedGraph& g) {
  if (g.edges().size() + 1 != g.size()) return std::nullopt;
  std::size_t start = 0;
  for (std::size_t u = 0; u < g.size(); ++u) {
    if (g.degree(u) > 2) return std::nullopt;
    if (g.degree(u) <= 1) start = u;
  }
  std::vector<std::size_t> marks;
  std::optional<std::size_t> prev;
  std::size_t u = start;
  for (;;) {
    std::optional<std::pair<std::size_t, std::size_t>> next;
    for (std::size_t x = 0; x < g.adj[u].size(); ++x)
      if (g.adj[u][x] && g.adj[u][x] != prev) next = std::make_pair(*g.adj[u][x], x);
    if (!next) break;
    marks.push_back(next->second);
    prev = u;
    u = next->first;
  }
  if (marks.size() + 1 != g.size()) return std::nullopt;
  return marks;
}

std::size_t minimal_period(const std::vector<std::size_t>& s) {
  for (std::size_t p = 1; p < s.size(); ++p) {
    bool ok = true;
    for (std::size_t i = 0; i + p < s.size() && ok; ++i) ok = s[i] == s[i + p];
    if (ok) return p;
  }
  return s.size();
}

bool same_vertex(const Vertex& a, const Vertex& b) {
  return a.b == b.b && a.a == b.a && a.cartan.A == b.cartan.A && a.cartan.parity == b.cartan.parity;
}

struct Component {
  Family family;
  MarkedGraph spine;
  PrincipalData pd;
};

Component component(const std::string& name, std::size_t bound = 72) {
  Family f = construct(name);
  MarkedGraph sp = explore(f.datum, ExploreMode::Spine, bound);
  PrincipalData pd = principal_data(sp);
  return {std::move(f), std::move(sp), std::move(pd)};
}

QMatrix realization_gram(const Family& f) {
  SMatrix c = f.realization->cartan();
  QMatrix g(c.rows(), c.cols());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) g(i, j) = c(i, j).rational();
  return g;
}

// ---- criteria --------------------------------------------------------------------------------

void reflexion_invariants(Outcome& o) {
  const auto& names = registry();
  const std::size_t total = 10000;
  std::size_t done = 0;
  for (std::size_t k = 0; done < total; ++k) {
    const Family f = construct(names[k % names.size()]);
    Vertex u = f.base();
    for (std::size_t step = 0; step < 25 && done < total; ++step) {
      std::vector<std::size_t> xs;
      for (std::size_t x = 0; x < u.size(); ++x)
        if (reflectable(u.cartan, x)) xs.push_back(x);
      if (xs.empty()) break;
      const std::size_t x = xs[pick(xs.size())];
      Vertex w = apply_reflexion(u, x);
      ++done;
      if (!reflectable(w.cartan, x) || !same_vertex(apply_reflexion(w, x), u)) {
        o.check(false, f.name + ": r_x r_x is not the identity");
        return;
      }
      if (recompute_cartan(w) != w.cartan.A) {
        o.check(false, f.name + ": A_u differs from its recomputation");
        return;
      }
      u = std::move(w);
    }
  }
  o.notes.push_back(std::to_string(done) + " applications");
}

void counts(Outcome& o) {
  for (unsigned m = 0; m <= 6; ++m)
    for (unsigned n = 0; m + n <= 6; ++n) {
      auto sp = explore(family_A(m, n).datum, ExploreMode::Spine, 100000);
      const std::string name = "A(" + std::to_string(m) + "|" + std::to_string(n) + ")";
      o.check(sp.complete() && sp.size() == choose(m + n + 2, m + 1), name + " spine size");
      o.check(marked_isomorphism(sp, oracle::spine_A(m, n)).has_value(), name + " spine differs from the word model");
    }
  for (unsigned m = 0; m <= 4; ++m)
    for (unsigned n = 0; m + n <= 4; ++n) {
      if (m + n == 0) continue;
      const Family f = family_B(m, n);
      auto sp = explore(f.datum, ExploreMode::Spine, 100000);
      auto sk = explore(f.datum, ExploreMode::Skeleton, 100000);
      o.check(sp.complete() && sp.size() == choose(m + n, m), f.name + " spine size");
      o.check(sk.complete() && sk.size() == (1ull << (m + n)) * fact(m + n), f.name + " skeleton size");
      o.check(marked_isomorphism(sp, oracle::spine_B(m, n)).has_value(), f.name + " spine shape");
    }
  for (unsigned m = 1; m <= 4; ++m)
    for (unsigned n = 0; m + n <= 4; ++n) {
      if (n == 0 && m < 3) continue;
      const Family f = family_D(m, n);
      auto sp = explore(f.datum, ExploreMode::Spine, 100000);
      auto sk = explore(f.datum, ExploreMode::Skeleton, 100000);
      const unsigned long long skel = (1ull << (m + n - 1)) * (m + 2 * n) * fact(m + n - 1);
      o.check(sp.complete() && sp.size() == choose(m + n, m) + choose(m + n - 1, m), f.name + " spine size");
      o.check(sk.complete() && sk.size() == skel, f.name + " skeleton size");
      o.check(marked_isomorphism(sp, oracle::spine_D(m, n)).has_value(), f.name + " spine shape");
      if (m == 2 && n == 1) o.check(sk.size() == 32 && sp.size() == 4, "D(2|1): skeleton 32, spine 4");
    }
}

void q_family(Outcome& o) {
  for (auto [m, n, t] : std::vector<std::array<long, 3>>{{1, 1, 2}, {2, 2, 2}, {1, 2, 3}})
    for (bool plus : {true, false}) {
      const Family f = family_Q(m, n, t, plus);
      auto sp = explore(f.datum, ExploreMode::Spine, 100);
      o.check(sp.complete() && sp.size() == 4, f.name + ": spine has 4 vertices");
      auto pd = principal_data(sp);
      // the published labelling of α_1, α_2, α_3 is our α_3, α_2, α_1
      std::array<std::size_t, 3> at{};
      for (std::size_t i = 0; i < 3; ++i) {
        auto j = pd.find_pi(f.root("α_" + std::to_string(3 - i)));
        o.check(j.has_value(), f.name + ": α not in π");
        if (!j) return;
        at[i] = *j;
      }
      const Int expected[3][3] = {{2, -n, -n}, {-m, 2, -m}, {-t, -t, 2}};
      bool eq = pd.size() == 3;
      for (std::size_t i = 0; i < 3 && eq; ++i)
        for (std::size_t j = 0; j < 3; ++j) eq = eq && pd.b_pi(at[i], at[j]) == expected[i][j];
      o.check(eq, f.name + ": B_π");
      const IntVec delta = f.root("δ");
      const Int pair[3] = {1 - n, 1 - m, 1 - t};
      for (std::size_t i = 0; i < 3; ++i)
        o.check(pd.pairing(delta, at[i]) == pair[i], f.name + ": ⟨δ, α_i^∨⟩");
      auto g = sp_d_group(sp);
      o.check(g.order == 1u, f.name + ": Sp^D trivial");
      o.check(is_imaginary(pd, sp, delta), f.name + ": δ imaginary");
      auto c = classify_component(pd, sp);
      o.check(c.type == GcmType::Ind && c.parity_type == ParityType::II, f.name + ": (Ind, II)");
    }
}

void c_finite(Outcome& o) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const Family f = family_C(n + 1);
    auto sp = explore(f.datum, ExploreMode::Spine, 1000);
    auto marks = line_marks(sp);
    o.check(sp.complete() && marks && sp.size() == 2 * n + 1, f.name + ": spine is a path of 2n+1 vertices");
    // r_1, …, r_n, r_{n+1}, r_{n-1}, …, r_1 read from one end
    std::vector<std::size_t> want;
    for (std::size_t i = 0; i <= n; ++i) want.push_back(i);
    for (std::size_t i = n - 1; i >= 1; --i) want.push_back(i - 1);
    auto rev = want;
    std::reverse(rev.begin(), rev.end());
    o.check(marks && (*marks == want || *marks == rev), f.name + ": mark sequence");
    o.check(sp_d_group(sp).order == 1u, f.name + ": Sp^D trivial");
  }
}

void c_affine(Outcome& o) {
  for (std::size_t n = 2; n <= 3; ++n) {
    const Family f = family_C_affine(n + 1);
    auto sp = explore(f.datum, ExploreMode::Spine, 12 * n);
    auto marks = line_marks(sp);
    o.check(!sp.complete() && marks.has_value(), f.name + ": truncated spine is a line");
    if (!marks) continue;
    o.check(minimal_period(*marks) == 4 * n, f.name + ": mark sequence has period 4n");
    {
      // one period is the left half followed by the right half; match up to rotation and direction
      auto period = oracle::left_marks_C_affine(n);
      auto right = oracle::right_marks_C_affine(n);
      period.insert(period.end(), right.begin(), right.end());
      auto matches = [&](std::vector<std::size_t> seq) {
        for (std::size_t shift = 0; shift < period.size(); ++shift) {
          bool ok = true;
          for (std::size_t k = 0; k < seq.size() && ok; ++k) ok = seq[k] == period[(k + shift) % period.size()];
          if (ok) return true;
        }
        return false;
      };
      std::vector<std::size_t> rev(marks->rbegin(), marks->rend());
      o.check(matches(*marks) || matches(rev), f.name + ": marks repeat the displayed period");
    }
    auto pd = principal_data(explore(f.datum, ExploreMode::Spine, 72));
    auto g = sp_d_group(sp);
    o.check(g.generators.size() == 1 && g.infinite_witness.has_value(),
            f.name + ": one Sp^D generator of infinite order (powers 1..10)");
    if (g.generators.empty()) continue;
    const IntMatrix& gen = g.elements[g.generators[0]].sigma_b;
    auto fr = bilinear_frame(realization_gram(f));
    const QVec delta = fr.embed(*f.delta);
    const QVec e1 = fr.embed(f.coords(f.realization->basis("ε_1")));
    auto restricted = [&](long c) { return on_vb(fr, translation(fr, qscale(Rational(c), e1), delta)); };
    const QMatrix G = to_rational(gen), Ginv = to_rational(unimodular_inverse(gen));
    std::string found = "none";
    for (long c = -8; c <= 8; ++c)
      if (c != 0 && restricted(c) == G) found = "t_{" + std::to_string(c) + "ε_1}";
    o.known_red(restricted(-1) == G || restricted(-1) == Ginv,
                f.name + ": generator σ_b is t_{-ε_1}|V_b (found " + found + ")");
    auto sk = explore(f.datum, ExploreMode::Skeleton, 300);
    auto r = sk_d_structure(sk, g, pd);
    o.check(r.sk_d_count > 1 && r.factored == r.sk_d_count && r.unique, f.name + ": Sk^D = W · Sp^D uniquely");
    o.check(r.w_meets_sp_trivially && r.commutes_with_w, f.name + ": W ∩ Sp^D = 1 and Sp^D central");
  }
}

void a_nn(Outcome& o) {
  for (std::size_t n = 1; n <= 2; ++n) {
    const Family f = family_A(n, n);
    auto sp = explore(f.datum, ExploreMode::Spine, 10000);
    auto pd = principal_data(sp);
    auto g = sp_d_group(sp);
    o.check(g.order == 2u, f.name + ": |Sp^D| = 2");
    if (g.elements.size() != 2) continue;
    const auto& e = g.elements[1];
    const SMatrix& Au = sp.vertices[e.vertex].cartan.A;
    bool neg = true;
    for (std::size_t i = 0; i < Au.rows(); ++i)
      for (std::size_t j = 0; j < Au.cols(); ++j) neg = neg && Au(i, j) == -f.datum->A(i, j);
    o.check(neg, f.name + ": A_u = -A_v");
    auto perm = dynkin_hom(e, pd);
    auto comp = pi_components(pd);
    std::set<std::size_t> comps(comp.begin(), comp.end());
    bool swaps = comps.size() == 2;
    for (std::size_t i = 0; i < perm.size(); ++i) swaps = swaps && comp[perm[i]] != comp[i];
    o.check(swaps, f.name + ": the Dynkin automorphism swaps the two components of π");
  }
}

void g3(Outcome& o) {
  const Family a = family_G3_1(), b = family_G3_2();
  auto D = d_equivalence(*a.datum, *b.datum);
  bool two = D.has_value();
  if (D)
    for (const auto& s : *D) two = two && s == Scalar(2);
  if (!two) {
    // either orientation of the diagonal factor
    D = d_equivalence(*b.datum, *a.datum);
    two = D.has_value();
    if (D)
      for (const auto& s : *D) two = two && s == Scalar(2);
  }
  o.check(two, "D-equivalence factor is 2I");
  auto s1 = explore(a.datum, ExploreMode::Spine, 500), s2 = explore(b.datum, ExploreMode::Spine, 500);
  o.check(s1.complete() && s2.complete(), "both spines are finite");
  o.check(marked_isomorphism(s1, s2).has_value(), "spines are isomorphic");
}

void pi_s_infinite(Outcome& o) {
  const Family f = family_pi_s_infinite();
  auto sp = explore(f.datum, ExploreMode::Spine, 24);
  auto marks = line_marks(sp);
  o.check(marks && sp.size() == 24, "spine truncated at 24 vertices is a line");
  if (marks) {
    // 0-based marks 1, 0, 2 repeating in one reading direction
    bool rep = minimal_period(*marks) == 3;
    std::set<std::vector<std::size_t>> cyc{{1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    std::vector<std::size_t> head(marks->begin(), marks->begin() + 3);
    auto rhead = head;
    std::reverse(rhead.begin(), rhead.end());
    o.check(rep && (cyc.count(head) || cyc.count(rhead)), "marks repeat r_2, r_1, r_3");
  }
  for (const auto& v : sp.vertices) o.check(!reflectable(v.cartan, 3), "x_4 is non-reflectable");
  auto pd = principal_data(sp);
  o.check(pd.pi == std::vector<IntVec>{{1, 0, 0, 0}}, "π = {ε_1-ε_2}");
  auto W = weyl_generate(pd, 4);
  o.check(W.exhausted && W.elements.size() == 2, "|W| = 2");

  // Σ_v = {ε_1-ε_2, ε_2-δ_1, δ-ε_1+δ_1, β}
  const IntVec delta{1, 1, 1, 0}, str{1, 2, 0, 0}, beta{0, 0, 0, 1}, e2d1{0, 1, 0, 0}, e1d1{1, 1, 0, 0};
  auto lin = [](std::initializer_list<std::pair<Int, IntVec>> terms) {
    IntVec r(4, 0);
    for (const auto& [c, v] : terms) r = add(r, scale(c, v));
    return r;
  };
  auto even_layer = [&](Int i) {
    return RootBasis{{1, 0, 0, 0}, lin({{i, delta}, {1, e2d1}}), lin({{1 - i, delta}, {-1, e1d1}}),
                     lin({{1, beta}, {i * (i - 1), delta}, {i, str}})};
  };
  auto odd_layer = [&](Int i) {
    return RootBasis{{0, 1, 1, 0}, lin({{i, delta}, {1, e1d1}}), lin({{-i, delta}, {-1, e2d1}}),
                     lin({{1, beta}, {i * i, delta}, {i, str}, {1, e2d1}})};
  };
  // v_j for j = -3..3: forward marks x_2, x_1, x_3, backward x_3, x_1, x_2
  const std::vector<std::size_t> fwd{1, 0, 2}, bwd{2, 0, 1};
  Vertex u = f.base(), w = f.base();
  bool layers = basis_of(u) == even_layer(0);
  for (Int j = 1; j <= 3; ++j) {
    u = apply_reflexion(u, fwd[(j - 1) % 3]);
    w = apply_reflexion(w, bwd[(j - 1) % 3]);
    auto at = [&](Int k) { return k % 2 == 0 ? even_layer(k / 2) : odd_layer((k - 1) / 2); };
    layers = layers && basis_of(u) == at(j) && basis_of(w) == at(-j);
  }
  o.check(layers, "simple roots of v_{-3} … v_3 match the closed form");

  std::set<IntVec> closed{{1, 0, 0, 0}, {0, 1, 1, 0}};
  auto closed_at = [&](Int i) {
    return std::vector<IntVec>{lin({{1, beta}, {i * (i - 1), delta}, {i, str}}),
                               scale(2, lin({{1, beta}, {i * i, delta}, {i, str}, {1, e2d1}}))};
  };
  std::set<IntVec> wide = closed;
  for (Int i = -12; i <= 12; ++i)
    for (const auto& v : closed_at(i)) wide.insert(v);
  auto ps = pi_S_enumerate(sp);
  std::set<IntVec> found(ps.elements.begin(), ps.elements.end());
  for (Int i = -1; i <= 1; ++i)
    for (const auto& v : closed_at(i)) closed.insert(v);
  bool inside = std::includes(found.begin(), found.end(), closed.begin(), closed.end());
  bool only = std::includes(wide.begin(), wide.end(), found.begin(), found.end());
  o.check(inside && only, "π_S agrees with the closed form on layers -1, 0, 1");
}

/// Imaginary roots of a symmetrizable GCM up to a height: W-orbits of the anti-dominant
/// cone with connected support, generated breadth-first from scratch.
std::set<IntVec> kac_orbit_oracle(const IntMatrix& B, Int max_height) {
  const std::size_t n = B.rows();
  auto pairing = [&](const IntVec& k, std::size_t i) {
    Int s = 0;
    for (std::size_t j = 0; j < n; ++j) s += B(i, j) * k[j];
    return s;
  };
  auto reflect = [&](IntVec k, std::size_t i) {
    k[i] -= pairing(k, i);
    return k;
  };
  auto connected = [&](const IntVec& k) {
    std::vector<std::size_t> sup;
    for (std::size_t i = 0; i < n; ++i)
      if (k[i]) sup.push_back(i);
    std::set<std::size_t> seen{sup[0]};
    std::vector<std::size_t> st{sup[0]};
    while (!st.empty()) {
      std::size_t i = st.back();
      st.pop_back();
      for (std::size_t j : sup)
        if (!seen.count(j) && B(i, j) != 0) {
          seen.insert(j);
          st.push_back(j);
        }
    }
    return seen.size() == sup.size();
  };
  std::set<IntVec> out;
  std::vector<IntVec> frontier;
  std::function<void(IntVec, std::size_t, Int)> gen = [&](IntVec k, std::size_t i, Int left) {
    if (i == n) {
      if (is_zero_vec(k) || !connected(k)) return;
      for (std::size_t r = 0; r < n; ++r)
        if (pairing(k, r) > 0) return;
      if (out.insert(k).second) frontier.push_back(k);
      return;
    }
    for (Int c = 0; c <= left; ++c) {
      k[i] = c;
      gen(k, i + 1, left - c);
    }
  };
  gen(IntVec(n, 0), 0, max_height);
  // going up from the anti-dominant cone only raises heights
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const auto& k : frontier)
      for (std::size_t i = 0; i < n; ++i) {
        IntVec r = reflect(k, i);
        if (height(r) <= max_height && out.insert(r).second) next.push_back(r);
      }
    frontier = std::move(next);
  }
  return out;
}

void imaginary(Outcome& o) {
  for (const char* name : {"A1^(1)", "A(1|0)^(1)", "A(2|1)^(1)", "C(3)^(1)", "G3_1", "G3_2", "q_3^(2)", "q_4^(2)"}) {
    const Component c = component(name);
    const IntVec& delta = *c.family.delta;
    bool ok = true;
    for (Int h = 1; h <= 20 && ok; ++h)
      for_each_of_height(c.pd.rank, h, [&](const IntVec& mu) {
        if (!ok) return;
        bool multiple = false;
        for (Int k = 1; k * height(delta) <= h; ++k) multiple = multiple || mu == scale(k, delta);
        if (is_imaginary(c.pd, c.spine, mu) != multiple) ok = false;
      });
    o.check(ok, std::string(name) + ": imaginary ⟺ positive multiple of δ up to height 20");
  }
  {
    const Component c = component("A1^(1)");
    const IntMatrix B{{2, -2}, {-2, 2}};
    auto oracle = kac_orbit_oracle(B, 20);
    std::set<IntVec> mine;
    for (Int h = 1; h <= 20; ++h)
      for_each_of_height(2, h, [&](const IntVec& mu) {
        if (is_imaginary(c.pd, c.spine, mu)) mine.insert(mu);
      });
    o.check(mine == oracle, "[[2,-2],[-2,2]]: imaginary set matches the orbit oracle");
  }
  for (const char* name : {"Q+(1,1,2)", "C(3)^(1)", "A1^(1)"}) {
    const Component c = component(name);
    auto W = weyl_generate(c.pd, 6);
    std::vector<IntVec> sample;
    for (Int h = 1; h <= 8; ++h) for_each_of_height(c.pd.rank, h, [&](const IntVec& mu) { sample.push_back(mu); });
    bool ok = true;
    for (const auto& mu : sample) {
      const bool im = is_imaginary(c.pd, c.spine, mu);
      for (const auto& w : W.elements) {
        IntVec v = w.apply(mu);
        if (!is_positive(v)) {
          if (im) ok = false;
          continue;
        }
        if (is_imaginary(c.pd, c.spine, v) != im) ok = false;
      }
    }
    o.check(ok, std::string(name) + ": imaginary set is W-invariant (length <= 6)");
  }
}

void root_bases_check(Outcome& o) {
  for (const char* name : {"C(2)", "A(1|0)", "B(1|1)"}) {
    const Family f = construct(name);
    auto sk = explore(f.datum, ExploreMode::Skeleton, 10000);
    std::set<RootBasis> from_skeleton;
    for (const auto& u : sk.vertices) from_skeleton.insert(basis_of(u));
    o.check(root_bases(finite_root_system(sk), f.datum->size()) == from_skeleton,
            std::string(name) + ": root bases are exactly the Σ_u");
  }
  const Component c = component("C(3)^(1)");
  const IntVec& delta = *c.family.delta;
  const std::size_t n = c.pd.rank;
  auto sk = explore(c.family.datum, ExploreMode::Skeleton, 24);
  auto window = [&](const std::vector<IntVec>& S) {
    Int h = 0;
    for (const auto& s : S) h = std::max(h, std::abs(height(s)));
    return std::max<Int>(12, 2 * h + 2 * height(delta));
  };
  bool all_yes = true;
  for (const auto& u : sk.vertices)
    for (bool neg : {false, true}) {
      std::vector<IntVec> S;
      for (std::size_t x = 0; x < n; ++x) S.push_back(neg ? negate(u.root(x)) : u.root(x));
      if (is_root_basis(S, c.pd, c.spine, window(S), delta).verdict != Verdict::Yes) all_yes = false;
    }
  o.check(all_yes, "C(3)^(1): every ±Σ_u found is a root basis");

  auto wide = explore(c.family.datum, ExploreMode::Skeleton, 400);
  std::set<RootBasis> known;
  for (const auto& u : wide.vertices) {
    known.insert(basis_of(u));
    known.insert(negated(basis_of(u)));
  }
  auto rr = real_roots(c.pd, c.spine, 8);
  std::vector<IntVec> pool(rr.anisotropic.begin(), rr.anisotropic.end());
  pool.insert(pool.end(), rr.isotropic.begin(), rr.isotropic.end());
  std::size_t tried = 0, yes = 0;
  while (tried < 100) {
    std::vector<IntVec> S;
    for (std::size_t k = 0; k < n; ++k) S.push_back(pool[pick(pool.size())]);
    if (span_rank(S, n) != n || known.count(RootBasis(S.begin(), S.end()))) continue;
    ++tried;
    if (is_root_basis(S, c.pd, c.spine, window(S), delta).verdict == Verdict::Yes) ++yes;
  }
  o.check(yes == 0, "C(3)^(1): random independent subsets are never certified");
}

void descent(Outcome& o) {
  std::size_t families = 0;
  for (const auto& name : registry()) {
    const Component c = component(name);
    if (c.pd.size() == 0) continue;
    ++families;
    const std::size_t n = c.pd.rank;
    bool ok = true, invariant = true;
    for (int k = 0; k < 10000; ++k) {
      IntVec mu(n);
      for (auto& x : mu) x = uniform(0, 8);
      Descent d = descend_to_dominant(c.pd, mu);
      for (std::size_t i = 1; i < d.heights.size(); ++i) ok = ok && d.heights[i] < d.heights[i - 1];
      if (k >= 500) continue;
      std::vector<std::size_t> word(pick(7));
      for (auto& i : word) i = pick(c.pd.size());
      IntVec v = weyl_from_word(c.pd, word).apply(mu);
      if (!is_nonnegative(v)) {
        // an orbit with a dominant point in Q^+ stays in Q^+
        if (d.in_positive_cone) invariant = false;
        continue;
      }
      Descent e = descend_to_dominant(c.pd, v);
      if (e.in_positive_cone != d.in_positive_cone || (d.in_positive_cone && e.mu0 != d.mu0)) invariant = false;
    }
    o.check(ok, name + ": height trace strictly decreasing");
    o.check(invariant, name + ": dominant representative is W-invariant");
  }
  o.notes.push_back(std::to_string(families) + " families");
}

void translations(Outcome& o) {
  for (std::size_t k : {3, 4}) {
    const Family f = family_C_affine(k);
    const Component c = component(f.name);
    auto fr = bilinear_frame(realization_gram(f));
    o.check(frame_compatible(fr, c.pd), f.name + ": frame compatible with W");
    const QVec delta = fr.embed(*f.delta);
    const QVec e1 = fr.embed(f.coords(f.realization->basis("ε_1")));
    auto T = [&](const QVec& nu) { return translation(fr, nu, delta); };
    auto rnd = [&]() {
      QVec v(fr.dim(), Rational(0));
      for (std::size_t i = 0; i < fr.rank; ++i) v[i] = Rational(uniform(-5, 5), uniform(1, 4));
      for (auto& q : v) q.canonicalize();
      return v;
    };
    std::vector<QMatrix> phis{reflection_matrix(fr, e1)};
    for (const auto& a : c.pd.pi) phis.push_back(reflection_matrix(fr, fr.embed(a)));
    for (const auto& p : phis)
      o.check(p.transpose() * fr.gram * p == fr.gram && p.apply(delta) == delta, f.name + ": φ ∈ G");
    auto rr = real_roots(c.pd, c.spine, 6);
    std::vector<IntVec> roots(rr.anisotropic.begin(), rr.anisotropic.end());
    roots.insert(roots.end(), rr.isotropic.begin(), rr.isotropic.end());
    bool i = true, ii = true, iii = true, iv = true;
    for (int trial = 0; trial < 100; ++trial) {
      const QVec nu = rnd(), mu = rnd();
      const QMatrix tn = T(nu);
      i = i && tn * T(mu) == T(qadd(nu, mu));
      for (std::size_t r = 0; r < 5; ++r) {
        const QVec b = fr.embed(roots[pick(roots.size())]);
        ii = ii && tn.apply(b) == qadd(b, qscale(-fr.form(b, nu), delta));
      }
      iii = iii && tn.apply(delta) == delta;
      Rational cc(uniform(-7, 7), uniform(1, 5));
      cc.canonicalize();
      iii = iii && T(qscale(cc, delta)) == qidentity(fr.dim());
      const QMatrix& p = phis[pick(phis.size())];
      iv = iv && p * tn * *inverse(p) == T(p.apply(nu));
    }
    o.check(i, f.name + ": t_ν t_μ = t_{μ+ν}");
    o.check(ii, f.name + ": t_ν(β) = β - (β|ν)δ");
    o.check(iii, f.name + ": t_ν(δ) = δ and t_{cδ} = 1");
    o.check(iv, f.name + ": φ t_ν φ^{-1} = t_{φ(ν)}");
    const QMatrix s = reflection_matrix(fr, e1) * reflection_matrix(fr, qadd(qscale(Rational(2), delta), qscale(Rational(-1), e1)));
    std::string found = "none";
    for (long cc = -16; cc <= 16; ++cc)
      if (cc != 0 && s * s == T(qscale(Rational(cc), e1))) found = "t_{" + std::to_string(cc) + "ε_1}";
    o.known_red(s * s == T(qscale(Rational(-1), e1)), f.name + ": (s_{ε_1} s_{2δ-ε_1})² = t_{-ε_1} (found " + found + ")");
  }
}

void q_data(Outcome& o) {
  for (auto [n, order] : std::vector<std::pair<int, std::size_t>>{{3, 1}, {4, 2}, {5, 1}}) {
    const std::string path = std::string(KMS_TEST_DATA_DIR) + "/q" + std::to_string(n) + "_2.json";
    std::ifstream in(path);
    o.check(in.good(), "cannot read " + path);
    if (!in) continue;
    Json j = Json::parse(in);
    DatumPtr d = datum_from_json(j.contains("datum") ? j["datum"] : j);
    bool conv = true;
    for (std::size_t x = 0; x < d->size(); ++x) {
      Scalar row(0);
      for (std::size_t y = 0; y < d->size(); ++y) {
        row += d->a(x, y);
        if (x != y) conv = conv && (d->a(x, y) == Scalar(0) || d->a(x, y) == Scalar(1) || d->a(x, y) == Scalar(-1));
      }
      conv = conv && row.is_zero();
    }
    const std::string name = "q_" + std::to_string(n) + "^(2)";
    o.check(conv, name + ": off-diagonal entries in {0, ±1} and zero row sums");
    auto sp = explore(d, ExploreMode::Spine, 2000);
    auto g = sp_d_group(sp);
    o.check(sp.complete() && g.order == order, name + ": |Sp^D| = " + std::to_string(order));
    if (order == 1) {
      auto pd = principal_data(sp);
      auto sk = explore(d, ExploreMode::Skeleton, 300);
      auto r = sk_d_structure(sk, g, pd);
      o.check(r.factored == r.sk_d_count, name + ": Sk^D = W on enumerated data");
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "reflexion involution and A_u recomputation", reflexion_invariants},
      {2, "spine and skeleton counts for A, B, D", counts},
      {3, "Q±(m,n,t): spine, B_π, Sp^D, δ, classification", q_family},
      {4, "C(n+1): spine path, marks, trivial Sp^D", c_finite},
      {5, "C(n+1)^(1): spine line, period, Sp^D generator, Sk^D", c_affine},
      {6, "A(n|n): Sp^D = Z_2, A_u = -A_v, Dynkin swap", a_nn},
      {7, "G(3)^(1) vs G(3)^(2): D = 2I, isomorphic spines", g3},
      {8, "infinite π_S example over Q(t)", pi_s_infinite},
      {9, "imaginary roots", imaginary},
      {10, "root bases", root_bases_check},
      {11, "descent to dominant", descent},
      {12, "translations t_ν", translations},
      {13, "q_n^(2) from JSON: Sp^D", q_data},
  };
  int unexpected = 0, red = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.failed.push_back(std::string("exception: ") + e.what());
    }
    const bool pass = o.failed.empty() && o.red.empty();
    std::cout << (pass ? "PASS" : "FAIL") << "  " << c.id << "  " << c.title;
    for (const auto& n : o.notes) std::cout << " [" << n << "]";
    std::cout << "\n";
    for (const auto& f : o.failed) std::cout << "        failed: " << f << "\n";
    for (const auto& r : o.red) std::cout << "        unattainable: " << r << "\n";
    unexpected += static_cast<int>(o.failed.size());
    red += static_cast<int>(o.red.size());
  }
  std::cout << unexpected << " unexpected failure(s), " << red << " known-unattainable sub-check(s)\n";
  return unexpected == 0 ? 0 : 1;
}
