#pragma once

#include <map>
#include <optional>
#include <regex>
#include <string>

#include "kms/exact/parse.hpp"
#include "kms/families/realization.hpp"

namespace kms {

/// A named Cartan datum at its chosen base vertex, with optional ambient data.
struct Family {
  std::string name;
  DatumPtr datum;
  std::optional<Realization> realization;  // ambient roots; its form may differ from A for non-symmetrizable data
  std::map<std::string, IntVec> named_roots;
  std::optional<IntVec> delta;  // minimal imaginary root for affine components
  bool affine = false;

  Vertex base() const { return Vertex::base_vertex(datum); }

  /// Root in Σ_v coordinates from a name ("δ", "α_2") or an ambient combination.
  IntVec root(const std::string& s) const {
    auto it = named_roots.find(s);
    if (it != named_roots.end()) return it->second;
    if (!realization) fail(ErrorCode::ParseError, "family " + name + " has no ambient basis for '" + s + "'");
    auto c = realization->coords(realization->parse(s));
    if (!c) fail(ErrorCode::InvalidParameters, "'" + s + "' is not in the span of the simple roots");
    IntVec out;
    for (const auto& q : *c) {
      if (!is_integral(q)) fail(ErrorCode::InvalidParameters, "'" + s + "' is not in the root lattice");
      out.push_back(to_int(q));
    }
    return out;
  }

  /// Ambient vector expressed in Σ_v coordinates (rational).
  QVec coords(const QVec& ambient) const {
    auto c = realization->coords(ambient);
    if (!c) fail(ErrorCode::InvalidParameters, "vector is not in the span of the simple roots");
    return *c;
  }
};

namespace detail {

inline DatumPtr datum_from(SMatrix A, std::vector<std::uint8_t> p, FieldPtr f = nullptr) {
  auto d = std::make_shared<CartanDatum>();
  d->A = std::move(A);
  d->parity = std::move(p);
  d->field = std::move(f);
  validate(*d);
  return d;
}

inline Family from_realization(std::string name, Realization r) {
  Family f;
  f.name = std::move(name);
  f.datum = datum_from(r.cartan(), r.simple_parity);
  f.realization = std::move(r);
  return f;
}

inline void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::InvalidParameters, what);
}

inline std::string idx(const char* base, std::size_t i) { return std::string(base) + "_" + std::to_string(i); }

/// Basis ε_1..ε_m (square 1, even) and δ_1..δ_n (square -1, odd).
struct EpsDelta {
  RealizationBuilder b;
  std::vector<std::size_t> eps, del;
  EpsDelta(std::size_t m, std::size_t n) {
    for (std::size_t i = 1; i <= m; ++i) eps.push_back(b.add(idx("ε", i), Scalar(1), 0));
    for (std::size_t j = 1; j <= n; ++j) del.push_back(b.add(idx("δ", j), Scalar(-1), 1));
  }
  QVec e(std::size_t i) const { return b.e(eps[i - 1]); }
  QVec d(std::size_t j) const { return b.e(del[j - 1]); }
};

/// Records the primitive lattice vector on the ray of `ambient` as δ.
inline void set_delta(Family& f, const QVec& ambient) {
  QVec c = f.coords(ambient);
  Integer l = 1, g = 0;
  for (const auto& q : c) l = lcm(l, Integer(q.get_den()));
  for (const auto& q : c) g = gcd(g, Integer(q * Rational(l)));
  IntVec v;
  for (const auto& q : c) v.push_back(to_int(Rational(q * Rational(l) / Rational(g))));
  f.delta = v;
  f.named_roots["δ"] = v;
  f.affine = true;
}

}  // namespace detail

/// A(m|n) = sl(m+1|n+1), base Σ = {ε_1-ε_2, …, ε_{m+1}-δ_1, δ_1-δ_2, …}.
inline Family family_A(std::size_t m, std::size_t n, bool affine = false) {
  detail::EpsDelta ed(m + 1, n + 1);
  std::optional<std::size_t> null;
  if (affine) {
    detail::require(m + n >= 1, "A(0|0)^(1) is not supported");
    null = ed.b.add("δ", Scalar(0), 0);
  }
  std::vector<QVec> letters;
  for (std::size_t i = 1; i <= m + 1; ++i) letters.push_back(ed.e(i));
  for (std::size_t j = 1; j <= n + 1; ++j) letters.push_back(ed.d(j));
  if (affine) ed.b.simple(ed.b.e(*null) - (letters.front() - letters.back()));
  for (std::size_t i = 0; i + 1 < letters.size(); ++i) ed.b.simple(letters[i] - letters[i + 1]);
  std::string name = "A(" + std::to_string(m) + "|" + std::to_string(n) + ")" + (affine ? "^(1)" : "");
  Family f = detail::from_realization(name, ed.b.build());
  if (affine) detail::set_delta(f, f.realization->basis("δ"));
  return f;
}

/// B(m|n) = osp(2m+1|2n), base word ε^m δ^n: Σ = {ε_1-ε_2, …, ε_m-δ_1, …, δ_{n-1}-δ_n, δ_n}.
inline Family family_B(std::size_t m, std::size_t n) {
  detail::require(m + n >= 1, "B(0|0) is empty");
  detail::EpsDelta ed(m, n);
  std::vector<QVec> w;
  for (std::size_t i = 1; i <= m; ++i) w.push_back(ed.e(i));
  for (std::size_t j = 1; j <= n; ++j) w.push_back(ed.d(j));
  for (std::size_t i = 0; i + 1 < w.size(); ++i) ed.b.simple(w[i] - w[i + 1]);
  ed.b.simple(w.back());
  return detail::from_realization("B(" + std::to_string(m) + "|" + std::to_string(n) + ")", ed.b.build());
}

/// D(m|n) = osp(2m|2n), base word δ^n ε^m: Σ = {δ_1-δ_2, …, δ_n-ε_1, …, ε_{m-1}-ε_m, ε_{m-1}+ε_m}.
inline Family family_D(std::size_t m, std::size_t n) {
  detail::require(m >= 1 && (n >= 1 || m >= 3), "D(m|n) needs m >= 1 and n >= 1, or m >= 3");
  detail::EpsDelta ed(m, n);
  std::vector<QVec> w;
  for (std::size_t j = 1; j <= n; ++j) w.push_back(ed.d(j));
  for (std::size_t i = 1; i <= m; ++i) w.push_back(ed.e(i));
  for (std::size_t i = 0; i + 1 < w.size(); ++i) ed.b.simple(w[i] - w[i + 1]);
  ed.b.simple(w[w.size() - 2] + w.back());
  return detail::from_realization("D(" + std::to_string(m) + "|" + std::to_string(n) + ")", ed.b.build());
}

/// C(n+1) = D(1|n) at the middle vertex of its spine.
inline Family family_C(std::size_t k) {
  detail::require(k >= 2, "C(k) needs k >= 2");
  Family f = family_D(1, k - 1);
  f.name = "C(" + std::to_string(k) + ")";
  return f;
}

/// C(n+1)^(1): Σ = {δ-2δ_1, δ_1-δ_2, …, δ_{n-1}-δ_n, δ_n-ε_1, δ_n+ε_1}; roots x_0..x_{n+1}.
inline Family family_C_affine(std::size_t k) {
  detail::require(k >= 2, "C(k)^(1) needs k >= 2");
  const std::size_t n = k - 1;
  detail::EpsDelta ed(1, n);
  const std::size_t null = ed.b.add("δ", Scalar(0), 0);
  auto E = [&](const QVec& v) {
    QVec r = v;
    r.resize(n + 2, Rational(0));
    return r;
  };
  ed.b.simple(ed.b.e(null) - Rational(2) * E(ed.d(1)));
  for (std::size_t j = 1; j < n; ++j) ed.b.simple(E(ed.d(j)) - E(ed.d(j + 1)));
  ed.b.simple(E(ed.d(n)) - E(ed.e(1)));
  ed.b.simple(E(ed.d(n)) + E(ed.e(1)));
  Family f = detail::from_realization("C(" + std::to_string(k) + ")^(1)", ed.b.build());
  detail::set_delta(f, f.realization->basis("δ"));
  return f;
}

/// D(2|1;a) with a formal parameter.
inline Family family_D21(const std::string& param) {
  Field::Spec s;
  s.parameters = {param};
  s.nonzero_assumptions = {param, param + "+1"};
  auto fld = make_field(s);
  Scalar a = Scalar::parameter(fld);
  SMatrix A{{Scalar(0), Scalar(1), a}, {Scalar(-1), Scalar(2), Scalar(0)}, {Scalar(-1), Scalar(0), Scalar(2)}};
  Family f;
  f.name = "D(2|1;" + param + ")";
  f.datum = detail::datum_from(A, {1, 0, 0}, fld);
  return f;
}

/// F(4): (ε_i, ε_j) = δ_ij, (δ, δ) = -3, Σ = {(δ-ε_1-ε_2-ε_3)/2, ε_3, ε_2-ε_3, ε_1-ε_2}.
inline Family family_F4() {
  RealizationBuilder b;
  auto e1 = b.add("ε_1", Scalar(1), 0), e2 = b.add("ε_2", Scalar(1), 0), e3 = b.add("ε_3", Scalar(1), 0);
  auto d = b.add("δ_1", Scalar(-3), 0);
  b.simple(Rational(1, 2) * (b.e(d) - b.e(e1) - b.e(e2) - b.e(e3)), 1);
  b.simple(b.e(e3));
  b.simple(b.e(e2) - b.e(e3));
  b.simple(b.e(e1) - b.e(e2));
  return detail::from_realization("F(4)", b.build());
}

namespace detail {
/// G2 part with ε_1+ε_2+ε_3 = 0 written in the basis (ε_1, ε_2) plus δ_1; (ε_i,ε_i) = 1, (ε_i,ε_j) = -1/2.
struct G3Basis {
  RealizationBuilder b;
  std::size_t e1, e2, d1;
  G3Basis() {
    e1 = b.add("ε_1", Scalar(1), 0);
    e2 = b.add("ε_2", Scalar(1), 0);
    d1 = b.add("δ_1", Scalar(-1), 1);
    b.set_product(e1, e2, Scalar(-1, 2));
  }
  QVec eps(int i) const {
    if (i == 1) return b.e(e1);
    if (i == 2) return b.e(e2);
    return Rational(-1) * (b.e(e1) + b.e(e2));
  }
};
}  // namespace detail

/// G(3) with Σ = {ε_3-δ_1, ε_2, δ_1-ε_2}.
inline Family family_G3() {
  detail::G3Basis g;
  g.b.simple(g.eps(3) - g.b.e(g.d1));
  g.b.simple(g.eps(2));
  g.b.simple(g.b.e(g.d1) - g.eps(2));
  return detail::from_realization("G(3)", g.b.build());
}

/// G(3)^(1) with Σ = {ε_3-δ_1, δ+ε_1-ε_3, ε_2, δ_1-ε_2}.
inline Family family_G3_1() {
  detail::G3Basis g;
  auto null = g.b.add("δ", Scalar(0), 0);
  auto E = [&](QVec v) {
    v.resize(4, Rational(0));
    return v;
  };
  g.b.simple(E(g.eps(3) - g.b.e(g.d1)));
  g.b.simple(g.b.e(null) + E(g.eps(1) - g.eps(3)));
  g.b.simple(E(g.eps(2)));
  g.b.simple(E(g.b.e(g.d1) - g.eps(2)));
  Family f = detail::from_realization("G3_1", g.b.build());
  detail::set_delta(f, f.realization->basis("δ"));
  return f;
}

/// Twisted form: Σ = {ε_3-ε_2-ε_1, 2ε_1, 2ε_2, δ-ε_3-2ε_2}, orthogonal ε_i with squares 3/2, 1/2, -2.
inline Family family_G3_2() {
  RealizationBuilder b;
  auto e1 = b.add("ε_1", Scalar(3, 2), 0), e2 = b.add("ε_2", Scalar(1, 2), 0), e3 = b.add("ε_3", Scalar(-2), 1);
  auto null = b.add("δ", Scalar(0), 0);
  b.simple(b.e(e3) - b.e(e2) - b.e(e1));
  b.simple(Rational(2) * b.e(e1));
  b.simple(Rational(2) * b.e(e2));
  b.simple(b.e(null) - b.e(e3) - Rational(2) * b.e(e2));
  Family f = detail::from_realization("G3_2", b.build());
  detail::set_delta(f, f.realization->basis("δ"));
  return f;
}

/// Q±(m,n,t): A = [[0,a,1],[1,0,b],[c,1,0]], all odd, with 1+a+1/c = -m, 1+b+1/a = -n, 1+c+1/b = -t.
inline Family family_Q(long m, long n, long t, bool plus) {
  detail::require(m >= 1 && n >= 1 && t >= 1 && m * n * t > 1, "Q(m,n,t) needs positive integers with mnt > 1");
  const Rational M(m + 1), N(n + 1), T(t + 1);
  const Rational c2 = N * T - 1, c1 = T * M * N + T - N - M, c0 = T * M - 1;
  auto f_at = [&](const Rational& x) { return Rational(c2 * x * x + c1 * x + c0); };
  detail::require(sgn(f_at(Rational(-1))) < 0, "quadratic for a has no root in (-1, 0)");
  Field::Spec s;
  s.generator = "a";
  s.minpoly = {c2, c1, c0};
  if (plus) {
    s.root_interval = std::make_pair(Rational(-1), Rational(0));
  } else {
    Rational lo = -2;
    while (sgn(f_at(lo)) <= 0) lo -= 1;
    s.root_interval = std::make_pair(lo, Rational(-1));
  }
  auto fld = make_field(s);
  Scalar a = Scalar::generator(fld);
  Scalar b = Scalar(-(n + 1)) - a.inverse();
  Scalar c = -(Scalar(m + 1) + a).inverse();
  SMatrix A{{Scalar(0), a, Scalar(1)}, {Scalar(1), Scalar(0), b}, {c, Scalar(1), Scalar(0)}};
  Family f;
  f.name = std::string("Q") + (plus ? "+" : "-") + "(" + std::to_string(m) + "," + std::to_string(n) + "," +
           std::to_string(t) + ")";
  f.datum = detail::datum_from(A, {1, 1, 1}, fld);
  f.named_roots["δ"] = {1, 1, 1};
  for (std::size_t i = 0; i < 3; ++i) {
    IntVec al{1, 1, 1}, be{0, 0, 0};
    al[i] = 0;
    be[i] = 1;
    f.named_roots["α_" + std::to_string(i + 1)] = al;
    f.named_roots["β_" + std::to_string(i + 1)] = be;
  }
  return f;
}

/// q_n^(2): Σ = {ε_1-ε_2, …, ε_{n-1}-ε_n, δ-ε_1+ε_n}; the last root is odd and
/// a(x_n) acts as E_11 + E_nn. Off-diagonal entries lie in {0, ±1}, rows sum to zero.
inline Family family_q(std::size_t n) {
  detail::require(n >= 3, "q_n^(2) needs n >= 3");
  SMatrix A(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    A(i, i) = 2;
    if (i > 0) A(i, i - 1) = -1;
    if (i + 2 < n) A(i, i + 1) = -1;
  }
  A(0, n - 1) = -1;
  A(n - 2, n - 1) = -1;
  A(n - 1, 0) = 1;
  A(n - 1, n - 2) = -1;
  std::vector<std::uint8_t> p(n, 0);
  p[n - 1] = 1;
  RealizationBuilder b;
  std::vector<std::size_t> e;
  for (std::size_t i = 1; i <= n; ++i) e.push_back(b.add(detail::idx("ε", i), Scalar(1), 0));
  auto null = b.add("δ", Scalar(0), 1);
  for (std::size_t i = 0; i + 1 < n; ++i) b.simple(b.e(e[i]) - b.e(e[i + 1]));
  b.simple(b.e(null) - b.e(e[0]) + b.e(e[n - 1]));
  Family f;
  f.name = "q_" + std::to_string(n) + "^(2)";
  f.datum = detail::datum_from(A, p);
  f.realization = b.build();
  detail::set_delta(f, f.realization->basis("δ"));
  return f;
}

/// S(1|2;b) with a formal parameter: A = [[0,b,1-b],[-b,0,1+b],[-1,-1,2]], p = (1,1,0).
inline Family family_S12(const std::string& param) {
  Field::Spec s;
  s.parameters = {param};
  s.nonzero_assumptions = {param, param + "-1", param + "+1"};
  auto fld = make_field(s);
  Scalar b = Scalar::parameter(fld);
  SMatrix A{{Scalar(0), b, Scalar(1) - b}, {-b, Scalar(0), Scalar(1) + b}, {Scalar(-1), Scalar(-1), Scalar(2)}};
  Family f;
  f.name = "S(1|2;" + param + ")";
  f.datum = detail::datum_from(A, {1, 1, 0}, fld);
  f.named_roots["δ"] = {1, 1, 1};
  f.delta = IntVec{1, 1, 1};
  f.affine = true;
  return f;
}

/// Purely anisotropic affine datum [[2,-2],[-2,2]].
inline Family family_A1_affine() {
  Family f;
  f.name = "A1^(1)";
  f.datum = detail::datum_from(SMatrix{{Scalar(2), Scalar(-2)}, {Scalar(-2), Scalar(2)}}, {0, 0});
  f.named_roots["δ"] = {1, 1};
  f.delta = IntVec{1, 1};
  f.affine = true;
  return f;
}

/// Datum with a non-reflectable root and infinite π_S, t irrational:
/// A = [[2,-1,-1,0],[-1,0,1,-t],[-1,1,0,t],[0,-t,t,2]], p = (0,1,1,0),
/// Σ_v = {ε_1-ε_2, ε_2-δ_1, δ-ε_1+δ_1, β}, (β,δ_1) = t, (β,β) = 2.
inline Family family_pi_s_infinite(const std::string& param = "t") {
  Field::Spec s;
  s.parameters = {param};
  s.nonzero_assumptions = {param};
  auto fld = make_field(s);
  Scalar t = Scalar::parameter(fld);
  RealizationBuilder b;
  auto e1 = b.add("ε_1", Scalar(1), 0), e2 = b.add("ε_2", Scalar(1), 0), d1 = b.add("δ_1", Scalar(-1), 1);
  auto null = b.add("δ", Scalar(0), 0), beta = b.add("β", Scalar(2), 0);
  b.set_product(beta, d1, t);
  b.simple(b.e(e1) - b.e(e2));
  b.simple(b.e(e2) - b.e(d1));
  b.simple(b.e(null) - b.e(e1) + b.e(d1));
  b.simple(b.e(beta));
  Realization r = b.build();
  Family f;
  f.name = "PiSInfinite(" + param + ")";
  f.datum = detail::datum_from(r.cartan(), r.simple_parity, fld);
  f.realization = std::move(r);
  f.named_roots["δ"] = f.root("δ");
  return f;
}

/// Builds a family from its display name, e.g. "A(1|0)", "C(3)^(1)", "Q+(1,1,2)", "q_4^(2)".
inline Family construct(const std::string& spec) {
  std::smatch m;
  auto num = [&](std::size_t i) { return std::stoul(m[i].str()); };
  static const std::regex reA(R"(^A\((\d+)\|(\d+)\)(\^\(1\))?$)"), reB(R"(^B\((\d+)\|(\d+)\)$)"),
      reC(R"(^C\((\d+)\)(\^\(1\))?$)"), reD(R"(^D\((\d+)\|(\d+)\)$)"), reD21(R"(^D\(2\|1;([A-Za-z]+)\)$)"),
      reQ(R"(^Q([+-]?)\((\d+),(\d+),(\d+)\)$)"), req(R"(^q_(\d+)\^\(2\)$)"), reS(R"(^S\(1\|2;([A-Za-z]+)\)$)"),
      rePi(R"(^PiSInfinite(\(([A-Za-z]+)\))?$)");
  if (std::regex_match(spec, m, reA)) return family_A(num(1), num(2), m[3].matched);
  if (std::regex_match(spec, m, reB)) return family_B(num(1), num(2));
  if (std::regex_match(spec, m, reC)) return m[2].matched ? family_C_affine(num(1)) : family_C(num(1));
  if (std::regex_match(spec, m, reD)) return family_D(num(1), num(2));
  if (std::regex_match(spec, m, reD21)) return family_D21(m[1].str());
  if (std::regex_match(spec, m, reQ))
    return family_Q(static_cast<long>(num(2)), static_cast<long>(num(3)), static_cast<long>(num(4)), m[1].str() != "-");
  if (std::regex_match(spec, m, req)) return family_q(num(1));
  if (std::regex_match(spec, m, reS)) return family_S12(m[1].str());
  if (std::regex_match(spec, m, rePi)) return family_pi_s_infinite(m[2].matched ? m[2].str() : "t");
  if (spec == "F(4)") return family_F4();
  if (spec == "G(3)") return family_G3();
  if (spec == "G3_1" || spec == "G(3)^(1)") return family_G3_1();
  if (spec == "G3_2" || spec == "G(3)^(2)") return family_G3_2();
  if (spec == "A1^(1)") return family_A1_affine();
  fail(ErrorCode::InvalidParameters, "unknown family '" + spec + "'");
}

}  // namespace kms
