#include <gtest/gtest.h>

#include "kms/families/registry.hpp"
#include "kms/symmetry.hpp"

using namespace kms;

namespace {

QMatrix gram_of(const Family& f) {
  SMatrix c = f.realization->cartan();
  QMatrix g(c.rows(), c.cols());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) g(i, j) = c(i, j).rational();
  return g;
}

std::vector<Rational> delta_levels(const Family& f) {
  auto d = f.realization->basis("δ");
  std::vector<Rational> level;
  for (const auto& s : f.realization->simple) {
    Rational l = 0;
    for (std::size_t i = 0; i < s.size(); ++i) l += s[i] * d[i];
    level.push_back(l);
  }
  return level;
}

}  // namespace

TEST(SpD, FiniteOrders) {
  for (auto [name, order] : std::vector<std::pair<const char*, std::size_t>>{
           {"A(1|0)", 1}, {"A(1|1)", 2}, {"A(2|2)", 2}, {"B(1|1)", 1}, {"C(3)", 1}, {"D(2|1)", 1},
           {"Q+(1,1,2)", 1}, {"G3_1", 1}, {"q_3^(2)", 1}, {"q_4^(2)", 2}, {"q_5^(2)", 1}}) {
    auto sp = explore(construct(name).datum, ExploreMode::Spine, 2000);
    ASSERT_TRUE(sp.complete()) << name;
    auto g = sp_d_group(sp);
    EXPECT_EQ(g.order, order) << name;
    EXPECT_FALSE(g.infinite_witness) << name;
  }
}

TEST(SpD, AnnIsSignFlip) {
  auto sp = explore(family_A(1, 1).datum, ExploreMode::Spine, 100);
  auto g = sp_d_group(sp);
  ASSERT_EQ(g.elements.size(), 2u);
  for (const auto& d : g.elements[1].diag_D) EXPECT_EQ(d, Scalar(-1));
  EXPECT_EQ(matrix_power(g.elements[1].sigma_b, 2), IntMatrix::identity(3));
  auto pd = principal_data(sp);
  auto perm = dynkin_hom(g.elements[1], pd);
  auto comp = pi_components(pd);
  for (std::size_t i = 0; i < perm.size(); ++i) EXPECT_NE(comp[perm[i]], comp[i]);
}

TEST(SpD, AffineInfinite) {
  for (const char* name : {"C(3)^(1)", "A(1|0)^(1)", "A(1|1)^(1)"}) {
    auto sp = explore(construct(name).datum, ExploreMode::Spine, 60);
    auto g = sp_d_group(sp);
    EXPECT_FALSE(g.order) << name;
    EXPECT_TRUE(g.infinite_witness) << name;
  }
  auto nn = sp_d_group(explore(construct("A(1|1)^(1)").datum, ExploreMode::Spine, 60));
  EXPECT_FALSE(nn.abelian);
}

TEST(SkD, FiniteIsWTimesSp) {
  for (const char* name : {"A(1|1)", "C(3)", "B(1|1)"}) {
    Family f = construct(name);
    auto sp = explore(f.datum, ExploreMode::Spine, 1000);
    auto sk = explore(f.datum, ExploreMode::Skeleton, 5000);
    auto g = sp_d_group(sp);
    auto pd = principal_data(sp);
    auto r = sk_d_structure(sk, g, pd);
    EXPECT_TRUE(r.complete) << name;
    EXPECT_EQ(r.factored, r.sk_d_count) << name;
    EXPECT_TRUE(r.unique) << name;
    EXPECT_TRUE(r.w_meets_sp_trivially) << name;
    auto W = weyl_generate(pd, 50);
    ASSERT_TRUE(W.exhausted);
    EXPECT_EQ(r.sk_d_count, W.elements.size() * g.elements.size()) << name;
  }
}

TEST(WeylWord, RecoversElements) {
  Family f = family_C_affine(3);
  auto pd = principal_data(explore(f.datum, ExploreMode::Spine, 72));
  auto W = weyl_generate(pd, 4);
  for (const auto& w : W.elements) {
    auto word = weyl_word(pd, w.matrix);
    ASSERT_TRUE(word);
    EXPECT_EQ(weyl_from_word(pd, *word).matrix, w.matrix);
    EXPECT_EQ(word->size(), w.length());
  }
  // -1 is not in the affine Weyl group
  IntMatrix neg = IntMatrix::identity(pd.rank);
  for (std::size_t i = 0; i < pd.rank; ++i) neg(i, i) = -1;
  EXPECT_FALSE(weyl_word(pd, neg, 200));
}

TEST(Frame, TranslationsOnCAffine) {
  Family f = family_C_affine(3);
  auto pd = principal_data(explore(f.datum, ExploreMode::Spine, 72));
  auto fr = bilinear_frame(gram_of(f));
  EXPECT_EQ(fr.corank, 1u);
  EXPECT_TRUE(frame_compatible(fr, pd));
  const QVec delta = fr.embed(*f.delta);
  const QVec e1 = fr.embed(f.coords(f.realization->basis("ε_1")));
  EXPECT_EQ(fr.form(delta, fr.lambda(0)), Rational(1));
  auto s = reflection_matrix(fr, e1) * reflection_matrix(fr, qadd(qscale(Rational(2), delta), qscale(Rational(-1), e1)));
  // with (ε_1, ε_1) = 1 the product is t_{-4ε_1}
  EXPECT_EQ(s, translation(fr, qscale(Rational(-4), e1), delta));
  EXPECT_EQ(s * s, translation(fr, qscale(Rational(-8), e1), delta));
  // t_{ε_1}(ε_1) = ε_1 - (ε_1, ε_1)δ
  EXPECT_EQ(translation(fr, e1, delta).apply(e1), qadd(e1, qscale(Rational(-1), delta)));
  EXPECT_THROW(translation(fr, fr.lambda(0), delta), Error);
}

TEST(Frame, SpDGeneratorIsATranslation) {
  Family f = family_C_affine(3);
  auto sp = explore(f.datum, ExploreMode::Spine, 36);
  auto g = sp_d_group(sp);
  ASSERT_EQ(g.generators.size(), 1u);
  auto fr = bilinear_frame(gram_of(f));
  const QVec delta = fr.embed(*f.delta);
  const QVec e1 = fr.embed(f.coords(f.realization->basis("ε_1")));
  const QMatrix G = to_rational(g.elements[g.generators[0]].sigma_b);
  const QMatrix t = on_vb(fr, translation(fr, qscale(Rational(2), e1), delta));
  const QMatrix tinv = on_vb(fr, translation(fr, qscale(Rational(-2), e1), delta));
  EXPECT_TRUE(G == t || G == tinv);
}

TEST(Frame, AffineDecomposition) {
  for (auto [name, finite] : std::vector<std::pair<const char*, std::size_t>>{{"C(3)^(1)", 8}, {"G3_1", 24}}) {
    Family f = construct(name);
    auto pd = principal_data(explore(f.datum, ExploreMode::Spine, 72));
    auto W = weyl_generate(pd, 4);
    auto d = affine_decomposition(pd, W, gram_of(f), delta_levels(f), *f.delta);
    EXPECT_TRUE(d.complete_finite) << name;
    EXPECT_EQ(d.finite_order, finite) << name;
    EXPECT_EQ(d.factored, d.checked) << name;
  }
}

TEST(Frame, RejectsAsymmetricForms) {
  QMatrix m(2, 2);
  m(0, 1) = 1;
  EXPECT_THROW(bilinear_frame(m), Error);
}
