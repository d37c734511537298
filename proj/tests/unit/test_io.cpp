#include <gtest/gtest.h>

#include "kms/families/registry.hpp"
#include "kms/io/json.hpp"

using namespace kms;

TEST(Json, DatumRoundTrip) {
  for (const auto& name : registry()) {
    Family f = construct(name);
    Json j = datum_json(*f.datum);
    DatumPtr back = datum_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back->A, f.datum->A) << name;
    EXPECT_EQ(back->parity, f.datum->parity) << name;
    EXPECT_EQ(datum_json(*back).dump(), j.dump()) << name;
  }
}

TEST(Json, MalformedDatum) {
  EXPECT_THROW(datum_from_json(Json::parse(R"({"size": 2, "parity": [0, 0]})")), Error);
  EXPECT_THROW(datum_from_json(Json::parse(R"({"size": 2, "parity": [0, 0], "matrix": [[2, -1]]})")), Error);
  EXPECT_THROW(datum_from_json(Json::parse(R"({"size": 1, "parity": [2], "matrix": [[2]]})")), Error);
  EXPECT_THROW(parse_rational(Json::parse(R"("1/x")")), Error);
  EXPECT_EQ(parse_rational(Json::parse(R"("6/4")")), Rational(3, 2));
}

TEST(Json, GraphLabels) {
  Family f = family_C_affine(3);
  auto g = explore(f.datum, ExploreMode::Spine, 8);
  Json j = graph_json(g, first_mark(f.name));
  EXPECT_EQ(j["status"], "truncated");
  EXPECT_EQ(j["first_mark"], 0);
  bool zero = false;
  for (const auto& e : j["edges"]) zero = zero || e["mark"] == "r_0";
  EXPECT_TRUE(zero);
  EXPECT_EQ(first_mark("C(3)"), 1u);
}

TEST(Dot, UndirectedWithBoldIsotropicEdges) {
  auto g = explore(family_Q(1, 1, 2, true).datum, ExploreMode::Spine, 10);
  std::string dot = graph_dot(g);
  EXPECT_EQ(dot.rfind("graph spine {", 0), 0u);
  EXPECT_EQ(dot.find("->"), std::string::npos);
  EXPECT_NE(dot.find("v0 -- v1 [label=\"r_1\", style=bold]"), std::string::npos);
}

TEST(Registry, MetadataAgreesWithComputation) {
  for (const char* name : {"A(2|1)", "B(1|2)", "D(2|1)", "C(3)"}) {
    auto e = expected_metadata(name);
    Family f = construct(name);
    auto sp = explore(f.datum, ExploreMode::Spine, 5000);
    ASSERT_TRUE(e.spine);
    EXPECT_EQ(*e.spine, std::to_string(sp.size())) << name;
    auto oracle = spine_oracle(name);
    ASSERT_TRUE(oracle);
    EXPECT_TRUE(marked_isomorphism(sp, *oracle)) << name;
  }
  EXPECT_THROW(construct("Z(1)"), Error);
  EXPECT_THROW(construct("D(2|0)"), Error);
}
