#pragma once

#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "kms/families/families.hpp"
#include "kms/families/oracles.hpp"

namespace kms {

/// What the literature says about a family; empty fields have no closed form.
struct Expected {
  std::optional<std::string> spine;     // vertex count or "infinite"
  std::optional<std::string> skeleton;  // vertex count or "infinite"
  std::optional<std::string> sp_d;      // "1", "Z_2", "Z", "Z⋊Z_2", "finite"
  std::optional<std::string> type;      // Fin, Aff, Ind
  std::optional<std::string> parity_type;
};

/// Built-in families listed by the CLI.
inline const std::vector<std::string>& registry() {
  static const std::vector<std::string> names{
      "A(1|0)", "A(1|1)", "A(2|1)", "A(2|2)", "B(1|1)", "B(2|1)", "C(2)",   "C(3)",       "C(4)",
      "D(2|1)", "D(2|2)", "D(2|1;a)", "F(4)", "G(3)",  "A(1|0)^(1)", "A(1|1)^(1)", "A(2|1)^(1)", "C(3)^(1)",
      "C(4)^(1)", "G3_1", "G3_2",  "q_3^(2)", "q_4^(2)", "q_5^(2)", "Q+(1,1,2)", "Q+(2,2,2)", "Q+(1,2,3)",
      "Q-(1,1,2)", "S(1|2;b)", "A1^(1)", "PiSInfinite(t)"};
  return names;
}

/// Lowest mark label: C(n+1)^(1) numbers its simple roots from x_0.
inline std::size_t first_mark(const std::string& spec) {
  static const std::regex re(R"(^C\(\d+\)\^\(1\)$)");
  return std::regex_match(spec, re) ? 0 : 1;
}

inline Expected expected_metadata(const std::string& spec) {
  std::smatch m;
  auto num = [&](std::size_t i) { return std::stoul(m[i].str()); };
  auto str = [](const Integer& z) { return z.get_str(); };
  static const std::regex reA(R"(^A\((\d+)\|(\d+)\)$)"), reA1(R"(^A\((\d+)\|(\d+)\)\^\(1\)$)"),
      reB(R"(^B\((\d+)\|(\d+)\)$)"), reC(R"(^C\((\d+)\)$)"), reC1(R"(^C\((\d+)\)\^\(1\)$)"),
      reD(R"(^D\((\d+)\|(\d+)\)$)"), req(R"(^q_(\d+)\^\(2\)$)"), reQ(R"(^Q[+-]?\(\d+,\d+,\d+\)$)");
  Expected e;
  if (std::regex_match(spec, m, reA)) {
    e.spine = str(oracle::spine_size_A(num(1), num(2)));
    e.skeleton = str(oracle::skeleton_size_A(num(1), num(2)));
    e.sp_d = num(1) == num(2) ? "Z_2" : "1";
    e.type = "Fin";
    e.parity_type = "I";
  } else if (std::regex_match(spec, m, reA1)) {
    e.spine = e.skeleton = "infinite";
    e.sp_d = num(1) == num(2) ? "Z⋊Z_2" : "Z";
    e.type = "Aff";
    e.parity_type = "I";
  } else if (std::regex_match(spec, m, reB)) {
    e.spine = str(oracle::spine_size_B(num(1), num(2)));
    e.skeleton = str(oracle::skeleton_size_B(num(1), num(2)));
    e.sp_d = "1";
    e.type = "Fin";
    e.parity_type = "II";
  } else if (std::regex_match(spec, m, reC)) {
    e.spine = std::to_string(2 * (num(1) - 1) + 1);
    e.sp_d = "1";
    e.type = "Fin";
    e.parity_type = "I";
  } else if (std::regex_match(spec, m, reC1)) {
    e.spine = e.skeleton = "infinite";
    e.sp_d = "Z";
    e.type = "Aff";
    e.parity_type = "I";
  } else if (std::regex_match(spec, m, reD)) {
    e.spine = str(oracle::spine_size_D(num(1), num(2)));
    e.skeleton = str(oracle::skeleton_size_D(num(1), num(2)));
    e.sp_d = "1";
    e.type = "Fin";
    e.parity_type = "II";
  } else if (std::regex_match(spec, m, req)) {
    e.skeleton = "infinite";
    e.sp_d = num(1) % 2 == 0 ? "Z_2" : "1";
    e.type = "Aff";
    e.parity_type = "II";
  } else if (std::regex_match(spec, m, reQ)) {
    e.spine = "4";
    e.skeleton = "infinite";
    e.sp_d = "1";
    e.type = "Ind";
    e.parity_type = "II";
  } else if (spec.rfind("D(2|1;", 0) == 0 || spec == "F(4)" || spec == "G(3)") {
    e.sp_d = "1";
    e.type = "Fin";
    e.parity_type = "II";
  } else if (spec == "G3_1" || spec == "G3_2" || spec == "G(3)^(1)" || spec == "G(3)^(2)") {
    e.skeleton = "infinite";
    e.sp_d = "1";
    e.type = "Aff";
    e.parity_type = "II";
  } else if (spec.rfind("S(1|2;", 0) == 0) {
    e.spine = e.skeleton = "infinite";
    e.sp_d = "finite";
    e.type = "Aff";
    e.parity_type = "I";
  } else if (spec == "A1^(1)") {
    e.spine = "1";
    e.skeleton = "infinite";
    e.sp_d = "1";
    e.type = "Aff";
    e.parity_type = "II";
  } else if (spec.rfind("PiSInfinite", 0) == 0) {
    e.spine = "infinite";
  }
  return e;
}

/// Independent spine model, where one exists.
inline std::optional<SimpleGraph> spine_oracle(const std::string& spec) {
  std::smatch m;
  auto num = [&](std::size_t i) { return std::stoul(m[i].str()); };
  static const std::regex reA(R"(^A\((\d+)\|(\d+)\)$)"), reB(R"(^B\((\d+)\|(\d+)\)$)"), reC(R"(^C\((\d+)\)$)"),
      reD(R"(^D\((\d+)\|(\d+)\)$)"), reQ(R"(^Q[+-]?\(\d+,\d+,\d+\)$)");
  if (std::regex_match(spec, m, reA)) return oracle::spine_A(num(1), num(2));
  if (std::regex_match(spec, m, reB)) return oracle::spine_B(num(1), num(2));
  if (std::regex_match(spec, m, reC)) return oracle::spine_C(num(1) - 1);
  if (std::regex_match(spec, m, reD)) return oracle::spine_D(num(1), num(2));
  if (std::regex_match(spec, m, reQ)) return oracle::spine_Q();
  return std::nullopt;
}

}  // namespace kms
