#include <doctest.h>

#include "dacox/rootsys.hpp"

using namespace dacox;

namespace {
Rational sum(const std::vector<Rational>& v) {
  Rational s = 0;
  for (const auto& x : v) s += x;
  return s;
}
}  // namespace

TEST_CASE("untwisted marks add up to the Coxeter number, comarks to the dual one") {
  struct Row {
    const char* type;
    int h, hv;
  };
  // standard tables
  const Row rows[] = {{"A1^(1)", 2, 2},  {"A4^(1)", 5, 5},  {"B3^(1)", 6, 5},  {"B5^(1)", 10, 9},
                      {"C2^(1)", 4, 3},  {"C4^(1)", 8, 5},  {"D4^(1)", 6, 6},  {"D6^(1)", 10, 10},
                      {"E6^(1)", 12, 12}, {"E7^(1)", 18, 18}, {"E8^(1)", 30, 30}, {"F4^(1)", 12, 9},
                      {"G2^(1)", 6, 4}};
  for (const auto& r : rows) {
    CAPTURE(r.type);
    const auto rs = build_root_system(parse_affine_type(r.type));
    CHECK(sum(rs.cartan.marks) == r.h);
    CHECK(sum(rs.cartan.comarks) == r.hv);
    CHECK(rs.cartan.r == 1);
  }
}

TEST_CASE("twist and theta for twisted types") {
  CHECK(build_root_system(parse_affine_type("A4^(2)")).cartan.r == 2);
  CHECK(build_root_system(parse_affine_type("D4^(3)")).cartan.r == 3);
  const auto rs = build_root_system(parse_affine_type("D4^(2)"));
  CHECK_FALSE(rs.theta_is_phi());
  CHECK(rs.fin.norm(rs.theta) < rs.fin.norm(rs.phi));
  CHECK(build_root_system(parse_affine_type("C3^(1)")).theta_is_phi());
}

TEST_CASE("parse and print affine types") {
  CHECK(to_string(parse_affine_type("C_3^(1)")) == "C3^(1)");
  CHECK(to_string(parse_affine_type("D3^(2)")) == "A3^(2)");
  CHECK_THROWS_AS(parse_affine_type("Q2^(1)"), Error);
  CHECK_THROWS_AS(parse_affine_type("E5^(1)"), Error);
}

TEST_CASE("highest root and short dominant root of the finite systems") {
  const auto b3 = build_finite('B', 3);
  CHECK(b3.highest_root() == IntVec{1, 2, 2});
  CHECK(b3.short_dominant_root() == IntVec{1, 1, 1});
  const auto g2 = build_finite('G', 2);
  CHECK(g2.positive.size() == 6);
  CHECK(build_finite('E', 8).positive.size() == 120);
  CHECK(build_finite('F', 4).positive.size() == 24);
  CHECK(build_finite('D', 5).simply_laced());
}
