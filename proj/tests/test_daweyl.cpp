#include <doctest.h>

#include "dacox/daweyl.hpp"

using namespace dacox;

TEST_CASE("core suite on several types") {
  for (const char* t : {"A2^(1)", "C2^(1)", "G2^(1)", "A4^(2)", "D4^(3)"}) {
    CAPTURE(t);
    CHECK(daweyl_core_suite(parse_affine_type(t), 11, 100).ok());
  }
}

TEST_CASE("group axioms on random elements") {
  DoubleAffineWeyl G(build_root_system(parse_affine_type("B3^(1)")));
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    const auto a = G.random(rng), b = G.random(rng), c = G.random(rng);
    CHECK(G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c)));
    CHECK(G.mul(a, G.inv(a)) == G.identity());
    CHECK(G.mul(a, G.tau_delta()) == G.mul(G.tau_delta(), a));
  }
  CHECK(center_contains_tau_delta(G));
}

TEST_CASE("reflections square to one") {
  DoubleAffineWeyl G(build_root_system(parse_affine_type("E6^(2)")));
  for (int i = 0; i <= G.rank(); ++i) CHECK(G.mul(G.s(i), G.s(i)) == G.identity());
}

TEST_CASE("Bernstein relations and the A_2n^(2) comparison") {
  for (const char* t : {"A1^(1)", "C3^(1)", "F4^(1)", "A5^(2)", "A2^(2)", "D4^(3)"}) {
    CAPTURE(t);
    CHECK(verify_bernstein_relations(parse_affine_type(t)).ok());
  }
  CHECK(a2n2_comparison(1).ok());
  CHECK(a2n2_comparison(2).ok());
}
