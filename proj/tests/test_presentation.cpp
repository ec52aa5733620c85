#include <doctest.h>

#include "dacox/presentation.hpp"

using namespace dacox;

TEST_CASE("presentations hold in the Weyl quotient") {
  for (auto f : all_families()) {
    const int n = min_rank(f);
    const auto l = make_label(f, n);
    CAPTURE(to_string(l));
    CHECK(verify_presentation(l).ok());
  }
  CHECK(verify_presentation(make_label(Family::dddotCstar, 2), true).ok());
}

TEST_CASE("word syntax round trips") {
  const auto p = build_presentation(make_label(Family::dddotC, 2));
  const auto w = parse_word(p, "T1 Theta02' T2 Theta01");
  CHECK(w.size() == 4);
  CHECK(format_word(p, w) == "T1 Theta02' T2 Theta01");
  CHECK(inverse(inverse(w)) == w);
  CHECK_THROWS_AS(parse_word(p, "T9"), Error);
}

TEST_CASE("central word maps to tau_delta") {
  const auto p = build_presentation(make_label(Family::ddotF4, 4));
  const auto m = phi_dictionary(p);
  CHECK(m.eval(p.central) == m.group.tau_delta(1));
  const auto pc = build_presentation(make_label(Family::dddotCstar, 3), true);
  const auto mc = phi_dictionary(pc);
  CHECK(mc.eval(pc.central) == mc.group.tau_delta(Rational(1, 2)));
}

TEST_CASE("a wrong relation is detected") {
  const auto p = build_presentation(make_label(Family::dddotA, 2));
  const auto m = phi_dictionary(p);
  // T1 and T2 do not commute
  const auto a = m.eval(parse_word(p, "T1 T2")), b = m.eval(parse_word(p, "T2 T1"));
  CHECK_FALSE(a == b);
}
