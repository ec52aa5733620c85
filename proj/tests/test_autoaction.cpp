#include <doctest.h>

#include "dacox/autoaction.hpp"

using namespace dacox;

TEST_CASE("word-level inverses") {
  for (auto l : {make_label(Family::dddotB, 3), make_label(Family::ddotF4, 4)}) {
    const auto id = identity_map(l);
    CHECK(compose(a_map(l), a_inverse_map(l)).images == id.images);
    CHECK(compose(b_inverse_map(l), b_map(l)).images == id.images);
  }
  const auto l = make_label(Family::ddotB, 3);
  const auto ee = compose(e_map(e_partner(l)), e_map(l));
  CHECK_FALSE(ee.anti);
  CHECK(ee.images == identity_map(l).images);
}

TEST_CASE("literal images on the triple node") {
  const auto l = make_label(Family::dddotA, 2);
  const auto p = build_presentation(l);
  const auto aba = compose(compose(a_map(l), b_map(l)), a_map(l));
  CHECK(format_word(p, aba.images[p.gen(NodeLabel::Theta01)]) == "Theta03");
}

TEST_CASE("automorphism suites") {
  for (auto l : {make_label(Family::dddotA, 1), make_label(Family::dddotC, 2), make_label(Family::dddotE, 6),
                 make_label(Family::ddotB2, 2), make_label(Family::ddotC, 3), make_label(Family::ddotG2, 2)}) {
    CAPTURE(to_string(l));
    CHECK(automorphism_suite(l).ok());
    CHECK(homomorphism_check(l, 10).ok());
  }
  CHECK(automorphism_suite(make_label(Family::dddotCstar, 2), true).ok());
  CHECK(cstar_restriction_check(2).ok());
}

TEST_CASE("a map that is not an automorphism") {
  const auto l = make_label(Family::dddotA, 2);
  auto m = identity_map(l);
  const auto p = build_presentation(l);
  m.name = "bogus";
  m.images[p.gen(NodeLabel::Theta01)] = p.T(1);
  CHECK_FALSE(is_automorphism(m).ok());
}

TEST_CASE("basic involutions") {
  const auto l = make_label(Family::ddotB, 3);
  auto v = basic_involution_check(Mat2{1, 1, -2, -1}, l);
  CHECK(v.in_upsilon);
  CHECK(v.involution);
  v = basic_involution_check(u21(4), l);
  CHECK_FALSE(v.in_upsilon);
  CHECK_FALSE(v.involution);
  CHECK_THROWS_AS(basic_involution_check(u21(1), l), Error);
  CHECK(involution_suite(make_label(Family::dddotA, 2), 5).ok());
}
