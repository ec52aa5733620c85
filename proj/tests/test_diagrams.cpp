#include <doctest.h>

#include "dacox/diagrams.hpp"

using namespace dacox;

TEST_CASE("node counts and rank aliases") {
  CHECK(build_diagram(make_label(Family::dddotA, 3)).size() == 6);
  CHECK(build_diagram(make_label(Family::ddotB, 3)).size() == 5);
  CHECK(build_diagram(make_label(Family::dddotE, 8)).size() == 11);
  const auto c1 = make_label(Family::dddotC, 1);
  CHECK(c1.family == Family::dddotA);
  CHECK(c1.alias);
  CHECK(make_label(Family::dddotCstar, 1).family == Family::dddotAstar);
  CHECK_THROWS_AS(make_label(Family::dddotD, 3), Error);
  CHECK_THROWS_AS(make_label("nope", 2), Error);
}

TEST_CASE("triple node: affine nodes pairwise 4-laced") {
  const auto d = build_diagram(make_label(Family::dddotB, 3));
  const auto aff = d.affine_nodes();
  REQUIRE(aff.size() == 3);
  for (int a : aff)
    for (int b : aff)
      if (a != b) CHECK(d.mult[a][b] == 4);
}

TEST_CASE("correspondence with affine types round trips") {
  for (auto f : all_families()) {
    const int hi = max_rank(f);
    for (int n = min_rank(f); n <= min_rank(f) + 1; ++n) {
      if (hi >= 0 && n > hi) continue;
      const auto l = make_label(f, n);
      CAPTURE(to_string(l));
      CHECK(correspondence_inverse(correspondence(l)) == l);
    }
  }
  CHECK(to_string(correspondence(make_label(Family::ddotG2, 2))) == "D4^(3)");
  CHECK(to_string(correspondence(make_label(Family::dddotCstar, 2))) == "A4^(2)");
}

TEST_CASE("dot export is stable and parses back") {
  const auto d = build_diagram(make_label(Family::ddotG2, 2));
  const auto dot = export_dot(d);
  CHECK(dot == export_dot(build_diagram(make_label(Family::ddotG2, 2))));
  const auto back = parse_dot(dot);
  CHECK(back.size() == d.size());
  CHECK(back.mult == d.mult);
  for (auto f : all_families()) {
    const auto e = build_diagram(make_label(f, min_rank(f)));
    const auto r = parse_dot(export_dot(e));
    CHECK(export_dot(r) == export_dot(e));
    CHECK(r.affine_nodes() == e.affine_nodes());
  }
}

TEST_CASE("1-connected components") {
  // simple edges join each affine node to the finite part
  CHECK(one_connected_components(build_diagram(make_label(Family::dddotD, 4))).size() == 1);
  CHECK(one_connected_components(build_diagram(make_label(Family::dddotA, 3))).size() == 1);
  // rank one: only 4-laced edges, every node on its own
  CHECK(one_connected_components(build_diagram(make_label(Family::dddotA, 1))).size() == 4);
}
