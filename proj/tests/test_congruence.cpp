#include <doctest.h>

#include "dacox/congruence.hpp"

using namespace dacox;

TEST_CASE("matrix identities") {
  CHECK(identities_suite().ok());
  CHECK(mat_pow(u12() * u21(), 3) == -identity2());
  CHECK(mat_pow(u12() * u21(2), 2) == -identity2());
  CHECK(mat_pow(u12() * u21(3), 3) == identity2());
}

TEST_CASE("membership") {
  CHECK(member(u21(2), Group::Gamma1, 2));
  CHECK_FALSE(member(u21(), Group::Gamma1, 2));
  CHECK(member(Mat2{1, 1, -2, -1}, Group::Upsilon1, 2));
  CHECK_FALSE(member(Mat2{1, 0, 4, 1}, Group::Upsilon1, 2));
  CHECK(member(Mat2{0, 1, -1, 0}, Group::Gamma1Prime, 2));
}

TEST_CASE("cosets") {
  CHECK(coset_table(1).index() == 1);
  CHECK(coset_table(2).index() == 3);
  CHECK(coset_table(3).index() == 8);
  CHECK(coset_table(5).index() == 24);
}

TEST_CASE("decomposition") {
  CHECK(decompose(identity2(), 1).empty());
  CHECK(format_gword(decompose(parse_matrix("0,-1;1,0"), 1)) == "A B A");
  CHECK(format_gword(decompose(u21(2), 2)) == "B");
  std::mt19937_64 rng(1);
  for (int r = 1; r <= 3; ++r)
    for (int t = 0; t < 100; ++t) {
      const Mat2 m = random_gamma1(rng, r);
      CHECK(evaluate(decompose(m, r), r) == m);
    }
  for (const auto& m : upsilon_prime_members(10)) CHECK(evaluate_prime(decompose_prime(m)) == m);
  CHECK_THROWS_AS(decompose(u21(), 2), Error);
}

TEST_CASE("word syntax") {
  const auto w = parse_gword("A B' A A");
  CHECK(format_gword(w) == "A B' A A");
  CHECK(free_reduce(parse_gword("A B B' A'")).empty());
  CHECK(format_braid(braid_lift(w, 2)) == "a b' a a");
}

TEST_CASE("braid kernel is generated by the central word") {
  CHECK(braid_equal_b3(parse_gword("A B A"), parse_gword("B A B")));
  CHECK_FALSE(braid_equal_b3(parse_gword("A B"), parse_gword("B A")));
  CHECK(kernel_search(8).ok());
}
