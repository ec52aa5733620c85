#include <doctest.h>

#include "dacox/heckeparams.hpp"

using namespace dacox;

TEST_CASE("generic parameter counts") {
  struct Row {
    Family f;
    int n, count;
  };
  const Row rows[] = {{Family::dddotA, 1, 4},  {Family::dddotAstar, 1, 3}, {Family::dddotA, 2, 1}, {Family::dddotA, 5, 1},
                      {Family::dddotB, 3, 2},  {Family::dddotC, 2, 5},     {Family::dddotCstar, 2, 4},
                      {Family::dddotD, 4, 1},  {Family::dddotE, 7, 1},     {Family::dddotF, 4, 2},  {Family::dddotG, 2, 2},
                      {Family::ddotB, 3, 3},   {Family::ddotC, 4, 3},      {Family::ddotB2, 2, 4},  {Family::ddotF4, 4, 2},
                      {Family::ddotG2, 2, 2}};
  for (const auto& r : rows) {
    CAPTURE(to_string(make_label(r.f, r.n)));
    CHECK(generic_param_count(make_label(r.f, r.n)) == r.count);
  }
}

TEST_CASE("specialization rules") {
  CHECK(specialize("A1^(1)").final_count == 1);
  CHECK(specialize("C3^(1)").final_count == 3);
  CHECK(specialize("(Cn^,Cn)", 2).final_count == 5);
  CHECK(specialize("(C_n^vee, BC_n)", 3).final_count == 4);
  CHECK(specialize("(C2,C2^)").final_count == 4);
  CHECK(specialize("(B3,B3^)").final_count == 3);
  CHECK(specialize("A5^(2)").final_count == 2);
  CHECK(specialize("D4^(2)").final_count == 2);
  CHECK_THROWS_AS(specialize("(Bn,Bn^)", 2), Error);
}

TEST_CASE("quadratic relations") {
  const auto q = quadratic_relation("T1", "t1");
  CHECK_FALSE(q.involutive);
  CHECK(q.text == "T1 - T1^-1 = t1^(1/2) - t1^(-1/2)");
  bool pinned = false;
  for (const auto& r : quadratic_relations(make_label(Family::dddotCstar, 2)))
    if (r.generator == "Theta02") pinned = r.involutive;
  CHECK(pinned);
}
