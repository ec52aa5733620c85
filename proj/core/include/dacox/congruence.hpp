#pragma once

#include <random>
#include <string>
#include <vector>

#include "dacox/common.hpp"
#include "dacox/report.hpp"

namespace dacox {

struct Mat2 {
  Integer a = 1, b = 0, c = 0, d = 1;
  bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
};

Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 operator-(const Mat2& x);
Integer det(const Mat2& m);
Mat2 inverse(const Mat2& m);  // det 1 only
Mat2 mat_pow(const Mat2& m, long e);
Mat2 identity2();
// u12 = [[1,-1],[0,1]], u21 = [[1,0],[1,1]]
Mat2 u12(long k = 1);
Mat2 u21(long k = 1);
// e(r) A e(r) for A with r | c; e(r) itself is never formed
Mat2 e_conj(const Mat2& m, int r);

std::string to_string(const Mat2& m);  // "a,b;c,d"
Mat2 parse_matrix(const std::string& s);

enum class Group { Gamma, Gamma1, Gamma1Prime, Upsilon1, Upsilon1Prime };

// N is the level for Gamma, r for the others (ignored for the primed groups, which live at level 2)
bool member(const Mat2& m, Group g, int N);

// element of Xi_1(r) = Gamma_1(r) x| <e(r)>:  m . e(r)^flip
struct XiElement {
  Mat2 m;
  bool flip = false;
  bool operator==(const XiElement&) const = default;
};
XiElement xi_mul(const XiElement& x, const XiElement& y, int r);

VerificationReport identities_suite(std::uint64_t seed = 5);

struct CosetTable {
  int r = 1;
  std::vector<std::string> reps;  // words in u12, u21, left to right
  std::vector<Mat2> mats;
  int index() const { return static_cast<int>(reps.size()); }
};
// left cosets g Gamma_1(r), keyed by the first column of g mod r
CosetTable coset_table(int r);
bool same_left_coset(const Mat2& g, const Mat2& h, int r);

// letter 1: u12 (a), letter 2: u21^r (b); e = +-1
struct GLetter {
  int g = 1;
  int e = 1;
  bool operator==(const GLetter&) const = default;
};
using GWord = std::vector<GLetter>;

GWord free_reduce(GWord w);
GWord inverse(const GWord& w);
Mat2 evaluate(const GWord& w, int r);
// "A B A' B'"
std::string format_gword(const GWord& w);
GWord parse_gword(const std::string& s);
// word for the generator of ker(braid group -> matrices): (AB)^3, (AB)^2, (AB)^3 for r = 1,2,3
GWord central_word(int r);

// word in u12^{+-1}, u21^{+-r} evaluating to m. Upsilon members follow the |b| descent,
// other members a Euclid reduction of the first column.
GWord decompose(const Mat2& m, int r);
// Gamma_1(2)' members: letters are u21 u12 u21^-1 and u21^2
GWord decompose_prime(const Mat2& m);
Mat2 evaluate_prime(const GWord& w);

// the section u12 -> a, u21^r -> b
struct BraidWord {
  int level = 1;
  GWord letters;
};
BraidWord braid_lift(const GWord& w, int r);
std::string format_braid(const BraidWord& w);  // "a b a' b'"

Mat2 random_gamma1(std::mt19937_64& rng, int r, int max_len = 12);
GWord random_gword(std::mt19937_64& rng, int max_len);
// all Upsilon_1(r) members with entries bounded by bound in absolute value
std::vector<Mat2> upsilon_members(int r, long bound);
std::vector<Mat2> upsilon_prime_members(long bound);

// reduced Burau representation of the three-strand braid group (faithful);
// u1 = sigma1, u2 = sigma2 for level-1 words
bool braid_equal_b3(const GWord& x, const GWord& y);
// every freely reduced level-1 word of length <= max_len mapping to +-I is a power of (AB)^3
VerificationReport kernel_search(int max_len);

}  // namespace dacox
