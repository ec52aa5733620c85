#pragma once

#include <random>
#include <vector>

#include "dacox/common.hpp"
#include "dacox/report.hpp"
#include "dacox/rootsys.hpp"

namespace dacox {

// Square int64 matrix, row-major.
struct IntMat {
  int n = 0;
  std::vector<std::int64_t> v;

  IntMat() = default;
  explicit IntMat(int n_) : n(n_), v(static_cast<std::size_t>(n_) * n_, 0) {}
  static IntMat identity(int n);
  std::int64_t& operator()(int i, int j) { return v[static_cast<std::size_t>(i) * n + j]; }
  std::int64_t operator()(int i, int j) const { return v[static_cast<std::size_t>(i) * n + j]; }
  bool operator==(const IntMat&) const = default;
  bool operator<(const IntMat& o) const { return v < o.v; }
};

IntMat operator*(const IntMat& a, const IntMat& b);
IntVec operator*(const IntMat& a, const IntVec& x);
RatVec operator*(const IntMat& a, const RatVec& x);

// w(alpha_j) = sum_i m(i,j) alpha_i; the inverse matrix is carried along.
struct WeylElement {
  IntMat m;
  IntMat inv;
  bool operator==(const WeylElement& o) const { return m == o.m; }
  bool operator<(const WeylElement& o) const { return m < o.m; }
};

using WeylWord = std::vector<int>;  // letters 1..n

class FiniteWeyl {
 public:
  explicit FiniteWeyl(FiniteRootData data);

  const FiniteRootData& data() const { return d_; }
  int rank() const { return d_.n; }

  WeylElement identity() const;
  WeylElement s(int i) const;  // 1-based
  WeylElement reflect(const IntVec& root) const;
  WeylElement mul(const WeylElement& a, const WeylElement& b) const;
  WeylElement inv(const WeylElement& a) const { return WeylElement{a.inv, a.m}; }
  WeylElement from_word(const WeylWord& w) const;
  IntVec act(const WeylElement& w, const IntVec& x) const { return w.m * x; }
  RatVec act(const WeylElement& w, const RatVec& x) const { return w.m * x; }

  static bool is_negative(const IntVec& root);
  std::vector<int> inversion_set(const WeylElement& w) const;  // positions in data().positive
  std::vector<int> inversion_set_from_word(const WeylWord& word) const;
  int length(const WeylElement& w) const;
  bool is_right_descent(const WeylElement& w, int i) const;
  bool is_left_descent(const WeylElement& w, int i) const;
  WeylWord reduced_word(const WeylElement& w) const;  // lexicographically least
  WeylElement longest() const;
  bool is_minus_identity(const WeylElement& w) const;
  int order(const WeylElement& w) const;

  std::vector<WeylElement> enumerate(std::size_t limit = 5000000) const;
  // longest element of the subgroup generated by reflections fixing every listed vector
  WeylElement longest_in_stabilizer(const std::vector<IntVec>& fixed) const;
  // same, by filtering a full enumeration of the group (oracle for small ranks)
  WeylElement longest_in_stabilizer_by_enumeration(const std::vector<IntVec>& fixed) const;

  // l(uv) = l(u) + l(v); cross-checked against the inversion-set criterion
  bool length_additive(const WeylElement& u, const WeylElement& v) const;

  WeylElement random(std::mt19937_64& rng, int max_len) const;

 private:
  FiniteRootData d_;
  std::vector<WeylElement> gens_;
};

struct XYData {
  WeylElement x, y, v0, w0;
};

// x = s_theta v0 w0, y = s_phi v0 w0 with v0 longest in Stab(theta) & Stab(phi)
XYData compute_xy(const FiniteWeyl& W, const IntVec& theta, const IntVec& phi);

// Length lemmas and the six properties of x, y for a non-simply-laced finite system.
VerificationReport xy_lemma_suite(char letter, int n, std::uint64_t seed = 7);

}  // namespace dacox
