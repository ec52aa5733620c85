#pragma once

#include <map>
#include <string>
#include <vector>

#include "dacox/common.hpp"

namespace dacox {

// Kac label X_N^(r)
struct AffineType {
  char letter = 'A';
  int index = 1;
  int twist = 1;
  bool operator==(const AffineType&) const = default;
};

std::string to_string(const AffineType& t);
// accepts "C3^(1)", "C_3^(1)", "A4^(2)"; D3^(2) is folded onto A3^(2)
AffineType parse_affine_type(const std::string& s);
void validate(const AffineType& t);

// Finite reduced root system with a fixed normalization of the form.
struct FiniteRootData {
  char letter = 'A';
  int n = 0;
  std::vector<RatVec> gram;                // (alpha_i, alpha_j)
  std::vector<std::vector<int>> cartan;    // a_ij = 2(alpha_i,alpha_j)/(alpha_i,alpha_i)
  std::vector<IntVec> positive;            // simple-root coordinates, by height
  std::map<IntVec, int> index;             // positive root -> position

  Rational pair(const IntVec& x, const IntVec& y) const;
  Rational pair(const RatVec& x, const RatVec& y) const;
  Rational norm(const IntVec& x) const { return pair(x, x); }
  bool is_root(const IntVec& v) const;
  bool is_positive_root(const IntVec& v) const { return index.count(v) > 0; }
  // <x, alpha_i^vee>
  std::int64_t cartan_pairing(const IntVec& x, int i) const;
  // coordinates of beta^vee in the basis alpha_i^vee
  IntVec coroot_coords(const IntVec& beta) const;
  IntVec highest_root() const;
  IntVec short_dominant_root() const;
  bool simply_laced() const;
  std::string name() const;
};

// letter in ABCDEFG; scale multiplies the form whose long roots have norm 2
FiniteRootData build_finite(char letter, int n, const Rational& scale = 1);

// Vector of H*_aff over (alpha_1..alpha_n, delta, Lambda_0)
struct RootVector {
  RatVec fin;
  Rational delta = 0;
  Rational lambda0 = 0;
  bool operator==(const RootVector&) const = default;
};

struct AffineCartanData {
  AffineType type;
  int n = 0;
  std::vector<std::vector<int>> a;  // (n+1)x(n+1), index 0 is alpha_0
  std::vector<Rational> marks, comarks, d, e;
  int a0 = 1;
  int r = 1;
};

struct RootSystemData {
  AffineCartanData cartan;
  FiniteRootData fin;
  IntVec theta;        // a_1 alpha_1 + ... + a_n alpha_n
  IntVec phi;          // highest root
  IntVec theta_prime;  // phi - theta, empty when theta = phi
  IntVec phi_prime;    // -s_theta(phi), empty when theta = phi
  int i_theta = 1;
  int i_phi = 1;
  int ell0 = 1;
  std::vector<RatVec> A;  // M-basis A_i = e_i alpha_i

  int rank() const { return cartan.n; }
  bool theta_is_phi() const { return theta == phi; }
  std::string label() const { return to_string(cartan.type); }

  RootVector alpha(int i) const;  // i = 0..n
  RootVector delta() const;
  RootVector lambda0() const;
  RootVector finite_vector(const RatVec& v) const;
  Rational bilinear(const RootVector& x, const RootVector& y) const;
  RootVector coroot(const RootVector& x) const;
  Rational max_root_norm() const;

  // nu-image of a finite coroot-lattice vector given in the alpha_i^vee basis
  RatVec nu(const IntVec& beta) const;
  // inverse of nu; throws when the vector is not in nu(Q^vee)
  IntVec nu_inverse(const RatVec& v) const;
  IntVec theta_vee() const { return fin.coroot_coords(theta); }
  IntVec phi_vee() const { return fin.coroot_coords(phi); }

  bool M_is_nu_coroot_lattice() const;
  bool M_is_root_lattice() const;

  std::string to_json() const;
};

RootSystemData build_root_system(const AffineType& t);

// The (n+1) x (n+1) Gram matrix of alpha_0..alpha_n.
std::vector<RatVec> affine_gram(const RootSystemData& rs);

}  // namespace dacox
