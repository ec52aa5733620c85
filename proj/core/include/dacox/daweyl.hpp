#pragma once

#include <random>
#include <string>
#include <vector>

#include "dacox/report.hpp"
#include "dacox/rootsys.hpp"
#include "dacox/weyl.hpp"

namespace dacox {

// w . lambda_mu . tau_beta . tau_delta^k
// mu in the basis A_i of M, beta in the basis alpha_i^vee of the finite coroot lattice.
struct DaweylElement {
  WeylElement w;
  IntVec mu;
  IntVec beta;
  Rational k;
  bool operator==(const DaweylElement& o) const {
    return w == o.w && mu == o.mu && beta == o.beta && k == o.k;
  }
};

// point of H*_aff as (alpha-coordinates, delta, Lambda_0)
struct AffinePoint {
  RatVec fin;
  Rational delta = 0;
  Rational lambda0 = 0;
  bool operator==(const AffinePoint&) const = default;
};

using RatMat = std::vector<RatVec>;

// element of Q^vee = finite coroots + Z delta (k may be half-integral in the c-extension)
struct AffCoroot {
  IntVec beta;
  Rational k;
};

class DoubleAffineWeyl {
 public:
  explicit DoubleAffineWeyl(RootSystemData rs, bool half_delta = false);

  const RootSystemData& data() const { return rs_; }
  const FiniteWeyl& weyl() const { return W_; }
  int rank() const { return rs_.rank(); }
  bool half_delta() const { return half_; }

  DaweylElement identity() const;
  DaweylElement s(int i) const;  // 0..n
  DaweylElement lambda(const IntVec& mu) const;
  DaweylElement tau(const IntVec& beta, const Rational& k = 0) const;
  DaweylElement tau(const AffCoroot& b) const { return tau(b.beta, b.k); }
  DaweylElement tau_delta(const Rational& k = 1) const;
  DaweylElement finite(const WeylElement& w) const;
  DaweylElement lambda_gen(int i) const;  // lambda_{A_i}, 1-based
  DaweylElement tau_gen(int i) const;     // tau_{alpha_i^vee}, 1-based

  DaweylElement mul(const DaweylElement& a, const DaweylElement& b) const;
  DaweylElement inv(const DaweylElement& a) const;
  DaweylElement pow(const DaweylElement& a, long e) const;
  DaweylElement product(const std::vector<DaweylElement>& seq) const;

  // (beta, mu) through nu
  Rational pairing(const IntVec& beta, const IntVec& mu) const;
  RatVec mu_to_alpha(const IntVec& mu) const;
  IntVec alpha_to_mu(const RatVec& v) const;  // throws outside M
  IntVec weyl_on_mu(const WeylElement& w, const IntVec& mu) const;
  IntVec weyl_on_beta(const WeylElement& w, const IntVec& beta) const;
  AffCoroot reflect_coroot(int i, const AffCoroot& b) const;  // s_i on Q^vee, i = 0..n
  AffCoroot alpha0_vee() const;                                // delta - theta under nu
  Rational finite_pairing_coroot_root(const IntVec& beta, int i) const;  // (nu(beta), alpha_i)

  // action on H*_aff
  AffinePoint act(const DaweylElement& g, const AffinePoint& p) const;
  RatMat reflection_matrix(int i) const;                 // s_i, i = 0..n
  RatMat lambda_matrix_by_reflections(int i) const;      // lambda_{A_i}
  RatMat lambda_matrix_by_formula(const IntVec& mu) const;
  RatMat weyl_matrix(const WeylElement& w) const;

  DaweylElement random(std::mt19937_64& rng, int coord_bound = 3) const;
  std::string to_string(const DaweylElement& g) const;

  // orbit data used for the lambda generators
  struct OrbitSum {
    std::vector<std::pair<WeylWord, int>> terms;  // w, sign: sum sign * w(seed)
  };
  // express every unit vector of the target lattice as a signed sum of at most three orbit elements
  std::vector<OrbitSum> orbit_sums(const RatVec& seed, bool coroot_basis) const;

 private:
  RootSystemData rs_;
  FiniteWeyl W_;
  bool half_;
  std::vector<Rational> e_, d_;  // 1-based copies sized n
  std::vector<std::vector<Rational>> P_;  // pairing matrix d_i e_j (alpha_i,alpha_j)
  std::vector<RatMat> lam_, lam_inv_;
};

std::string to_string(const AffinePoint& p);

VerificationReport verify_bernstein_relations(const AffineType& t);
VerificationReport a2n2_comparison(int n);
VerificationReport daweyl_core_suite(const AffineType& t, std::uint64_t seed = 11, int pairs = 1000);
bool center_contains_tau_delta(const DoubleAffineWeyl& G);

}  // namespace dacox
