#pragma once

#include <string>
#include <vector>

#include "dacox/congruence.hpp"
#include "dacox/presentation.hpp"

namespace dacox {

// generator -> word map between presentations; anti maps reverse products
struct EndoMap {
  std::string name;
  DoubleAffineLabel source, target;
  std::vector<Word> images;  // indexed by source node
  bool anti = false;
};

// the labelled diagram e maps to (ddotB_n <-> ddotC_n, otherwise the label itself)
DoubleAffineLabel e_partner(const DoubleAffineLabel& label);
// r = 1, 2, 3; the starred families report 2 (their group is the primed level-2 subgroup)
int level_of(const DoubleAffineLabel& label);
bool is_starred(const DoubleAffineLabel& label);

EndoMap identity_map(const DoubleAffineLabel& label);
EndoMap a_map(const DoubleAffineLabel& label);
EndoMap b_map(const DoubleAffineLabel& label);
EndoMap a_inverse_map(const DoubleAffineLabel& label);  // free-group inverse
EndoMap b_inverse_map(const DoubleAffineLabel& label);
EndoMap e_map(const DoubleAffineLabel& label);          // label -> e_partner(label), anti

Word free_reduce(const Word& w);
Word apply(const EndoMap& m, const Word& w);
// m1 o m2, word level, freely reduced
EndoMap compose(const EndoMap& m1, const EndoMap& m2);
// u-letters to maps: A -> a, B -> b; for the starred families A -> b a b^-1, B -> b^2
EndoMap letter_map(const DoubleAffineLabel& label, const GLetter& l);
EndoMap evaluate_braid(const GWord& w, const DoubleAffineLabel& label);

// Weyl-level shadow of a map: generator images evaluated in the target model
struct WeylEndo {
  DoubleAffineLabel source, target;
  bool c_variant = false;
  bool anti = false;
  std::vector<DaweylElement> images;
};

class ActionContext {
 public:
  explicit ActionContext(const DoubleAffineLabel& label, bool c_variant = false);
  const DoubleAffineLabel& label() const { return label_; }
  bool c_variant() const { return cv_; }
  const Presentation& presentation(const DoubleAffineLabel& l) const;
  const GeneratorModel& model(const DoubleAffineLabel& l) const;

  WeylEndo identity(const DoubleAffineLabel& l) const;
  DaweylElement eval(const WeylEndo& f, const Word& w) const;
  // f o m
  WeylEndo then(const WeylEndo& f, const EndoMap& m) const;
  // m evaluated directly in its target model
  WeylEndo shadow(const EndoMap& m) const;
  // f o (letters of w, leftmost outermost)
  WeylEndo then_braid(const WeylEndo& f, const GWord& w, const DoubleAffineLabel& on) const;
  // names of source relations whose images disagree
  std::vector<std::string> broken_relations(const WeylEndo& f) const;
  bool equal(const WeylEndo& f, const WeylEndo& g, std::string* witness = nullptr) const;
  // the Weyl map g -> x g x^-1 on label l
  WeylEndo conjugation(const DoubleAffineLabel& l, const DaweylElement& x) const;

 private:
  DoubleAffineLabel label_, partner_;
  bool cv_;
  Presentation p_, q_;
  GeneratorModel m_, n_;
};

VerificationReport is_automorphism(const EndoMap& m, bool c_variant = false);
VerificationReport automorphism_suite(const DoubleAffineLabel& label, bool c_variant = false);
VerificationReport central_element_action(const DoubleAffineLabel& label, bool c_variant = false);
VerificationReport cstar_restriction_check(int n);
VerificationReport homomorphism_check(const DoubleAffineLabel& label, int pairs = 50, std::uint64_t seed = 17,
                                      int max_len = 3);

struct InvolutionVerdict {
  bool in_upsilon = false;
  bool involution = false;
  std::string word;  // braid lift
};
// A in Gamma_1(r) for the label's level, Gamma_1(2)' for the starred families
InvolutionVerdict basic_involution_check(const Mat2& A, const DoubleAffineLabel& label, bool c_variant = false);
VerificationReport involution_suite(const DoubleAffineLabel& label, int samples = 20, long bound = 30,
                                    std::uint64_t seed = 23);

}  // namespace dacox
