#pragma once

#include <map>
#include <string>
#include <vector>

#include "dacox/daweyl.hpp"
#include "dacox/diagrams.hpp"
#include "dacox/report.hpp"

namespace dacox {

// a letter is a diagram node index with exponent +1 or -1
struct Letter {
  int gen = 0;
  int exp = 1;
  bool operator==(const Letter&) const = default;
};
using Word = std::vector<Letter>;

Word inverse(const Word& w);
Word concat(std::initializer_list<Word> parts);
Word power(const Word& w, int e);

struct Relation {
  std::string name;
  Word lhs, rhs;
};

struct Presentation {
  CoxeterDiagram diagram;
  bool c_variant = false;  // dddotC*: Theta02^2 = 1 instead of Theta02^2 = C
  int ell0 = 0;            // multiplicity between the affine node(s) and T(i_theta)
  int i_theta = 0, i_phi = 0;
  Word central;                          // C
  std::map<std::string, Word> macros;    // Theta, Phi, ThetaP, PhiP, Psi, PsiRev, w0 (finite letters only)
  std::vector<Relation> relations;

  int gen(NodeLabel l, int t = 0) const;
  Word letter(NodeLabel l, int t = 0, int e = 1) const { return Word{{gen(l, t), e}}; }
  Word T(int i, int e = 1) const { return letter(NodeLabel::T, i, e); }
  const Word& macro(const std::string& name) const;
};

Presentation build_presentation(const DoubleAffineLabel& label, bool c_variant = false);

// "T1 Theta02' Theta" with ' for inverses; macro names expand
Word parse_word(const Presentation& p, const std::string& text);
std::string format_word(const Presentation& p, const Word& w);

// the double affine Weyl group a presentation is compared with, and the images of its generators
struct GeneratorModel {
  DoubleAffineWeyl group;
  std::vector<DaweylElement> images;  // indexed by diagram node
  DaweylElement eval(const Word& w) const;
};

AffineType model_type(const DoubleAffineLabel& label);
GeneratorModel phi_dictionary(const Presentation& p);

// Weyl-level elements named in the twisted presentations
std::map<std::string, WeylElement> distinguished_elements(const DoubleAffineLabel& label);
VerificationReport distinguished_suite(const DoubleAffineLabel& label);

VerificationReport verify_presentation(const DoubleAffineLabel& label, bool c_variant = false);

}  // namespace dacox
