#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dacox/diagrams.hpp"

namespace dacox {

// One formal parameter per 1-connected component. Names are lowercase:
// th01, th02, th03, th0, ph0 for lone affine nodes, t<i> otherwise (smallest finite node).
struct ParamAssignment {
  DoubleAffineLabel label;
  std::vector<std::string> node_symbol;  // per diagram node; "1" when pinned
  std::vector<std::string> symbols;      // free symbols, in node order
  std::vector<std::string> field;        // adjoined square roots, "t1^(1/2)" ...
};

ParamAssignment generic_parameters(const DoubleAffineLabel& label);
int generic_param_count(const DoubleAffineLabel& label);

enum class NonReduced { BCn_Cn, CnV_BCn, Bn_BnV, CnV_Cn, C2_C2V };

std::string to_string(NonReduced s, int n);
// "(BCn,Cn)", "(C_n^vee, BC_n)", "(Cn^,Cn)" ... ; false when the text is not a nonreduced name
bool parse_nonreduced(const std::string& text, NonReduced& out);
AffineType nonreduced_to_reduced(NonReduced s, int n);

struct SpecializationRule {
  std::string system;       // as given
  AffineType reduced;       // R_nm
  DoubleAffineLabel target;
  std::vector<std::pair<std::string, std::string>> identifications;  // lhs = rhs
  int generic_count = 0;
  int final_count = 0;
};

// system is a Kac label or a nonreduced name; n is used when the name carries no rank
SpecializationRule specialize(const std::string& system, int n = 0);
SpecializationRule specialize(NonReduced s, int n);
SpecializationRule specialize(const AffineType& t);
// number of classes after applying the identifications to p
int count_after(const ParamAssignment& p, const std::vector<std::pair<std::string, std::string>>& ids);

struct QuadraticRelation {
  std::string generator;
  std::string symbol;
  std::string text;     // G - G^-1 = s^(1/2) - s^(-1/2)
  bool involutive = false;  // s = 1: G^2 = 1
  bool operator==(const QuadraticRelation&) const = default;
};

QuadraticRelation quadratic_relation(const std::string& generator, const std::string& symbol);
std::vector<QuadraticRelation> quadratic_relations(const DoubleAffineLabel& label);

std::string to_json(const SpecializationRule& r);

}  // namespace dacox
