#pragma once

#include <string>
#include <vector>

#include "dacox/rootsys.hpp"

namespace dacox {

enum class Family {
  dddotA,
  dddotAstar,
  dddotB,
  dddotC,
  dddotCstar,
  dddotD,
  dddotE,
  dddotF,
  dddotG,
  ddotB,
  ddotC,
  ddotB2,
  ddotF4,
  ddotG2
};

std::string family_name(Family f);
Family parse_family(const std::string& s);
bool is_triple(Family f);  // three affine nodes
const std::vector<Family>& all_families();
int min_rank(Family f);
int max_rank(Family f);  // -1: unbounded

struct DoubleAffineLabel {
  Family family = Family::dddotA;
  int rank = 1;
  bool alias = false;  // dddotC_1 stored as dddotA_1, dddotCstar_1 as dddotAstar_1
  bool operator==(const DoubleAffineLabel& o) const { return family == o.family && rank == o.rank; }
};

// validates the rank and folds the rank-one aliases
DoubleAffineLabel make_label(Family f, int rank);
DoubleAffineLabel make_label(const std::string& family, int rank);
std::string to_string(const DoubleAffineLabel& l);

enum class NodeKind { Finite, Affine };
enum class NodeLabel { T, Theta01, Theta02, Theta03, Theta0, Phi0 };

struct NodeId {
  int index = 0;
  NodeKind kind = NodeKind::Finite;
  NodeLabel label = NodeLabel::T;
  int t = 0;  // i for T(i)
  std::string name() const;
};

struct CoxeterDiagram {
  DoubleAffineLabel label;
  std::vector<NodeId> nodes;
  std::vector<std::vector<int>> mult;  // diagonal unused (0)

  int size() const { return static_cast<int>(nodes.size()); }
  int finite_rank() const;
  int find(NodeLabel l, int t = 0) const;  // -1 when absent
  int find(const std::string& name) const;
  std::vector<int> affine_nodes() const;
};

CoxeterDiagram build_diagram(const DoubleAffineLabel& l);

// Components after erasing every edge of multiplicity >= 2.
std::vector<std::vector<int>> one_connected_components(const CoxeterDiagram& d);

AffineType correspondence(const DoubleAffineLabel& l);
DoubleAffineLabel correspondence_inverse(const AffineType& t);
// Affine type whose Dynkin diagram the affine nodes copy (X_n^(1) for the triple-node families).
AffineType diagram_source_type(const DoubleAffineLabel& l);

struct BraidEntry {
  int i, j, m;
};
std::vector<BraidEntry> braid_relation_list(const CoxeterDiagram& d);

std::string export_dot(const CoxeterDiagram& d);
CoxeterDiagram parse_dot(const std::string& text);
std::string to_json(const CoxeterDiagram& d);

// Coxeter multiplicity of the affine Dynkin diagram (a_ij a_ji, capped at 4)
std::vector<std::vector<int>> affine_coxeter_matrix(const RootSystemData& rs);

}  // namespace dacox
