#include "dacox/diagrams.hpp"

#include <algorithm>
#include <cctype>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>

#include <json.hpp>

namespace dacox {

namespace {

const std::vector<std::pair<Family, const char*>>& family_table() {
  static const std::vector<std::pair<Family, const char*>> t = {
      {Family::dddotA, "dddotA"}, {Family::dddotAstar, "dddotAstar"}, {Family::dddotB, "dddotB"},
      {Family::dddotC, "dddotC"}, {Family::dddotCstar, "dddotCstar"}, {Family::dddotD, "dddotD"},
      {Family::dddotE, "dddotE"}, {Family::dddotF, "dddotF"},         {Family::dddotG, "dddotG"},
      {Family::ddotB, "ddotB"},   {Family::ddotC, "ddotC"},           {Family::ddotB2, "ddotB2"},
      {Family::ddotF4, "ddotF4"}, {Family::ddotG2, "ddotG2"}};
  return t;
}

}  // namespace

std::string family_name(Family f) {
  for (auto& [g, s] : family_table())
    if (g == f) return s;
  return "?";
}

Family parse_family(const std::string& s) {
  for (auto& [g, n] : family_table())
    if (s == n) return g;
  throw Error("unknown family '" + s + "'");
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> v = [] {
    std::vector<Family> r;
    for (auto& [g, s] : family_table()) r.push_back(g);
    return r;
  }();
  return v;
}

bool is_triple(Family f) { return f <= Family::dddotG; }

int min_rank(Family f) {
  switch (f) {
    case Family::dddotA: return 1;
    case Family::dddotAstar: return 1;
    case Family::dddotB: return 3;
    case Family::dddotC: return 2;
    case Family::dddotCstar: return 2;
    case Family::dddotD: return 4;
    case Family::dddotE: return 6;
    case Family::dddotF: return 4;
    case Family::dddotG: return 2;
    case Family::ddotB: return 3;
    case Family::ddotC: return 3;
    case Family::ddotB2: return 2;
    case Family::ddotF4: return 4;
    case Family::ddotG2: return 2;
  }
  return 1;
}

int max_rank(Family f) {
  switch (f) {
    case Family::dddotAstar: return 1;
    case Family::dddotE: return 8;
    case Family::dddotF: return 4;
    case Family::dddotG: return 2;
    case Family::ddotB2: return 2;
    case Family::ddotF4: return 4;
    case Family::ddotG2: return 2;
    default: return -1;
  }
}

DoubleAffineLabel make_label(Family f, int rank) {
  if (f == Family::dddotC && rank == 1) return DoubleAffineLabel{Family::dddotA, 1, true};
  if (f == Family::dddotCstar && rank == 1) return DoubleAffineLabel{Family::dddotAstar, 1, true};
  int lo = min_rank(f), hi = max_rank(f);
  require(rank >= lo && (hi < 0 || rank <= hi),
          "invalid rank " + std::to_string(rank) + " for family " + family_name(f));
  return DoubleAffineLabel{f, rank, false};
}

DoubleAffineLabel make_label(const std::string& family, int rank) { return make_label(parse_family(family), rank); }

std::string to_string(const DoubleAffineLabel& l) { return family_name(l.family) + "_" + std::to_string(l.rank); }

std::string NodeId::name() const {
  switch (label) {
    case NodeLabel::T: return "T" + std::to_string(t);
    case NodeLabel::Theta01: return "Theta01";
    case NodeLabel::Theta02: return "Theta02";
    case NodeLabel::Theta03: return "Theta03";
    case NodeLabel::Theta0: return "Theta0";
    case NodeLabel::Phi0: return "Phi0";
  }
  return "?";
}

int CoxeterDiagram::finite_rank() const {
  int k = 0;
  for (const auto& v : nodes)
    if (v.kind == NodeKind::Finite) ++k;
  return k;
}

int CoxeterDiagram::find(NodeLabel l, int t) const {
  for (const auto& v : nodes)
    if (v.label == l && (l != NodeLabel::T || v.t == t)) return v.index;
  return -1;
}

int CoxeterDiagram::find(const std::string& name) const {
  for (const auto& v : nodes)
    if (v.name() == name) return v.index;
  return -1;
}

std::vector<int> CoxeterDiagram::affine_nodes() const {
  std::vector<int> r;
  for (const auto& v : nodes)
    if (v.kind == NodeKind::Affine) r.push_back(v.index);
  return r;
}

AffineType correspondence(const DoubleAffineLabel& l) {
  const int n = l.rank;
  switch (l.family) {
    case Family::dddotA: return {'A', n, 1};
    case Family::dddotAstar: return {'A', 2, 2};
    case Family::dddotB: return {'B', n, 1};
    case Family::dddotC: return {'C', n, 1};
    case Family::dddotCstar: return {'A', 2 * n, 2};
    case Family::dddotD: return {'D', n, 1};
    case Family::dddotE: return {'E', n, 1};
    case Family::dddotF: return {'F', 4, 1};
    case Family::dddotG: return {'G', 2, 1};
    case Family::ddotB: return {'D', n + 1, 2};
    case Family::ddotC: return {'A', 2 * n - 1, 2};
    case Family::ddotB2: return {'A', 3, 2};
    case Family::ddotF4: return {'E', 6, 2};
    case Family::ddotG2: return {'D', 4, 3};
  }
  throw Error("bad label");
}

DoubleAffineLabel correspondence_inverse(const AffineType& t0) {
  AffineType t = t0;
  if (t.twist == 2 && t.letter == 'D' && t.index == 3) t = {'A', 3, 2};
  validate(t);
  if (t.twist == 1) {
    switch (t.letter) {
      case 'A': return make_label(Family::dddotA, t.index);
      case 'B': return make_label(Family::dddotB, t.index);
      case 'C': return make_label(Family::dddotC, t.index);
      case 'D': return make_label(Family::dddotD, t.index);
      case 'E': return make_label(Family::dddotE, t.index);
      case 'F': return make_label(Family::dddotF, 4);
      case 'G': return make_label(Family::dddotG, 2);
      default: break;
    }
  }
  if (t.twist == 3) return make_label(Family::ddotG2, 2);
  if (t.letter == 'E') return make_label(Family::ddotF4, 4);
  if (t.letter == 'D') return make_label(Family::ddotB, t.index - 1);
  if (t.index == 2) return make_label(Family::dddotAstar, 1);
  if (t.index % 2 == 0) return make_label(Family::dddotCstar, t.index / 2);
  if (t.index == 3) return make_label(Family::ddotB2, 2);
  return make_label(Family::ddotC, (t.index + 1) / 2);
}

AffineType diagram_source_type(const DoubleAffineLabel& l) {
  if (l.family == Family::dddotAstar) return {'A', 1, 1};
  if (l.family == Family::dddotCstar) return {'C', l.rank, 1};
  return correspondence(l);
}

std::vector<std::vector<int>> affine_coxeter_matrix(const RootSystemData& rs) {
  const int n = rs.rank();
  std::vector<std::vector<int>> m(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (i != j) m[i][j] = std::min(4, rs.cartan.a[i][j] * rs.cartan.a[j][i]);
  return m;
}

CoxeterDiagram build_diagram(const DoubleAffineLabel& l0) {
  DoubleAffineLabel l = make_label(l0.family, l0.rank);
  l.alias = l0.alias || l.alias;
  CoxeterDiagram d;
  d.label = l;
  RootSystemData rs = build_root_system(diagram_source_type(l));
  const int n = rs.rank();
  auto A = affine_coxeter_matrix(rs);
  for (int i = 1; i <= n; ++i) d.nodes.push_back(NodeId{i - 1, NodeKind::Finite, NodeLabel::T, i});
  std::vector<NodeLabel> aff;
  if (is_triple(l.family))
    aff = {NodeLabel::Theta01, NodeLabel::Theta02, NodeLabel::Theta03};
  else
    aff = {NodeLabel::Theta0, NodeLabel::Phi0};
  for (auto a : aff) d.nodes.push_back(NodeId{static_cast<int>(d.nodes.size()), NodeKind::Affine, a, 0});
  const int N = d.size();
  d.mult.assign(N, std::vector<int>(N, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d.mult[i][j] = A[i + 1][j + 1];
  auto link = [&](int u, int v, int m) { d.mult[u][v] = d.mult[v][u] = m; };
  if (is_triple(l.family)) {
    for (int k = 0; k < 3; ++k) {
      for (int j = 0; j < n; ++j) link(n + k, j, A[0][j + 1]);
      for (int k2 = k + 1; k2 < 3; ++k2) link(n + k, n + k2, 4);
    }
  } else {
    const auto& F = rs.fin;
    for (int j = 0; j < n; ++j) {
      link(n, j, A[0][j + 1]);
      IntVec e(n, 0);
      e[j] = 1;
      Rational p = F.pair(rs.phi, e);
      Rational m = 4 * p * p / (F.norm(rs.phi) * F.norm(e));
      link(n + 1, j, static_cast<int>(to_i64(m)));
    }
    link(n, n + 1, rs.cartan.r);
  }
  return d;
}

std::vector<std::vector<int>> one_connected_components(const CoxeterDiagram& d) {
  const int N = d.size();
  std::vector<int> parent(N);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      if (d.mult[i][j] == 1) parent[root(i)] = root(j);
  std::map<int, std::vector<int>> comp;
  for (int i = 0; i < N; ++i) comp[root(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [r, v] : comp) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BraidEntry> braid_relation_list(const CoxeterDiagram& d) {
  std::vector<BraidEntry> out;
  for (int i = 0; i < d.size(); ++i)
    for (int j = i + 1; j < d.size(); ++j) out.push_back({i, j, d.mult[i][j]});
  return out;
}

std::string export_dot(const CoxeterDiagram& d) {
  std::ostringstream os;
  os << "graph \"" << to_string(d.label) << "\" {\n";
  for (const auto& v : d.nodes) {
    os << "  n" << v.index << " [label=\"" << v.name() << "\"";
    if (v.kind == NodeKind::Affine) os << ", style=filled";
    os << "];\n";
  }
  for (const auto& e : braid_relation_list(d))
    if (e.m > 0) os << "  n" << e.i << " -- n" << e.j << " [label=\"" << e.m << "\"];\n";
  os << "}\n";
  return os.str();
}

CoxeterDiagram parse_dot(const std::string& text) {
  static const std::regex head(R"re(graph\s+"([A-Za-z0-9]+)_(\d+)")re");
  static const std::regex node(R"re(^\s*n(\d+)\s*\[label="([A-Za-z0-9]+)"(,\s*style=filled)?\];)re");
  static const std::regex edge(R"re(^\s*n(\d+)\s*--\s*n(\d+)\s*\[label="(\d+)"\];)re");
  CoxeterDiagram d;
  std::smatch m;
  require(std::regex_search(text, m, head), "dot: missing graph header");
  d.label = make_label(m[1].str(), std::stoi(m[2]));
  std::istringstream is(text);
  std::string line;
  std::vector<std::array<int, 3>> edges;
  while (std::getline(is, line)) {
    if (std::regex_search(line, m, node)) {
      NodeId v;
      v.index = std::stoi(m[1]);
      v.kind = m[3].matched ? NodeKind::Affine : NodeKind::Finite;
      std::string nm = m[2];
      if (nm[0] == 'T' && nm.size() > 1 && std::isdigit(static_cast<unsigned char>(nm[1]))) {
        v.label = NodeLabel::T;
        v.t = std::stoi(nm.substr(1));
      } else if (nm == "Theta01") {
        v.label = NodeLabel::Theta01;
      } else if (nm == "Theta02") {
        v.label = NodeLabel::Theta02;
      } else if (nm == "Theta03") {
        v.label = NodeLabel::Theta03;
      } else if (nm == "Theta0") {
        v.label = NodeLabel::Theta0;
      } else if (nm == "Phi0") {
        v.label = NodeLabel::Phi0;
      } else {
        throw Error("dot: unknown node label " + nm);
      }
      require(v.index == d.size(), "dot: nodes out of order");
      d.nodes.push_back(v);
    } else if (std::regex_search(line, m, edge)) {
      edges.push_back({std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3])});
    }
  }
  d.mult.assign(d.size(), std::vector<int>(d.size(), 0));
  for (auto [i, j, k] : edges) {
    require(i < d.size() && j < d.size(), "dot: edge to unknown node");
    d.mult[i][j] = d.mult[j][i] = k;
  }
  return d;
}

std::string to_json(const CoxeterDiagram& d) {
  nlohmann::ordered_json j;
  j["family"] = family_name(d.label.family);
  j["rank"] = d.label.rank;
  auto nodes = nlohmann::ordered_json::array();
  for (const auto& v : d.nodes) {
    nlohmann::ordered_json e;
    e["index"] = v.index;
    e["kind"] = v.kind == NodeKind::Affine ? "affine" : "finite";
    e["label"] = v.name();
    nodes.push_back(e);
  }
  j["nodes"] = nodes;
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : braid_relation_list(d))
    if (e.m > 0) edges.push_back({e.i, e.j, e.m});
  j["edges"] = edges;
  return j.dump(2);
}

}  // namespace dacox
