#include "dacox/heckeparams.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <regex>

#include <json.hpp>

namespace dacox {

namespace {

std::string lower_name(const NodeId& v) {
  switch (v.label) {
    case NodeLabel::Theta01: return "th01";
    case NodeLabel::Theta02: return "th02";
    case NodeLabel::Theta03: return "th03";
    case NodeLabel::Theta0: return "th0";
    case NodeLabel::Phi0: return "ph0";
    case NodeLabel::T: break;
  }
  return "t" + std::to_string(v.t);
}

struct Dsu {
  std::map<std::string, std::string> up;
  std::string find(const std::string& x) {
    auto it = up.find(x);
    if (it == up.end() || it->second == x) return x;
    return it->second = find(it->second);
  }
  void join(const std::string& a, const std::string& b) { up[find(a)] = find(b); }
};

}  // namespace

ParamAssignment generic_parameters(const DoubleAffineLabel& label) {
  const CoxeterDiagram d = build_diagram(label);
  ParamAssignment p;
  p.label = label;
  p.node_symbol.assign(d.size(), "");
  const bool cstar = label.family == Family::dddotCstar || label.family == Family::dddotAstar;
  for (const auto& comp : one_connected_components(d)) {
    std::string sym;
    int best = 1 << 30;
    for (int v : comp)
      if (d.nodes[v].kind == NodeKind::Finite && d.nodes[v].t < best) {
        best = d.nodes[v].t;
        sym = lower_name(d.nodes[v]);
      }
    if (sym.empty()) {
      require(comp.size() == 1, "affine component without a finite node should be a single node");
      sym = lower_name(d.nodes[comp[0]]);
      // the C* algebra sets this parameter to 1
      if (cstar && d.nodes[comp[0]].label == NodeLabel::Theta02) sym = "1";
    }
    for (int v : comp) p.node_symbol[v] = sym;
  }
  for (int v = 0; v < d.size(); ++v) {
    const auto& s = p.node_symbol[v];
    if (s != "1" && std::find(p.symbols.begin(), p.symbols.end(), s) == p.symbols.end()) p.symbols.push_back(s);
  }
  for (const auto& s : p.symbols) p.field.push_back(s + "^(1/2)");
  return p;
}

int generic_param_count(const DoubleAffineLabel& label) {
  return static_cast<int>(generic_parameters(label).symbols.size());
}

std::string to_string(NonReduced s, int n) {
  const std::string k = n > 0 ? std::to_string(n) : "n";
  switch (s) {
    case NonReduced::BCn_Cn: return "(BC" + k + ",C" + k + ")";
    case NonReduced::CnV_BCn: return "(C" + k + "^,BC" + k + ")";
    case NonReduced::Bn_BnV: return "(B" + k + ",B" + k + "^)";
    case NonReduced::CnV_Cn: return "(C" + k + "^,C" + k + ")";
    case NonReduced::C2_C2V: return "(C2,C2^)";
  }
  return "?";
}

namespace {

// strips decoration; returns e.g. "(BCn,Cn)" with the rank replaced by n, and the rank found (0 if none)
std::string normalize_nonreduced(const std::string& text, int& rank) {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == ' ' || c == '_' || c == '{' || c == '}') continue;
    s += c;
  }
  // vee spellings
  for (const std::string v : {"\xE2\x88\xA8", "^vee", "\\vee", "^v", "vee"}) {
    std::size_t pos;
    while ((pos = s.find(v)) != std::string::npos) s.replace(pos, v.size(), "^");
  }
  rank = 0;
  static const std::regex digits(R"(\d+)");
  std::smatch m;
  if (std::regex_search(s, m, digits)) rank = std::stoi(m.str());
  if (s == "(C2,C2^)") return s;
  return std::regex_replace(s, digits, "n");
}

}  // namespace

bool parse_nonreduced(const std::string& text, NonReduced& out) {
  int rank = 0;
  const std::string s = normalize_nonreduced(text, rank);
  static const std::vector<std::pair<std::string, NonReduced>> names = {
      {"(BCn,Cn)", NonReduced::BCn_Cn}, {"(Cn^,BCn)", NonReduced::CnV_BCn}, {"(Bn,Bn^)", NonReduced::Bn_BnV},
      {"(Cn^,Cn)", NonReduced::CnV_Cn}, {"(C2,C2^)", NonReduced::C2_C2V}};
  for (const auto& [name, v] : names)
    if (s == name) {
      out = v;
      return true;
    }
  return false;
}

namespace {

int min_rank(NonReduced s) {
  switch (s) {
    case NonReduced::Bn_BnV: return 3;
    case NonReduced::C2_C2V: return 2;
    default: return 1;
  }
}

}  // namespace

AffineType nonreduced_to_reduced(NonReduced s, int n) {
  require(n >= min_rank(s), "rank " + std::to_string(n) + " too small for " + to_string(s, 0));
  require(s != NonReduced::C2_C2V || n == 2, "(C2,C2^) has rank 2");
  switch (s) {
    case NonReduced::BCn_Cn:
    case NonReduced::CnV_Cn: return n == 1 ? AffineType{'A', 1, 1} : AffineType{'C', n, 1};
    case NonReduced::CnV_BCn: return AffineType{'A', 2 * n, 2};
    case NonReduced::Bn_BnV: return AffineType{'A', 2 * n - 1, 2};
    case NonReduced::C2_C2V: return AffineType{'A', 3, 2};
  }
  throw Error("unknown nonreduced system");
}

int count_after(const ParamAssignment& p, const std::vector<std::pair<std::string, std::string>>& ids) {
  Dsu u;
  auto known = [&](const std::string& s) {
    require(std::find(p.symbols.begin(), p.symbols.end(), s) != p.symbols.end(),
            "parameter " + s + " does not occur for " + to_string(p.label));
  };
  for (const auto& [a, b] : ids) {
    known(a);
    known(b);
    u.join(a, b);
  }
  std::vector<std::string> roots;
  for (const auto& s : p.symbols) roots.push_back(u.find(s));
  std::sort(roots.begin(), roots.end());
  return static_cast<int>(std::unique(roots.begin(), roots.end()) - roots.begin());
}

namespace {

SpecializationRule finish(SpecializationRule r) {
  r.target = correspondence_inverse(r.reduced);
  const ParamAssignment p = generic_parameters(r.target);
  r.generic_count = static_cast<int>(p.symbols.size());
  r.final_count = count_after(p, r.identifications);
  return r;
}

}  // namespace

SpecializationRule specialize(const AffineType& t0) {
  AffineType t = t0;
  validate(t);
  if (t == AffineType{'C', 1, 1}) t = {'A', 1, 1};
  SpecializationRule r;
  r.system = to_string(t);
  r.reduced = t;
  const int n = t.index;
  auto tn = [](int k) { return "t" + std::to_string(k); };
  if (t.twist == 1 && t.letter == 'A' && n == 1) {
    r.identifications = {{"th01", "th02"}, {"th02", "th03"}, {"th03", "t1"}};
  } else if (t.twist == 1 && t.letter == 'C') {
    r.identifications = {{"th01", "th02"}, {"th02", "th03"}};
  } else if (t.twist == 2 && t.letter == 'A' && n % 2 == 0) {
    r.identifications = {{"th03", tn(n / 2)}};
  } else if (t.twist == 2 && t.letter == 'A' && n == 3) {
    r.identifications = {{"th0", "t1"}};
  } else if (t.twist == 2 && t.letter == 'D') {
    r.identifications = {{"th0", tn(n - 1)}};
  } else if (t.twist == 2 && t.letter == 'A') {
    r.identifications = {{"ph0", tn((n + 1) / 2)}};
  }
  return finish(r);
}

SpecializationRule specialize(NonReduced s, int n) {
  SpecializationRule r;
  r.system = to_string(s, n);
  r.reduced = nonreduced_to_reduced(s, n);
  if (s == NonReduced::BCn_Cn) r.identifications = {{"th01", "th02"}};
  return finish(r);
}

SpecializationRule specialize(const std::string& system, int n) {
  NonReduced s;
  if (parse_nonreduced(system, s)) {
    int rank = 0;
    normalize_nonreduced(system, rank);
    if (s == NonReduced::C2_C2V) return specialize(s, 2);
    if (rank == 0) rank = n;
    require(rank > 0, "rank needed for " + system);
    require(n == 0 || n == rank, "conflicting ranks for " + system);
    return specialize(s, rank);
  }
  return specialize(parse_affine_type(system));
}

QuadraticRelation quadratic_relation(const std::string& generator, const std::string& symbol) {
  QuadraticRelation q;
  q.generator = generator;
  q.symbol = symbol;
  q.involutive = symbol == "1";
  if (q.involutive)
    q.text = generator + "^2 = 1";
  else
    q.text = generator + " - " + generator + "^-1 = " + symbol + "^(1/2) - " + symbol + "^(-1/2)";
  return q;
}

std::vector<QuadraticRelation> quadratic_relations(const DoubleAffineLabel& label) {
  const CoxeterDiagram d = build_diagram(label);
  const ParamAssignment p = generic_parameters(label);
  std::vector<QuadraticRelation> out;
  for (int v = 0; v < d.size(); ++v) out.push_back(quadratic_relation(d.nodes[v].name(), p.node_symbol[v]));
  return out;
}

std::string to_json(const SpecializationRule& r) {
  nlohmann::ordered_json j;
  j["system"] = r.system;
  j["reduced"] = to_string(r.reduced);
  j["algebra"] = to_string(r.target);
  j["generic_count"] = r.generic_count;
  auto ids = nlohmann::ordered_json::array();
  for (const auto& [a, b] : r.identifications) ids.push_back(a + " = " + b);
  j["identifications"] = ids;
  j["final_count"] = r.final_count;
  return j.dump(2);
}

}  // namespace dacox
