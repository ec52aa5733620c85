#include "dacox/presentation.hpp"

#include <chrono>
#include <sstream>

namespace dacox {

Word inverse(const Word& w) {
  Word r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->gen, -it->exp});
  return r;
}

Word concat(std::initializer_list<Word> parts) {
  Word r;
  for (const auto& p : parts) r.insert(r.end(), p.begin(), p.end());
  return r;
}

Word power(const Word& w, int e) {
  Word base = e < 0 ? inverse(w) : w, r;
  for (int k = 0; k < (e < 0 ? -e : e); ++k) r.insert(r.end(), base.begin(), base.end());
  return r;
}

int Presentation::gen(NodeLabel l, int t) const {
  int g = diagram.find(l, t);
  require(g >= 0, "generator not present in " + to_string(diagram.label));
  return g;
}

const Word& Presentation::macro(const std::string& name) const {
  auto it = macros.find(name);
  require(it != macros.end(), "element " + name + " is undefined for " + to_string(diagram.label));
  return it->second;
}

namespace {

Word finite_word(const WeylWord& w) {
  Word r;
  for (int i : w) r.push_back({i - 1, 1});
  return r;
}

// p-braid relation between two words: alternating products of length 2, 3, 4, 6
std::pair<Word, Word> braid_words(const Word& a, const Word& b, int p) {
  static const int len[] = {2, 3, 4, 6};
  Word l, r;
  for (int k = 0; k < len[p]; ++k) {
    const Word& x = k % 2 ? b : a;
    const Word& y = k % 2 ? a : b;
    l.insert(l.end(), x.begin(), x.end());
    r.insert(r.end(), y.begin(), y.end());
  }
  return {l, r};
}

bool is_star(Family f) { return f == Family::dddotAstar || f == Family::dddotCstar; }

}  // namespace

AffineType model_type(const DoubleAffineLabel& label) { return correspondence(label); }

Presentation build_presentation(const DoubleAffineLabel& label0, bool c_variant) {
  Presentation p;
  p.diagram = build_diagram(label0);
  const DoubleAffineLabel& label = p.diagram.label;
  require(!c_variant || is_star(label.family), "the c variant exists only for the starred families");
  p.c_variant = c_variant;
  const RootSystemData rs = build_root_system(model_type(label));
  const FiniteWeyl W(rs.fin);
  const bool triple = is_triple(label.family);
  p.i_theta = rs.i_theta;
  p.i_phi = rs.i_phi;

  p.macros["Theta"] = finite_word(W.reduced_word(W.reflect(rs.theta)));
  p.macros["Phi"] = finite_word(W.reduced_word(W.reflect(rs.phi)));
  p.macros["w0"] = finite_word(W.reduced_word(W.longest()));
  const WeylElement sth = W.reflect(rs.theta), sph = W.reflect(rs.phi);
  p.macros["Psi"] = finite_word(W.reduced_word(W.inv(W.mul(sph, sth))));
  p.macros["PsiRev"] = finite_word(W.reduced_word(W.mul(sph, sth)));
  if (!rs.theta_is_phi()) {
    p.macros["ThetaP"] = finite_word(W.reduced_word(W.reflect(rs.theta_prime)));
    p.macros["PhiP"] = finite_word(W.reduced_word(W.reflect(rs.phi_prime)));
  }

  const int first_aff = p.diagram.affine_nodes().front();
  p.ell0 = p.diagram.mult[first_aff][p.i_theta - 1];

  if (triple) {
    p.central = concat({p.letter(NodeLabel::Theta01), p.letter(NodeLabel::Theta02), p.letter(NodeLabel::Theta03),
                        p.macros["Theta"]});
  } else {
    const Word F0 = p.letter(NodeLabel::Phi0), T0 = p.letter(NodeLabel::Theta0);
    p.central = concat({F0, p.macros["Phi"], T0, p.macros["Psi"], F0, p.macros["Theta"], T0});
  }

  const auto& nodes = p.diagram.nodes;
  const int N = p.diagram.size();
  auto one = [](int g) { return Word{{g, 1}}; };
  // diagram braid relations
  for (const auto& e : braid_relation_list(p.diagram)) {
    if (e.m > 3) continue;
    if (!triple && nodes[e.i].kind == NodeKind::Affine && nodes[e.j].kind == NodeKind::Affine) continue;
    auto [l, r] = braid_words(one(e.i), one(e.j), e.m);
    p.relations.push_back({"braid " + nodes[e.i].name() + "," + nodes[e.j].name() + " (" + std::to_string(e.m) + ")", l, r});
  }
  // Coxeter quotient
  const bool star = is_star(label.family);
  for (int g = 0; g < N; ++g) {
    if (star && nodes[g].label == NodeLabel::Theta02) continue;
    p.relations.push_back({"square " + nodes[g].name(), Word{{g, 1}, {g, 1}}, {}});
  }
  for (int g = 0; g < N; ++g)
    p.relations.push_back({"central C," + nodes[g].name(), concat({p.central, one(g)}), concat({one(g), p.central})});
  if (triple && p.ell0 == 2) {
    const Word t = p.T(p.i_theta), ti = p.T(p.i_theta, -1);
    const NodeLabel th[] = {NodeLabel::Theta01, NodeLabel::Theta02, NodeLabel::Theta03};
    for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
      Word a = p.letter(th[i]), b = p.letter(th[j]);
      p.relations.push_back({"ellbraid (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                             concat({a, ti, b, t}), concat({ti, b, t, a})});
    }
  }
  if (star) {
    const Word t2 = p.letter(NodeLabel::Theta02);
    if (c_variant)
      p.relations.push_back({"Theta02^2 = 1", concat({t2, t2}), {}});
    else
      p.relations.push_back({"Theta02^2 = C", concat({t2, t2}), p.central});
  }
  return p;
}

Word parse_word(const Presentation& p, const std::string& text) {
  std::istringstream is(text);
  std::string tok;
  Word w;
  while (is >> tok) {
    int e = 1;
    while (!tok.empty() && tok.back() == '\'') {
      e = -e;
      tok.pop_back();
    }
    Word part;
    if (tok == "C") {
      part = p.central;
    } else if (p.macros.count(tok)) {
      part = p.macros.at(tok);
    } else {
      int g = p.diagram.find(tok);
      require(g >= 0, "unknown generator '" + tok + "'");
      part = Word{{g, 1}};
    }
    if (e < 0) part = inverse(part);
    w.insert(w.end(), part.begin(), part.end());
  }
  return w;
}

std::string format_word(const Presentation& p, const Word& w) {
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += ' ';
    s += p.diagram.nodes[l.gen].name();
    if (l.exp < 0) s += '\'';
  }
  return s;
}

DaweylElement GeneratorModel::eval(const Word& w) const {
  DaweylElement r = group.identity();
  for (const auto& l : w) r = group.mul(r, l.exp > 0 ? images[l.gen] : group.inv(images[l.gen]));
  return r;
}

GeneratorModel phi_dictionary(const Presentation& p) {
  const auto& label = p.diagram.label;
  GeneratorModel m{DoubleAffineWeyl(build_root_system(model_type(label)), p.c_variant), {}};
  const auto& G = m.group;
  const auto& rs = G.data();
  const auto sth = G.finite(G.weyl().reflect(rs.theta));
  const auto sph = G.finite(G.weyl().reflect(rs.phi));
  for (const auto& v : p.diagram.nodes) {
    switch (v.label) {
      case NodeLabel::T: m.images.push_back(G.s(v.t)); break;
      case NodeLabel::Theta01:
      case NodeLabel::Theta0: m.images.push_back(G.s(0)); break;
      case NodeLabel::Theta02:
        if (is_star(label.family)) {
          // image of alpha_0^vee of the untwisted source: delta (or delta/2) minus theta^vee
          m.images.push_back(G.mul(G.s(0), G.tau(-rs.theta_vee(), p.c_variant ? Rational(1, 2) : Rational(1))));
        } else {
          m.images.push_back(G.mul(G.s(0), G.tau(G.alpha0_vee())));
        }
        break;
      case NodeLabel::Theta03: m.images.push_back(G.mul(G.tau(rs.theta_vee()), sth)); break;
      case NodeLabel::Phi0: m.images.push_back(G.mul(G.tau(rs.phi_vee()), sph)); break;
    }
  }
  return m;
}

std::map<std::string, WeylElement> distinguished_elements(const DoubleAffineLabel& label) {
  const RootSystemData rs = build_root_system(model_type(label));
  const FiniteWeyl W(rs.fin);
  std::map<std::string, WeylElement> out;
  const auto sth = W.reflect(rs.theta), sph = W.reflect(rs.phi);
  out["Theta"] = sth;
  out["Phi"] = sph;
  out["Psi"] = W.inv(W.mul(sph, sth));
  out["PsiRev"] = W.mul(sph, sth);
  out["w0"] = W.longest();
  if (!rs.theta_is_phi()) {
    out["ThetaP"] = W.reflect(rs.theta_prime);
    out["PhiP"] = W.reflect(rs.phi_prime);
  }
  return out;
}

VerificationReport distinguished_suite(const DoubleAffineLabel& label) {
  VerificationReport rep;
  rep.suite = "distinguished";
  rep.label = to_string(label);
  const RootSystemData rs = build_root_system(model_type(label));
  const FiniteWeyl W(rs.fin);
  auto e = distinguished_elements(label);
  auto m = [&](std::initializer_list<WeylElement> xs) {
    WeylElement r = W.identity();
    for (const auto& x : xs) r = W.mul(r, x);
    return r;
  };
  rep.add("Psi is the identity iff theta = phi", (e["Psi"] == W.identity()) == rs.theta_is_phi());
  if (rs.theta_is_phi()) return rep;
  const auto Th = e["Theta"], Ph = e["Phi"], Tp = e["ThetaP"], Pp = e["PhiP"];
  rep.add("Psi = Phi' Theta^-1 = Phi^-1 Theta'", e["Psi"] == m({Pp, W.inv(Th)}) && e["Psi"] == m({W.inv(Ph), Tp}));
  rep.add("Psirev = Theta^-1 Phi' = Theta' Phi^-1",
          e["PsiRev"] == m({W.inv(Th), Pp}) && e["PsiRev"] == m({Tp, W.inv(Ph)}));
  rep.add("Theta' Theta = Phi Phi'", m({Tp, Th}) == m({Ph, Pp}));
  rep.add("Phi' Phi = Theta Theta'", m({Pp, Ph}) == m({Th, Tp}));
  if (rs.cartan.r == 2) {
    rep.add("Theta = Phi' Theta' Phi'", Th == m({Pp, Tp, Pp}));
    rep.add("Phi = Theta' Phi' Theta'", Ph == m({Tp, Pp, Tp}));
    const auto x = m({Th, Tp});
    bool iii = x == m({Tp, Th}) && x == m({Ph, Pp}) && x == m({Pp, Ph}) && x == m({Tp, Pp, Tp, Pp}) &&
               x == m({Pp, Tp, Pp, Tp});
    rep.add("Theta Theta' = Theta' Theta = Phi Phi' = Phi' Phi = (Theta' Phi')^2 = (Phi' Theta')^2", iii);
    rep.add("Psi = Theta'^-1 Phi'^-1, Psirev = Phi'^-1 Theta'^-1",
            e["Psi"] == m({W.inv(Tp), W.inv(Pp)}) && e["PsiRev"] == m({W.inv(Pp), W.inv(Tp)}));
  }
  return rep;
}

namespace {

std::string rel_witness(const GeneratorModel& m, const DaweylElement& l, const DaweylElement& r) {
  return "lhs " + m.group.to_string(l) + " | rhs " + m.group.to_string(r);
}

}  // namespace

VerificationReport verify_presentation(const DoubleAffineLabel& label, bool c_variant) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  const Presentation p = build_presentation(label, c_variant);
  rep.suite = "presentation";
  rep.label = to_string(p.diagram.label) + (c_variant ? " (c)" : "");
  const GeneratorModel m = phi_dictionary(p);
  const auto& G = m.group;
  const auto& rs = G.data();
  const bool triple = is_triple(p.diagram.label.family);
  const bool star = is_star(p.diagram.label.family);

  auto check = [&](const std::string& id, const Word& l, const Word& r) {
    auto a = m.eval(l), b = m.eval(r);
    rep.add(id, a == b, a == b ? "" : rel_witness(m, a, b));
  };
  for (const auto& rel : p.relations) check(rel.name, rel.lhs, rel.rhs);

  const Rational cdelta = c_variant ? Rational(1, 2) : Rational(1);
  auto cimg = m.eval(p.central);
  rep.add("phi(C) = tau_delta" + std::string(c_variant ? "^(1/2)" : ""), cimg == G.tau_delta(cdelta), G.to_string(cimg));
  {
    bool ok = true;
    for (int i = 1; i <= G.rank(); ++i) ok = ok && G.mul(m.eval(p.T(i)), m.eval(p.T(i))) == G.identity();
    rep.add("phi(T(i)) are involutions", ok);
  }
  if (triple) {
    auto t2 = m.eval(p.letter(NodeLabel::Theta02));
    auto sq = G.mul(t2, t2);
    if (!star)
      rep.add("phi(Theta02)^2 = 1", sq == G.identity(), G.to_string(sq));
    else
      rep.add("phi(Theta02)^2 = " + std::string(c_variant ? "1" : "phi(C)"),
              sq == (c_variant ? G.identity() : cimg), G.to_string(sq));
  }
  if (triple && p.ell0 == 1) {
    // Theta02 expressed through the other generators
    const Word a = p.letter(NodeLabel::Theta01), c = p.letter(NodeLabel::Theta03);
    const Word t = p.T(p.i_theta), th = p.macro("Theta");
    Word w = concat({inverse(a), inverse(t), a, t, inverse(th), inverse(c), t, c, th, a, inverse(t)});
    check("magic1", w, p.letter(NodeLabel::Theta02));
  }
  if (!triple) {
    const Word T0 = p.letter(NodeLabel::Theta0), F0 = p.letter(NodeLabel::Phi0);
    auto [l, r] = braid_words(T0, F0, rs.cartan.r);
    check("superfluous Theta0,Phi0 braid holds in the image", l, r);
    if (rs.cartan.r == 2) {
      const Word Tp = p.macro("ThetaP"), Pp = p.macro("PhiP");
      auto b = [&](const std::string& id, const Word& x, const Word& y, int k) {
        auto [u, v] = braid_words(x, y, k);
        check(id, u, v);
      };
      b("B2-rels i Phi0,Phi' 0-braid", F0, Pp, 0);
      b("B2-rels ii Phi0,Theta' 2-braid", F0, Tp, 2);
      b("B2-rels iii Theta0,Theta' 0-braid", T0, Tp, 0);
      b("B2-rels iv Theta0,Phi' 2-braid", T0, Pp, 2);
      b("Theta',Phi' 2-braid", Tp, Pp, 2);
      check("centralrel-2 C = (Phi0 Theta' Phi' Theta0)^2", p.central, power(concat({F0, Tp, Pp, T0}), 2));
    } else {
      const Word tf = p.T(p.i_phi), tt = p.T(p.i_theta);
      check("centralrel-3 C = (Phi0 T_iphi T_itheta T_iphi T_itheta Theta0)^2", p.central,
            power(concat({F0, tf, tt, tf, tt, T0}), 2));
    }
  }

  // psi: every generator of the double affine Weyl group as a word in the presentation
  {
    const int n = G.rank();
    const Word s0 = triple ? p.letter(NodeLabel::Theta01) : p.letter(NodeLabel::Theta0);
    const Word th = p.macro("Theta");
    std::vector<std::pair<std::string, std::pair<Word, DaweylElement>>> targets;
    targets.push_back({"s0", {s0, G.s(0)}});
    for (int i = 1; i <= n; ++i) targets.push_back({"s" + std::to_string(i), {p.T(i), G.s(i)}});
    RatVec seed(n);
    for (int j = 0; j < n; ++j) seed[j] = frac(-static_cast<long>(rs.theta[j]), rs.cartan.a0);
    auto lam = G.orbit_sums(seed, false);
    for (int i = 0; i < n; ++i) {
      Word w;
      for (const auto& [u, sign] : lam[i].terms) {
        Word uw = finite_word(u);
        Word core = concat({th, s0});
        w = concat({w, uw, sign > 0 ? core : inverse(core), inverse(uw)});
      }
      targets.push_back({"lambda_A" + std::to_string(i + 1), {w, G.lambda_gen(i + 1)}});
    }
    // tau of the orbit of theta^vee (phi^vee in the twisted case)
    Word tgen;
    IntVec cv;
    if (triple) {
      tgen = concat({p.letter(NodeLabel::Theta03), th});
      cv = rs.theta_vee();
    } else {
      tgen = concat({p.letter(NodeLabel::Phi0), p.macro("Phi")});
      cv = rs.phi_vee();
    }
    auto tau = G.orbit_sums(rs.nu(cv), true);
    for (int i = 0; i < n; ++i) {
      Word w;
      for (const auto& [u, sign] : tau[i].terms) {
        Word uw = finite_word(u);
        w = concat({w, uw, sign > 0 ? tgen : inverse(tgen), inverse(uw)});
      }
      targets.push_back({"tau_alpha" + std::to_string(i + 1) + "^vee", {w, G.tau_gen(i + 1)}});
    }
    targets.push_back({"tau_delta", {c_variant ? power(p.central, 2) : p.central, G.tau_delta()}});
    bool ok = true;
    std::string wit;
    for (const auto& [name, wt] : targets) {
      auto g = m.eval(wt.first);
      if (!(g == wt.second)) {
        ok = false;
        wit = name + ": " + G.to_string(g);
        break;
      }
    }
    rep.add("surjectivity: phi(psi(g)) = g on " + std::to_string(targets.size()) + " generators", ok, wit);
  }
  rep.merge(distinguished_suite(p.diagram.label), "");
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace dacox
