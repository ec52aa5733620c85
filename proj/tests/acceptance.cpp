// one line per acceptance criterion; exit status 1 if any is red
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "dacox/autoaction.hpp"
#include "dacox/congruence.hpp"
#include "dacox/heckeparams.hpp"
#include "dacox/presentation.hpp"
#include "dacox/weyl.hpp"

using namespace dacox;

namespace {

// time limits in milliseconds (0 = none)
constexpr double kIdentitiesMs = 1.0;
constexpr double kCosetsMs = 1000.0;
constexpr double kPresentationMs = 30000.0;
constexpr double kInvolutionMs = 10000.0;
constexpr double kOracleMs = 10000.0;

struct Outcome {
  bool pass = true;
  std::string note;
};

int red = 0;

void line(int k, const std::string& title, double limit_ms, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (limit_ms > 0 && ms > limit_ms) {
    o.pass = false;
    o.note += " [over time limit " + std::to_string(static_cast<long>(limit_ms)) + " ms]";
  }
  if (!o.pass) ++red;
  std::printf("criterion %2d %s  %s: %s (%.3f ms)\n", k, o.pass ? "PASS" : "FAIL", title.c_str(), o.note.c_str(), ms);
  std::fflush(stdout);
}

// labels at ranks {min, min+1} where the family allows it
std::vector<DoubleAffineLabel> rank_matrix() {
  std::vector<DoubleAffineLabel> out;
  for (auto f : all_families()) {
    const int lo = min_rank(f), hi = max_rank(f);
    for (int n = lo; n <= lo + 1; ++n)
      if (hi < 0 || n <= hi) out.push_back(make_label(f, n));
  }
  return out;
}

struct Tally {
  std::size_t reports = 0, checks = 0, failed = 0;
  std::string first;
  void take(const VerificationReport& r) {
    ++reports;
    checks += r.checks.size();
    for (const auto& c : r.checks)
      if (!c.pass && !c.skipped) {
        ++failed;
        if (first.empty()) first = r.label + ": " + c.id + " " + c.witness;
      }
  }
  Outcome outcome(const std::string& what) const {
    std::string n = std::to_string(reports) + " " + what + ", " + std::to_string(checks) + " checks, " +
                    std::to_string(failed) + " failed";
    if (!first.empty()) n += "; first: " + first;
    return {failed == 0, n};
  }
};

// partition of symbols induced by identification pairs
std::map<std::string, std::string> classes(const std::vector<std::string>& syms,
                                           const std::vector<std::pair<std::string, std::string>>& ids) {
  std::map<std::string, std::string> up;
  for (const auto& s : syms) up[s] = s;
  std::function<std::string(const std::string&)> find = [&](const std::string& x) {
    return up[x] == x ? x : up[x] = find(up[x]);
  };
  for (const auto& [a, b] : ids) up[find(a)] = find(b);
  std::map<std::string, std::string> out;
  for (const auto& s : syms) out[s] = find(s);
  return out;
}

bool same_partition(const std::vector<std::string>& syms, const std::vector<std::pair<std::string, std::string>>& x,
                    const std::vector<std::pair<std::string, std::string>>& y) {
  const auto a = classes(syms, x), b = classes(syms, y);
  for (const auto& s : syms)
    for (const auto& t : syms)
      if ((a.at(s) == a.at(t)) != (b.at(s) == b.at(t))) return false;
  return true;
}

}  // namespace

int main() {
  std::printf("acceptance run\n");

  line(1, "matrix identities", kIdentitiesMs, [] {
    bool ok = mat_pow(u12() * u21(), 3) == -identity2() && mat_pow(u12() * u21(2), 2) == -identity2() &&
              mat_pow(u12() * u21(3), 3) == identity2();
    // e(r) u12 e(r) = u21^-r and e(r) u21^r e(r) = u12^-1
    for (int r = 1; r <= 3; ++r) ok = ok && e_conj(u12(), r) == u21(-r) && e_conj(u21(r), r) == u12(-1);
    return Outcome{ok, "exact equality for r = 1, 2, 3"};
  });

  line(2, "coset indices", kCosetsMs, [] {
    const auto t2 = coset_table(2), t3 = coset_table(3);
    const std::vector<Mat2> given2 = {identity2(), u21(), u12() * u21()};
    const std::vector<Mat2> given3 = {identity2(),          u21(),           u12() * u21(),
                                      u12(2) * u21(),       u21(2),          u12() * u21(2),
                                      u12(2) * u21(2)};
    auto recovered = [](const std::vector<Mat2>& given, const CosetTable& t) {
      std::set<int> hit;
      for (const auto& g : given) {
        int where = -1;
        for (int i = 0; i < t.index(); ++i)
          if (same_left_coset(g, t.mats[i], t.r)) where = i;
        if (where < 0 || hit.count(where)) return -1;
        hit.insert(where);
      }
      return static_cast<int>(hit.size());
    };
    const int h2 = recovered(given2, t2), h3 = recovered(given3, t3);
    const bool ok = t2.index() == 3 && t3.index() == 8 && h2 == 3 && h3 == 7;
    return Outcome{ok, "index 3 and 8; listed representatives recovered: " + std::to_string(h2) + "/3 and " +
                           std::to_string(h3) + "/7 distinct cosets (the level-3 list names 7 of the 8)"};
  });

  const auto labels = rank_matrix();

  line(3, "presentation verification", kPresentationMs, [&] {
    Tally t;
    for (const auto& l : labels) {
      t.take(verify_presentation(l));
      if (is_starred(l)) t.take(verify_presentation(l, true));
    }
    return t.outcome("presentation reports over " + std::to_string(labels.size()) + " labels");
  });

  line(4, "Bernstein relations", 0, [&] {
    Tally t;
    std::set<std::string> seen;
    for (const auto& l : labels) {
      const auto ty = correspondence(l);
      if (seen.insert(to_string(ty)).second) t.take(verify_bernstein_relations(ty));
    }
    return t.outcome("affine types");
  });

  line(5, "automorphism suite", 0, [&] {
    Tally t;
    for (const auto& l : labels) {
      t.take(automorphism_suite(l));
      if (is_starred(l)) {
        t.take(automorphism_suite(l, true));
        t.take(cstar_restriction_check(l.rank));
      }
    }
    return t.outcome("automorphism reports");
  });

  line(6, "basic involutions", kInvolutionMs, [] {
    Tally t;
    for (const auto& l : {make_label(Family::dddotA, 2), make_label(Family::ddotB, 3), make_label(Family::ddotG2, 2),
                          make_label(Family::dddotCstar, 2)})
      t.take(involution_suite(l, 20, 30, 23));
    return t.outcome("levels (r = 1, 2, 3 and the primed level 2)");
  });

  line(7, "parameter tables", 0, [] {
    int rows = 0, bad = 0;
    std::string first;
    auto expect = [&](bool ok, const std::string& what) {
      ++rows;
      if (!ok) {
        ++bad;
        if (first.empty()) first = what;
      }
    };
    // generic counts, each row sampled at three ranks where the family allows
    struct R1 {
      Family f;
      int lo, hi, count;
    };
    const R1 t1[] = {{Family::dddotA, 1, 1, 4},      {Family::dddotAstar, 1, 1, 3}, {Family::dddotA, 2, 4, 1},
                     {Family::dddotB, 3, 5, 2},      {Family::dddotC, 2, 4, 5},     {Family::dddotCstar, 2, 4, 4},
                     {Family::dddotD, 4, 6, 1},      {Family::dddotE, 6, 8, 1},     {Family::dddotF, 4, 4, 2},
                     {Family::dddotG, 2, 2, 2},      {Family::ddotB, 3, 5, 3},      {Family::ddotB2, 2, 2, 4},
                     {Family::ddotF4, 4, 4, 2},      {Family::ddotG2, 2, 2, 2}};
    for (const auto& r : t1) {
      bool ok = true;
      for (int n = r.lo; n <= r.hi; ++n) {
        ok = ok && generic_param_count(make_label(r.f, n)) == r.count;
        if (r.f == Family::ddotB) ok = ok && generic_param_count(make_label(Family::ddotC, n)) == r.count;
      }
      expect(ok, "generic count " + family_name(r.f));
    }
    // specializations
    struct R4 {
      std::string system;
      int n;
      std::string algebra;
      std::vector<std::pair<std::string, std::string>> ids;
    };
    std::vector<R4> t4;
    t4.push_back({"A1^(1)", 1, "dddotA_1", {{"th01", "th02"}, {"th02", "th03"}, {"th03", "t1"}}});
    for (int n : {2, 3, 4}) {
      const std::string k = std::to_string(n), tn = "t" + k;
      t4.push_back({"C" + k + "^(1)", n, "dddotC_" + k, {{"th01", "th02"}, {"th02", "th03"}}});
      t4.push_back({"(BCn,Cn)", n, "dddotC_" + k, {{"th01", "th02"}}});
      t4.push_back({"(Cn^,Cn)", n, "dddotC_" + k, {}});
      t4.push_back({"A" + std::to_string(2 * n) + "^(2)", n, "dddotCstar_" + k, {{"th03", tn}}});
      t4.push_back({"(Cn^,BCn)", n, "dddotCstar_" + k, {}});
    }
    t4.push_back({"A3^(2)", 2, "ddotB2_2", {{"th0", "t1"}}});
    t4.push_back({"(C2,C2^)", 2, "ddotB2_2", {}});
    for (int n : {3, 4, 5}) {
      const std::string k = std::to_string(n), tn = "t" + k;
      t4.push_back({"D" + std::to_string(n + 1) + "^(2)", n, "ddotB_" + k, {{"th0", tn}}});
      t4.push_back({"A" + std::to_string(2 * n - 1) + "^(2)", n, "ddotC_" + k, {{"ph0", tn}}});
      t4.push_back({"(Bn,Bn^)", n, "ddotC_" + k, {}});
    }
    for (const auto& r : t4) {
      const auto rule = specialize(r.system, r.system.find('n') != std::string::npos ? r.n : 0);
      const auto syms = generic_parameters(rule.target).symbols;
      expect(to_string(rule.target) == r.algebra && same_partition(syms, rule.identifications, r.ids),
             "specialization " + r.system + " n=" + std::to_string(r.n));
    }
    // nonreduced counts
    const std::vector<std::pair<std::string, int>> t5 = {{"(BCn,Cn)", 4}, {"(Cn^,BCn)", 4}, {"(Bn,Bn^)", 3}, {"(Cn^,Cn)", 5}};
    for (const auto& [s, c] : t5)
      for (int n : {2, 3, 4}) {
        if (s == "(Bn,Bn^)" && n < 3) continue;
        expect(specialize(s, n).final_count == c, "count " + s + " n=" + std::to_string(n));
      }
    expect(specialize("(C2,C2^)").final_count == 4, "count (C2,C2^)");
    std::string note = std::to_string(rows) + " table rows, " + std::to_string(bad) + " mismatches";
    note += "; at n = 1 the nonreduced counts are " + std::to_string(specialize("(BCn,Cn)", 1).final_count) + ", " +
            std::to_string(specialize("(Cn^,BCn)", 1).final_count) + ", " +
            std::to_string(specialize("(Cn^,Cn)", 1).final_count);
    if (!first.empty()) note += "; first: " + first;
    return Outcome{bad == 0, note};
  });

  line(8, "x, y properties and length law", 0, [] {
    Tally t;
    for (auto [l, n] : std::vector<std::pair<char, int>>{{'B', 2}, {'B', 3}, {'C', 3}, {'F', 4}, {'G', 2}})
      t.take(xy_lemma_suite(l, n));
    return t.outcome("finite types");
  });

  line(9, "algebra against action", kOracleMs, [] {
    Tally t;
    bool found = true;
    for (const char* ty : {"A2^(1)", "C3^(1)", "G2^(1)", "A4^(2)", "D4^(3)"}) {
      const auto rep = daweyl_core_suite(parse_affine_type(ty), 11, 1000);
      bool has = false;
      for (const auto& c : rep.checks)
        if (c.id.rfind("action oracle", 0) == 0) has = true;
      found = found && has;
      t.take(rep);
    }
    auto o = t.outcome("types, 1000 pairs x 5 points each");
    o.pass = o.pass && found;
    return o;
  });

  line(10, "A_2n^(2) comparison", 0, [] {
    Tally t;
    t.take(a2n2_comparison(1));
    t.take(a2n2_comparison(2));
    return t.outcome("ranks");
  });

  std::printf("%s\n", red == 0 ? "all criteria pass" : (std::to_string(red) + " criteria fail").c_str());
  return red == 0 ? 0 : 1;
}
