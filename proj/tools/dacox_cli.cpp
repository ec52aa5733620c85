// dacox: command line front end for the double affine Coxeter toolkit
#include <CLI11.hpp>
#include <json.hpp>

#include <future>
#include <iostream>
#include <sstream>

#include "dacox/autoaction.hpp"
#include "dacox/congruence.hpp"
#include "dacox/heckeparams.hpp"
#include "dacox/presentation.hpp"
#include "dacox/weyl.hpp"

using namespace dacox;
using json = nlohmann::ordered_json;

namespace {

struct BadArgs : std::runtime_error {
  using std::runtime_error::runtime_error;
};

DoubleAffineLabel label_from(const std::string& family, int rank, bool large) {
  DoubleAffineLabel l;
  try {
    // rank 0 means the smallest rank of the family
    l = make_label(family, rank > 0 ? rank : min_rank(parse_family(family)));
  } catch (const Error& e) {
    throw BadArgs(e.what());
  }
  if (l.family == Family::dddotE && rank > 6 && !large) throw BadArgs("E7 and E8 need --large");
  return l;
}

Mat2 matrix_arg(const std::string& s) {
  try {
    return parse_matrix(s);
  } catch (const Error& e) {
    throw BadArgs(e.what());
  }
}

// every suite a label takes part in, in a fixed order
std::vector<std::function<VerificationReport()>> suites_for(const DoubleAffineLabel& l, const std::string& suite) {
  std::vector<std::function<VerificationReport()>> jobs;
  const bool all = suite == "all";
  const bool star = is_starred(l);
  const AffineType t = correspondence(l);
  if (all || suite == "presentation") {
    jobs.push_back([l] { return verify_presentation(l); });
    if (star) jobs.push_back([l] { return verify_presentation(l, true); });
    if (!is_triple(l.family) || star) jobs.push_back([l] { return distinguished_suite(l); });
  }
  if (all || suite == "bernstein") {
    jobs.push_back([t] { return verify_bernstein_relations(t); });
    if (t.letter == 'A' && t.twist == 2 && t.index % 2 == 0 && t.index <= 4)
      jobs.push_back([t] { return a2n2_comparison(t.index / 2); });
  }
  if (all || suite == "auto") {
    jobs.push_back([l] { return automorphism_suite(l); });
    if (star) {
      jobs.push_back([l] { return automorphism_suite(l, true); });
      jobs.push_back([l] { return cstar_restriction_check(l.rank); });
    }
    jobs.push_back([l] { return homomorphism_check(l); });
    jobs.push_back([l] { return involution_suite(l); });
  }
  if (all || suite == "appendixA") {
    const auto rs = build_root_system(t);
    jobs.push_back([rs] { return xy_lemma_suite(rs.fin.letter, rs.fin.n); });
  }
  return jobs;
}

// worker pool of std::async tasks; results kept in submission order
std::vector<VerificationReport> run_all(const std::vector<std::function<VerificationReport()>>& jobs) {
  std::vector<std::future<VerificationReport>> fut;
  for (const auto& j : jobs) fut.push_back(std::async(std::launch::async, j));
  std::vector<VerificationReport> out;
  for (auto& f : fut) out.push_back(f.get());
  return out;
}

void print_reports(const std::vector<VerificationReport>& reps, bool as_json) {
  if (as_json) {
    json arr = json::array();
    for (const auto& r : reps) arr.push_back(json::parse(r.to_json()));
    std::cout << arr.dump(2) << "\n";
    return;
  }
  for (const auto& r : reps) {
    std::cout << "== " << r.suite << " " << r.label << "  (" << r.passed() << " pass, " << r.failures() << " fail)\n";
    for (const auto& c : r.checks) {
      const char* st = c.skipped ? "SKIP" : c.pass ? "PASS" : "FAIL";
      std::cout << "  " << st << "  " << c.id;
      if (!c.witness.empty() && (!c.pass || c.skipped)) std::cout << "  [" << c.witness << "]";
      std::cout << "\n";
    }
  }
}

int status_of(const std::vector<VerificationReport>& reps) {
  for (const auto& r : reps)
    if (!r.ok()) return 1;
  return 0;
}

// the rank matrix swept by `verify --sweep`
std::vector<std::pair<DoubleAffineLabel, std::string>> sweep_matrix() {
  std::vector<std::pair<DoubleAffineLabel, std::string>> m;
  auto add = [&](Family f, int n, const std::string& s = "all") { m.push_back({make_label(f, n), s}); };
  for (int n = 1; n <= 4; ++n) add(Family::dddotA, n);
  add(Family::dddotAstar, 1);
  add(Family::dddotB, 3);
  add(Family::dddotB, 4);
  add(Family::dddotC, 2);
  add(Family::dddotC, 3);
  add(Family::dddotCstar, 2);
  add(Family::dddotCstar, 3);
  add(Family::dddotD, 4);
  add(Family::dddotE, 6, "presentation");
  add(Family::dddotF, 4);
  add(Family::dddotG, 2);
  add(Family::ddotB2, 2);
  add(Family::ddotB, 3);
  add(Family::ddotC, 3);
  add(Family::ddotF4, 4);
  add(Family::ddotG2, 2);
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dacox: double affine Coxeter presentations, automorphisms and congruence subgroups"};
  app.require_subcommand(1);
  bool as_json = false;

  std::string family, suite = "all", matrix, word, system, rtype;
  int rank = 0, level = 1, n = 0;
  bool large = false, sweep = false, dot = false, djson = false, cvar = false, prime = false;

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--family", family);
  verify->add_option("--rank", rank);
  verify->add_option("--suite", suite)->check(CLI::IsMember({"presentation", "bernstein", "auto", "appendixA", "all"}));
  verify->add_flag("--large", large, "allow E7 and E8");
  verify->add_flag("--sweep", sweep, "run the full rank matrix");
  verify->add_flag("--json", as_json);

  auto* decomp = app.add_subcommand("decompose", "write a Gamma_1(r) matrix as a word in u12, u21^r");
  decomp->add_option("--matrix", matrix, "a,b;c,d")->required();
  decomp->add_option("--level", level)->check(CLI::IsMember({1, 2, 3}));
  decomp->add_flag("--prime", prime, "Gamma_1(2)' letters x = u21 u12 u21^-1, y = u21^2");
  decomp->add_flag("--json", as_json);

  auto* invol = app.add_subcommand("involution", "classify the anti-automorphism e o g for a matrix");
  invol->add_option("--matrix", matrix)->required();
  invol->add_option("--family", family)->required();
  invol->add_option("--rank", rank)->required();
  invol->add_flag("--c-variant", cvar);
  invol->add_flag("--json", as_json);

  auto* diag = app.add_subcommand("diagram", "print a double affine Coxeter diagram");
  diag->add_option("--family", family)->required();
  diag->add_option("--rank", rank);
  diag->add_flag("--dot", dot);
  diag->add_flag("--json", djson);

  auto* params = app.add_subcommand("params", "Hecke parameter counts");
  params->add_option("--system", system, "affine type or nonreduced system, e.g. \"(Cn^,Cn)\"");
  params->add_option("--n", n);
  params->add_option("--family", family);
  params->add_option("--rank", rank);
  params->add_flag("--json", as_json);

  auto* nf = app.add_subcommand("nf", "normal form of a generator word in the double affine Weyl group");
  nf->add_option("--family", family)->required();
  nf->add_option("--rank", rank)->required();
  nf->add_option("--word", word)->required();
  nf->add_flag("--c-variant", cvar);
  nf->add_flag("--json", as_json);

  auto* autoc = app.add_subcommand("autocheck", "automorphism verdicts, optionally for one matrix");
  autoc->add_option("--family", family)->required();
  autoc->add_option("--rank", rank)->required();
  autoc->add_option("--matrix", matrix);
  autoc->add_flag("--json", as_json);

  auto* roots = app.add_subcommand("rootsys", "affine root data as JSON");
  roots->add_option("--type", rtype, "e.g. C3^(1), A4^(2)")->required();

  auto* cosets = app.add_subcommand("cosets", "left coset representatives of Gamma_1(r)");
  cosets->add_option("--level", level)->required()->check(CLI::Range(1, 12));
  cosets->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      std::vector<VerificationReport> reps;
      if (sweep) {
        std::vector<std::function<VerificationReport()>> jobs;
        for (const auto& [l, s] : sweep_matrix())
          for (auto& j : suites_for(l, suite == "all" ? s : suite)) jobs.push_back(j);
        reps = run_all(jobs);
      } else {
        if (family.empty()) throw BadArgs("--family and --rank are required without --sweep");
        reps = run_all(suites_for(label_from(family, rank, large), suite));
      }
      print_reports(reps, as_json);
      return status_of(reps);
    }

    if (*decomp) {
      const Mat2 m = matrix_arg(matrix);
      const int r = prime ? 2 : level;
      const Group g = prime ? Group::Gamma1Prime : Group::Gamma1;
      if (!member(m, g, r)) {
        std::cerr << "error: " << to_string(m) << (prime ? " is not in Gamma_1(2)'" : " is not in Gamma_1(" + std::to_string(r) + ")")
                  << "\n";
        return 1;
      }
      const GWord w = prime ? decompose_prime(m) : decompose(m, r);
      const bool back = (prime ? evaluate_prime(w) : evaluate(w, r)) == m;
      if (as_json) {
        json j;
        j["matrix"] = to_string(m);
        j["level"] = r;
        j["prime"] = prime;
        j["word"] = format_gword(w);
        j["length"] = w.size();
        j["braid"] = prime ? format_gword(w) : format_braid(braid_lift(w, r));
        j["round_trip"] = back;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << format_gword(w) << "\n";
        std::cout << "round trip: " << (back ? "ok" : "FAILED") << "\n";
      }
      return back ? 0 : 1;
    }

    if (*invol) {
      const auto l = label_from(family, rank, false);
      const Mat2 m = matrix_arg(matrix);
      const auto v = basic_involution_check(m, l, cvar);
      if (as_json) {
        json j;
        j["label"] = to_string(l);
        j["matrix"] = to_string(m);
        j["upsilon_member"] = v.in_upsilon;
        j["involution"] = v.involution;
        j["word"] = v.word;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "member: " << (v.in_upsilon ? "yes" : "no") << "  involution: " << (v.involution ? "yes" : "no")
                  << "  word: " << (v.word.empty() ? "(empty)" : v.word) << "\n";
      }
      return 0;
    }

    if (*diag) {
      const auto d = build_diagram(label_from(family, rank, true));
      std::cout << (djson && !dot ? to_json(d) : export_dot(d));
      if (djson && !dot) std::cout << "\n";
      return 0;
    }

    if (*params) {
      if (!system.empty()) {
        SpecializationRule r;
        try {
          r = specialize(system, n);
        } catch (const Error& e) {
          throw BadArgs(e.what());
        }
        if (as_json)
          std::cout << to_json(r) << "\n";
        else
          std::cout << r.system << " -> " << to_string(r.target) << ": " << r.generic_count << " generic, "
                    << r.final_count << " after specialization\n";
        return 0;
      }
      if (family.empty()) throw BadArgs("params needs --system or --family/--rank");
      const auto l = label_from(family, rank, true);
      const auto p = generic_parameters(l);
      if (as_json) {
        json j;
        j["label"] = to_string(l);
        j["generic_count"] = p.symbols.size();
        j["symbols"] = p.symbols;
        json q = json::array();
        for (const auto& rel : quadratic_relations(l)) q.push_back(rel.text);
        j["quadratic_relations"] = q;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << to_string(l) << ": " << p.symbols.size() << " parameters";
        for (const auto& s : p.symbols) std::cout << " " << s;
        std::cout << "\n";
      }
      return 0;
    }

    if (*nf) {
      const auto p = build_presentation(label_from(family, rank, true), cvar);
      Word w;
      try {
        w = parse_word(p, word);
      } catch (const Error& e) {
        throw BadArgs(e.what());
      }
      const auto m = phi_dictionary(p);
      const auto g = m.eval(w);
      if (as_json) {
        json j;
        j["label"] = to_string(p.diagram.label);
        j["word"] = format_word(p, w);
        j["normal_form"] = m.group.to_string(g);
        j["k"] = g.k.get_str();
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << m.group.to_string(g) << "\n";
      }
      return 0;
    }

    if (*autoc) {
      const auto l = label_from(family, rank, false);
      std::vector<VerificationReport> reps;
      if (matrix.empty()) {
        reps = run_all(suites_for(l, "auto"));
      } else {
        const auto v = basic_involution_check(matrix_arg(matrix), l);
        VerificationReport r;
        r.suite = "autocheck";
        r.label = to_string(l);
        r.add("matrix " + to_string(matrix_arg(matrix)) + " in Upsilon", v.in_upsilon, v.word);
        r.add("(e g)^2 = id at Weyl level", v.involution, v.word);
        reps.push_back(r);
        if (as_json) {
          json j = json::parse(r.to_json());
          std::cout << j.dump(2) << "\n";
        } else {
          print_reports(reps, false);
        }
        return 0;
      }
      print_reports(reps, as_json);
      return status_of(reps);
    }

    if (*roots) {
      AffineType t;
      try {
        t = parse_affine_type(rtype);
      } catch (const Error& e) {
        throw BadArgs(e.what());
      }
      std::cout << build_root_system(t).to_json() << "\n";
      return 0;
    }

    if (*cosets) {
      const auto ct = coset_table(level);
      if (as_json) {
        json j;
        j["level"] = level;
        j["index"] = ct.index();
        j["representatives"] = ct.reps;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "index " << ct.index() << "\n";
        for (const auto& s : ct.reps) std::cout << "  " << (s.empty() ? "I" : s) << "\n";
      }
      return 0;
    }
  } catch (const BadArgs& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
