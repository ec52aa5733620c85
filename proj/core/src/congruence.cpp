#include "dacox/congruence.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <regex>
#include <sstream>

namespace dacox {

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 operator-(const Mat2& x) { return Mat2{-x.a, -x.b, -x.c, -x.d}; }

Integer det(const Mat2& m) { return m.a * m.d - m.b * m.c; }

Mat2 inverse(const Mat2& m) {
  require(det(m) == 1, "inverse: determinant is not 1");
  return Mat2{m.d, -m.b, -m.c, m.a};
}

Mat2 identity2() { return Mat2{}; }

Mat2 mat_pow(const Mat2& m, long e) {
  Mat2 base = e < 0 ? inverse(m) : m;
  unsigned long k = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
  Mat2 acc;
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

Mat2 u12(long k) { return Mat2{1, -k, 0, 1}; }
Mat2 u21(long k) { return Mat2{1, 0, k, 1}; }

Mat2 e_conj(const Mat2& m, int r) {
  require(mpz_divisible_ui_p(m.c.get_mpz_t(), r), "e(r) conjugation needs r | c");
  return Mat2{m.d, m.c / r, r * m.b, m.a};
}

std::string to_string(const Mat2& m) {
  return m.a.get_str() + "," + m.b.get_str() + ";" + m.c.get_str() + "," + m.d.get_str();
}

Mat2 parse_matrix(const std::string& s) {
  static const std::regex re(R"(^\s*\[?\s*(-?\d+)\s*,\s*(-?\d+)\s*;\s*(-?\d+)\s*,\s*(-?\d+)\s*\]?\s*$)");
  std::smatch m;
  require(std::regex_match(s, m, re), "cannot parse matrix '" + s + "' (expected a,b;c,d)");
  return Mat2{Integer(m[1].str()), Integer(m[2].str()), Integer(m[3].str()), Integer(m[4].str())};
}

namespace {

bool cong(const Integer& x, long y, long n) {
  Integer t = x - y;
  return mpz_divisible_ui_p(t.get_mpz_t(), n) != 0;
}

}  // namespace

bool member(const Mat2& m, Group g, int N) {
  require(det(m) == 1, "matrix " + to_string(m) + " has determinant " + det(m).get_str());
  switch (g) {
    case Group::Gamma:
      require(N >= 1, "level must be positive");
      return cong(m.a, 1, N) && cong(m.d, 1, N) && cong(m.b, 0, N) && cong(m.c, 0, N);
    case Group::Gamma1:
      require(N >= 1, "level must be positive");
      return cong(m.a, 1, N) && cong(m.d, 1, N) && cong(m.c, 0, N);
    case Group::Gamma1Prime: return cong(m.a + m.d, 0, 2) && cong(m.b + m.c, 0, 2);
    case Group::Upsilon1: return member(m, Group::Gamma1, N) && m.c == -N * m.b;
    case Group::Upsilon1Prime: return m.c == -m.b && member(m, Group::Gamma1Prime, 2);
  }
  return false;
}

XiElement xi_mul(const XiElement& x, const XiElement& y, int r) {
  // m1 e^f1 m2 e^f2 = m1 (e^f1 m2 e^f1) e^(f1+f2)
  return XiElement{x.m * (x.flip ? e_conj(y.m, r) : y.m), x.flip != y.flip};
}

// ---------------------------------------------------------------- words

GWord free_reduce(GWord w) {
  GWord out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().g == l.g && out.back().e == -l.e)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

GWord inverse(const GWord& w) {
  GWord out(w.rbegin(), w.rend());
  for (auto& l : out) l.e = -l.e;
  return out;
}

Mat2 evaluate(const GWord& w, int r) {
  Mat2 m;
  for (const auto& l : w) m = m * (l.g == 1 ? u12(l.e) : u21(static_cast<long>(l.e) * r));
  return m;
}

std::string format_gword(const GWord& w) {
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += ' ';
    s += l.g == 1 ? 'A' : 'B';
    if (l.e < 0) s += '\'';
  }
  return s;
}

GWord parse_gword(const std::string& s) {
  GWord w;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == ' ' || c == '\t' || c == '*' || c == '.') continue;
    if (c == 'A' || c == 'a' || c == 'B' || c == 'b') {
      GLetter l{(c == 'A' || c == 'a') ? 1 : 2, 1};
      if (i + 1 < s.size() && s[i + 1] == '\'') {
        l.e = -1;
        ++i;
      }
      w.push_back(l);
      continue;
    }
    throw Error(std::string("unexpected character '") + c + "' in word '" + s + "'");
  }
  return w;
}

GWord central_word(int r) {
  require(r >= 1 && r <= 3, "level must be 1, 2 or 3");
  GWord ab{{1, 1}, {2, 1}};
  GWord out;
  for (int i = 0; i < (r == 2 ? 2 : 3); ++i) out.insert(out.end(), ab.begin(), ab.end());
  return out;
}

// ---------------------------------------------------------------- cosets

namespace {

std::pair<long, long> column_mod(const Mat2& g, int r) {
  auto md = [r](const Integer& x) {
    Integer t = x % r;
    if (t < 0) t += r;
    return t.get_si();
  };
  return {md(g.a), md(g.c)};
}

}  // namespace

bool same_left_coset(const Mat2& g, const Mat2& h, int r) { return member(inverse(h) * g, Group::Gamma1, r); }

CosetTable coset_table(int r) {
  require(r >= 1, "level must be positive");
  CosetTable t;
  t.r = r;
  std::map<std::pair<long, long>, int> seen;
  std::deque<int> queue;
  t.reps.push_back("I");
  t.mats.push_back(identity2());
  seen[column_mod(identity2(), r)] = 0;
  queue.push_back(0);
  while (!queue.empty()) {
    const int k = queue.front();
    queue.pop_front();
    for (int gen = 0; gen < 2; ++gen) {
      const Mat2 g = (gen == 0 ? u12() : u21()) * t.mats[k];
      const auto key = column_mod(g, r);
      if (seen.count(key)) continue;
      seen[key] = t.index();
      const std::string name = gen == 0 ? "u12" : "u21";
      t.reps.push_back(t.reps[k] == "I" ? name : name + " " + t.reps[k]);
      t.mats.push_back(g);
      queue.push_back(t.index() - 1);
    }
  }
  return t;
}

// ---------------------------------------------------------------- decomposition

namespace {

GWord power_letter(int g, long e) {
  GWord w;
  for (long i = 0; i < (e < 0 ? -e : e); ++i) w.push_back(GLetter{g, e < 0 ? -1 : 1});
  return w;
}

GWord cat(std::initializer_list<GWord> parts) {
  GWord w;
  for (const auto& p : parts) w.insert(w.end(), p.begin(), p.end());
  return w;
}

Integer iabs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// nearest integer to p / q
Integer round_div(const Integer& p, const Integer& q) {
  Integer num = 2 * p + q, den = 2 * q;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return f;
}

GWord decompose_upsilon(Mat2 m, int r) {
  // gamma = L_1 ... L_k gamma_k R_k ... R_1
  GWord left, right;
  const GLetter A{1, 1}, B{2, 1}, Ai{1, -1}, Bi{2, -1};
  while (true) {
    if (m.b == 0) {
      GWord mid = m.a == 1 ? GWord{} : central_word(r);
      return cat({left, mid, inverse(right)});
    }
    if (r == 1 && iabs(m.b) == 1) {
      GWord mid;
      if (m.b == -1 && m.a == 0)
        mid = cat({GWord{A, B}, power_letter(1, Integer(1 - m.d).get_si())});
      else if (m.b == -1 && m.d == 0)
        mid = cat({power_letter(1, Integer(1 - m.a).get_si()), GWord{B, A}});
      else if (m.b == 1 && m.d == 0)
        mid = inverse(cat({GWord{A, B}, power_letter(1, Integer(1 - m.a).get_si())}));
      else
        mid = inverse(cat({power_letter(1, Integer(1 - m.d).get_si()), GWord{B, A}}));
      return cat({left, mid, inverse(right)});
    }
    // the four products of the descent, in order: u12 g u21^r, u21^r g u12, their inverse versions
    const Mat2 cand[4] = {u12() * m * u21(r), u21(r) * m * u12(), u12(-1) * m * u21(-r), u21(-r) * m * u12(-1)};
    int best = -1;
    for (int i = 0; i < 4; ++i) {
      if (iabs(cand[i].b) >= iabs(m.b)) continue;
      if (best < 0 || iabs(cand[i].a) + iabs(cand[i].d) < iabs(cand[best].a) + iabs(cand[best].d)) best = i;
    }
    require(best >= 0, "descent stalled at " + to_string(m));
    // gamma = X^-1 gamma' Y^-1 where gamma' = X gamma Y
    static const GLetter L[4][2] = {{A, B}, {B, A}, {Ai, Bi}, {Bi, Ai}};
    left.push_back(GLetter{L[best][0].g, -L[best][0].e});
    right.push_back(GLetter{L[best][1].g, L[best][1].e});
    m = cand[best];
  }
}

GWord decompose_euclid(Mat2 m, int r) {
  // P m = upper triangular, P accumulated as a word applied on the left
  GWord pre;  // P = pre (letters applied right to left as encountered, stored in product order)
  auto apply = [&](int g, long k) {
    if (k == 0) return;
    m = (g == 1 ? u12(k) : u21(k * r)) * m;
    GWord p = power_letter(g, k);
    pre.insert(pre.begin(), p.begin(), p.end());
  };
  while (m.c != 0) {
    if (m.a == 0) {
      apply(1, -1);
      continue;
    }
    // u21^{rk}: c -> c + r k a, when that shortens c; otherwise u12^k: a -> a - k c
    const Integer k = round_div(-m.c, Integer(r) * m.a);
    if (iabs(m.c + r * k * m.a) < iabs(m.c))
      apply(2, k.get_si());
    else
      apply(1, round_div(m.a, m.c).get_si());
  }
  GWord tail;
  if (m.a == 1)
    tail = power_letter(1, Integer(-m.b).get_si());
  else {
    require(r != 3, "-I is not in Gamma_1(3)");
    tail = cat({central_word(r), power_letter(1, m.b.get_si())});
  }
  return cat({inverse(pre), tail});
}

}  // namespace

GWord decompose(const Mat2& m, int r) {
  require(r >= 1 && r <= 3, "level must be 1, 2 or 3");
  require(member(m, Group::Gamma1, r), to_string(m) + " is not in Gamma_1(" + std::to_string(r) + ")");
  GWord w = member(m, Group::Upsilon1, r) ? decompose_upsilon(m, r) : decompose_euclid(m, r);
  w = free_reduce(w);
  require(evaluate(w, r) == m, "decomposition does not evaluate back to " + to_string(m));
  return w;
}

Mat2 evaluate_prime(const GWord& w) {
  const Mat2 x = u21() * u12() * u21(-1), y = u21(2);
  Mat2 m;
  for (const auto& l : w) m = m * mat_pow(l.g == 1 ? x : y, l.e);
  return m;
}

GWord decompose_prime(const Mat2& m) {
  require(member(m, Group::Gamma1Prime, 2), to_string(m) + " is not in Gamma_1(2)'");
  GWord w = decompose(u21(-1) * m * u21(), 2);
  require(evaluate_prime(w) == m, "primed decomposition failed");
  return w;
}

BraidWord braid_lift(const GWord& w, int r) {
  require(r >= 1 && r <= 3, "level must be 1, 2 or 3");
  for (const auto& l : w) require((l.g == 1 || l.g == 2) && (l.e == 1 || l.e == -1), "bad letter");
  return BraidWord{r, w};
}

std::string format_braid(const BraidWord& w) {
  std::string s = format_gword(w.letters);
  for (auto& c : s) c = c == 'A' ? 'a' : c == 'B' ? 'b' : c;
  return s;
}

GWord random_gword(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), coin(0, 1);
  GWord w;
  const int k = len(rng);
  for (int i = 0; i < k; ++i) w.push_back(GLetter{1 + coin(rng), coin(rng) ? 1 : -1});
  return w;
}

Mat2 random_gamma1(std::mt19937_64& rng, int r, int max_len) { return evaluate(random_gword(rng, max_len), r); }

std::vector<Mat2> upsilon_members(int r, long bound) {
  std::vector<Mat2> out;
  for (long b = -bound; b <= bound; ++b) {
    if (std::abs(r * b) > bound) continue;
    for (long a = -bound; a <= bound; ++a)
      for (long d = -bound; d <= bound; ++d) {
        if (a * d + r * b * b != 1) continue;
        Mat2 m{a, b, -r * b, d};
        if (member(m, Group::Upsilon1, r)) out.push_back(m);
      }
  }
  return out;
}

std::vector<Mat2> upsilon_prime_members(long bound) {
  std::vector<Mat2> out;
  for (const auto& m : upsilon_members(1, bound))
    if (member(m, Group::Upsilon1Prime, 2)) out.push_back(m);
  return out;
}

// ---------------------------------------------------------------- identities

VerificationReport identities_suite(std::uint64_t seed) {
  VerificationReport rep;
  rep.suite = "congruence-identities";
  const Mat2 I = identity2();
  auto chk = [&](const std::string& id, const Mat2& got, const Mat2& want) {
    rep.add(id, got == want, to_string(got) + " != " + to_string(want));
  };
  chk("braid u12u21u12 = u21u12u21", u12() * u21() * u12(), u21() * u12() * u21());
  chk("u12u21u12 = [[0,-1],[1,0]]", u12() * u21() * u12(), Mat2{0, -1, 1, 0});
  chk("(u12u21)^3 = -I", mat_pow(u12() * u21(), 3), -I);
  chk("(u12u21^2)^2 = -I", mat_pow(u12() * u21(2), 2), -I);
  chk("(u12u21^3)^3 = I", mat_pow(u12() * u21(3), 3), I);
  for (int r = 1; r <= 3; ++r) {
    const std::string s = "(r=" + std::to_string(r) + ")";
    chk("e u12 e = u21^-r " + s, e_conj(u12(), r), u21(-r));
    chk("e^2 = I " + s, e_conj(e_conj(u12(), r), r), u12());
    // e^2 = I as elements of Xi
    const XiElement e{I, true};
    rep.add("xi e*e = 1 " + s, xi_mul(e, e, r) == XiElement{I, false});
  }
  rep.add("-I in Gamma_1(2)", member(-I, Group::Gamma1, 2));
  rep.add("-I not in Gamma_1(3)", !member(-I, Group::Gamma1, 3));
  rep.add("u21 not in Gamma_1(2)", !member(u21(), Group::Gamma1, 2));
  std::mt19937_64 rng(seed);
  bool conj_ok = true, back_ok = true;
  std::string w1;
  for (int i = 0; i < 50; ++i) {
    const Mat2 g = random_gamma1(rng, 2);
    const Mat2 h = u21() * g * u21(-1);
    if (!member(h, Group::Gamma1Prime, 2)) {
      conj_ok = false;
      w1 = to_string(g);
    }
    if (!member(u21(-1) * evaluate_prime(random_gword(rng, 10)) * u21(), Group::Gamma1, 2)) back_ok = false;
  }
  rep.add("u21 Gamma_1(2) u21^-1 in Gamma_1(2)'", conj_ok, w1);
  rep.add("u21^-1 Gamma_1(2)' u21 in Gamma_1(2)", back_ok);
  // Upsilon: e A e = A^-1
  for (int r = 1; r <= 3; ++r) {
    bool ok = true;
    std::string w;
    for (const auto& m : upsilon_members(r, 12)) {
      if (!(e_conj(m, r) == inverse(m))) {
        ok = false;
        w = to_string(m);
      }
      if (!member(inverse(m), Group::Upsilon1, r)) ok = false;
    }
    rep.add("Upsilon_1(" + std::to_string(r) + "): e A e = A^-1", ok, w);
  }
  return rep;
}

// ---------------------------------------------------------------- Burau

namespace {

using Laurent = std::map<int, long>;
using LMat = std::array<Laurent, 4>;

Laurent lmul(const Laurent& x, const Laurent& y) {
  Laurent z;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) z[i + j] += a * b;
  for (auto it = z.begin(); it != z.end();) it = it->second == 0 ? z.erase(it) : std::next(it);
  return z;
}

Laurent ladd(Laurent x, const Laurent& y) {
  for (const auto& [j, b] : y) x[j] += b;
  for (auto it = x.begin(); it != x.end();) it = it->second == 0 ? x.erase(it) : std::next(it);
  return x;
}

LMat lmatmul(const LMat& x, const LMat& y) {
  return LMat{ladd(lmul(x[0], y[0]), lmul(x[1], y[2])), ladd(lmul(x[0], y[1]), lmul(x[1], y[3])),
              ladd(lmul(x[2], y[0]), lmul(x[3], y[2])), ladd(lmul(x[2], y[1]), lmul(x[3], y[3]))};
}

LMat burau_letter(const GLetter& l) {
  // sigma1 = [[-t,1],[0,1]], sigma2 = [[1,0],[t,-t]] and their inverses
  if (l.g == 1)
    return l.e > 0 ? LMat{Laurent{{1, -1}}, Laurent{{0, 1}}, Laurent{}, Laurent{{0, 1}}}
                   : LMat{Laurent{{-1, -1}}, Laurent{{-1, 1}}, Laurent{}, Laurent{{0, 1}}};
  return l.e > 0 ? LMat{Laurent{{0, 1}}, Laurent{}, Laurent{{1, 1}}, Laurent{{1, -1}}}
                 : LMat{Laurent{{0, 1}}, Laurent{}, Laurent{{0, 1}}, Laurent{{-1, -1}}};
}

LMat burau(const GWord& w) {
  LMat m{Laurent{{0, 1}}, Laurent{}, Laurent{}, Laurent{{0, 1}}};
  for (const auto& l : w) m = lmatmul(m, burau_letter(l));
  return m;
}

}  // namespace

bool braid_equal_b3(const GWord& x, const GWord& y) { return burau(x) == burau(y); }

VerificationReport kernel_search(int max_len) {
  VerificationReport rep;
  rep.suite = "braid-kernel";
  const GWord c = central_word(1);
  long found = 0, bad = 0;
  std::string witness;
  GWord w;
  const Mat2 I = identity2();
  auto check = [&](const Mat2& m) {
    if (!(m == I || m == -I)) return;
    ++found;
    long s = 0;
    for (const auto& l : w) s += l.e;
    bool ok = s % 6 == 0;
    if (ok) {
      GWord target;
      const long k = s / 6;
      for (long i = 0; i < (k < 0 ? -k : k); ++i) {
        const GWord part = k < 0 ? inverse(c) : c;
        target.insert(target.end(), part.begin(), part.end());
      }
      ok = braid_equal_b3(w, target);
    }
    if (!ok) {
      ++bad;
      if (witness.empty()) witness = format_gword(w);
    }
  };
  // depth-first over freely reduced words
  auto dfs = [&](auto&& self, const Mat2& m) -> void {
    check(m);
    if (static_cast<int>(w.size()) == max_len) return;
    for (int g = 1; g <= 2; ++g)
      for (int e : {1, -1}) {
        if (!w.empty() && w.back().g == g && w.back().e == -e) continue;
        w.push_back(GLetter{g, e});
        self(self, m * (g == 1 ? u12(e) : u21(e)));
        w.pop_back();
      }
  };
  dfs(dfs, I);
  rep.add("kernel words up to length " + std::to_string(max_len) + " are powers of c (" + std::to_string(found) +
              " found)",
          bad == 0, witness);
  return rep;
}

}  // namespace dacox
