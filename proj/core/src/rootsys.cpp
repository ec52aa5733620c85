#include "dacox/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <regex>

#include <json.hpp>

namespace dacox {

std::string to_string(const AffineType& t) {
  return std::string(1, t.letter) + std::to_string(t.index) + "^(" + std::to_string(t.twist) + ")";
}

void validate(const AffineType& t) {
  const std::string s = to_string(t);
  bool ok = false;
  if (t.twist == 1) {
    switch (t.letter) {
      case 'A': ok = t.index >= 1; break;
      case 'B': ok = t.index >= 3; break;
      case 'C': ok = t.index >= 2; break;
      case 'D': ok = t.index >= 4; break;
      case 'E': ok = t.index >= 6 && t.index <= 8; break;
      case 'F': ok = t.index == 4; break;
      case 'G': ok = t.index == 2; break;
      default: break;
    }
  } else if (t.twist == 2) {
    if (t.letter == 'A') ok = t.index >= 2;
    if (t.letter == 'D') ok = t.index >= 4;
    if (t.letter == 'E') ok = t.index == 6;
  } else if (t.twist == 3) {
    ok = t.letter == 'D' && t.index == 4;
  }
  require(ok, "unknown affine type " + s);
}

AffineType parse_affine_type(const std::string& s) {
  static const std::regex re(R"(^\s*([A-Ga-g])_?\{?(\d+)\}?\s*\^\s*\(?\s*(\d)\s*\)?\s*$)");
  std::smatch m;
  require(std::regex_match(s, m, re), "cannot parse affine type '" + s + "'");
  AffineType t{static_cast<char>(std::toupper(m[1].str()[0])), std::stoi(m[2]), std::stoi(m[3])};
  if (t.twist == 2 && t.letter == 'D' && t.index == 3) t = AffineType{'A', 3, 2};
  validate(t);
  return t;
}

// ---------------------------------------------------------------- finite

Rational FiniteRootData::pair(const IntVec& x, const IntVec& y) const {
  Rational s = 0;
  for (int i = 0; i < n; ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < n; ++j)
      if (y[j]) s += gram[i][j] * Rational(static_cast<long>(x[i] * y[j]));
  }
  return s;
}

Rational FiniteRootData::pair(const RatVec& x, const RatVec& y) const {
  Rational s = 0;
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n; ++j)
      if (y[j] != 0) s += gram[i][j] * x[i] * y[j];
  }
  return s;
}

bool FiniteRootData::is_root(const IntVec& v) const {
  return index.count(v) > 0 || index.count(-v) > 0;
}

std::int64_t FiniteRootData::cartan_pairing(const IntVec& x, int i) const {
  std::int64_t s = 0;
  for (int j = 0; j < n; ++j) s += x[j] * cartan[i][j];
  return s;
}

IntVec FiniteRootData::coroot_coords(const IntVec& beta) const {
  Rational nb = norm(beta);
  RatVec c(n);
  for (int i = 0; i < n; ++i) c[i] = Rational(static_cast<long>(beta[i])) * gram[i][i] / nb;
  return to_int(c);
}

IntVec FiniteRootData::highest_root() const { return positive.back(); }

IntVec FiniteRootData::short_dominant_root() const {
  const IntVec* best = nullptr;
  Rational best_norm;
  for (const auto& b : positive) {
    bool dom = true;
    for (int i = 0; i < n && dom; ++i)
      if (cartan_pairing(b, i) < 0) dom = false;
    if (!dom) continue;
    Rational nb = norm(b);
    if (!best || nb < best_norm) {
      best = &b;
      best_norm = nb;
    }
  }
  return *best;
}

bool FiniteRootData::simply_laced() const {
  for (int i = 0; i < n; ++i)
    if (gram[i][i] != gram[0][0]) return false;
  return true;
}

std::string FiniteRootData::name() const { return std::string(1, letter) + std::to_string(n); }

FiniteRootData build_finite(char letter, int n, const Rational& scale) {
  FiniteRootData f;
  f.letter = letter;
  f.n = n;
  std::vector<Rational> nrm(n, Rational(2));
  std::vector<std::pair<int, int>> edges;
  auto chain = [&](int len) {
    for (int i = 0; i + 1 < len; ++i) edges.emplace_back(i, i + 1);
  };
  switch (letter) {
    case 'A':
      require(n >= 1, "A_n needs n >= 1");
      chain(n);
      break;
    case 'B':
      require(n >= 2, "B_n needs n >= 2");
      chain(n);
      nrm[n - 1] = 1;
      break;
    case 'C':
      require(n >= 1, "C_n needs n >= 1");
      chain(n);
      for (int i = 0; i + 1 < n; ++i) nrm[i] = 1;
      break;
    case 'D':
      require(n >= 4, "D_n needs n >= 4");
      chain(n - 1);
      edges.emplace_back(n - 3, n - 1);
      break;
    case 'E':
      require(n >= 6 && n <= 8, "E_n needs 6 <= n <= 8");
      chain(n - 1);
      edges.emplace_back(n == 8 ? 4 : 2, n - 1);
      break;
    case 'F':
      require(n == 4, "F_n needs n = 4");
      chain(4);
      nrm[2] = nrm[3] = 1;
      break;
    case 'G':
      require(n == 2, "G_n needs n = 2");
      chain(2);
      nrm[1] = Rational(2, 3);
      break;
    default:
      throw Error(std::string("unknown finite type ") + letter);
  }
  f.gram.assign(n, RatVec(n, Rational(0)));
  for (int i = 0; i < n; ++i) f.gram[i][i] = nrm[i] * scale;
  for (auto [i, j] : edges) {
    Rational v = -std::max(nrm[i], nrm[j]) * scale / 2;
    f.gram[i][j] = f.gram[j][i] = v;
  }
  f.cartan.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational a = 2 * f.gram[i][j] / f.gram[i][i];
      f.cartan[i][j] = static_cast<int>(to_i64(a));
    }

  // closure by root strings, height by height
  std::vector<IntVec> layer;
  for (int i = 0; i < n; ++i) {
    IntVec v(n, 0);
    v[i] = 1;
    layer.push_back(v);
  }
  while (!layer.empty()) {
    for (const auto& b : layer) {
      f.index.emplace(b, static_cast<int>(f.positive.size()));
      f.positive.push_back(b);
    }
    std::vector<IntVec> next;
    for (const auto& b : layer) {
      for (int i = 0; i < n; ++i) {
        IntVec c = b;
        int p = 0;
        while (true) {
          c[i] -= 1;
          if (!f.index.count(c)) break;
          ++p;
        }
        std::int64_t q = p - f.cartan_pairing(b, i);
        if (q > 0) {
          IntVec up = b;
          up[i] += 1;
          if (std::find(next.begin(), next.end(), up) == next.end()) next.push_back(up);
        }
      }
    }
    std::sort(next.begin(), next.end(), std::greater<>());
    layer = std::move(next);
  }
  return f;
}

// ---------------------------------------------------------------- affine

namespace {

struct FiniteChoice {
  char letter;
  int n;
  int scale;
};

FiniteChoice finite_part(const AffineType& t) {
  if (t.twist == 1) return {t.letter, t.index, 1};
  if (t.twist == 3) return {'G', 2, 3};
  if (t.letter == 'E') return {'F', 4, 2};
  if (t.letter == 'D') return {'B', t.index - 1, 2};
  if (t.index % 2 == 0) return {'C', t.index / 2, 2};
  int n = (t.index + 1) / 2;
  // A3^(2) is realized on B2 numbering (alpha_1 long), matching D3^(2)
  if (n == 2) return {'B', 2, 2};
  return {'C', n, 2};
}

}  // namespace

RootSystemData build_root_system(const AffineType& t) {
  validate(t);
  RootSystemData rs;
  auto fc = finite_part(t);
  rs.fin = build_finite(fc.letter, fc.n, fc.scale);
  const int n = fc.n;
  const auto& F = rs.fin;
  bool a2n = t.twist == 2 && t.letter == 'A' && t.index % 2 == 0;

  rs.phi = F.highest_root();
  rs.theta = (t.twist == 1 || a2n) ? rs.phi : F.short_dominant_root();
  AffineCartanData& C = rs.cartan;
  C.type = t;
  C.n = n;
  C.a0 = a2n ? 2 : 1;

  auto G = affine_gram(rs);
  C.a.assign(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) C.a[i][j] = static_cast<int>(to_i64(2 * G[i][j] / G[i][i]));

  C.marks.resize(n + 1);
  C.comarks.resize(n + 1);
  C.d.resize(n + 1);
  C.e.resize(n + 1);
  C.marks[0] = C.a0;
  for (int i = 1; i <= n; ++i) C.marks[i] = static_cast<long>(rs.theta[i - 1]);
  Rational rmax = 0;
  for (int i = 0; i <= n; ++i) {
    C.comarks[i] = C.marks[i] * G[i][i] / 2;
    require(is_integer(C.comarks[i]), "non-integral comark");
    C.d[i] = 2 / G[i][i];
    rmax = std::max(rmax, Rational(G[i][i] / 2));
  }
  require(C.comarks[0] == 1, "a_0^vee != 1 for " + to_string(t));
  for (int i = 0; i <= n; ++i) C.e[i] = std::max(Rational(1, C.a0), C.d[i]);
  C.r = static_cast<int>(to_i64(rmax));
  require(C.r == t.twist, "twist mismatch for " + to_string(t));

  auto touching = [&](const IntVec& v) {
    for (int i = 0; i < n; ++i)
      if (F.cartan_pairing(v, i) != 0) return i + 1;
    return 0;
  };
  rs.i_theta = touching(rs.theta);
  rs.i_phi = touching(rs.phi);
  rs.ell0 = C.a[0][rs.i_theta] * C.a[rs.i_theta][0];

  if (!rs.theta_is_phi()) {
    rs.theta_prime = rs.phi - rs.theta;
    // -s_theta(phi) = -(phi - <phi, theta^vee> theta)
    Rational c = 2 * F.pair(rs.phi, rs.theta) / F.norm(rs.theta);
    rs.phi_prime = static_cast<std::int64_t>(to_i64(c)) * rs.theta - rs.phi;
  }

  rs.A.resize(n);
  for (int i = 0; i < n; ++i) {
    rs.A[i] = RatVec(n, Rational(0));
    rs.A[i][i] = C.e[i + 1];
  }
  return rs;
}

std::vector<RatVec> affine_gram(const RootSystemData& rs) {
  const auto& F = rs.fin;
  const int n = F.n;
  const Rational a0(rs.cartan.a0);
  std::vector<RatVec> G(n + 1, RatVec(n + 1, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G[i + 1][j + 1] = F.gram[i][j];
  for (int j = 0; j < n; ++j) {
    IntVec ej(n, 0);
    ej[j] = 1;
    G[0][j + 1] = G[j + 1][0] = -F.pair(rs.theta, ej) / a0;
  }
  G[0][0] = F.norm(rs.theta) / (a0 * a0);
  return G;
}

RootVector RootSystemData::alpha(int i) const {
  const int n = rank();
  RootVector v{RatVec(n, Rational(0)), 0, 0};
  if (i == 0) {
    Rational inv(1, cartan.a0);
    for (int j = 0; j < n; ++j) v.fin[j] = -inv * static_cast<long>(theta[j]);
    v.delta = inv;
  } else {
    v.fin[i - 1] = 1;
  }
  return v;
}

RootVector RootSystemData::delta() const { return RootVector{RatVec(rank(), Rational(0)), 1, 0}; }
RootVector RootSystemData::lambda0() const { return RootVector{RatVec(rank(), Rational(0)), 0, 1}; }
RootVector RootSystemData::finite_vector(const RatVec& v) const { return RootVector{v, 0, 0}; }

Rational RootSystemData::bilinear(const RootVector& x, const RootVector& y) const {
  require(x.fin.size() == y.fin.size() && static_cast<int>(x.fin.size()) == rank(), "dimension mismatch");
  return fin.pair(x.fin, y.fin) + x.delta * y.lambda0 + x.lambda0 * y.delta;
}

RootVector RootSystemData::coroot(const RootVector& x) const {
  Rational nx = bilinear(x, x);
  require(nx != 0, "coroot of an isotropic vector");
  Rational s = 2 / nx;
  return RootVector{s * x.fin, s * x.delta, s * x.lambda0};
}

Rational RootSystemData::max_root_norm() const {
  Rational m = 0;
  for (const auto& b : fin.positive) m = std::max(m, Rational(fin.norm(b)));
  // alpha_0 = (delta - theta)/a_0 and its translates are real roots too
  m = std::max(m, Rational(bilinear(alpha(0), alpha(0))));
  return m;
}

RatVec RootSystemData::nu(const IntVec& beta) const {
  RatVec v(rank());
  for (int i = 0; i < rank(); ++i) v[i] = cartan.d[i + 1] * static_cast<long>(beta[i]);
  return v;
}

IntVec RootSystemData::nu_inverse(const RatVec& v) const {
  RatVec c(rank());
  for (int i = 0; i < rank(); ++i) c[i] = v[i] / cartan.d[i + 1];
  return to_int(c);
}

bool RootSystemData::M_is_nu_coroot_lattice() const {
  for (int i = 1; i <= rank(); ++i)
    if (cartan.e[i] != cartan.d[i]) return false;
  return true;
}

bool RootSystemData::M_is_root_lattice() const {
  for (int i = 1; i <= rank(); ++i)
    if (cartan.e[i] != 1) return false;
  return true;
}

std::string RootSystemData::to_json() const {
  nlohmann::ordered_json j;
  j["type"] = label();
  j["finite"] = fin.name();
  j["rank"] = rank();
  j["cartan"] = cartan.a;
  auto qs = [](const std::vector<Rational>& v) {
    std::vector<std::string> s;
    for (const auto& x : v) s.push_back(x.get_str());
    return s;
  };
  j["marks"] = qs(cartan.marks);
  j["comarks"] = qs(cartan.comarks);
  j["d"] = qs(cartan.d);
  j["e"] = qs(cartan.e);
  j["a0"] = cartan.a0;
  j["r"] = cartan.r;
  std::vector<std::vector<std::string>> gram;
  for (const auto& row : affine_gram(*this)) gram.push_back(qs(row));
  j["gram"] = gram;
  j["theta"] = theta;
  j["phi"] = phi;
  if (!theta_is_phi()) {
    j["theta_prime"] = theta_prime;
    j["phi_prime"] = phi_prime;
  }
  j["i_theta"] = i_theta;
  j["i_phi"] = i_phi;
  j["ell0"] = ell0;
  j["positive_roots"] = fin.positive;
  return j.dump(2);
}

}  // namespace dacox
