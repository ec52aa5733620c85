#include "dacox/common.hpp"

namespace dacox {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const IntVec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

std::string to_string(const RatVec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + "]";
}

RatVec to_rat(const IntVec& v) {
  RatVec r;
  r.reserve(v.size());
  for (auto x : v) r.emplace_back(static_cast<long>(x));
  return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::int64_t to_i64(const Rational& q) {
  require(is_integer(q), "non-integral value " + q.get_str());
  require(q.get_num().fits_slong_p(), "integer overflow");
  return q.get_num().get_si();
}

bool is_integral(const RatVec& v) {
  for (const auto& x : v)
    if (!is_integer(x)) return false;
  return true;
}

IntVec to_int(const RatVec& v) {
  IntVec r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(to_i64(x));
  return r;
}

IntVec operator+(const IntVec& a, const IntVec& b) {
  IntVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}
IntVec operator-(const IntVec& a, const IntVec& b) {
  IntVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}
IntVec operator-(const IntVec& a) {
  IntVec r(a);
  for (auto& x : r) x = -x;
  return r;
}
IntVec operator*(std::int64_t s, const IntVec& a) {
  IntVec r(a);
  for (auto& x : r) x *= s;
  return r;
}
RatVec operator+(const RatVec& a, const RatVec& b) {
  RatVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}
RatVec operator-(const RatVec& a, const RatVec& b) {
  RatVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}
RatVec operator*(const Rational& s, const RatVec& a) {
  RatVec r(a);
  for (auto& x : r) x *= s;
  return r;
}

bool is_zero(const IntVec& v) {
  for (auto x : v)
    if (x) return false;
  return true;
}

}  // namespace dacox
