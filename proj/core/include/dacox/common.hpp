#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dacox {

using Rational = mpq_class;
using Integer = mpz_class;
using IntVec = std::vector<std::int64_t>;
using RatVec = std::vector<Rational>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// mpq_class(p, q) does not reduce
inline Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}

std::string to_string(const Rational& q);
std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);

RatVec to_rat(const IntVec& v);
// exact conversion; throws if some entry is not integral
IntVec to_int(const RatVec& v);
bool is_integral(const RatVec& v);
bool is_integer(const Rational& q);
std::int64_t to_i64(const Rational& q);

IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a);
IntVec operator*(std::int64_t s, const IntVec& a);
RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator*(const Rational& s, const RatVec& a);

bool is_zero(const IntVec& v);

}  // namespace dacox
