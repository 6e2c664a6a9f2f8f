#include "picard/numeric.hpp"

#include <algorithm>
#include <sstream>

#include "picard/errors.hpp"

namespace picard {

bool is_integral(const RatVec& v) {
  for (const Rat& x : v)
    if (x.get_den() != 1) return false;
  return true;
}

IntVec to_int(const RatVec& v) {
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1) fail("NotIntegral", "rational vector has a denominator");
    r[i] = v[i].get_num();
  }
  return r;
}

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const IntVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec scale(const Int& c, const IntVec& v) {
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

RatVec add(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec scale(const Rat& c, const RatVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

bool is_zero(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(const RatVec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

bool lex_less(const IntVec& a, const IntVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

bool lex_less(const RatVec& a, const RatVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

void sort_lex(std::vector<IntVec>& vs) {
  std::sort(vs.begin(), vs.end(), static_cast<bool (*)(const IntVec&, const IntVec&)>(lex_less));
}

void sort_lex(std::vector<RatVec>& vs) {
  std::sort(vs.begin(), vs.end(), static_cast<bool (*)(const RatVec&, const RatVec&)>(lex_less));
}

Int content(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

IntVec primitive_direction(const RatVec& v) {
  Int den = 1;
  for (const Rat& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
  IntVec w(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Rat scaled = v[i] * Rat(den);
    w[i] = scaled.get_num();
  }
  Int g = content(w);
  if (g == 0) fail("ZeroVector", "primitive direction of the zero vector");
  for (Int& x : w) x /= g;
  return w;
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) fail("SchemaError", "empty number literal");
  try {
    Rat r(s);
    r.canonicalize();
    if (r.get_den() <= 0) fail("SchemaError", "nonpositive denominator in '" + s + "'");
    return r;
  } catch (const std::invalid_argument&) {
    fail("SchemaError", "bad number literal '" + s + "'");
  }
}

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string vec_to_string(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::string vec_to_string(const RatVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

}  // namespace picard
