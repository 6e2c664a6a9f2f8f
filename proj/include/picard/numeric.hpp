#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace picard {

// Exact arithmetic carriers. All lattice data is arbitrary precision;
// rationals are kept canonical (reduced, positive denominator) so that
// equality is structural.
using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

bool is_integral(const RatVec& v);
IntVec to_int(const RatVec& v);  // requires is_integral

Int dot(const IntVec& a, const IntVec& b);
Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const IntVec& a, const RatVec& b);
inline Rat dot(const RatVec& a, const IntVec& b) { return dot(b, a); }

IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(const Int& c, const IntVec& v);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Rat& c, const RatVec& v);

bool is_zero(const IntVec& v);
bool is_zero(const RatVec& v);

// Lexicographic order, first differing entry decides.
bool lex_less(const IntVec& a, const IntVec& b);
bool lex_less(const RatVec& a, const RatVec& b);

void sort_lex(std::vector<IntVec>& vs);
void sort_lex(std::vector<RatVec>& vs);

// gcd of |entries|; zero vector gives 0.
Int content(const IntVec& v);

// Clears denominators and divides by the content: the primitive integer
// vector with the same direction. Zero vector is an error (ZeroVector).
IntVec primitive_direction(const RatVec& v);

// Parses "a", "-a" or "a/b" (b > 0 after canonicalization).
Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& r);

std::string vec_to_string(const IntVec& v);
std::string vec_to_string(const RatVec& v);

}  // namespace picard
