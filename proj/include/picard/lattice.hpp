#pragma once

#include <utility>
#include <vector>

#include "picard/numeric.hpp"

namespace picard {

// Dense integer matrix, row-major.
class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
  IntMat(int rows, int cols, std::vector<Int> entries);

  static IntMat identity(int n);
  static IntMat from_rows(const std::vector<IntVec>& rows);
  static IntMat from_cols(const std::vector<IntVec>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  IntVec row(int i) const;
  IntVec col(int j) const;
  std::vector<IntVec> row_list() const;

  IntMat transpose() const;
  IntMat mul(const IntMat& other) const;
  IntVec mul(const IntVec& v) const;

  Int det() const;  // square only, exact (fraction-free via rationals)
  int rank() const;

  bool operator==(const IntMat& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> a_;
};

struct HnfResult {
  IntMat h;  // row-echelon Hermite form, positive pivots, entries above a
             // pivot reduced into [0, pivot)
  IntMat u;  // unimodular, u * input = h
};

HnfResult hermite_normal_form(const IntMat& m);

struct SnfResult {
  IntMat s;  // diagonal, d_i >= 0, d_i | d_{i+1}
  IntMat u;  // unimodular
  IntMat v;  // unimodular, u * input * v = s
};

SnfResult smith_normal_form(const IntMat& m);

// Z-basis of {x : m x = 0} ∩ Z^cols; saturated, HNF-canonical, deterministic.
std::vector<IntVec> integer_kernel(const IntMat& m);

// Nontrivial elementary divisors of Z^ambient_rank / (row span of generators).
// NotFiniteIndex when the rows do not span full rank.
std::vector<Int> quotient_invariants(const IntMat& generators, int ambient_rank);

// v / gcd(|entries|), direction preserved. ZeroVector on v = 0.
IntVec primitive_part(const IntVec& v);

}  // namespace picard
