#pragma once

#include <optional>
#include <vector>

#include "picard/numeric.hpp"

// Small exact rational linear algebra used across the geometry modules.

namespace picard {

class RatMat {
 public:
  RatMat() = default;
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static RatMat from_rows(const std::vector<RatVec>& rows);
  static RatMat from_int_rows(const std::vector<IntVec>& rows);
  static RatMat from_cols(const std::vector<RatVec>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }
  RatVec row(int i) const;

  RatVec mul(const RatVec& v) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> a_;
};

int rank(RatMat m);

// Unique solution of a square system a x = b; nullopt when singular.
std::optional<RatVec> solve_square(RatMat a, RatVec b);

// Any solution of a (possibly non-square) consistent system; nullopt when
// inconsistent. Free variables are set to zero, so the result is
// deterministic.
std::optional<RatVec> solve_any(RatMat a, RatVec b);

// Basis of {x : a x = 0}, deterministic (free variables in column order).
std::vector<RatVec> nullspace(RatMat a);

// Greedily selects a maximal linearly independent subset (indices into rows).
std::vector<int> independent_subset(const std::vector<RatVec>& rows);
std::vector<int> independent_subset_int(const std::vector<IntVec>& rows);

}  // namespace picard
