#include "picard/lattice.hpp"

#include <algorithm>

#include "picard/errors.hpp"
#include "picard/ratlin.hpp"

namespace picard {

IntMat::IntMat(int rows, int cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (size_t(rows_) * cols_ != a_.size()) fail("ShapeMismatch", "rows*cols != |entries|");
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows) {
  IntMat m(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (int(rows[i].size()) != m.cols()) fail("ShapeMismatch", "ragged rows");
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMat IntMat::from_cols(const std::vector<IntVec>& cols) {
  IntMat m(cols.empty() ? 0 : int(cols[0].size()), int(cols.size()));
  for (int j = 0; j < m.cols(); ++j) {
    if (int(cols[j].size()) != m.rows()) fail("ShapeMismatch", "ragged columns");
    for (int i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

IntVec IntMat::row(int i) const {
  IntVec r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

IntVec IntMat::col(int j) const {
  IntVec c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

std::vector<IntVec> IntMat::row_list() const {
  std::vector<IntVec> rs(rows_);
  for (int i = 0; i < rows_; ++i) rs[i] = row(i);
  return rs;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMat IntMat::mul(const IntMat& other) const {
  if (cols_ != other.rows_) fail("ShapeMismatch", "matrix product");
  IntMat r(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < other.cols_; ++j) r.at(i, j) += at(i, k) * other.at(k, j);
    }
  return r;
}

IntVec IntMat::mul(const IntVec& v) const {
  if (cols_ != int(v.size())) fail("ShapeMismatch", "matrix-vector product");
  IntVec r(rows_);
  for (int i = 0; i < rows_; ++i) {
    Int s = 0;
    for (int j = 0; j < cols_; ++j) s += at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

Int IntMat::det() const {
  if (rows_ != cols_) fail("ShapeMismatch", "determinant of non-square matrix");
  RatMat m = RatMat::from_int_rows(row_list());
  Rat d = 1;
  int n = rows_;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(c, j));
      d = -d;
    }
    d *= m.at(c, c);
    Rat inv = 1 / m.at(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (m.at(i, c) == 0) continue;
      Rat f = m.at(i, c) * inv;
      for (int j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  if (d.get_den() != 1) fail("Internal", "determinant of integer matrix not integral");
  return d.get_num();
}

int IntMat::rank() const { return picard::rank(RatMat::from_int_rows(row_list())); }

namespace {

void swap_rows(IntMat& m, int a, int b) {
  for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void negate_row(IntMat& m, int i) {
  for (int j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
}

// row a -= q * row b
void addmul_row(IntMat& m, int a, const Int& q, int b) {
  if (q == 0) return;
  for (int j = 0; j < m.cols(); ++j) m.at(a, j) -= q * m.at(b, j);
}

Int fdiv_q(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HnfResult hermite_normal_form(const IntMat& input) {
  IntMat h = input;
  IntMat u = IntMat::identity(h.rows());
  int row = 0;
  for (int col = 0; col < h.cols() && row < h.rows(); ++col) {
    // Euclidean elimination below the working row.
    for (;;) {
      int best = -1;
      for (int i = row; i < h.rows(); ++i) {
        if (h.at(i, col) == 0) continue;
        if (best < 0 || cmp(abs(h.at(i, col)), abs(h.at(best, col))) < 0) best = i;
      }
      if (best < 0) break;
      if (best != row) {
        swap_rows(h, row, best);
        swap_rows(u, row, best);
      }
      bool below = false;
      for (int i = row + 1; i < h.rows(); ++i) {
        if (h.at(i, col) == 0) continue;
        Int q = fdiv_q(h.at(i, col), h.at(row, col));
        addmul_row(h, i, q, row);
        addmul_row(u, i, q, row);
        if (h.at(i, col) != 0) below = true;
      }
      if (!below) break;
    }
    if (h.at(row, col) == 0) continue;
    if (h.at(row, col) < 0) {
      negate_row(h, row);
      negate_row(u, row);
    }
    for (int i = 0; i < row; ++i) {
      Int q = fdiv_q(h.at(i, col), h.at(row, col));
      addmul_row(h, i, q, row);
      addmul_row(u, i, q, row);
    }
    ++row;
  }
  return {h, u};
}

namespace {

void swap_cols(IntMat& m, int a, int b) {
  for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// col a -= q * col b
void addmul_col(IntMat& m, int a, const Int& q, int b) {
  if (q == 0) return;
  for (int i = 0; i < m.rows(); ++i) m.at(i, a) -= q * m.at(i, b);
}

}  // namespace

SnfResult smith_normal_form(const IntMat& input) {
  IntMat s = input;
  IntMat u = IntMat::identity(s.rows());
  IntMat v = IntMat::identity(s.cols());
  int n = std::min(s.rows(), s.cols());

  for (int t = 0; t < n; ++t) {
    // Find a nonzero pivot in the trailing submatrix.
    int pi = -1, pj = -1;
    for (int i = t; i < s.rows(); ++i)
      for (int j = t; j < s.cols(); ++j) {
        if (s.at(i, j) == 0) continue;
        if (pi < 0 || cmp(abs(s.at(i, j)), abs(s.at(pi, pj))) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    if (pi != t) {
      swap_rows(s, t, pi);
      swap_rows(u, t, pi);
    }
    if (pj != t) {
      swap_cols(s, t, pj);
      swap_cols(v, t, pj);
    }

    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < s.rows(); ++i) {
        if (s.at(i, t) == 0) continue;
        Int q = fdiv_q(s.at(i, t), s.at(t, t));
        addmul_row(s, i, q, t);
        addmul_row(u, i, q, t);
        if (s.at(i, t) != 0) {
          swap_rows(s, t, i);
          swap_rows(u, t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < s.cols(); ++j) {
        if (s.at(t, j) == 0) continue;
        Int q = fdiv_q(s.at(t, j), s.at(t, t));
        addmul_col(s, j, q, t);
        addmul_col(v, j, q, t);
        if (s.at(t, j) != 0) {
          swap_cols(s, t, j);
          swap_cols(v, t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // Pivot divides everything in the trailing block, or pull a bad row in.
      bool divides = true;
      for (int i = t + 1; i < s.rows() && divides; ++i)
        for (int j = t + 1; j < s.cols() && divides; ++j)
          if (s.at(i, j) % s.at(t, t) != 0) {
            addmul_row(s, t, Int(-1), i);  // row_t += row_i
            addmul_row(u, t, Int(-1), i);
            divides = false;
          }
      if (divides) break;
    }
    if (s.at(t, t) < 0) {
      negate_row(s, t);
      negate_row(u, t);
    }
  }
  return {s, u, v};
}

std::vector<IntVec> integer_kernel(const IntMat& m) {
  // Left kernel of m^T: the rows of U matching zero rows of the HNF of m^T
  // give a saturated Z-basis; a second HNF canonicalizes it.
  HnfResult hnf = hermite_normal_form(m.transpose());
  std::vector<IntVec> basis;
  for (int i = 0; i < hnf.h.rows(); ++i) {
    if (is_zero(hnf.h.row(i))) basis.push_back(hnf.u.row(i));
  }
  if (basis.empty()) return {};
  HnfResult canon = hermite_normal_form(IntMat::from_rows(basis));
  std::vector<IntVec> out;
  for (int i = 0; i < canon.h.rows(); ++i) {
    IntVec r = canon.h.row(i);
    if (!is_zero(r)) out.push_back(std::move(r));
  }
  return out;
}

std::vector<Int> quotient_invariants(const IntMat& generators, int ambient_rank) {
  if (generators.cols() != ambient_rank)
    fail("ShapeMismatch", "generator length does not match ambient rank");
  SnfResult snf = smith_normal_form(generators);
  int n = std::min(snf.s.rows(), snf.s.cols());
  std::vector<Int> divisors;
  for (int i = 0; i < n; ++i)
    if (snf.s.at(i, i) != 0) divisors.push_back(snf.s.at(i, i));
  if (int(divisors.size()) < ambient_rank)
    fail("NotFiniteIndex", "generators do not span a finite-index sublattice");
  std::vector<Int> out;
  for (const Int& d : divisors)
    if (d > 1) out.push_back(d);
  return out;
}

IntVec primitive_part(const IntVec& v) {
  Int g = content(v);
  if (g == 0) fail("ZeroVector", "primitive part of the zero vector");
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

}  // namespace picard
