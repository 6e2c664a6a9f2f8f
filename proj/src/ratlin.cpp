#include "picard/ratlin.hpp"

#include "picard/errors.hpp"

namespace picard {

RatMat RatMat::from_rows(const std::vector<RatVec>& rows) {
  RatMat m(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

RatMat RatMat::from_int_rows(const std::vector<IntVec>& rows) {
  RatMat m(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = Rat(rows[i][j]);
  return m;
}

RatMat RatMat::from_cols(const std::vector<RatVec>& cols) {
  RatMat m(cols.empty() ? 0 : int(cols[0].size()), int(cols.size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = cols[j][i];
  return m;
}

RatVec RatMat::row(int i) const {
  RatVec r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

RatVec RatMat::mul(const RatVec& v) const {
  RatVec r(rows_);
  for (int i = 0; i < rows_; ++i) {
    Rat s = 0;
    for (int j = 0; j < cols_; ++j) s += at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

namespace {

// Forward elimination; returns pivot columns. Optionally reduces an attached
// right-hand side stored as extra columns.
std::vector<int> eliminate(RatMat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    Rat inv = 1 / m.at(r, c);
    for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(RatMat m) { return int(eliminate(m).size()); }

std::optional<RatVec> solve_square(RatMat a, RatVec b) {
  if (a.rows() != a.cols() || int(b.size()) != a.rows()) fail("ShapeMismatch", "solve_square");
  int n = a.rows();
  RatMat aug(n, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n) = b[i];
  }
  std::vector<int> pivots = eliminate(aug);
  if (int(pivots.size()) != n || pivots.back() == n) return std::nullopt;
  RatVec x(n);
  for (int i = 0; i < n; ++i) x[pivots[i]] = aug.at(i, n);
  return x;
}

std::optional<RatVec> solve_any(RatMat a, RatVec b) {
  if (int(b.size()) != a.rows()) fail("ShapeMismatch", "solve_any");
  int n = a.cols();
  RatMat aug(a.rows(), n + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n) = b[i];
  }
  std::vector<int> pivots = eliminate(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;  // 0 = 1 row
  RatVec x(n, Rat(0));
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(int(i), n);
  return x;
}

std::vector<RatVec> nullspace(RatMat a) {
  int n = a.cols();
  std::vector<int> pivots = eliminate(a);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    RatVec v(n, Rat(0));
    v[c] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a.at(int(i), c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<int> independent_subset(const std::vector<RatVec>& rows) {
  std::vector<int> chosen;
  std::vector<RatVec> acc;
  for (size_t i = 0; i < rows.size(); ++i) {
    acc.push_back(rows[i]);
    if (rank(RatMat::from_rows(acc)) == int(acc.size()))
      chosen.push_back(int(i));
    else
      acc.pop_back();
  }
  return chosen;
}

std::vector<int> independent_subset_int(const std::vector<IntVec>& rows) {
  std::vector<RatVec> r;
  r.reserve(rows.size());
  for (const IntVec& v : rows) r.push_back(to_rat(v));
  return independent_subset(r);
}

}  // namespace picard
