#include "vak/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace vak {

Mat Mat::from_rows(const std::vector<Vec>& rows, int cols) {
  Mat m(static_cast<int>(rows.size()), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    assert(static_cast<int>(rows[r].size()) == cols);
    for (int c = 0; c < cols; ++c) m.at(static_cast<int>(r), c) = rows[r][c];
  }
  return m;
}

void Mat::append_row(const Vec& v) {
  assert(cols == 0 || static_cast<int>(v.size()) == cols);
  if (cols == 0) cols = static_cast<int>(v.size());
  a.insert(a.end(), v.begin(), v.end());
  ++rows;
}

Rref rref(Mat m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int sel = -1;
    for (int i = r; i < m.rows; ++i) {
      if (m.at(i, c) != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
    Rational inv = 1 / m.at(r, c);
    for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rational f = m.at(i, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

int rank(const Mat& m) { return static_cast<int>(rref(m).pivots.size()); }

std::vector<Vec> kernel_basis(const Mat& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols, Rational(0));
    v[f] = 1;
    for (size_t i = 0; i < r.pivots.size(); ++i)
      v[r.pivots[i]] = -r.m.at(static_cast<int>(i), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  assert(static_cast<int>(b.size()) == m.rows);
  Mat aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  Rref r = rref(std::move(aug));
  Vec x(m.cols, Rational(0));
  for (size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] == m.cols) return std::nullopt;  // inconsistent
    x[r.pivots[i]] = r.m.at(static_cast<int>(i), m.cols);
  }
  return x;
}

Vec mat_vec(const Mat& m, const Vec& v) {
  assert(static_cast<int>(v.size()) == m.cols);
  Vec out(m.rows, Rational(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0 && v[j] != 0) out[i] += m.at(i, j) * v[j];
  return out;
}

Vec reduce_against(const Rref& r, Vec v) {
  for (size_t i = 0; i < r.pivots.size(); ++i) {
    int p = r.pivots[i];
    if (v[p] == 0) continue;
    Rational f = v[p];
    for (int j = 0; j < r.m.cols; ++j)
      if (r.m.at(static_cast<int>(i), j) != 0)
        v[j] -= f * r.m.at(static_cast<int>(i), j);
  }
  return v;
}

}  // namespace vak
