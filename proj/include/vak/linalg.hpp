#ifndef VAK_LINALG_HPP
#define VAK_LINALG_HPP

#include <optional>
#include <vector>

#include "vak/rational.hpp"

namespace vak {

using Vec = std::vector<Rational>;

// Dense row-major matrix of exact rationals.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Rational& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Rational& at(int r, int c) const {
    return a[static_cast<size_t>(r) * cols + c];
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  static Mat from_rows(const std::vector<Vec>& rows, int cols);

  void append_row(const Vec& v);
  bool operator==(const Mat&) const = default;
};

struct Rref {
  Mat m;
  std::vector<int> pivots;  // pivot column per pivot row, increasing
};

// Reduced row-echelon form with pivot columns; exact and deterministic.
Rref rref(Mat m);

int rank(const Mat& m);

// Canonical basis of the right null space: one vector per free column, in
// increasing free-column order, with that coordinate set to 1.
std::vector<Vec> kernel_basis(const Mat& m);

// One exact solution of m x = b, or nullopt if inconsistent. Free variables
// are set to zero.
std::optional<Vec> solve(const Mat& m, const Vec& b);

Vec mat_vec(const Mat& m, const Vec& v);

// Reduces v against the rows of an rref; returns the residual.
Vec reduce_against(const Rref& r, Vec v);

}  // namespace vak

#endif
