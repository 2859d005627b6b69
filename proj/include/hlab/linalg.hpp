#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hlab/errors.hpp"
#include "hlab/field.hpp"
#include "hlab/rational.hpp"

namespace hlab {

template <typename S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using MatQ = Mat<Rational>;
using VecQ = Vec<Rational>;
using Index = Eigen::Index;

/// Throws InputError unless every bound entry lives in the same field.
template <typename Derived>
void require_single_field(const Eigen::MatrixBase<Derived>& m) {
  std::int64_t seen = 0;
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      const std::int64_t id = field_id(m(i, j));
      if (id == 0) continue;
      if (seen == 0) {
        seen = id;
      } else if (seen != id) {
        throw InputError("mixed-field entries in matrix (" + std::to_string(seen) + " vs " + std::to_string(id) + ")");
      }
    }
  }
}

template <typename S>
struct Echelon {
  Mat<S> reduced;                 // reduced row echelon form
  std::vector<Index> pivot_cols;  // one per non-zero row, increasing
};

/// Gauss-Jordan elimination with exact pivots (first non-zero entry per column).
template <typename S>
Echelon<S> reduced_row_echelon(Mat<S> m) {
  require_single_field(m);
  Echelon<S> out;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = -1;
    for (Index i = row; i < m.rows(); ++i) {
      if (!is_zero(m(i, col))) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const S inv = S(1) / m(row, col);
    for (Index j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      const S factor = m(i, col);
      for (Index j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - factor * m(row, j);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <typename S>
Index mat_rank(const Mat<S>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return static_cast<Index>(reduced_row_echelon(m).pivot_cols.size());
}

/// Basis of the right kernel, one vector per free column, in reduced echelon form.
template <typename S>
std::vector<Vec<S>> mat_nullspace(const Mat<S>& m) {
  const Index n = m.cols();
  std::vector<Vec<S>> basis;
  if (n == 0) return basis;
  if (m.rows() == 0) {
    for (Index f = 0; f < n; ++f) {
      Vec<S> v = Vec<S>::Constant(n, S(0));
      v(f) = S(1);
      basis.push_back(std::move(v));
    }
    return basis;
  }
  const auto ech = reduced_row_echelon(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index c : ech.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vec<S> v = Vec<S>::Constant(n, S(0));
    v(f) = S(1);
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
      v(ech.pivot_cols[r]) = -ech.reduced(static_cast<Index>(r), f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <typename S>
struct AffineSolution {
  enum class Kind { none, unique, affine };
  Kind kind = Kind::none;
  Vec<S> particular;          // empty when kind == none
  std::vector<Vec<S>> kernel;  // non-empty iff kind == affine
};

/// Exact classification of { x : a x = b }.
template <typename S>
AffineSolution<S> solve_affine(const Mat<S>& a, const Vec<S>& b) {
  if (a.rows() != b.rows()) {
    throw InputError("solve_affine: " + std::to_string(a.rows()) + " equations but right-hand side of length " +
                     std::to_string(b.rows()));
  }
  Mat<S> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const auto ech = reduced_row_echelon(aug);
  AffineSolution<S> out;
  if (!ech.pivot_cols.empty() && ech.pivot_cols.back() == a.cols()) return out;  // 0 = 1 row
  out.particular = Vec<S>::Constant(a.cols(), S(0));
  for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
    out.particular(ech.pivot_cols[r]) = ech.reduced(static_cast<Index>(r), a.cols());
  }
  out.kernel = mat_nullspace(a);
  out.kind = out.kernel.empty() ? AffineSolution<S>::Kind::unique : AffineSolution<S>::Kind::affine;
  return out;
}

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& q) {
  if (q.rows() != q.cols()) return false;
  for (Index i = 0; i < q.rows(); ++i) {
    for (Index j = i + 1; j < q.cols(); ++j) {
      if (!(q(i, j) == q(j, i))) return false;
    }
  }
  return true;
}

/// Sylvester inertia by symmetric congruence: 1x1 pivots on non-zero diagonal
/// entries, a 2x2 hyperbolic block [[0,b],[b,0]] when the diagonal vanishes.
inline Inertia sym_inertia(const MatQ& q) {
  if (!is_symmetric(q)) throw InputError("sym_inertia: matrix is not symmetric");
  Inertia out;
  MatQ a = q;
  while (a.rows() > 0) {
    const Index k = a.rows();
    Index d = -1;
    for (Index i = 0; i < k; ++i) {
      if (!a(i, i).is_zero()) {
        d = i;
        break;
      }
    }
    if (d >= 0) {
      (a(d, d).sign() > 0 ? out.positive : out.negative) += 1;
      std::vector<Index> rest;
      for (Index i = 0; i < k; ++i) {
        if (i != d) rest.push_back(i);
      }
      MatQ next(k - 1, k - 1);
      const Rational inv = a(d, d).inverse();
      for (Index r = 0; r < k - 1; ++r) {
        for (Index c = 0; c < k - 1; ++c) {
          next(r, c) = a(rest[r], rest[c]) - a(rest[r], d) * a(d, rest[c]) * inv;
        }
      }
      a = std::move(next);
      continue;
    }
    Index pi = -1, pj = -1;
    for (Index i = 0; i < k && pi < 0; ++i) {
      for (Index j = i + 1; j < k; ++j) {
        if (!a(i, j).is_zero()) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi < 0) {
      out.zero += static_cast<int>(k);
      break;
    }
    // [[0,b],[b,0]] has one positive and one negative eigenvalue; its inverse is [[0,1/b],[1/b,0]].
    out.positive += 1;
    out.negative += 1;
    const Rational binv = a(pi, pj).inverse();
    std::vector<Index> rest;
    for (Index i = 0; i < k; ++i) {
      if (i != pi && i != pj) rest.push_back(i);
    }
    MatQ next(k - 2, k - 2);
    for (Index r = 0; r < k - 2; ++r) {
      for (Index c = 0; c < k - 2; ++c) {
        const Index x = rest[r], y = rest[c];
        next(r, c) = a(x, y) - (a(x, pi) * a(pj, y) + a(x, pj) * a(pi, y)) * binv;
      }
    }
    a = std::move(next);
  }
  return out;
}

}  // namespace hlab
