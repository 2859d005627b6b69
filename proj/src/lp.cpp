#include "hlab/lp.hpp"

namespace hlab {

std::optional<VecQ> find_nonnegative_solution(const MatQ& a, const VecQ& b) {
  if (a.rows() != b.rows()) {
    throw InputError("find_nonnegative_solution: " + std::to_string(a.rows()) + " rows vs rhs of length " +
                     std::to_string(b.rows()));
  }
  const Index m = a.rows();
  const Index n = a.cols();
  if (m == 0) return VecQ::Constant(n, Rational(0));

  // Tableau [A | I | b] with rows flipped so that b >= 0; artificials start basic.
  const Index width = n + m + 1;
  MatQ t = MatQ::Constant(m, width, Rational(0));
  for (Index i = 0; i < m; ++i) {
    const bool flip = b(i).sign() < 0;
    for (Index j = 0; j < n; ++j) t(i, j) = flip ? -a(i, j) : a(i, j);
    t(i, n + i) = Rational(1);
    t(i, width - 1) = flip ? -b(i) : b(i);
  }
  std::vector<Index> basis(static_cast<std::size_t>(m));
  for (Index i = 0; i < m; ++i) basis[static_cast<std::size_t>(i)] = n + i;

  // Reduced costs of "minimise the sum of artificials"; last entry is -objective.
  VecQ cost = VecQ::Constant(width, Rational(0));
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) cost(j) -= t(i, j);
    cost(width - 1) -= t(i, width - 1);
  }

  while (true) {
    Index enter = -1;
    for (Index j = 0; j < n + m; ++j) {
      if (cost(j).sign() < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;
    Index leave = -1;
    Rational best;
    for (Index i = 0; i < m; ++i) {
      if (t(i, enter).sign() <= 0) continue;
      const Rational ratio = t(i, width - 1) / t(i, enter);
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) throw ConsistencyError("phase-one simplex is unbounded");
    const Rational inv = t(leave, enter).inverse();
    for (Index j = 0; j < width; ++j) t(leave, j) *= inv;
    for (Index i = 0; i < m; ++i) {
      if (i == leave || t(i, enter).is_zero()) continue;
      const Rational f = t(i, enter);
      for (Index j = 0; j < width; ++j) t(i, j) -= f * t(leave, j);
    }
    if (!cost(enter).is_zero()) {
      const Rational f = cost(enter);
      for (Index j = 0; j < width; ++j) cost(j) -= f * t(leave, j);
    }
    basis[static_cast<std::size_t>(leave)] = enter;
  }

  if (!cost(width - 1).is_zero()) return std::nullopt;
  VecQ x = VecQ::Constant(n, Rational(0));
  for (Index i = 0; i < m; ++i) {
    const Index v = basis[static_cast<std::size_t>(i)];
    if (v < n) x(v) = t(i, width - 1);
  }
  return x;
}

}  // namespace hlab
