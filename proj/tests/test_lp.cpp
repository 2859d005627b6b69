#include <doctest.h>

#include "hlab/lp.hpp"
#include "oracles.hpp"

using namespace hlab;

namespace {

// Nonnegative feasibility by Caratheodory: some basic solution on at most rank(A) columns is >= 0.
bool feasible_by_enumeration(const MatQ& a, const VecQ& b) {
  const int n = static_cast<int>(a.cols());
  if (b == VecQ::Constant(b.size(), Rational(0))) return true;
  for (int k = 1; k <= std::min<int>(n, static_cast<int>(a.rows())); ++k) {
    for (const auto& cols : oracle::combinations(n, k)) {
      std::vector<int> all_rows(static_cast<std::size_t>(a.rows()));
      std::iota(all_rows.begin(), all_rows.end(), 0);
      const MatQ sub = oracle::submatrix(a, all_rows, cols);
      if (oracle::rank_by_minors(sub) != k) continue;
      // Solve using a k x k nonsingular row subset, then check the rest.
      for (const auto& rows : oracle::combinations(static_cast<int>(a.rows()), k)) {
        const MatQ sq = oracle::submatrix(a, rows, cols);
        const Rational d = oracle::det(sq);
        if (d.is_zero()) continue;
        VecQ rhs(k);
        for (int i = 0; i < k; ++i) rhs(i) = b(rows[static_cast<std::size_t>(i)]);
        const VecQ x = oracle::adjugate(sq) * rhs / d;
        bool ok = true;
        for (int i = 0; i < k; ++i) ok = ok && x(i).sign() >= 0;
        VecQ full = VecQ::Constant(n, Rational(0));
        for (int i = 0; i < k; ++i) full(cols[static_cast<std::size_t>(i)]) = x(i);
        if (ok && VecQ(a * full) == b) return true;
        break;
      }
    }
  }
  return false;
}

}  // namespace

TEST_CASE("simple feasible and infeasible systems") {
  MatQ a(1, 2);
  a << Rational(1), Rational(1);
  VecQ b = VecQ::Constant(1, Rational(3));
  const auto x = find_nonnegative_solution(a, b);
  REQUIRE(x);
  CHECK(x->sum() == Rational(3));
  CHECK(((*x)(0).sign() >= 0 && (*x)(1).sign() >= 0));

  b(0) = Rational(-1);
  CHECK_FALSE(find_nonnegative_solution(a, b));

  MatQ inconsistent(2, 1);
  inconsistent << Rational(1), Rational(1);
  VecQ rhs(2);
  rhs << Rational(1), Rational(2);
  CHECK_FALSE(find_nonnegative_solution(inconsistent, rhs));
  CHECK_THROWS_AS(find_nonnegative_solution(inconsistent, b), InputError);
}

TEST_CASE("degenerate system with a redundant row") {
  MatQ a(3, 3);
  a << Rational(1), Rational(1), Rational(0),  //
      Rational(0), Rational(1), Rational(1),   //
      Rational(1), Rational(2), Rational(1);
  VecQ b(3);
  b << Rational(1), Rational(1), Rational(2);
  const auto x = find_nonnegative_solution(a, b);
  REQUIRE(x);
  CHECK(VecQ(a * *x) == b);
}

TEST_CASE("verdicts match basic-solution enumeration on seeded systems") {
  oracle::Gen g(21);
  int feasible = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const Index m = g.between(1, 3), n = g.between(1, 4);
    MatQ a(m, n);
    for (Index i = 0; i < m; ++i) {
      for (Index j = 0; j < n; ++j) a(i, j) = Rational(g.between(-3, 3));
    }
    VecQ b(m);
    for (Index i = 0; i < m; ++i) b(i) = Rational(g.between(-4, 4));
    const auto x = find_nonnegative_solution(a, b);
    CHECK(x.has_value() == feasible_by_enumeration(a, b));
    if (x) {
      ++feasible;
      CHECK(VecQ(a * *x) == b);
      for (Index j = 0; j < n; ++j) CHECK((*x)(j).sign() >= 0);
    }
  }
  CHECK(feasible > 10);
  CHECK(feasible < 140);
}
