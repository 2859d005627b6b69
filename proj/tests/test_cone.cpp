#include <doctest.h>

#include <cstdlib>

#include "hlab/catalog.hpp"
#include "hlab/cone.hpp"
#include "oracles.hpp"

using namespace hlab;

namespace {

VecQ ones(Index n, Rational v = Rational(1)) { return VecQ::Constant(n, v); }

Rational frac(long p, long q) { return Rational(mpz_class(p), mpz_class(q)); }

VecQ vec(std::initializer_list<int> xs) {
  VecQ v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (int x : xs) v(i++) = Rational(x);
  return v;
}

VecQ indicator(int n, ElementSet s) {
  VecQ v = ones(n, Rational(0));
  for (int e : elements_of(s)) v(e) = Rational(1);
  return v;
}

// Every proper nonempty flat, found by scanning subsets with the rank function.
std::vector<ElementSet> brute_proper_flats(const Matroid& m) {
  std::vector<ElementSet> out;
  for (ElementSet s = 1; s < m.ground_set(); ++s) {
    const int r = m.rank_of(s);
    if (r == 0 || r == m.rank()) continue;
    bool closed = true;
    for (int e = 0; e < m.ground() && closed; ++e) {
      if (!contains(s, e) && m.rank_of(s | singleton(e)) == r) closed = false;
    }
    if (closed) out.push_back(s);
  }
  return out;
}

Rational flat_sum(const VecQ& a, ElementSet s) {
  Rational out;
  for (int e : elements_of(s)) out += a(e);
  return out;
}

// Strict or weak flat inequalities checked over every proper flat.
bool flat_inequalities(const Matroid& m, const std::vector<ElementSet>& flats, const VecQ& a, bool strict) {
  const Rational s = a.sum();
  for (ElementSet f : flats) {
    const Rational bound = Rational(m.rank_of(f)) / Rational(m.rank()) * s;
    const Rational sum = flat_sum(a, f);
    if (strict ? !(sum < bound) : sum > bound) return false;
  }
  return true;
}

bool all_positive(const VecQ& a) {
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i).sign() <= 0) return false;
  }
  return true;
}

VecQ random_positive(oracle::Gen& g, int n) {
  VecQ a(n);
  for (int i = 0; i < n; ++i) a(i) = g.rational(1, 12, 4);
  return a;
}

// Nonnegative vectors biased towards the cone: a random basis combination, sometimes perturbed.
VecQ random_nonnegative(oracle::Gen& g, const Matroid& m) {
  const int n = m.ground();
  VecQ a = ones(n, Rational(0));
  const int terms = static_cast<int>(g.between(1, 4));
  for (int t = 0; t < terms; ++t) {
    const ElementSet b = m.bases()[static_cast<std::size_t>(g.between(0, static_cast<long long>(m.bases().size()) - 1))];
    a += g.rational(1, 5, 3) * indicator(n, b);
  }
  if (g.between(0, 1) == 0) a(g.between(0, n - 1)) += g.rational(0, 3, 2);
  if (g.between(0, 3) == 0) a(g.between(0, n - 1)) = Rational(0);
  return a;
}

VecQ random_simplex_point(oracle::Gen& g, int n) {
  VecQ x(n);
  for (int i = 0; i < n; ++i) x(i) = g.between(0, 2) == 0 ? Rational(0) : g.rational(1, 9, 5);
  if (x.sum().is_zero()) x(0) = Rational(1);
  return VecQ(x / x.sum());
}

std::vector<Matroid> stable_sources() {
  return {braid(2).matroid(), braid(3).matroid(), generic(2, 5).matroid(), tetrahedron().matroid(), fano(),
          non_pappus(), monomial_reflection(2, 3).matroid()};
}

}  // namespace

TEST_CASE("classify_weights examples") {
  const StabilityContext b = make_stability_context(braid(2).matroid());
  const StabilityReport half = classify_weights(b, ones(6, frac(1, 2)));
  CHECK(half.klt);
  CHECK(half.cy);
  CHECK(half.stable);
  CHECK(half.semistable);
  CHECK(half.log_canonical);
  CHECK(half.s == Rational(3));
  CHECK(half.lambda == Rational(1));
  CHECK(half.violations.empty());

  const StabilityContext g = make_stability_context(generic(2, 5).matroid());
  const StabilityReport w = classify_weights(g, vec({2, 1, 1, 1, 1}));
  CHECK_FALSE(w.stable);
  CHECK(w.semistable);
  REQUIRE(w.violations.size() == 1);
  CHECK(w.violations[0].flat.elements == singleton(0));
  CHECK(w.violations[0].slack == Rational(0));
  const StabilityReport w3 = classify_weights(g, vec({3, 1, 1, 1, 1}));
  CHECK_FALSE(w3.semistable);
  CHECK(w3.violations[0].slack == frac(-2, 3));

  CHECK(classify_weights(make_stability_context(fano()), ones(7)).stable);
  CHECK_FALSE(classify_weights(make_stability_context(fano()), ones(7)).klt);

  const StabilityReport zero = classify_weights(g, vec({0, 1, 1, 1, 1}));
  CHECK_FALSE(zero.stable);
  CHECK(zero.nonpositive == std::vector<int>{0});
  CHECK_THROWS_AS(classify_weights(g, ones(4)), InputError);
}

TEST_CASE("classification against a brute-force flat scan") {
  oracle::Gen gen(41);
  for (const Matroid& m : stable_sources()) {
    const StabilityContext ctx = make_stability_context(m);
    const auto flats = brute_proper_flats(m);
    for (int trial = 0; trial < 40; ++trial) {
      const VecQ a = trial % 2 == 0 ? random_positive(gen, m.ground()) : random_nonnegative(gen, m);
      const StabilityReport r = classify_weights(ctx, a);
      const StabilityReport full = classify_weights(ctx, a, true);
      CHECK(r.stable == (all_positive(a) && flat_inequalities(m, flats, a, true)));
      CHECK(r.semistable == flat_inequalities(m, flats, a, false));
      CHECK(full.stable == r.stable);
      CHECK(full.semistable == r.semistable);
      if (r.stable) CHECK(r.semistable);
      if (r.klt && r.cy) CHECK(r.stable);
      if (r.lambda) {
        const StabilityReport rescaled = classify_weights(ctx, VecQ(a * *r.lambda));
        CHECK(r.stable == rescaled.klt);
        CHECK(rescaled.cy);
      }
    }
  }
}

TEST_CASE("interior_stable_point") {
  for (const Matroid& m : stable_sources()) {
    const StablePointResult r = interior_stable_point(m);
    REQUIRE(r.point);
    CHECK_FALSE(r.certificate);
    CHECK(all_positive(*r.point));
    for (Index i = 0; i < r.point->size(); ++i) CHECK((*r.point)(i).is_integer());
    CHECK(flat_inequalities(m, brute_proper_flats(m), *r.point, true));
  }
  for (int k : {2, 3}) {
    const Matroid m = skew_lines(k).matroid();
    const StablePointResult r = interior_stable_point(m);
    CHECK_FALSE(r.point);
    REQUIRE(r.certificate);
    // The certificate separates the matroid: ranks of the flat and its complement add up.
    const ElementSet f = r.certificate->elements;
    CHECK(f != 0);
    CHECK(f != m.ground_set());
    CHECK(m.rank_of(f) + m.rank_of(m.ground_set() & ~f) == m.rank());
  }
  CHECK(interior_stable_point(skew_lines(2).matroid()).certificate->elements == singleton(0));

  MatQ pencil(3, 3);
  pencil << Rational(1), Rational(0), Rational(1), Rational(0), Rational(1), Rational(1), Rational(0), Rational(0),
      Rational(0);
  CHECK_THROWS_AS(interior_stable_point(Source(build_arrangement(2, pencil))), InputError);
}

TEST_CASE("hull_membership examples") {
  const Matroid b = braid(2).matroid();
  for (ElementSet basis : b.bases()) {
    const HullResult r = hull_membership(b, indicator(6, basis));
    CHECK(r.member);
  }
  const HullResult half = hull_membership(b, ones(6, frac(1, 2)));
  CHECK(half.member);
  VecQ rebuilt = ones(6, Rational(0));
  for (const auto& [basis, lambda] : half.multipliers) {
    CHECK(lambda.sign() > 0);
    CHECK(b.is_basis(basis));
    rebuilt += lambda * indicator(6, basis);
  }
  CHECK(rebuilt == ones(6, frac(1, 2)));

  const HullResult out = hull_membership(generic(2, 5).matroid(), vec({3, 1, 1, 1, 1}));
  CHECK_FALSE(out.member);
  REQUIRE(out.violated);
  CHECK(out.violated->flat.elements == singleton(0));
  CHECK(out.violated->sum == Rational(3));
  CHECK(out.violated->slack == frac(-2, 3));

  CHECK_THROWS_AS(hull_membership(b, vec({1, 1, 1, 1, 1, -1})), InputError);
}

TEST_CASE("hull membership matches the flat inequalities on seeded vectors") {
  oracle::Gen gen(43);
  for (const Matroid& m : {braid(2).matroid(), generic(2, 5).matroid(), fano(), non_pappus(),
                           skew_lines(3).matroid(), monomial_reflection(2, 3).matroid()}) {
    const auto flats = brute_proper_flats(m);
    int members = 0;
    for (int trial = 0; trial < 40; ++trial) {
      const VecQ a = random_nonnegative(gen, m);
      const HullResult r = hull_membership(m, a);
      CHECK(r.member == flat_inequalities(m, flats, a, false));
      members += r.member ? 1 : 0;
    }
    CHECK(members > 0);
    CHECK(members < 40);
  }
}

TEST_CASE("simplex_minimum examples") {
  const SimplexMinimum id = simplex_minimum(MatQ(MatQ::Identity(3, 3)));
  CHECK(id.value == frac(1, 3));
  CHECK(id.point == ones(3, frac(1, 3)));
  CHECK(id.support == 0b111);

  const MatQ gq = -build_form(generic(2, 5)).Q;
  const SimplexMinimum g = simplex_minimum(gq);
  CHECK(g.value == Rational(-4));
  CHECK(set_size(g.support) == 1);
  CHECK(g.support == singleton(0));

  const SimplexMinimum b = simplex_minimum(MatQ(-build_form(braid(2)).Q));
  CHECK(b.value == Rational(0));

  MatQ nonsym(2, 2);
  nonsym << Rational(1), Rational(2), Rational(3), Rational(4);
  CHECK_THROWS_AS(simplex_minimum(nonsym), InputError);
  CHECK_THROWS_AS(simplex_minimum(MatQ(MatQ::Identity(21, 21))), UnsupportedError);
}

TEST_CASE("HLAB_MAX_N caps the enumeration") {
  CHECK(max_enumeration_size() == 20);
  ::setenv("HLAB_MAX_N", "3", 1);
  CHECK(max_enumeration_size() == 3);
  CHECK_THROWS_AS(simplex_minimum(MatQ(MatQ::Identity(4, 4))), UnsupportedError);
  ::setenv("HLAB_MAX_N", "zero", 1);
  CHECK_THROWS_AS(max_enumeration_size(), InputError);
  ::unsetenv("HLAB_MAX_N");
  CHECK(max_enumeration_size() == 20);
}

TEST_CASE("simplex_minimum lower-bounds seeded simplex points") {
  oracle::Gen gen(47);
  std::vector<MatQ> mats = {-build_form(non_pappus()).Q, -build_form(fano()).Q, -build_form(braid(2)).Q,
                            -build_form(generic(2, 5)).Q};
  for (int i = 0; i < 6; ++i) mats.push_back(gen.symmetric(gen.between(2, 6), -5, 5, 3));
  for (const MatQ& p : mats) {
    const SimplexMinimum m = simplex_minimum(p);
    CHECK(m.point.sum() == Rational(1));
    for (Index i = 0; i < m.point.size(); ++i) {
      CHECK(m.point(i).sign() >= 0);
      CHECK((m.point(i).sign() > 0) == contains(m.support, static_cast<int>(i)));
    }
    CHECK(m.point.dot(p * m.point) == m.value);
    for (int trial = 0; trial < 1000 / static_cast<int>(mats.size()); ++trial) {
      const VecQ x = random_simplex_point(gen, static_cast<int>(p.rows()));
      CHECK(m.value <= x.dot(p * x));
    }
  }
}

TEST_CASE("simplex_minimum matches face enumeration on nondegenerate matrices") {
  oracle::Gen gen(53);
  int checked = 0;
  while (checked < 25) {
    const MatQ p = gen.symmetric(gen.between(1, 4), -6, 6, 3);
    if (!oracle::faces_nondegenerate(p)) continue;
    CHECK(simplex_minimum(p).value == oracle::brute_simplex_minimum(p));
    ++checked;
  }
}

TEST_CASE("copositivity_check") {
  const CopositivityResult np = copositivity_check(MatQ(-build_form(non_pappus()).Q));
  CHECK(np.copositive);
  CHECK_FALSE(np.witness);

  const CopositivityResult g = copositivity_check(MatQ(-build_form(generic(2, 5)).Q));
  CHECK_FALSE(g.copositive);
  REQUIRE(g.witness);
  CHECK(*g.witness == indicator(5, singleton(0)));
  CHECK(g.minimum.value == Rational(-4));

  const CopositivityResult f = copositivity_check(MatQ(-build_form(fano()).Q));
  CHECK_FALSE(f.copositive);
  REQUIRE(f.witness);
  CHECK(*f.witness == ones(7, frac(1, 7)));
  CHECK(f.minimum.value == frac(-1, 7));
}

TEST_CASE("sample_stable_cone") {
  for (const Matroid& m : {braid(2).matroid(), tetrahedron().matroid(), non_pappus()}) {
    const SampleReport r = sample_stable_cone(m, 100, 7);
    CHECK(r.drawn == 100);
    CHECK(r.evaluated > 0);
    REQUIRE(r.max_value);
    CHECK(r.max_value->sign() <= 0);
    CHECK_FALSE(r.witness);
    // Copositivity of -Q on the octant forbids positive samples.
    if (copositivity_check(MatQ(-build_form(m).Q)).copositive) CHECK_FALSE(r.witness);
  }

  const SampleReport f = sample_stable_cone(fano(), 100, 7);
  REQUIRE(f.witness);
  CHECK(*f.witness_value == eval_form(build_form(fano()), *f.witness));
  CHECK(f.witness_value->sign() > 0);
  CHECK(*f.witness == ones(7));
  CHECK(*f.witness_value == Rational(7));

  const SampleReport again = sample_stable_cone(braid(3).matroid(), 50, 99);
  const SampleReport twice = sample_stable_cone(braid(3).matroid(), 50, 99);
  CHECK(again.evaluated == twice.evaluated);
  CHECK(again.max_value == twice.max_value);
  CHECK(again.argmax == twice.argmax);
  REQUIRE(again.argmax);
  CHECK(classify_weights(make_stability_context(braid(3).matroid()), *again.argmax).semistable);
}
