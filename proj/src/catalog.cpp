#include "hlab/catalog.hpp"

namespace hlab {

namespace {

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Arrangement generic(int n, int N) {
  if (n < 1 || N < 1) throw InputError("generic(n, N) needs n >= 1 and N >= 1");
  MatQ m(n + 1, N);
  for (int t = 0; t < N; ++t) {
    Rational power(1);
    for (int i = 0; i <= n; ++i) {
      m(i, t) = power;
      power *= Rational(t);
    }
  }
  return build_arrangement(n, m);
}

Arrangement braid(int n) {
  if (n < 1) throw InputError("braid(n) needs n >= 1");
  const int N = static_cast<int>(binomial(n + 2, 2));
  MatQ m = MatQ::Constant(n + 1, N, Rational(0));
  int col = 0;
  for (int i = 0; i < n + 2; ++i) {
    for (int j = i + 1; j < n + 2; ++j) {
      m(i, col) = Rational(1);
      if (j < n + 1) m(j, col) = Rational(-1);
      ++col;
    }
  }
  return build_arrangement(n, m);
}

Arrangement tetrahedron() { return braid(3); }

Matroid pg_matroid(int n, int p) {
  if (n < 1) throw InputError("pg(n, p) needs n >= 1");
  if (!is_prime(p)) throw InputError("pg(n, p) needs a prime p, got " + std::to_string(p));
  long long total = 1;
  for (int i = 0; i <= n; ++i) total *= p;
  std::vector<std::vector<int>> points;
  for (long long code = 0; code < total; ++code) {
    std::vector<int> v(static_cast<std::size_t>(n + 1));
    long long c = code;
    for (int i = n; i >= 0; --i) {
      v[static_cast<std::size_t>(i)] = static_cast<int>(c % p);
      c /= p;
    }
    for (int x : v) {
      if (x == 0) continue;
      if (x == 1) points.push_back(v);
      break;
    }
  }
  if (static_cast<int>(points.size()) > kMaxGround) throw InputError("PG(n, p) has too many points");
  Mat<PrimeResidue> m(n + 1, static_cast<Index>(points.size()));
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (int i = 0; i <= n; ++i) m(i, static_cast<Index>(j)) = PrimeResidue(points[j][static_cast<std::size_t>(i)], p);
  }
  return Matroid::from_representation(m);
}

Matroid fano() { return pg_matroid(2, 2); }

Matroid non_pappus() {
  const std::vector<std::vector<int>> lines = {{0, 1, 2}, {3, 4, 5}, {0, 6, 4}, {1, 6, 3},
                                               {1, 8, 5}, {2, 8, 4}, {0, 7, 5}, {2, 7, 3}};
  std::vector<ElementSet> nonbases;
  for (const auto& l : lines) nonbases.push_back(set_of(l));
  return Matroid::from_nonbases(9, 3, nonbases);
}

Arrangement monomial_reflection(int m, int l) {
  if (m < 2 || l < 2) throw InputError("monomial_reflection(m, l) needs m >= 2 and l >= 2");
  const int N = l + m * l * (l - 1) / 2;
  Mat<Cyclotomic> normals(l, N);
  const Cyclotomic zero = Cyclotomic(CyclotomicField::get(m), {Rational(0)});
  for (Index i = 0; i < normals.rows(); ++i) {
    for (Index j = 0; j < normals.cols(); ++j) normals(i, j) = zero;
  }
  int col = 0;
  for (int i = 0; i < l; ++i) normals(i, col++) = zero + Cyclotomic(1);
  for (int i = 0; i < l; ++i) {
    for (int j = i + 1; j < l; ++j) {
      for (int k = 0; k < m; ++k) {
        normals(i, col) = zero + Cyclotomic(1);
        normals(j, col) = -Cyclotomic::zeta(m, k);
        ++col;
      }
    }
  }
  return build_arrangement(l - 1, normals);
}

Arrangement product(const Arrangement& a1, const Arrangement& a2) {
  const auto* m1 = std::get_if<MatQ>(&a1.normals());
  const auto* m2 = std::get_if<MatQ>(&a2.normals());
  if (m1 == nullptr || m2 == nullptr) throw UnsupportedError("product is implemented for rational arrangements");
  MatQ m = MatQ::Constant(m1->rows() + m2->rows(), m1->cols() + m2->cols(), Rational(0));
  m.topLeftCorner(m1->rows(), m1->cols()) = *m1;
  m.bottomRightCorner(m2->rows(), m2->cols()) = *m2;
  return build_arrangement(a1.dimension() + a2.dimension() + 1, m);
}

Arrangement skew_lines(int k) {
  if (k < 2) throw InputError("skew_lines(k) needs k >= 2");
  return product(generic(1, k), generic(1, k));
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"generic", {"n", "N"}, "N hyperplanes in general position in P^n (Vandermonde normals)"},
      {"braid", {"n"}, "braid arrangement, C(n+2,2) hyperplanes in P^n"},
      {"tetrahedron", {}, "braid(3): 10 planes in P^3"},
      {"pg", {"n", "p"}, "matroid of all points of PG(n,p)"},
      {"fano", {}, "Fano matroid PG(2,2)"},
      {"non_pappus", {}, "non-Pappus matroid, 9 points and 8 lines"},
      {"monomial_reflection", {"m", "l"}, "reflection arrangement of G(m,1,l) over Q(zeta_m)"},
      {"skew_lines", {"k"}, "product of two k-point pencils in P^3"},
  };
  return entries;
}

Source catalog_build(const std::string& name, const std::map<std::string, int>& params) {
  const CatalogEntry* entry = nullptr;
  for (const auto& e : catalog_entries()) {
    if (e.name == name) entry = &e;
  }
  if (entry == nullptr) throw InputError("unknown catalog family '" + name + "'");
  for (const auto& [key, value] : params) {
    bool known = false;
    for (const auto& p : entry->params) known = known || p == key;
    if (!known) throw InputError("family '" + name + "' has no parameter '" + key + "'");
  }
  auto get = [&](const std::string& key) {
    const auto it = params.find(key);
    if (it == params.end()) throw InputError("family '" + name + "' needs parameter '" + key + "'");
    return it->second;
  };
  if (name == "generic") return generic(get("n"), get("N"));
  if (name == "braid") return braid(get("n"));
  if (name == "tetrahedron") return tetrahedron();
  if (name == "pg") return pg_matroid(get("n"), get("p"));
  if (name == "fano") return fano();
  if (name == "non_pappus") return non_pappus();
  if (name == "monomial_reflection") return monomial_reflection(get("m"), get("l"));
  return skew_lines(get("k"));
}

}  // namespace hlab
