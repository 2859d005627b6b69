#pragma once

#include <map>
#include <string>
#include <vector>

#include "hlab/arrangement.hpp"

namespace hlab {

/// n+1 independent-in-general-position normals (1, t, ..., t^n), t = 0..N-1.
Arrangement generic(int n, int N);
/// y_i - y_j (1 <= i < j <= n+1) and y_i, with the last coordinate gauged to zero.
Arrangement braid(int n);
Arrangement tetrahedron();
/// All points of PG(n, p), normalised to first non-zero coordinate 1.
Matroid pg_matroid(int n, int p);
Matroid fano();
Matroid non_pappus();
/// x_i = 0 and x_i - zeta_m^k x_j over Q(zeta_m), in P^(l-1).
Arrangement monomial_reflection(int m, int l);
/// Block-diagonal normals in P^(n1+n2+1).
Arrangement product(const Arrangement& a1, const Arrangement& a2);
/// Product of two k-point pencils in P^3.
Arrangement skew_lines(int k);

struct CatalogEntry {
  std::string name;
  std::vector<std::string> params;
  std::string description;
};

const std::vector<CatalogEntry>& catalog_entries();
Source catalog_build(const std::string& name, const std::map<std::string, int>& params);

}  // namespace hlab
