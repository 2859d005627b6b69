#pragma once

#include <vector>

#include "hlab/arrangement.hpp"

namespace hlab {

/// The quadratic form together with the rank-two data it is built from.
struct HirzebruchForm {
  int N = 0;
  int n = 0;  // rank - 1
  MatQ Q;
  std::vector<int> sigma;  // irreducible rank-2 flats through each element
  std::vector<int> B;      // sigma - 1
  std::vector<int> t;      // all rank-2 flats through each element
  std::vector<ElementSet> irreducible_lines;  // rank-2 flats of size >= 3
  std::vector<ElementSet> reducible_lines;    // rank-2 flats of size 2
  std::vector<Flat> flats;  // all flats of rank 1..r-1
};

HirzebruchForm build_form(const Matroid& m);
inline HirzebruchForm build_form(const Source& s) { return build_form(s.matroid()); }

/// The three independent evaluation routes.
struct FormValues {
  Rational matrix;   // a^T Q a
  Rational by_lines;  // via a_L over irreducible lines and B_H
  Rational by_pairs;  // via s^2, transverse pairs and irreducible lines
};

FormValues eval_form_routes(const HirzebruchForm& f, const VecQ& a);
/// Common value of the three routes; ConsistencyError if they disagree.
Rational eval_form(const HirzebruchForm& f, const VecQ& a);

/// s_H: transverse partner weights plus a_L over irreducible lines through H.
VecQ induced_weight_sums(const HirzebruchForm& f, const VecQ& a);
/// Gradient 4n s - 4(n+1) s_H, checked against 2 Q a.
VecQ form_gradient(const HirzebruchForm& f, const VecQ& a);

struct KernelInertia {
  std::vector<VecQ> kernel;  // primitive integer vectors, first non-zero entry positive
  Inertia inertia;
};
KernelInertia kernel_and_inertia(const HirzebruchForm& f);

/// Q(1) from the multiplicities of rank-2 flats, checked against eval_form.
Rational q_of_ones(const HirzebruchForm& f);

/// sum a_L^2 - 1/2 sum B_H a_H^2 - (n+1)/2; on s = n+1 checked against Q / 4(n+1).
Rational leading_chern_coefficient(const HirzebruchForm& f, const VecQ& a);

struct HirzebruchVerdict {
  enum class Kind { hirzebruch, fails_h1, fails_h2, not_essential };
  Kind kind = Kind::not_essential;
  std::vector<Flat> h1_violations;
  std::vector<int> h2_violations;
  int sum_multiplicities = 0;  // over rank-2 flats
  Rational bound;              // (1 - 2/(n+1)) N^2 + N
  bool inequality_holds = false;
  bool equality = false;
  bool is_hirzebruch() const { return kind == Kind::hirzebruch; }
};

const char* verdict_name(HirzebruchVerdict::Kind k);
HirzebruchVerdict hirzebruch_check(const HirzebruchForm& f, bool essential);

/// Scales a rational vector to a primitive integer vector whose first non-zero entry is positive.
VecQ primitive_integer_vector(const VecQ& v);

}  // namespace hlab
