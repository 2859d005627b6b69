#include "hlab/hirzform.hpp"

namespace hlab {

namespace {

void require_length(const HirzebruchForm& f, const VecQ& a) {
  if (a.size() != f.N) {
    throw InputError("weight vector has length " + std::to_string(a.size()) + ", expected " + std::to_string(f.N));
  }
}

Rational subset_sum(const VecQ& a, ElementSet s) {
  Rational out;
  for (int e : elements_of(s)) out += a(e);
  return out;
}

Rational line_weight(const VecQ& a, ElementSet line) { return subset_sum(a, line) / Rational(2); }

}  // namespace

HirzebruchForm build_form(const Matroid& m) {
  if (m.rank() < 3) {
    throw UnsupportedError("quadratic form needs rank at least 3 (n >= 2), got rank " + std::to_string(m.rank()));
  }
  if (!check_simple(m).simple()) throw InputError("quadratic form is defined for simple matroids only");
  HirzebruchForm f;
  f.N = m.ground();
  f.n = m.rank() - 1;
  f.sigma.assign(static_cast<std::size_t>(f.N), 0);
  f.t.assign(static_cast<std::size_t>(f.N), 0);
  const auto levels = flats_by_rank(m);
  for (int k = 1; k < m.rank(); ++k) {
    for (const Flat& fl : levels[static_cast<std::size_t>(k)]) f.flats.push_back(fl);
  }

  const int n = f.n;
  f.Q = MatQ::Constant(f.N, f.N, Rational(0));
  for (const Flat& line : levels[2]) {
    const auto elems = elements_of(line.elements);
    const bool irreducible = elems.size() >= 3;
    (irreducible ? f.irreducible_lines : f.reducible_lines).push_back(line.elements);
    for (int i : elems) {
      f.t[static_cast<std::size_t>(i)] += 1;
      if (irreducible) f.sigma[static_cast<std::size_t>(i)] += 1;
      for (int j : elems) {
        if (i != j) f.Q(i, j) = irreducible ? Rational(n - 1) : Rational(-2);
      }
    }
  }
  for (int i = 0; i < f.N; ++i) {
    const int s = f.sigma[static_cast<std::size_t>(i)];
    f.B.push_back(s - 1);
    f.Q(i, i) = Rational(-(n + 1) * s + 2 * n);
  }

  for (int i = 0; i < f.N; ++i) {
    Rational row;
    for (int j = 0; j < f.N; ++j) row += f.Q(i, j);
    const Rational expected = Rational((n - 1) * f.N - (n + 1) * (f.t[static_cast<std::size_t>(i)] - 1));
    if (row != expected) throw ConsistencyError("row sum of Q disagrees with the t_i formula at " + std::to_string(i));
  }
  return f;
}

FormValues eval_form_routes(const HirzebruchForm& f, const VecQ& a) {
  require_length(f, a);
  const Rational np1(f.n + 1);
  FormValues v;
  const VecQ qa = f.Q * a;
  v.matrix = a.dot(qa);

  Rational s, irr, weighted_b, red;
  for (int i = 0; i < f.N; ++i) {
    s += a(i);
    weighted_b += Rational(f.B[static_cast<std::size_t>(i)]) * a(i) * a(i);
  }
  for (ElementSet line : f.irreducible_lines) {
    const Rational al = line_weight(a, line);
    irr += al * al;
  }
  for (ElementSet line : f.reducible_lines) {
    const auto e = elements_of(line);
    red += a(e[0]) * a(e[1]);
  }
  v.by_lines = Rational(4) * np1 * irr - Rational(2) * np1 * weighted_b - Rational(2) * s * s;
  v.by_pairs = Rational(2 * f.n) * s * s - Rational(4) * np1 * red - Rational(4) * np1 * irr;
  return v;
}

Rational eval_form(const HirzebruchForm& f, const VecQ& a) {
  const FormValues v = eval_form_routes(f, a);
  if (v.matrix != v.by_lines || v.matrix != v.by_pairs) {
    throw ConsistencyError("quadratic form routes disagree: " + v.matrix.str() + ", " + v.by_lines.str() + ", " +
                           v.by_pairs.str());
  }
  return v.matrix;
}

VecQ induced_weight_sums(const HirzebruchForm& f, const VecQ& a) {
  require_length(f, a);
  VecQ sh = VecQ::Constant(f.N, Rational(0));
  for (ElementSet line : f.reducible_lines) {
    const auto e = elements_of(line);
    sh(e[0]) += a(e[1]);
    sh(e[1]) += a(e[0]);
  }
  for (ElementSet line : f.irreducible_lines) {
    const Rational al = line_weight(a, line);
    for (int h : elements_of(line)) sh(h) += al;
  }
  return sh;
}

VecQ form_gradient(const HirzebruchForm& f, const VecQ& a) {
  const VecQ sh = induced_weight_sums(f, a);
  const Rational s = a.sum();
  VecQ grad(f.N);
  for (int h = 0; h < f.N; ++h) grad(h) = Rational(4 * f.n) * s - Rational(4 * (f.n + 1)) * sh(h);
  const VecQ twice_qa = Rational(2) * (f.Q * a);
  if (grad != twice_qa) throw ConsistencyError("gradient formula disagrees with 2 Q a");
  return grad;
}

VecQ primitive_integer_vector(const VecQ& v) {
  mpz_class lcm = 1;
  for (Index i = 0; i < v.size(); ++i) lcm = ::lcm(lcm, v(i).denominator());
  mpz_class g = 0;
  for (Index i = 0; i < v.size(); ++i) g = ::gcd(g, mpz_class(v(i).numerator() * (lcm / v(i).denominator())));
  if (g == 0) return v;
  VecQ out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = v(i) * Rational(lcm, g);
  for (Index i = 0; i < v.size(); ++i) {
    if (out(i).is_zero()) continue;
    if (out(i).sign() < 0) out = -out;
    break;
  }
  return out;
}

KernelInertia kernel_and_inertia(const HirzebruchForm& f) {
  KernelInertia out;
  for (const VecQ& v : mat_nullspace(f.Q)) {
    const VecQ w = primitive_integer_vector(v);
    const VecQ sh = induced_weight_sums(f, w);
    const Rational target = Rational(f.n) / Rational(f.n + 1) * w.sum();
    for (int h = 0; h < f.N; ++h) {
      if (sh(h) != target) throw ConsistencyError("kernel vector violates s_H = n/(n+1) s");
    }
    out.kernel.push_back(w);
  }
  out.inertia = sym_inertia(f.Q);
  if (out.inertia.zero != static_cast<int>(out.kernel.size())) {
    throw ConsistencyError("inertia nullity disagrees with kernel dimension");
  }
  return out;
}

Rational q_of_ones(const HirzebruchForm& f) {
  long long sum_m = 0;
  for (ElementSet l : f.irreducible_lines) sum_m += set_size(l);
  for (ElementSet l : f.reducible_lines) sum_m += set_size(l);
  const long long N = f.N, n = f.n;
  const Rational closed((n - 1) * N * N + (n + 1) * N - (n + 1) * sum_m);
  if (closed != eval_form(f, VecQ::Constant(f.N, Rational(1)))) {
    throw ConsistencyError("closed form for Q(1) disagrees with direct evaluation");
  }
  return closed;
}

Rational leading_chern_coefficient(const HirzebruchForm& f, const VecQ& a) {
  require_length(f, a);
  Rational c;
  for (ElementSet line : f.irreducible_lines) {
    const Rational al = line_weight(a, line);
    c += al * al;
  }
  for (int h = 0; h < f.N; ++h) c -= Rational(f.B[static_cast<std::size_t>(h)]) * a(h) * a(h) / Rational(2);
  c -= Rational(f.n + 1) / Rational(2);
  if (a.sum() == Rational(f.n + 1) && eval_form(f, a) != Rational(4 * (f.n + 1)) * c) {
    throw ConsistencyError("Q != 4(n+1) C on the slice s = n+1");
  }
  return c;
}

const char* verdict_name(HirzebruchVerdict::Kind k) {
  switch (k) {
    case HirzebruchVerdict::Kind::hirzebruch: return "hirzebruch";
    case HirzebruchVerdict::Kind::fails_h1: return "fails_h1";
    case HirzebruchVerdict::Kind::fails_h2: return "fails_h2";
    case HirzebruchVerdict::Kind::not_essential: return "not_essential";
  }
  return "unknown";
}

HirzebruchVerdict hirzebruch_check(const HirzebruchForm& f, bool essential) {
  HirzebruchVerdict v;
  const Rational N(f.N), np1(f.n + 1);
  for (ElementSet l : f.irreducible_lines) v.sum_multiplicities += set_size(l);
  for (ElementSet l : f.reducible_lines) v.sum_multiplicities += set_size(l);
  v.bound = (Rational(1) - Rational(2) / np1) * N * N + N;
  v.inequality_holds = Rational(v.sum_multiplicities) >= v.bound;
  v.equality = Rational(v.sum_multiplicities) == v.bound;

  for (const Flat& fl : f.flats) {
    if (Rational(fl.size()) * np1 > N * Rational(fl.rank)) v.h1_violations.push_back(fl);
  }
  const Rational target = (Rational(1) - Rational(2) / np1) * N + Rational(1);
  for (int i = 0; i < f.N; ++i) {
    if (Rational(f.t[static_cast<std::size_t>(i)]) != target) v.h2_violations.push_back(i);
  }
  if (!essential) {
    v.kind = HirzebruchVerdict::Kind::not_essential;
  } else if (!v.h1_violations.empty()) {
    v.kind = HirzebruchVerdict::Kind::fails_h1;
  } else if (!v.h2_violations.empty()) {
    v.kind = HirzebruchVerdict::Kind::fails_h2;
  } else {
    v.kind = HirzebruchVerdict::Kind::hirzebruch;
  }
  return v;
}

}  // namespace hlab
