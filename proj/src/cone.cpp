#include "hlab/cone.hpp"

#include <cstdlib>
#include <random>
#include <string>

#include "hlab/lp.hpp"

namespace hlab {

namespace {

Rational subset_sum(const VecQ& a, ElementSet s) {
  Rational out;
  for (int e : elements_of(s)) out += a(e);
  return out;
}

void require_length(int n, const VecQ& a) {
  if (a.size() != n) {
    throw InputError("weight vector has length " + std::to_string(a.size()) + ", expected " + std::to_string(n));
  }
}

VecQ indicator(int n, ElementSet s) {
  VecQ v = VecQ::Constant(n, Rational(0));
  for (int e : elements_of(s)) v(e) = Rational(1);
  return v;
}

}  // namespace

StabilityContext make_stability_context(const Matroid& m) {
  StabilityContext ctx;
  ctx.N = m.ground();
  ctx.n = m.rank() - 1;
  const auto levels = flats_by_rank(m);
  for (int k = 1; k < m.rank(); ++k) {
    for (const Flat& f : levels[static_cast<std::size_t>(k)]) {
      ctx.all_flats.push_back(f);
      if (is_connected_set(m, f.elements)) ctx.connected_flats.push_back(f);
    }
  }
  return ctx;
}

StabilityReport classify_weights(const StabilityContext& ctx, const VecQ& a, bool all_flats) {
  require_length(ctx.N, a);
  StabilityReport r;
  bool positive = true, nonnegative = true, at_most_one = true;
  for (int i = 0; i < ctx.N; ++i) {
    r.s += a(i);
    if (a(i).sign() <= 0) {
      positive = false;
      r.nonpositive.push_back(i);
    }
    if (a(i).sign() < 0) nonnegative = false;
    if (a(i) > Rational(1)) at_most_one = false;
  }
  const Rational np1(ctx.n + 1);
  if (r.s.sign() > 0) r.lambda = np1 / r.s;
  r.cy = r.s == np1;

  bool klt_ineq = true, lc_ineq = true, stable_ineq = true, semistable_ineq = true;
  for (const Flat& f : all_flats ? ctx.all_flats : ctx.connected_flats) {
    const Rational sum = subset_sum(a, f.elements);
    const Rational rk(f.rank);
    const Rational slack = rk / np1 * r.s - sum;
    if (!(sum < rk)) klt_ineq = false;
    if (sum > rk) lc_ineq = false;
    if (slack.sign() <= 0) {
      stable_ineq = false;
      r.violations.push_back(FlatSlack{f, sum, slack});
    }
    if (slack.sign() < 0) semistable_ineq = false;
  }
  r.klt = positive && klt_ineq;
  r.log_canonical = nonnegative && at_most_one && lc_ineq;
  r.stable = positive && stable_ineq;
  r.semistable = nonnegative && semistable_ineq;
  return r;
}

StablePointResult interior_stable_point(const Matroid& m) {
  const int N = m.ground();
  const ElementSet all = m.ground_set();
  VecQ a = VecQ::Constant(N, Rational(0));
  for (int i = 0; i < N; ++i) {
    if (m.rank_of(singleton(i)) == 0) throw InputError("element " + std::to_string(i) + " is a loop");
    a += indicator(N, extend_to_basis(m, singleton(i), all));
  }
  const auto levels = flats_by_rank(m);
  for (int k = 1; k < m.rank(); ++k) {
    for (const Flat& f : levels[static_cast<std::size_t>(k)]) {
      const ElementSet outside = extend_to_basis(m, 0, all & ~f.elements);
      const ElementSet b = extend_to_basis(m, outside, all);
      if (set_size(b & f.elements) >= f.rank) return StablePointResult{std::nullopt, f};
      a += indicator(N, b);
    }
  }
  const auto report = classify_weights(make_stability_context(m), a);
  if (!report.stable) throw ConsistencyError("constructed interior point is not stable");
  return StablePointResult{a, std::nullopt};
}

StablePointResult interior_stable_point(const Source& s) {
  if (!s.essential()) throw InputError("interior stable point needs an essential arrangement");
  return interior_stable_point(s.matroid());
}

HullResult hull_membership(const Matroid& m, const VecQ& a) {
  const int N = m.ground();
  require_length(N, a);
  for (int i = 0; i < N; ++i) {
    if (a(i).sign() < 0) throw InputError("hull membership needs a >= 0; entry " + std::to_string(i) + " is negative");
  }
  HullResult out;
  const Rational s = a.sum();
  const Rational r(m.rank());
  const auto levels = flats_by_rank(m);
  for (int k = 1; k < m.rank() && !out.violated; ++k) {
    for (const Flat& f : levels[static_cast<std::size_t>(k)]) {
      const Rational sum = subset_sum(a, f.elements);
      const Rational slack = Rational(f.rank) / r * s - sum;
      if (slack.sign() < 0) {
        out.violated = FlatSlack{f, sum, slack};
        break;
      }
    }
  }
  const bool by_inequalities = !out.violated;

  const auto& bases = m.bases();
  MatQ cols(N, static_cast<Index>(bases.size()));
  for (std::size_t j = 0; j < bases.size(); ++j) cols.col(static_cast<Index>(j)) = indicator(N, bases[j]);
  const auto lambda = find_nonnegative_solution(cols, a);
  if (lambda.has_value() != by_inequalities) {
    throw ConsistencyError("hull membership: LP and inequality description disagree");
  }
  out.member = by_inequalities;
  if (lambda) {
    for (std::size_t j = 0; j < bases.size(); ++j) {
      const Rational& l = (*lambda)(static_cast<Index>(j));
      if (!l.is_zero()) out.multipliers.emplace_back(bases[j], l);
    }
  }
  return out;
}

int max_enumeration_size() {
  if (const char* env = std::getenv("HLAB_MAX_N")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    throw InputError(std::string("HLAB_MAX_N must be a positive integer, got '") + env + "'");
  }
  return 20;
}

SimplexMinimum simplex_minimum(const MatQ& p) {
  if (!is_symmetric(p)) throw InputError("simplex minimum needs a symmetric square matrix");
  const int N = static_cast<int>(p.rows());
  if (N == 0) throw InputError("simplex minimum of an empty matrix");
  const int cap = std::min(max_enumeration_size(), 62);
  if (N > cap) {
    throw UnsupportedError("simplex minimum enumerates 2^N faces; N = " + std::to_string(N) + " exceeds the cap " +
                           std::to_string(cap) + " (raise HLAB_MAX_N to override)");
  }
  std::optional<SimplexMinimum> best;
  for (ElementSet support = 1; support <= full_set(N); ++support) {
    const auto idx = elements_of(support);
    const Index k = static_cast<Index>(idx.size());
    MatQ sys = MatQ::Constant(k + 1, k + 1, Rational(0));
    VecQ rhs = VecQ::Constant(k + 1, Rational(0));
    for (Index i = 0; i < k; ++i) {
      for (Index j = 0; j < k; ++j) sys(i, j) = Rational(2) * p(idx[i], idx[j]);
      sys(i, k) = Rational(-1);
      sys(k, i) = Rational(1);
    }
    rhs(k) = Rational(1);
    const auto sol = solve_affine(sys, rhs);
    if (sol.kind == AffineSolution<Rational>::Kind::none) continue;
    const Rational mu = sol.particular(k);
    VecQ x = sol.particular.head(k);
    bool feasible = true;
    for (Index i = 0; i < k; ++i) feasible = feasible && x(i).sign() >= 0;
    if (!feasible && sol.kind == AffineSolution<Rational>::Kind::affine) {
      // mu is shared by the whole solution set, so search it for x >= 0 directly.
      MatQ lp = sys.leftCols(k);
      VecQ lp_rhs = VecQ::Constant(k + 1, mu);
      lp_rhs(k) = Rational(1);
      if (auto y = find_nonnegative_solution(lp, lp_rhs)) {
        x = *y;
        feasible = true;
      }
    }
    if (!feasible) continue;
    const Rational value = mu / Rational(2);
    VecQ point = VecQ::Constant(N, Rational(0));
    ElementSet nonzero = 0;
    for (Index i = 0; i < k; ++i) {
      point(idx[i]) = x(i);
      if (!x(i).is_zero()) nonzero |= singleton(idx[i]);
    }
    // A feasible point may sit on a smaller face; report the face it actually lies in.
    if (best && (value > best->value || (value == best->value && !lex_less(nonzero, best->support)))) continue;
    best = SimplexMinimum{value, point, nonzero};
  }
  if (best->point.dot(p * best->point) != best->value) throw ConsistencyError("simplex minimum value mismatch");
  return *best;
}

CopositivityResult copositivity_check(const MatQ& p) {
  CopositivityResult out;
  out.minimum = simplex_minimum(p);
  out.copositive = out.minimum.value.sign() >= 0;
  if (!out.copositive) out.witness = out.minimum.point;
  return out;
}

SampleReport sample_stable_cone(const Matroid& m, int count, std::uint64_t seed, bool mix) {
  if (m.bases().empty()) throw InputError("sampling needs at least one basis");
  if (count < 0) throw InputError("sample count must be nonnegative");
  const HirzebruchForm form = build_form(m);
  const StabilityContext ctx = make_stability_context(m);
  const int N = m.ground();
  SampleReport report;

  auto consider = [&](const VecQ& a) {
    if (!classify_weights(ctx, a).semistable) return;
    ++report.evaluated;
    const Rational q = eval_form(form, a);
    if (!report.max_value || q > *report.max_value) {
      report.max_value = q;
      report.argmax = a;
    }
    if (q.sign() > 0 && !report.witness) {
      report.witness = a;
      report.witness_value = q;
    }
  };

  consider(VecQ::Constant(N, Rational(1)));
  std::optional<VecQ> interior;
  if (auto sp = interior_stable_point(m); sp.point) {
    interior = *sp.point * (Rational(m.rank()) / sp.point->sum());
    consider(*interior);
  }

  std::mt19937_64 rng(seed);
  const auto& bases = m.bases();
  const std::uint64_t nb = bases.size();
  for (int i = 0; i < count; ++i) {
    ++report.drawn;
    const int terms = 1 + static_cast<int>(rng() % std::min<std::uint64_t>(nb, 6));
    VecQ a = VecQ::Constant(N, Rational(0));
    long long total = 0;
    for (int j = 0; j < terms; ++j) {
      const ElementSet b = bases[static_cast<std::size_t>(rng() % nb)];
      const long long w = 1 + static_cast<long long>(rng() % 16);
      total += w;
      a += Rational(w) * indicator(N, b);
    }
    a = a / Rational(total);
    if (mix && interior && rng() % 2 == 0) a = (a + *interior) / Rational(2);
    consider(a);
  }
  return report;
}

}  // namespace hlab
