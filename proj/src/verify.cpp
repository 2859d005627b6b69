#include "hlab/verify.hpp"

#include <functional>

#include "hlab/cone.hpp"
#include "hlab/hirzform.hpp"
#include "hlab/random.hpp"

namespace hlab {

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

IdentityCheck run_check(const std::string& name, const std::function<std::string()>& body) {
  try {
    return {name, true, body()};
  } catch (const Failure& f) {
    return {name, false, f.what};
  } catch (const ConsistencyError& e) {
    return {name, false, e.what()};
  }
}

}  // namespace

std::vector<IdentityCheck> run_identity_suite(const Source& source, std::uint64_t seed, int count) {
  const Matroid& m = source.matroid();
  const HirzebruchForm f = build_form(m);
  const StabilityContext ctx = make_stability_context(m);
  const int N = f.N, n = f.n;
  const std::string per = std::to_string(count) + " seeded vectors";

  std::vector<VecQ> samples;
  Rng rng(seed);
  for (int i = 0; i < count; ++i) samples.push_back(rng.vector(N, 1, 12, 6));

  std::vector<IdentityCheck> out;
  out.push_back(run_check("form_routes_agree", [&] {
    for (const auto& a : samples) {
      const FormValues v = eval_form_routes(f, a);
      expect(v.matrix == v.by_lines && v.matrix == v.by_pairs, "routes differ: " + v.matrix.str() + ", " +
                                                                   v.by_lines.str() + ", " + v.by_pairs.str());
    }
    return per;
  }));
  out.push_back(run_check("euler_identity", [&] {
    for (const auto& a : samples) {
      expect(a.dot(form_gradient(f, a)) == Rational(2) * eval_form(f, a), "sum a_H dQ/da_H != 2Q");
    }
    return per;
  }));
  out.push_back(run_check("row_sums", [&] {
    for (int i = 0; i < N; ++i) {
      const Rational expected((n - 1) * N - (n + 1) * (f.t[static_cast<std::size_t>(i)] - 1));
      expect(f.Q.row(i).sum() == expected, "row " + std::to_string(i));
    }
    return std::to_string(N) + " rows";
  }));
  out.push_back(run_check("rank2_pair_count", [&] {
    long long total = 0;
    for (const auto* list : {&f.irreducible_lines, &f.reducible_lines}) {
      for (ElementSet l : *list) total += static_cast<long long>(set_size(l)) * (set_size(l) - 1);
    }
    expect(total == static_cast<long long>(N) * (N - 1), "sum m(m-1) = " + std::to_string(total));
    return "sum m(m-1) = " + std::to_string(total);
  }));
  out.push_back(run_check("cy_slice_chern", [&] {
    for (const auto& a : samples) {
      const VecQ b = a * (Rational(n + 1) / a.sum());
      expect(eval_form(f, b) == Rational(4 * (n + 1)) * leading_chern_coefficient(f, b), "Q != 4(n+1) C");
    }
    return per;
  }));
  out.push_back(run_check("stable_iff_klt_rescaled", [&] {
    int stable = 0;
    for (const auto& a : samples) {
      const auto r = classify_weights(ctx, a);
      const auto k = classify_weights(ctx, a * *r.lambda);
      expect(r.stable == k.klt, "stable(a) != klt(lambda a)");
      stable += r.stable ? 1 : 0;
    }
    return per + ", " + std::to_string(stable) + " stable";
  }));
  out.push_back(run_check("irreducible_flat_sufficiency", [&] {
    for (const auto& a : samples) {
      const auto c = classify_weights(ctx, a, false);
      const auto all = classify_weights(ctx, a, true);
      expect(c.klt == all.klt && c.stable == all.stable && c.semistable == all.semistable &&
                 c.log_canonical == all.log_canonical,
             "connected-flat scan disagrees with the full scan");
    }
    return per;
  }));
  out.push_back(run_check("q_of_ones_closed_form", [&] { return "Q(1) = " + q_of_ones(f).str(); }));
  out.push_back(run_check("kernel_condition", [&] {
    const auto ki = kernel_and_inertia(f);
    expect(mat_rank(f.Q) == ki.inertia.positive + ki.inertia.negative, "rank != n_pos + n_neg");
    for (const auto& v : ki.kernel) expect(VecQ(f.Q * v) == VecQ::Constant(N, Rational(0)), "kernel vector not annihilated");
    return "kernel dimension " + std::to_string(ki.kernel.size());
  }));
  out.push_back(run_check("ones_eigenvector_iff_equal_t", [&] {
    const VecQ ones = VecQ::Constant(N, Rational(1));
    const VecQ q1 = f.Q * ones;
    bool eigen = true;
    for (int i = 1; i < N; ++i) eigen = eigen && q1(i) == q1(0);
    bool equal_t = true;
    for (int t : f.t) equal_t = equal_t && t == f.t.front();
    expect(eigen == equal_t, "eigenvector test and t_i equality disagree");
    return eigen ? "1 is an eigenvector" : "1 is not an eigenvector";
  }));
  out.push_back(run_check("rank2_connected_flats", [&] {
    std::vector<ElementSet> connected;
    for (const Flat& c : ctx.connected_flats) {
      if (c.rank == 2) connected.push_back(c.elements);
    }
    expect(connected == f.irreducible_lines, "connected rank-2 flats differ from lines with m >= 3");
    return std::to_string(connected.size()) + " irreducible lines";
  }));
  out.push_back(run_check("induced_count_split", [&] {
    for (int h = 0; h < N; ++h) {
      const int t = induced_count(m, h);
      expect(t == f.t[static_cast<std::size_t>(h)], "t_H mismatch");
      expect(f.B[static_cast<std::size_t>(h)] + 1 == f.sigma[static_cast<std::size_t>(h)], "B_H + 1 != sigma_H");
    }
    return std::to_string(N) + " hyperplanes";
  }));
  out.push_back(run_check("flat_multiplicities", [&] {
    for (const Flat& fl : ctx.all_flats) {
      expect(fl.size() >= fl.rank, "m_L < codim L at " + format_set(fl.elements));
      if (fl.rank == 2) {
        expect(is_connected_set(m, fl.elements) == (fl.size() >= 3), "codim-2 irreducibility != (m_L >= 3)");
      }
    }
    return std::to_string(ctx.all_flats.size()) + " flats";
  }));
  if (m.representation()) {
    out.push_back(run_check("representation_rank_oracle", [&] {
      Rng sub(seed ^ 0x9e3779b97f4a7c15ULL);
      for (int i = 0; i < 500; ++i) {
        const ElementSet s = sub.below(full_set(N)) + 1;
        expect(m.rank_of(s & full_set(N)) == column_rank(*m.representation(), s & full_set(N)),
               "rank mismatch at " + format_set(s));
      }
      return std::string("500 seeded subsets");
    }));
  }
  if (N <= 9) {
    out.push_back(run_check("edmonds_duality", [&] {
      Rng hull(seed + 1);
      int members = 0;
      for (int i = 0; i < count; ++i) {
        members += hull_membership(m, hull.vector(N, 0, 4, 3)).member ? 1 : 0;
      }
      return per + ", " + std::to_string(members) + " members";
    }));
  }
  return out;
}

}  // namespace hlab
