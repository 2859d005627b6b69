#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hlab/hirzform.hpp"

namespace hlab {

/// Flats the inequality scans run over, precomputed once per matroid.
struct StabilityContext {
  int N = 0;
  int n = 0;  // rank - 1
  std::vector<Flat> connected_flats;
  std::vector<Flat> all_flats;  // ranks 1..r-1
};

StabilityContext make_stability_context(const Matroid& m);

struct FlatSlack {
  Flat flat;
  Rational sum;    // sum of a_H over the flat
  Rational slack;  // rank/(n+1) * s - sum
};

struct StabilityReport {
  bool klt = false;
  bool cy = false;
  bool log_canonical = false;
  bool stable = false;
  bool semistable = false;
  Rational s;
  std::optional<Rational> lambda;  // (n+1)/s when s > 0
  std::vector<FlatSlack> violations;  // flats with slack <= 0
  std::vector<int> nonpositive;       // elements with a_H <= 0
};

/// Scans connected flats only, or every flat when all_flats is set.
StabilityReport classify_weights(const StabilityContext& ctx, const VecQ& a, bool all_flats = false);

struct StablePointResult {
  std::optional<VecQ> point;
  std::optional<Flat> certificate;  // a separator: the stable cone is empty
};

/// Sum of basis indicators that lands in the stable cone, or a reducibility certificate.
StablePointResult interior_stable_point(const Matroid& m);
StablePointResult interior_stable_point(const Source& s);

struct HullResult {
  bool member = false;
  std::vector<std::pair<ElementSet, Rational>> multipliers;  // non-zero lambda_B when member
  std::optional<FlatSlack> violated;                          // first violated inequality otherwise
};

/// Cone over the matroid polytope, decided by inequalities and by exact LP, which must agree.
HullResult hull_membership(const Matroid& m, const VecQ& a);

struct SimplexMinimum {
  Rational value;
  VecQ point;
  ElementSet support = 0;
};

/// HLAB_MAX_N from the environment, default 20.
int max_enumeration_size();

/// Exact minimum of x^T P x over the standard simplex.
SimplexMinimum simplex_minimum(const MatQ& p);

struct CopositivityResult {
  bool copositive = false;
  SimplexMinimum minimum;
  std::optional<VecQ> witness;
};

CopositivityResult copositivity_check(const MatQ& p);

struct SampleReport {
  int drawn = 0;
  int evaluated = 0;  // samples that were semistable
  std::optional<Rational> max_value;
  std::optional<VecQ> argmax;
  std::optional<VecQ> witness;  // a point with Q > 0, if any
  std::optional<Rational> witness_value;
};

/// Random convex combinations of basis indicators plus the all-ones vector and
/// the interior stable point as probes. Deterministic for a fixed seed.
SampleReport sample_stable_cone(const Matroid& m, int count, std::uint64_t seed, bool mix = true);

}  // namespace hlab
