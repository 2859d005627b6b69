#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hlab/element_set.hpp"
#include "hlab/linalg.hpp"

namespace hlab {

/// A dense matrix over whichever exact field the input declared.
using AnyMatrix = std::variant<Mat<Rational>, Mat<Cyclotomic>, Mat<PrimeResidue>>;

inline Index any_rows(const AnyMatrix& m) {
  return std::visit([](const auto& x) { return x.rows(); }, m);
}
inline Index any_cols(const AnyMatrix& m) {
  return std::visit([](const auto& x) { return x.cols(); }, m);
}

/// Rank of the columns of `m` selected by `cols`.
template <typename S>
int column_rank(const Mat<S>& m, ElementSet cols) {
  const auto idx = elements_of(cols);
  if (idx.empty() || m.rows() == 0) return 0;
  Mat<S> sub(m.rows(), static_cast<Index>(idx.size()));
  for (std::size_t j = 0; j < idx.size(); ++j) sub.col(static_cast<Index>(j)) = m.col(idx[j]);
  return static_cast<int>(mat_rank(sub));
}

inline int column_rank(const AnyMatrix& m, ElementSet cols) {
  return std::visit([cols](const auto& x) { return column_rank(x, cols); }, m);
}

struct Flat {
  ElementSet elements = 0;
  int rank = 0;
  int size() const { return set_size(elements); }
  friend bool operator==(const Flat&, const Flat&) = default;
};

/// Order used for every flat list: by rank, then lexicographically.
inline bool flat_less(const Flat& a, const Flat& b) {
  if (a.rank != b.rank) return a.rank < b.rank;
  return lex_less(a.elements, b.elements);
}

struct SimplicityReport {
  std::vector<int> loops;
  std::vector<std::pair<int, int>> parallel_pairs;
  bool simple() const { return loops.empty() && parallel_pairs.empty(); }
};

/// Finite matroid on {0, ..., N-1}, stored by its sorted basis list. The rank
/// of a subset S is max |S & B| over the bases.
class Matroid {
public:
  static Matroid from_bases(int ground, std::vector<ElementSet> bases, bool require_simple = true);
  /// Bases are all rank-subsets not listed.
  static Matroid from_nonbases(int ground, int rank, const std::vector<ElementSet>& nonbases,
                               bool require_simple = true);
  /// Column matroid of `m` (one element per column).
  static Matroid from_representation(AnyMatrix m, bool require_simple = true);

  int ground() const { return ground_; }
  int rank() const { return rank_; }
  ElementSet ground_set() const { return full_set(ground_); }
  const std::vector<ElementSet>& bases() const { return bases_; }
  const std::optional<AnyMatrix>& representation() const { return representation_; }

  int rank_of(ElementSet s) const;
  bool is_independent(ElementSet s) const { return rank_of(s) == set_size(s); }
  bool is_basis(ElementSet s) const;

private:
  Matroid() = default;
  void finish(bool require_simple);

  int ground_ = 0;
  int rank_ = 0;
  std::vector<ElementSet> bases_;
  std::optional<AnyMatrix> representation_;
};

Flat closure_and_rank(const Matroid& m, ElementSet s);

/// All flats of rank k, sorted lexicographically.
std::vector<Flat> flats_of_rank(const Matroid& m, int k);
/// Flats grouped by rank: result[k] lists the rank-k flats.
std::vector<std::vector<Flat>> flats_by_rank(const Matroid& m);

std::vector<ElementSet> enumerate_bases(const Matroid& m);

/// Connected components of the restriction to `within` (default: whole ground),
/// ordered by smallest element.
std::vector<ElementSet> connected_components(const Matroid& m, std::optional<ElementSet> within = std::nullopt);
bool is_connected_set(const Matroid& m, ElementSet s);

/// Flats of rank 1..r-1 whose restriction is connected.
std::vector<Flat> connected_flats(const Matroid& m);

SimplicityReport check_simple(const Matroid& m);

/// Greedy extension of `start` to a basis, trying elements in increasing order.
ElementSet extend_to_basis(const Matroid& m, ElementSet start, ElementSet pool);

}  // namespace hlab
