#pragma once

#include <string>
#include <variant>
#include <vector>

#include "hlab/matroid.hpp"

namespace hlab {

/// Central hyperplane arrangement in P^n: normals are the columns of an
/// (n+1) x N matrix over one exact field.
class Arrangement {
public:
  Arrangement(int dimension, AnyMatrix normals, Matroid matroid)
      : dimension_(dimension), normals_(std::move(normals)), matroid_(std::move(matroid)) {}

  int dimension() const { return dimension_; }
  int size() const { return matroid_.ground(); }
  const AnyMatrix& normals() const { return normals_; }
  const Matroid& matroid() const { return matroid_; }
  bool essential() const { return matroid_.rank() == dimension_ + 1; }

private:
  int dimension_;
  AnyMatrix normals_;
  Matroid matroid_;
};

/// Validates the normals: correct length, no zero normal, no proportional pair.
Arrangement build_arrangement(int dimension, AnyMatrix normals);

template <typename S>
Arrangement build_arrangement(int dimension, const Mat<S>& normals) {
  return build_arrangement(dimension, AnyMatrix(normals));
}

/// An intersection subspace L, described through its flat of hyperplanes.
struct Subspace {
  Flat flat;          // hyperplanes containing L; codim L = flat.rank
  AnyMatrix coordinates;  // columns span the linear subspace, in reduced echelon form
  bool irreducible = false;
  int codim() const { return flat.rank; }
  int multiplicity() const { return flat.size(); }
};

/// Nonempty proper intersections: flats of rank 1..min(n, rank), ordered by rank then lexicographically.
std::vector<Subspace> intersection_poset(const Arrangement& a);

Subspace make_subspace(const Arrangement& a, ElementSet flat);

/// Maximal irreducible subspaces containing L; their codims add up to codim L.
std::vector<Subspace> irreducible_components_of(const Arrangement& a, const Subspace& l);

/// Nested-set test relative to the irreducible subspaces.
bool is_nested_set(const Arrangement& a, const std::vector<Subspace>& family);
bool is_nested_set(const Matroid& m, int dimension, const std::vector<Flat>& family);

/// Number of codimension-two subspaces inside hyperplane h.
int induced_count(const Matroid& m, int h);
inline int induced_count(const Arrangement& a, int h) { return induced_count(a.matroid(), h); }

/// Either a geometric arrangement or an abstract matroid.
class Source {
public:
  Source(Arrangement a) : value_(std::move(a)) {}  // NOLINT
  Source(Matroid m) : value_(std::move(m)) {}      // NOLINT

  bool is_arrangement() const { return std::holds_alternative<Arrangement>(value_); }
  const Arrangement& arrangement() const { return std::get<Arrangement>(value_); }
  const Matroid& matroid() const {
    return is_arrangement() ? arrangement().matroid() : std::get<Matroid>(value_);
  }
  /// n: the ambient projective dimension, or rank - 1 for an abstract matroid.
  int projective_dimension() const { return is_arrangement() ? arrangement().dimension() : matroid().rank() - 1; }
  bool essential() const { return matroid().rank() == projective_dimension() + 1; }
  int size() const { return matroid().ground(); }

private:
  std::variant<Arrangement, Matroid> value_;
};

}  // namespace hlab
