#include "hlab/arrangement.hpp"

#include <algorithm>

namespace hlab {

namespace {

template <typename S>
void validate_normals(int dimension, const Mat<S>& m) {
  if (m.rows() != dimension + 1) {
    throw InputError("normals must have length n+1 = " + std::to_string(dimension + 1) + ", got " +
                     std::to_string(m.rows()));
  }
  for (Index j = 0; j < m.cols(); ++j) {
    bool zero = true;
    for (Index i = 0; i < m.rows(); ++i) zero = zero && is_zero(m(i, j));
    if (zero) throw InputError("hyperplane " + std::to_string(j) + " has a zero normal");
  }
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index k = j + 1; k < m.cols(); ++k) {
      if (column_rank(m, singleton(static_cast<int>(j)) | singleton(static_cast<int>(k))) < 2) {
        throw InputError("duplicate hyperplane: normals " + std::to_string(j) + " and " + std::to_string(k) +
                         " are proportional");
      }
    }
  }
}

template <typename S>
Mat<S> subspace_basis(const Mat<S>& normals, ElementSet flat) {
  const auto idx = elements_of(flat);
  Mat<S> stacked(static_cast<Index>(idx.size()), normals.rows());
  for (std::size_t r = 0; r < idx.size(); ++r) stacked.row(static_cast<Index>(r)) = normals.col(idx[r]).transpose();
  const auto kernel = mat_nullspace(stacked);
  Mat<S> out(normals.rows(), static_cast<Index>(kernel.size()));
  for (std::size_t c = 0; c < kernel.size(); ++c) out.col(static_cast<Index>(c)) = kernel[c];
  return out;
}

}  // namespace

Arrangement build_arrangement(int dimension, AnyMatrix normals) {
  if (dimension < 1) throw InputError("projective dimension must be at least 1, got " + std::to_string(dimension));
  std::visit(
      [dimension](const auto& m) {
        require_single_field(m);
        validate_normals(dimension, m);
      },
      normals);
  Matroid matroid = Matroid::from_representation(normals, true);
  return Arrangement(dimension, std::move(normals), std::move(matroid));
}

Subspace make_subspace(const Arrangement& a, ElementSet flat) {
  const Flat f = closure_and_rank(a.matroid(), flat);
  if (f.elements != flat) throw InputError(format_set(flat) + " is not a flat");
  Subspace out{f, std::visit([flat](const auto& m) { return AnyMatrix(subspace_basis(m, flat)); }, a.normals()),
               is_connected_set(a.matroid(), flat)};
  const int dim = static_cast<int>(any_cols(out.coordinates));
  if (dim != a.dimension() + 1 - f.rank) throw ConsistencyError("subspace dimension disagrees with flat rank");
  return out;
}

std::vector<Subspace> intersection_poset(const Arrangement& a) {
  std::vector<Subspace> out;
  const auto levels = flats_by_rank(a.matroid());
  const int top = std::min(a.dimension(), a.matroid().rank());
  for (int k = 1; k <= top; ++k) {
    for (const Flat& f : levels[static_cast<std::size_t>(k)]) out.push_back(make_subspace(a, f.elements));
  }
  return out;
}

std::vector<Subspace> irreducible_components_of(const Arrangement& a, const Subspace& l) {
  std::vector<Subspace> out;
  int total = 0;
  for (ElementSet comp : connected_components(a.matroid(), l.flat.elements)) {
    out.push_back(make_subspace(a, comp));
    total += out.back().codim();
  }
  if (total != l.codim()) {
    throw ConsistencyError("irreducible components of " + format_set(l.flat.elements) + " are not transversal");
  }
  return out;
}

bool is_nested_set(const Matroid& m, int dimension, const std::vector<Flat>& family) {
  for (const Flat& f : family) {
    if (!is_connected_set(m, f.elements)) {
      throw InputError("nested-set member " + format_set(f.elements) + " is not irreducible");
    }
  }
  const std::size_t k = family.size();
  if (k > 20) throw UnsupportedError("nested-set test enumerates subfamilies; at most 20 members supported");
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::vector<const Flat*> members;
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1U) members.push_back(&family[i]);
    }
    bool antichain = true;
    for (std::size_t i = 0; i < members.size() && antichain; ++i) {
      for (std::size_t j = i + 1; j < members.size() && antichain; ++j) {
        const ElementSet x = members[i]->elements, y = members[j]->elements;
        antichain = !is_subset(x, y) && !is_subset(y, x);
      }
    }
    if (!antichain) continue;
    ElementSet uni = 0;
    int rank_sum = 0;
    for (const Flat* f : members) {
      uni |= f->elements;
      rank_sum += f->rank;
    }
    const Flat join = closure_and_rank(m, uni);
    if (join.rank > dimension) return false;                 // empty intersection
    if (join.rank != rank_sum) return false;                 // not transversal
    if (is_connected_set(m, join.elements)) return false;   // irreducible intersection
  }
  return true;
}

bool is_nested_set(const Arrangement& a, const std::vector<Subspace>& family) {
  std::vector<Flat> flats;
  for (const auto& s : family) flats.push_back(s.flat);
  return is_nested_set(a.matroid(), a.dimension(), flats);
}

int induced_count(const Matroid& m, int h) {
  if (h < 0 || h >= m.ground()) throw InputError("hyperplane index " + std::to_string(h) + " out of range");
  int count = 0;
  if (m.rank() < 2) return 0;
  for (const Flat& f : flats_of_rank(m, 2)) count += contains(f.elements, h) ? 1 : 0;
  return count;
}

}  // namespace hlab
