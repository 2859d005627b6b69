#include "hlab/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

namespace hlab {

namespace {

void require_ground(int ground) {
  if (ground < 0 || ground > kMaxGround) {
    throw InputError("ground set size must be in [0, " + std::to_string(kMaxGround) + "], got " +
                     std::to_string(ground));
  }
}

// Calls f on every k-subset of {0..n-1} in colexicographic bitmask order.
template <typename F>
void for_each_subset_of_size(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(ElementSet{0});
    return;
  }
  ElementSet s = full_set(k);
  const ElementSet limit = n >= 64 ? 0 : ElementSet{1} << n;
  while (true) {
    f(s);
    const ElementSet c = s & (~s + 1);
    const ElementSet r = s + c;
    if (r == 0 || (limit != 0 && r >= limit)) break;
    s = (((r ^ s) >> 2) / c) | r;
    if (limit != 0 && s >= limit) break;
  }
}

void sort_lex(std::vector<ElementSet>& sets) {
  std::sort(sets.begin(), sets.end(), lex_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

}  // namespace

Matroid Matroid::from_bases(int ground, std::vector<ElementSet> bases, bool require_simple) {
  require_ground(ground);
  if (bases.empty()) throw InputError("a matroid needs at least one basis");
  const int r = set_size(bases.front());
  for (ElementSet b : bases) {
    if (!is_subset(b, full_set(ground))) {
      throw InputError("basis " + format_set(b) + " leaves the ground set of size " + std::to_string(ground));
    }
    if (set_size(b) != r) {
      throw InputError("bases of unequal size: " + format_set(bases.front()) + " and " + format_set(b));
    }
  }
  sort_lex(bases);
  const std::unordered_set<ElementSet> lookup(bases.begin(), bases.end());
  for (ElementSet b1 : bases) {
    for (ElementSet b2 : bases) {
      for (int x : elements_of(b1 & ~b2)) {
        bool found = false;
        for (int y : elements_of(b2 & ~b1)) {
          if (lookup.count((b1 & ~singleton(x)) | singleton(y)) != 0) {
            found = true;
            break;
          }
        }
        if (!found) {
          throw InputError("not a matroid: exchange fails for " + format_set(b1) + ", " + format_set(b2) +
                           " removing " + std::to_string(x));
        }
      }
    }
  }
  Matroid m;
  m.ground_ = ground;
  m.rank_ = r;
  m.bases_ = std::move(bases);
  m.finish(require_simple);
  return m;
}

Matroid Matroid::from_nonbases(int ground, int rank, const std::vector<ElementSet>& nonbases, bool require_simple) {
  require_ground(ground);
  if (rank < 0 || rank > ground) {
    throw InputError("rank " + std::to_string(rank) + " out of range for ground " + std::to_string(ground));
  }
  std::unordered_set<ElementSet> excluded;
  for (ElementSet s : nonbases) {
    if (!is_subset(s, full_set(ground)) || set_size(s) != rank) {
      throw InputError("non-basis " + format_set(s) + " is not a " + std::to_string(rank) + "-subset of the ground set");
    }
    excluded.insert(s);
  }
  std::vector<ElementSet> bases;
  for_each_subset_of_size(ground, rank, [&](ElementSet s) {
    if (excluded.count(s) == 0) bases.push_back(s);
  });
  return from_bases(ground, std::move(bases), require_simple);
}

Matroid Matroid::from_representation(AnyMatrix rep, bool require_simple) {
  const int ground = static_cast<int>(any_cols(rep));
  require_ground(ground);
  std::visit([](const auto& x) { require_single_field(x); }, rep);
  const int r = column_rank(rep, full_set(ground));
  std::vector<ElementSet> bases;
  for_each_subset_of_size(ground, r, [&](ElementSet s) {
    if (column_rank(rep, s) == r) bases.push_back(s);
  });
  sort_lex(bases);
  Matroid m;
  m.ground_ = ground;
  m.rank_ = r;
  m.bases_ = std::move(bases);
  m.representation_ = std::move(rep);
  m.finish(require_simple);
  return m;
}

void Matroid::finish(bool require_simple) {
  if (!require_simple) return;
  const auto report = check_simple(*this);
  if (!report.loops.empty()) throw InputError("loop at element " + std::to_string(report.loops.front()));
  if (!report.parallel_pairs.empty()) {
    const auto [e, f] = report.parallel_pairs.front();
    throw InputError("parallel elements " + std::to_string(e) + " and " + std::to_string(f));
  }
}

int Matroid::rank_of(ElementSet s) const {
  int best = 0;
  for (ElementSet b : bases_) {
    best = std::max(best, set_size(s & b));
    if (best == rank_) break;
  }
  return best;
}

bool Matroid::is_basis(ElementSet s) const { return std::binary_search(bases_.begin(), bases_.end(), s, lex_less); }

Flat closure_and_rank(const Matroid& m, ElementSet s) {
  const int r = m.rank_of(s);
  ElementSet closed = s;
  for (int e = 0; e < m.ground(); ++e) {
    if (!contains(s, e) && m.rank_of(s | singleton(e)) == r) closed |= singleton(e);
  }
  return Flat{closed, r};
}

std::vector<std::vector<Flat>> flats_by_rank(const Matroid& m) {
  std::vector<std::vector<Flat>> levels(static_cast<std::size_t>(m.rank()) + 1);
  levels[0].push_back(closure_and_rank(m, 0));
  for (int k = 0; k < m.rank(); ++k) {
    std::set<ElementSet> seen;
    for (const Flat& f : levels[static_cast<std::size_t>(k)]) {
      for (int e = 0; e < m.ground(); ++e) {
        if (contains(f.elements, e)) continue;
        seen.insert(closure_and_rank(m, f.elements | singleton(e)).elements);
      }
    }
    std::vector<ElementSet> sorted(seen.begin(), seen.end());
    sort_lex(sorted);
    for (ElementSet s : sorted) levels[static_cast<std::size_t>(k) + 1].push_back(Flat{s, k + 1});
  }
  return levels;
}

std::vector<Flat> flats_of_rank(const Matroid& m, int k) {
  if (k < 0 || k > m.rank()) {
    throw InputError("flat rank " + std::to_string(k) + " outside [0, " + std::to_string(m.rank()) + "]");
  }
  return flats_by_rank(m)[static_cast<std::size_t>(k)];
}

std::vector<ElementSet> enumerate_bases(const Matroid& m) { return m.bases(); }

ElementSet extend_to_basis(const Matroid& m, ElementSet start, ElementSet pool) {
  ElementSet b = start;
  int r = m.rank_of(b);
  for (int e : elements_of(pool & ~start)) {
    if (m.rank_of(b | singleton(e)) == r + 1) {
      b |= singleton(e);
      ++r;
    }
  }
  return b;
}

std::vector<ElementSet> connected_components(const Matroid& m, std::optional<ElementSet> within) {
  const ElementSet w = within.value_or(m.ground_set());
  if (!is_subset(w, m.ground_set())) throw InputError("subset " + format_set(w) + " leaves the ground set");
  // Components of the fundamental-circuit graph of one basis of M|w.
  const ElementSet b = extend_to_basis(m, 0, w);
  const int r = set_size(b);
  std::vector<int> parent(static_cast<std::size_t>(m.ground()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (int e : elements_of(w & ~b)) {
    for (int f : elements_of(b)) {
      if (m.rank_of((b & ~singleton(f)) | singleton(e)) == r) {
        parent[static_cast<std::size_t>(find(e))] = find(f);
      }
    }
  }
  std::vector<ElementSet> comps;
  std::vector<int> root_index(static_cast<std::size_t>(m.ground()), -1);
  for (int e : elements_of(w)) {
    const int root = find(e);
    if (root_index[static_cast<std::size_t>(root)] < 0) {
      root_index[static_cast<std::size_t>(root)] = static_cast<int>(comps.size());
      comps.push_back(0);
    }
    comps[static_cast<std::size_t>(root_index[static_cast<std::size_t>(root)])] |= singleton(e);
  }
  return comps;
}

bool is_connected_set(const Matroid& m, ElementSet s) { return s != 0 && connected_components(m, s).size() == 1; }

std::vector<Flat> connected_flats(const Matroid& m) {
  std::vector<Flat> out;
  const auto levels = flats_by_rank(m);
  for (int k = 1; k < m.rank(); ++k) {
    for (const Flat& f : levels[static_cast<std::size_t>(k)]) {
      if (is_connected_set(m, f.elements)) out.push_back(f);
    }
  }
  return out;
}

SimplicityReport check_simple(const Matroid& m) {
  SimplicityReport report;
  for (int e = 0; e < m.ground(); ++e) {
    if (m.rank_of(singleton(e)) == 0) report.loops.push_back(e);
  }
  for (int e = 0; e < m.ground(); ++e) {
    if (m.rank_of(singleton(e)) == 0) continue;
    for (int f = e + 1; f < m.ground(); ++f) {
      if (m.rank_of(singleton(f)) == 0) continue;
      if (m.rank_of(singleton(e) | singleton(f)) < 2) report.parallel_pairs.emplace_back(e, f);
    }
  }
  return report;
}

}  // namespace hlab
