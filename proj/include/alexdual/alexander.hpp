#pragma once

#include <vector>

#include "alexdual/complex.hpp"

namespace alexdual {

/// K* = { σ ⊆ V : V∖σ ∉ K }, computed as the antichain of complements of
/// the minimal non-faces of K. σ ranges over all subsets of V including ∅
/// and V itself: ∅ ∈ K* iff V ∉ K, and V ∈ K* iff K is void. Under this
/// convention K** = K exactly, and the dual of the full simplex is the void
/// complex (and vice versa).
inline SimplicialComplex alexander_dual(const SimplicialComplex& K, GroundPtr V) {
  for (int v : K.vertex_support().vertices())
    if (!V->find(K.ground().name(v)))
      throw DomainError("alexander_dual: vertex '" + K.ground().name(v) +
                        "' of K is outside the ground set");
  if (K.is_void()) return SimplicialComplex::full_simplex(std::move(V));

  const SimplicialComplex Kv = reground(K, V);
  const std::vector<Simplex> mnf = minimal_non_faces(Kv);
  if (mnf.empty()) return SimplicialComplex::void_complex(std::move(V));

  std::vector<Simplex> facets;
  facets.reserve(mnf.size());
  const Simplex all = V->full();
  for (Simplex s : mnf) facets.push_back(all.minus(s));
  return SimplicialComplex::from_facets(std::move(V), std::move(facets));
}

inline SimplicialComplex alexander_dual(const SimplicialComplex& K,
                                        std::vector<std::string> ground_names) {
  return alexander_dual(K, make_ground(std::move(ground_names)));
}

struct DualReport {
  int ground_size = 0;
  SimplicialComplex dual;
  std::size_t minimal_non_face_count = 0;
};

inline DualReport dual_report(const SimplicialComplex& K, GroundPtr V) {
  SimplicialComplex dual = alexander_dual(K, V);
  const std::size_t count = dual.is_void() ? 0 : dual.facets().size();
  return DualReport{V->size(), std::move(dual), count};
}

/// True iff (K*)* has exactly K's facet set (as subsets of V, by name).
inline bool double_dual_check(const SimplicialComplex& K, GroundPtr V) {
  const SimplicialComplex once = alexander_dual(K, V);
  const SimplicialComplex twice = alexander_dual(once, V);
  if (K.is_void()) return twice.is_void();
  return twice == reground(K, V);
}

}  // namespace alexdual
