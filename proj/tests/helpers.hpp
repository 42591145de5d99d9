#pragma once

// Shared builders and independent oracles for the test suites. Oracles here
// are deliberately brute force and must stay independent of the library
// code paths they check.

#include <set>
#include <string>
#include <vector>

#include "alexdual/complex.hpp"

namespace testutil {

using alexdual::Ground;
using alexdual::GroundPtr;
using alexdual::Simplex;
using alexdual::SimplicialComplex;

inline GroundPtr ground(std::vector<std::string> names) {
  return alexdual::make_ground(std::move(names));
}

inline SimplicialComplex cx(std::vector<std::vector<std::string>> facets,
                            std::vector<std::string> ground_names) {
  return SimplicialComplex::from_facet_names(facets, std::move(ground_names));
}

inline SimplicialComplex cx(std::vector<std::vector<std::string>> facets) {
  return SimplicialComplex::from_facet_names(facets);
}

inline std::set<std::set<std::string>> facet_names(const SimplicialComplex& K) {
  std::set<std::set<std::string>> out;
  for (Simplex f : K.facets()) {
    std::set<std::string> one;
    for (int v : f.vertices()) one.insert(K.ground().name(v));
    out.insert(one);
  }
  return out;
}

inline std::set<std::set<std::string>> face_names(const SimplicialComplex& K) {
  std::set<std::set<std::string>> out;
  for (Simplex f : K.faces()) {
    std::set<std::string> one;
    for (int v : f.vertices()) one.insert(K.ground().name(v));
    out.insert(one);
  }
  return out;
}

// All 2^n subsets of the ground set that are non-faces with every proper
// subset a face. Usable up to |ground| = 8 or so.
inline std::vector<Simplex> brute_force_minimal_non_faces(const SimplicialComplex& K) {
  std::vector<Simplex> out;
  const std::uint64_t full = K.ground().full().bits;
  for (std::uint64_t m = 0; m <= full; ++m) {
    const Simplex s{m};
    if (!s.subset_of(Simplex{full})) continue;
    if (K.contains(s)) continue;
    bool all_proper_are_faces = true;
    for (int v : s.vertices())
      if (!K.contains(s.without(v))) {
        all_proper_are_faces = false;
        break;
      }
    if (all_proper_are_faces) out.push_back(s);
  }
  return out;
}

// Membership of the dual by the definitional criterion, subset by subset.
inline std::vector<Simplex> brute_force_dual_faces(const SimplicialComplex& K,
                                                   const Ground& V) {
  std::vector<Simplex> out;
  const std::uint64_t full = V.full().bits;
  for (std::uint64_t m = 0; m <= full; ++m) {
    if ((m & ~full) != 0) continue;
    Simplex complement{full & ~m};
    // translate the complement into K's ground by name
    bool in_K = false;
    if (!K.is_void()) {
      Simplex translated;
      bool translatable = true;
      for (int v : complement.vertices()) {
        auto id = K.ground().find(V.name(v));
        if (!id) {
          translatable = false;
          break;
        }
        translated = translated.with(*id);
      }
      in_K = translatable && K.contains(translated);
    }
    if (!in_K) out.push_back(Simplex{m});
    if (m == full) break;
  }
  return out;
}

}  // namespace testutil
