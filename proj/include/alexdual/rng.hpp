#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alexdual/complex.hpp"

namespace alexdual {

// Counter-based generator: the k-th draw for a given seed is
//   mix64(seed + 0x9e3779b97f4a7c15 * (k + 1))
// with mix64 the splitmix64 finalizer. Draws depend only on (seed, k), so
// campaigns are reproducible across platforms and worker counts.
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ull;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebull;
  z ^= z >> 31;
  return z;
}

inline std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t counter) {
  return mix64(seed + 0x9e3779b97f4a7c15ull * (counter + 1));
}

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next() { return counter_hash(seed_, counter_++); }

  /// Uniform in [0, 1) with 53 bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, n); n must be positive and small (modulo reduction).
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// Uniform integer in [lo, hi] inclusive.
  int range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

/// Seeded random complex on vertices v0..v{n-1}: every candidate d-face
/// (d from max_dim down to 0, faces of equal dimension in increasing
/// bitmask order) is included independently with the given probability,
/// and the result is the downward closure of the included faces. Density 0
/// gives the empty complex, density 1 the full max_dim-skeleton.
inline SimplicialComplex random_complex(int n_vertices, int max_dim, double density,
                                        std::uint64_t seed) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n_vertices));
  for (int i = 0; i < n_vertices; ++i) names.push_back("v" + std::to_string(i));
  GroundPtr g = make_ground(std::move(names));

  CounterRng rng(seed);
  std::vector<Simplex> included;
  for (int d = std::min(max_dim, n_vertices - 1); d >= 0; --d)
    for_each_subset_of_size(g->full(), d + 1, [&](Simplex s) {
      if (rng.unit() < density) included.push_back(s);
    });
  return SimplicialComplex::from_facets(std::move(g), std::move(included));
}

inline int max_facet_incidence(const SimplicialComplex& K) {
  int worst = 0;
  for (int v : K.vertex_support().vertices()) {
    int inc = 0;
    for (Simplex f : K.facets())
      if (f.contains(v)) ++inc;
    worst = std::max(worst, inc);
  }
  return worst;
}

/// Corpus instance generator shared by the randomized campaigns. Instances
/// are stratified over degenerate specials, graphs, and 2-/3-dimensional
/// complexes, and resampled deterministically until the facet antichain
/// has at most 64 members and no vertex lies in more than 8 facets. The
/// first cap keeps nerves representable on a 64-vertex ground, the second
/// keeps their face closures enumerable.
inline SimplicialComplex corpus_complex(std::uint64_t seed, int max_vertices) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    CounterRng rng(counter_hash(seed, attempt));
    const int n = rng.range(2, max_vertices);
    const int strata = rng.range(0, 9);
    SimplicialComplex K = [&]() -> SimplicialComplex {
      if (strata == 0) {
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
        GroundPtr g = make_ground(std::move(names));
        switch (rng.range(0, 3)) {
          case 0: return SimplicialComplex::empty_complex(g);
          case 1: return SimplicialComplex::full_simplex(g);
          case 2: return SimplicialComplex::from_facets(g, {Simplex::single(0)});
          default: return boundary_of_simplex(g, g->full());
        }
      }
      if (strata <= 4) return random_complex(n, 1, rng.unit(), rng.next());
      if (strata <= 7)
        return random_complex(n, 2, 0.05 + 0.45 * rng.unit(), rng.next());
      return random_complex(std::min(n, 7), 3, 0.05 + 0.30 * rng.unit(), rng.next());
    }();
    if (K.facets().size() > 64) continue;
    if (max_facet_incidence(K) > 8) continue;
    return K;
  }
}

}  // namespace alexdual
