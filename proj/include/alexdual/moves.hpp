#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "alexdual/alexander.hpp"
#include "alexdual/complex.hpp"
#include "alexdual/homology.hpp"

namespace alexdual {

// ---------------------------------------------------------------------------
// Collapse certificates

struct CollapseStep {
  enum class Kind { elementary, strong };
  Kind kind = Kind::elementary;
  // elementary: the free pair (τ, σ), as vertex names
  std::vector<std::string> tau, sigma;
  // strong: the dominated vertex and its witness
  std::string vertex, witness;

  static CollapseStep free_pair(std::vector<std::string> t, std::vector<std::string> s) {
    CollapseStep step;
    step.kind = Kind::elementary;
    step.tau = std::move(t);
    step.sigma = std::move(s);
    return step;
  }

  static CollapseStep dominated(std::string v, std::string w) {
    CollapseStep step;
    step.kind = Kind::strong;
    step.vertex = std::move(v);
    step.witness = std::move(w);
    return step;
  }
};

/// An ordered witness that `start` collapses to `end`. Steps are stored by
/// vertex name so they survive the re-grounding that strong steps perform.
struct CollapseCertificate {
  SimplicialComplex start, end;
  std::vector<CollapseStep> steps;
};

// ---------------------------------------------------------------------------
// Free faces and elementary collapses

/// All pairs (τ, σ) where σ is the unique face of K strictly containing τ.
/// σ is then a facet with dim σ = dim τ + 1. Sorted by (τ, σ) bitmask.
/// Note the single-point complex yields the degenerate pair (∅, {v}).
inline std::vector<std::pair<Simplex, Simplex>> free_faces(const SimplicialComplex& K) {
  if (K.is_void()) throw DomainError("free_faces: void complex");
  const std::vector<Simplex> fs = K.faces();
  std::vector<std::pair<Simplex, Simplex>> out;
  for (Simplex tau : fs) {
    int count = 0;
    Simplex only;
    for (Simplex s : fs) {
      if (!tau.proper_subset_of(s)) continue;
      ++count;
      only = s;
      if (count > 1) break;
    }
    if (count == 1) out.emplace_back(tau, only);
  }
  return out;
}

/// Unique-strict-coface test inside an explicit, downward-closed face list.
inline bool is_free_pair_in(const std::vector<Simplex>& faces, Simplex tau, Simplex sigma) {
  if (!tau.proper_subset_of(sigma)) return false;
  if (std::find(faces.begin(), faces.end(), tau) == faces.end()) return false;
  for (Simplex s : faces)
    if (tau.proper_subset_of(s) && s != sigma) return false;
  return std::find(faces.begin(), faces.end(), sigma) != faces.end();
}

namespace detail {
/// Face set (assumed downward closed) back to a complex; an exhausted face
/// set is the void complex.
inline SimplicialComplex complex_from_faces(GroundPtr g, std::vector<Simplex> faces) {
  if (faces.empty()) return SimplicialComplex::void_complex(std::move(g));
  return SimplicialComplex::from_facets(std::move(g), std::move(faces));
}
}  // namespace detail

/// K ∖ {τ, σ} for a free pair (τ, σ).
inline SimplicialComplex elementary_collapse(const SimplicialComplex& K, Simplex tau,
                                             Simplex sigma) {
  if (K.is_void()) throw DomainError("elementary_collapse: void complex");
  std::vector<Simplex> fs = K.faces();
  if (!is_free_pair_in(fs, tau, sigma))
    throw DomainError("elementary_collapse: (tau, sigma) is not a free pair");
  std::erase(fs, tau);
  std::erase(fs, sigma);
  return detail::complex_from_faces(K.ground_ptr(), std::move(fs));
}

/// Replays a certificate step by step, checking the legality of every step
/// in its predecessor; throws DomainError on an illegal step and returns
/// the final complex.
inline SimplicialComplex replay_certificate(const CollapseCertificate& cert) {
  SimplicialComplex cur = cert.start;
  for (const CollapseStep& step : cert.steps) {
    if (step.kind == CollapseStep::Kind::elementary) {
      const Simplex tau = cur.ground().simplex_of(step.tau);
      const Simplex sigma = cur.ground().simplex_of(step.sigma);
      cur = elementary_collapse(cur, tau, sigma);
    } else {
      if (step.vertex == step.witness)
        throw DomainError("replay: strong step witnesses itself");
      const int v = cur.ground().id(step.vertex);
      const int w = cur.ground().id(step.witness);
      for (Simplex f : cur.facets())
        if (f.contains(v) && !f.contains(w))
          throw DomainError("replay: vertex '" + step.vertex + "' is not dominated by '" +
                            step.witness + "'");
      cur = deletion(cur, v);
    }
  }
  return cur;
}

/// True iff every step is legal and the replay ends at exactly cert.end.
inline bool verify_certificate(const CollapseCertificate& cert) {
  try {
    return replay_certificate(cert) == cert.end;
  } catch (const DomainError&) {
    return false;
  }
}

// ---------------------------------------------------------------------------
// Collapse search

enum class SearchStatus { found, impossible, budget_exhausted };

struct CollapseSearch {
  SearchStatus status = SearchStatus::impossible;
  std::optional<CollapseCertificate> certificate;
  std::uint64_t nodes = 0;  // attempted elementary collapses, over the whole search
};

namespace detail {

struct FaceSetHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const {
    std::uint64_t h = 0x2545f4914f6cdd1dull;
    for (std::uint64_t x : v) {
      x ^= x >> 33;
      x *= 0xff51afd7ed558ccdull;
      h = (h ^ x) * 0xc4ceb9fe1a85ec53ull;
    }
    return static_cast<std::size_t>(h);
  }
};

inline std::vector<std::uint64_t> face_key(const std::vector<Simplex>& faces) {
  std::vector<std::uint64_t> key;
  key.reserve(faces.size());
  for (Simplex s : faces) key.push_back(s.bits);
  return key;
}

// Backtracking over free pairs whose members are both outside the target.
// Candidates are tried by descending coface dimension, then lexicographic
// (σ, τ) bitmask order; exhausted states are memoized.
struct CollapseSearcher {
  CollapseSearcher(const std::vector<Simplex>& t, std::uint64_t b) : target(t), budget(b) {}

  const std::vector<Simplex>& target;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool budget_hit = false;
  std::unordered_set<std::vector<std::uint64_t>, FaceSetHash> dead;
  std::vector<std::pair<Simplex, Simplex>> path;

  bool run(std::vector<Simplex>& faces) {
    if (faces == target) return true;
    auto key = face_key(faces);
    if (dead.contains(key)) return false;

    std::vector<std::pair<Simplex, Simplex>> candidates;
    for (Simplex tau : faces) {
      if (std::binary_search(target.begin(), target.end(), tau)) continue;
      int count = 0;
      Simplex only;
      for (Simplex s : faces) {
        if (!tau.proper_subset_of(s)) continue;
        ++count;
        only = s;
        if (count > 1) break;
      }
      if (count == 1 && !std::binary_search(target.begin(), target.end(), only))
        candidates.emplace_back(tau, only);
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const auto& a, const auto& b) {
                const int da = a.second.cardinality(), db = b.second.cardinality();
                if (da != db) return da > db;
                if (a.second != b.second) return a.second < b.second;
                return a.first < b.first;
              });

    for (const auto& [tau, sigma] : candidates) {
      if (nodes >= budget) {
        budget_hit = true;
        return false;
      }
      ++nodes;
      std::vector<Simplex> next;
      next.reserve(faces.size() - 2);
      for (Simplex s : faces)
        if (s != tau && s != sigma) next.push_back(s);
      path.emplace_back(tau, sigma);
      if (run(next)) return true;
      path.pop_back();
      if (budget_hit) return false;
    }
    dead.insert(std::move(key));
    return false;
  }
};

inline std::vector<Simplex> target_faces_in(const SimplicialComplex& K,
                                            const SimplicialComplex& L) {
  std::vector<Simplex> target;
  if (L.is_void()) return target;
  for (Simplex f : L.faces()) {
    Simplex m;
    for (int v : f.vertices()) {
      auto id = K.ground().find(L.ground().name(v));
      if (!id) throw DomainError("collapses_to: target is not a subcomplex (vertex '" +
                                 L.ground().name(v) + "' missing)");
      m = m.with(*id);
    }
    if (!K.contains(m))
      throw DomainError("collapses_to: target is not a subcomplex of the start");
    target.push_back(m);
  }
  std::sort(target.begin(), target.end());
  return target;
}

inline CollapseCertificate certificate_from_path(
    const SimplicialComplex& K, const std::vector<std::pair<Simplex, Simplex>>& path,
    std::vector<Simplex> target) {
  CollapseCertificate cert{K, detail::complex_from_faces(K.ground_ptr(), std::move(target)), {}};
  for (const auto& [tau, sigma] : path)
    cert.steps.push_back(CollapseStep::free_pair(K.ground().names_of(tau),
                                                 K.ground().names_of(sigma)));
  return cert;
}

}  // namespace detail

/// Searches for a sequence of elementary collapses from K to L (a face-wise
/// subcomplex, matched by vertex name). The budget bounds the total number
/// of attempted collapse steps across the whole backtracking search; an
/// exhausted search space is reported as `impossible`, a tripped budget as
/// `budget_exhausted` (inconclusive). The certificate's end complex carries
/// K's ground set with L's faces.
inline CollapseSearch collapses_to(const SimplicialComplex& K, const SimplicialComplex& L,
                                   std::uint64_t budget = 100000) {
  if (K.is_void()) throw DomainError("collapses_to: void start complex");
  std::vector<Simplex> target = detail::target_faces_in(K, L);
  std::vector<Simplex> faces = K.faces();

  CollapseSearch result;
  if (faces == target) {
    result.status = SearchStatus::found;
    result.certificate = detail::certificate_from_path(K, {}, std::move(target));
    return result;
  }
  if ((faces.size() - target.size()) % 2 != 0) {
    result.status = SearchStatus::impossible;  // collapses remove faces in pairs
    return result;
  }

  detail::CollapseSearcher searcher{target, budget};
  const bool found = searcher.run(faces);
  result.nodes = searcher.nodes;
  if (found) {
    result.status = SearchStatus::found;
    result.certificate = detail::certificate_from_path(K, searcher.path, std::move(target));
  } else {
    result.status = searcher.budget_hit ? SearchStatus::budget_exhausted
                                        : SearchStatus::impossible;
  }
  return result;
}

struct BoundaryCollapse {
  SearchStatus status = SearchStatus::impossible;
  std::optional<CollapseCertificate> certificate;
  std::optional<Simplex> sigma;  // in K's ground: the simplex whose boundary was reached
  std::uint64_t nodes = 0;
};

/// Tries to collapse K onto ∂σ for some σ with ∂σ ⊆ K, largest candidates
/// first. Candidates are exactly the faces and minimal non-faces of K with
/// at least two vertices. The budget is shared across all candidates.
inline BoundaryCollapse collapses_to_some_simplex_boundary(const SimplicialComplex& K,
                                                           std::uint64_t budget = 100000) {
  if (K.is_void()) throw DomainError("collapses_to_some_simplex_boundary: void complex");
  std::vector<Simplex> candidates;
  for (Simplex s : K.faces())
    if (s.cardinality() >= 2) candidates.push_back(s);
  for (Simplex s : minimal_non_faces(K))
    if (s.cardinality() >= 2) candidates.push_back(s);
  std::sort(candidates.begin(), candidates.end(), [](Simplex a, Simplex b) {
    if (a.cardinality() != b.cardinality()) return a.cardinality() > b.cardinality();
    return a < b;
  });

  BoundaryCollapse result;
  const std::vector<Simplex> faces = K.faces();
  bool any_budget_hit = false;
  for (Simplex sigma : candidates) {
    std::vector<Simplex> target;
    for_each_subset(sigma, [&](Simplex s) {
      if (s != sigma) target.push_back(s);
    });
    std::sort(target.begin(), target.end());
    if ((faces.size() - target.size()) % 2 != 0) continue;

    const std::uint64_t remaining = budget > result.nodes ? budget - result.nodes : 0;
    detail::CollapseSearcher searcher{target, remaining};
    std::vector<Simplex> state = faces;
    const bool found = state == target || searcher.run(state);
    result.nodes += searcher.nodes;
    if (found) {
      result.status = SearchStatus::found;
      result.certificate = detail::certificate_from_path(K, searcher.path, std::move(target));
      result.sigma = sigma;
      return result;
    }
    any_budget_hit = any_budget_hit || searcher.budget_hit;
  }
  result.status = any_budget_hit ? SearchStatus::budget_exhausted : SearchStatus::impossible;
  return result;
}

// ---------------------------------------------------------------------------
// Domination, strong collapses, cores

/// All pairs (v, w), w ≠ v, where w belongs to every facet of K containing
/// v. Equivalent to lk(v, K) being a cone with apex w; the facet criterion
/// is a bitmask intersection, and the equivalence is cross-checked in tests.
inline std::vector<std::pair<int, int>> dominated_vertices(const SimplicialComplex& K) {
  if (K.is_void()) throw DomainError("dominated_vertices: void complex");
  std::vector<std::pair<int, int>> out;
  for (int v : K.vertex_support().vertices()) {
    Simplex witnesses = K.ground().full();
    for (Simplex f : K.facets())
      if (f.contains(v)) witnesses = witnesses.intersect(f);
    witnesses = witnesses.without(v);
    for (int w : witnesses.vertices()) out.emplace_back(v, w);
  }
  return out;
}

/// Deletion of a dominated vertex (an elementary strong collapse).
inline SimplicialComplex strong_collapse_step(const SimplicialComplex& K, int v) {
  for (const auto& [dv, dw] : dominated_vertices(K))
    if (dv == v) return deletion(K, v);
  throw DomainError("strong_collapse_step: vertex is not dominated");
}

/// Repeatedly deletes the smallest-id dominated vertex. The result has no
/// dominated vertex; its uniqueness up to isomorphism is a tested property.
inline SimplicialComplex core(const SimplicialComplex& K) {
  if (K.is_void()) throw DomainError("core: void complex");
  SimplicialComplex cur = K;
  while (true) {
    const auto dom = dominated_vertices(cur);
    if (dom.empty()) return cur;
    cur = deletion(cur, dom.front().first);
  }
}

/// Like core(), but records the deletions and never removes a vertex whose
/// name is in `keep`. Used to exhibit strong collapses onto a subcomplex.
inline CollapseCertificate strong_collapse_avoiding(
    const SimplicialComplex& K, const std::vector<std::string>& keep) {
  if (K.is_void()) throw DomainError("strong_collapse_avoiding: void complex");
  CollapseCertificate cert{K, K, {}};
  SimplicialComplex cur = K;
  while (true) {
    bool deleted = false;
    for (const auto& [v, w] : dominated_vertices(cur)) {
      const std::string& name = cur.ground().name(v);
      if (std::find(keep.begin(), keep.end(), name) != keep.end()) continue;
      cert.steps.push_back(CollapseStep::dominated(name, cur.ground().name(w)));
      cur = deletion(cur, v);
      deleted = true;
      break;
    }
    if (!deleted) break;
  }
  cert.end = cur;
  return cert;
}

// ---------------------------------------------------------------------------
// Nerves

/// N(K): one vertex per facet of K (labeled f0, f1, ... in facet order); a
/// set of facets spans a face iff the facets share a source vertex.
struct NerveComplex {
  SimplicialComplex complex;
  std::vector<Simplex> source_facets;  // nerve vertex id -> facet of the source
  GroundPtr source_ground;
};

inline NerveComplex nerve(const SimplicialComplex& K) {
  if (K.is_void()) throw DomainError("nerve: void complex");
  const std::vector<Simplex>& facets = K.facets();
  if (facets.size() > 64)
    throw SizeLimitError("nerve: complex has " + std::to_string(facets.size()) +
                         " facets; at most 64 are supported");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < facets.size(); ++i) labels.push_back("f" + std::to_string(i));
  GroundPtr g = make_ground(std::move(labels));

  std::vector<Simplex> nerve_facets;
  for (int v : K.vertex_support().vertices()) {
    Simplex fv;
    for (std::size_t i = 0; i < facets.size(); ++i)
      if (facets[i].contains(v)) fv = fv.with(static_cast<int>(i));
    nerve_facets.push_back(fv);
  }
  return NerveComplex{SimplicialComplex::from_facets(g, std::move(nerve_facets)), facets,
                      K.ground_ptr()};
}

inline NerveComplex square_nerve(const SimplicialComplex& K) {
  return nerve(nerve(K).complex);
}

/// The simplicial map f : N(L) → N(K) from the nerve-collapse lemma, for
/// L = K ∖ v with v dominated: a facet σ of L maps to itself if it is still
/// a facet of K, and to σ ∪ {v} otherwise. Returns N(K), N(L), the vertex
/// image, and the image complex f(N(L)) on N(K)'s ground.
struct NerveMapImage {
  NerveComplex nerve_K, nerve_L;
  std::vector<int> vertex_image;  // N(L) vertex -> N(K) vertex
  SimplicialComplex image;
};

inline NerveMapImage nerve_map_image(const SimplicialComplex& K, int v) {
  bool dominated = false;
  for (const auto& [dv, dw] : dominated_vertices(K))
    if (dv == v) {
      dominated = true;
      break;
    }
  if (!dominated) throw DomainError("nerve_map_image: vertex is not dominated");

  const SimplicialComplex L = deletion(K, v);
  NerveComplex NK = nerve(K);
  NerveComplex NL = nerve(L);

  auto facet_index = [&](Simplex f) {
    const auto it = std::lower_bound(NK.source_facets.begin(), NK.source_facets.end(), f);
    if (it == NK.source_facets.end() || *it != f)
      throw DomainError("nerve_map_image: image facet is not a facet of K");
    return static_cast<int>(it - NK.source_facets.begin());
  };

  std::vector<int> vertex_image;
  for (Simplex fl : NL.source_facets) {
    const Simplex in_K = detail::remap(L.ground(), K.ground(), fl);
    vertex_image.push_back(K.contains(in_K) && std::binary_search(NK.source_facets.begin(),
                                                                  NK.source_facets.end(), in_K)
                               ? facet_index(in_K)
                               : facet_index(in_K.with(v)));
  }

  std::vector<Simplex> image_facets;
  for (Simplex F : NL.complex.facets()) {
    Simplex mapped;
    for (int i : F.vertices()) mapped = mapped.with(vertex_image[static_cast<std::size_t>(i)]);
    image_facets.push_back(mapped);
  }
  SimplicialComplex image =
      SimplicialComplex::from_facets(NK.complex.ground_ptr(), std::move(image_facets));
  return NerveMapImage{std::move(NK), std::move(NL), std::move(vertex_image), std::move(image)};
}

/// Runs dominated-vertex deletions of M restricted to vertices outside the
/// target subcomplex, smallest id first. Succeeds iff the deletions reach
/// exactly the target (facets compared by vertex name).
inline std::optional<CollapseCertificate> strong_collapse_onto(
    const SimplicialComplex& M, const SimplicialComplex& target) {
  std::vector<std::string> keep;
  for (int v : target.vertex_support().vertices())
    keep.push_back(target.ground().name(v));
  CollapseCertificate cert = strong_collapse_avoiding(M, keep);

  auto names = [](const SimplicialComplex& C) {
    std::vector<std::vector<std::string>> out;
    for (Simplex f : C.facets()) out.push_back(C.ground().names_of(f));
    std::sort(out.begin(), out.end());
    return out;
  };
  if (names(cert.end) != names(target)) return std::nullopt;
  return cert;
}

// ---------------------------------------------------------------------------
// The certified "dual is a sphere" pipeline

/// m such that C is exactly ∂Δ^m (facets = all |S|−1 subsets of its
/// support S), if any. The empty complex and single points are not
/// boundaries under this convention.
inline std::optional<int> boundary_simplex_dimension(const SimplicialComplex& C) {
  if (C.is_void() || C.is_empty()) return std::nullopt;
  const Simplex support = C.vertex_support();
  const int k = support.cardinality();
  if (k < 2) return std::nullopt;
  if (C.facets().size() != static_cast<std::size_t>(k)) return std::nullopt;
  for (Simplex f : C.facets())
    if (f.cardinality() != k - 1 || !f.subset_of(support)) return std::nullopt;
  return k - 1;
}

struct DualSphereEvidence {
  SimplicialComplex nerve_core;  // core(N(K))
  int core_boundary_dim = 0;     // core(N(K)) = ∂Δ^m
  SimplicialComplex dual;        // K* with respect to the given ground
  GradedGroups dual_homology;
  bool homology_is_sphere = false;
  int sphere_dim = 0;            // degree of the single ℤ, when it is a sphere
};

/// If core(N(K)) is the boundary of a simplex, K collapses onto a simplex
/// boundary and K* must be homotopy equivalent to a sphere; the evidence
/// carries the dual's reduced homology and the sphere dimension it exhibits.
/// Returns nothing when the core is not a boundary (inconclusive, not a
/// disproof).
inline std::optional<DualSphereEvidence> dual_sphere_certificate(const SimplicialComplex& K,
                                                                 GroundPtr V) {
  const SimplicialComplex c = core(nerve(K).complex);
  const auto m = boundary_simplex_dimension(c);
  if (!m) return std::nullopt;

  DualSphereEvidence ev{c, *m, alexander_dual(K, V), {}, false, 0};
  ev.dual_homology = reduced_homology(ev.dual);
  const auto& groups = ev.dual_homology.nontrivial();
  if (groups.size() == 1 && groups.begin()->second.rank == 1 &&
      groups.begin()->second.torsion.empty()) {
    ev.homology_is_sphere = true;
    ev.sphere_dim = groups.begin()->first;
  }
  return ev;
}

}  // namespace alexdual
