#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "alexdual/errors.hpp"
#include "alexdual/ground.hpp"
#include "alexdual/simplex.hpp"

namespace alexdual {

enum class ComplexKind { void_complex, non_void };

/// A finite simplicial complex: a ground set plus the antichain of facets.
/// Every non-void complex contains the empty simplex; the void complex has
/// no faces at all (not even the empty one). The complex with facet set {∅}
/// is the "empty complex". Values are immutable after construction.
class SimplicialComplex {
 public:
  /// Reduces the given simplices to their maximal antichain. An empty list
  /// yields the empty complex {∅}.
  static SimplicialComplex from_facets(GroundPtr ground, std::vector<Simplex> facets) {
    check_inside(*ground, facets);
    return SimplicialComplex(std::move(ground), reduce_to_antichain(std::move(facets)),
                             ComplexKind::non_void);
  }

  static SimplicialComplex from_facet_names(
      const std::vector<std::vector<std::string>>& facets,
      std::optional<std::vector<std::string>> ground_names = std::nullopt) {
    GroundPtr g;
    if (ground_names) {
      g = make_ground(std::move(*ground_names));
    } else {
      std::vector<std::string> seen;
      for (const auto& f : facets)
        for (const auto& v : f)
          if (std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
      g = make_ground(std::move(seen));
    }
    std::vector<Simplex> masks;
    masks.reserve(facets.size());
    for (const auto& f : facets) masks.push_back(g->simplex_of(f));
    return from_facets(std::move(g), std::move(masks));
  }

  static SimplicialComplex empty_complex(GroundPtr ground) {
    return SimplicialComplex(std::move(ground), {Simplex{}}, ComplexKind::non_void);
  }

  static SimplicialComplex void_complex(GroundPtr ground) {
    return SimplicialComplex(std::move(ground), {}, ComplexKind::void_complex);
  }

  static SimplicialComplex full_simplex(GroundPtr ground) {
    Simplex all = ground->full();
    return SimplicialComplex(std::move(ground), {all}, ComplexKind::non_void);
  }

  ComplexKind kind() const { return kind_; }
  bool is_void() const { return kind_ == ComplexKind::void_complex; }
  bool is_empty() const {
    return kind_ == ComplexKind::non_void && facets_.size() == 1 && facets_[0].is_empty();
  }

  const Ground& ground() const { return *ground_; }
  const GroundPtr& ground_ptr() const { return ground_; }

  /// Facets in increasing bitmask order; empty for the void complex.
  const std::vector<Simplex>& facets() const { return facets_; }

  /// K⁰ as a mask: the vertices appearing in some facet (may be a proper
  /// subset of the ground set).
  Simplex vertex_support() const {
    Simplex s;
    for (Simplex f : facets_) s = s.unite(f);
    return s;
  }

  /// -1 for the empty complex; the void complex has no faces and reports -2.
  int dim() const {
    if (is_void()) return -2;
    int d = -1;
    for (Simplex f : facets_) d = std::max(d, f.dimension());
    return d;
  }

  bool contains(Simplex s) const {
    if (is_void()) return false;
    for (Simplex f : facets_)
      if (s.subset_of(f)) return true;
    return false;
  }

  /// All faces (downward closure), in increasing bitmask order. Includes ∅
  /// for non-void complexes; empty for the void complex.
  std::vector<Simplex> faces() const {
    std::vector<Simplex> out;
    if (is_void()) return out;
    for (Simplex f : facets_) for_each_subset(f, [&](Simplex s) { out.push_back(s); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::size_t face_count() const { return faces().size(); }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.kind_ == b.kind_ && *a.ground_ == *b.ground_ && a.facets_ == b.facets_;
  }

  /// Sorted maximal members of the input.
  static std::vector<Simplex> reduce_to_antichain(std::vector<Simplex> sims) {
    std::sort(sims.begin(), sims.end());
    sims.erase(std::unique(sims.begin(), sims.end()), sims.end());
    std::vector<Simplex> out;
    for (std::size_t i = 0; i < sims.size(); ++i) {
      bool maximal = true;
      for (std::size_t j = 0; j < sims.size(); ++j)
        if (i != j && sims[i].proper_subset_of(sims[j])) {
          maximal = false;
          break;
        }
      if (maximal) out.push_back(sims[i]);
    }
    if (out.empty()) out.push_back(Simplex{});
    return out;
  }

 private:
  SimplicialComplex(GroundPtr g, std::vector<Simplex> facets, ComplexKind kind)
      : ground_(std::move(g)), facets_(std::move(facets)), kind_(kind) {}

  static void check_inside(const Ground& g, const std::vector<Simplex>& facets) {
    const Simplex all = g.full();
    for (Simplex f : facets)
      if (!f.subset_of(all)) throw DomainError("facet uses a vertex outside the ground set");
  }

  GroundPtr ground_;
  std::vector<Simplex> facets_;
  ComplexKind kind_;
};

/// Same faces, re-indexed over a ground set that contains K⁰ by name.
/// Vertices of the old ground that support no face may be dropped.
inline SimplicialComplex reground(const SimplicialComplex& K, GroundPtr target) {
  if (K.is_void()) return SimplicialComplex::void_complex(std::move(target));
  std::vector<Simplex> facets;
  facets.reserve(K.facets().size());
  for (Simplex f : K.facets()) {
    Simplex g;
    for (int v : f.vertices()) g = g.with(target->id(K.ground().name(v)));
    facets.push_back(g);
  }
  std::sort(facets.begin(), facets.end());
  return SimplicialComplex::from_facets(std::move(target), std::move(facets));
}

/// The boundary ∂τ: all (|τ|−1)-subsets of τ as facets. For a single vertex
/// this is the empty complex on the given ground.
inline SimplicialComplex boundary_of_simplex(const std::vector<std::string>& tau,
                                             std::vector<std::string> ground_names) {
  if (tau.empty()) throw DomainError("boundary_of_simplex needs at least one vertex");
  GroundPtr g = make_ground(std::move(ground_names));
  Simplex t = g->simplex_of(tau);
  if (t.cardinality() == 1) return SimplicialComplex::empty_complex(std::move(g));
  std::vector<Simplex> facets;
  for (int v : t.vertices()) facets.push_back(t.without(v));
  return SimplicialComplex::from_facets(std::move(g), std::move(facets));
}

inline SimplicialComplex boundary_of_simplex(GroundPtr g, Simplex tau) {
  if (tau.is_empty()) throw DomainError("boundary_of_simplex needs at least one vertex");
  if (!tau.subset_of(g->full())) throw DomainError("simplex outside the ground set");
  if (tau.cardinality() == 1) return SimplicialComplex::empty_complex(std::move(g));
  std::vector<Simplex> facets;
  for (int v : tau.vertices()) facets.push_back(tau.without(v));
  return SimplicialComplex::from_facets(std::move(g), std::move(facets));
}

namespace detail {
inline void require_vertex(const SimplicialComplex& K, int v) {
  if (v < 0 || v >= K.ground().size() || !K.vertex_support().contains(v))
    throw DomainError("vertex is not a vertex of the complex");
}

inline GroundPtr subground(const SimplicialComplex& K, Simplex keep) {
  std::vector<std::string> names;
  for (int v : keep.vertices()) names.push_back(K.ground().name(v));
  return make_ground(std::move(names));
}

inline Simplex remap(const Ground& from, const Ground& to, Simplex s) {
  Simplex out;
  for (int v : s.vertices()) out = out.with(to.id(from.name(v)));
  return out;
}
}  // namespace detail

/// lk(v, K) on the ground set K⁰ ∖ {v}.
inline SimplicialComplex link(const SimplicialComplex& K, int v) {
  detail::require_vertex(K, v);
  GroundPtr g = detail::subground(K, K.vertex_support().without(v));
  std::vector<Simplex> facets;
  for (Simplex f : K.facets())
    if (f.contains(v)) facets.push_back(detail::remap(K.ground(), *g, f.without(v)));
  return SimplicialComplex::from_facets(std::move(g), std::move(facets));
}

/// K ∖ v: the full subcomplex spanned by K⁰ ∖ {v}.
inline SimplicialComplex deletion(const SimplicialComplex& K, int v) {
  detail::require_vertex(K, v);
  GroundPtr g = detail::subground(K, K.vertex_support().without(v));
  std::vector<Simplex> facets;
  for (Simplex f : K.facets())
    facets.push_back(detail::remap(K.ground(), *g, f.without(v)));
  return SimplicialComplex::from_facets(std::move(g), std::move(facets));
}

/// The smallest-id vertex contained in every facet, if any.
inline std::optional<int> is_cone(const SimplicialComplex& K) {
  if (K.is_void() || K.facets().empty()) return std::nullopt;
  Simplex apex = K.ground().full();
  for (Simplex f : K.facets()) apex = apex.intersect(f);
  if (apex.is_empty()) return std::nullopt;
  return apex.smallest_vertex();
}

/// All minimal non-faces: subsets of the ground set that are not faces but
/// whose proper subsets all are. Candidates range over cardinalities
/// 1 .. dim(K)+2 only; larger sets always contain a smaller non-face.
inline std::vector<Simplex> minimal_non_faces(const SimplicialComplex& K) {
  if (K.is_void()) throw DomainError("minimal_non_faces: void complex has no face lattice");
  std::vector<Simplex> out;
  const Simplex all = K.ground().full();
  const int top = std::min(K.dim() + 2, K.ground().size());
  for (int c = 1; c <= top; ++c) {
    for_each_subset_of_size(all, c, [&](Simplex s) {
      if (K.contains(s)) return;
      for (int v : s.vertices())
        if (!K.contains(s.without(v))) return;
      out.push_back(s);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// True iff every subset of the ground set with at most d+1 vertices is a
/// face of K.
inline bool contains_skeleton(const SimplicialComplex& K, int d) {
  if (d < 0) throw DomainError("contains_skeleton: dimension must be >= 0");
  if (K.is_void()) return false;
  const Simplex all = K.ground().full();
  for (int c = 0; c <= std::min(d + 1, K.ground().size()); ++c) {
    bool ok = true;
    for_each_subset_of_size(all, c, [&](Simplex s) {
      if (!K.contains(s)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace alexdual
