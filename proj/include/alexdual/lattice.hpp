#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "alexdual/alexander.hpp"
#include "alexdual/complex.hpp"
#include "alexdual/homology.hpp"
#include "alexdual/poset.hpp"

namespace alexdual {

/// T(X): the complex on the minimal elements of X whose faces are the
/// bounded-above subsets; equivalently the facets are the maximal sets
/// { m ∈ m(X) : m ≤ x } over x ∈ X. Rejects posets that are not reduced
/// lattices.
inline SimplicialComplex t_complex(const Poset& X) {
  const auto check = is_reduced_lattice(X);
  if (!check.is_reduced)
    throw DomainError("t_complex: not a reduced lattice (no infimum for {" +
                      check.witness->first + ", " + check.witness->second + "})");
  const std::vector<int> mins = minimal_elements(X);
  if (mins.size() > 64)
    throw SizeLimitError("t_complex: more than 64 minimal elements");
  std::vector<std::string> names;
  for (int m : mins) names.push_back(X.label(m));
  GroundPtr g = make_ground(std::move(names));

  std::vector<Simplex> facets;
  for (int x = 0; x < X.size(); ++x) {
    Simplex below_x;
    for (std::size_t i = 0; i < mins.size(); ++i)
      if (mins[i] == x || X.less(mins[i], x)) below_x = below_x.with(static_cast<int>(i));
    facets.push_back(below_x);
  }
  return SimplicialComplex::from_facets(std::move(g), std::move(facets));
}

/// X(K): the nonempty faces of K ordered by inclusion. Elements are listed
/// by (cardinality, bitmask); a singleton face is labeled by its vertex
/// name, larger faces by the names joined with '_'.
inline Poset face_poset(const SimplicialComplex& K) {
  if (K.is_void() || K.is_empty())
    throw DomainError("face_poset: the complex has no nonempty faces");
  std::vector<Simplex> faces;
  for (Simplex f : K.faces())
    if (!f.is_empty()) faces.push_back(f);
  std::sort(faces.begin(), faces.end(), [](Simplex a, Simplex b) {
    if (a.cardinality() != b.cardinality()) return a.cardinality() < b.cardinality();
    return a < b;
  });

  std::vector<std::string> labels;
  for (Simplex f : faces) {
    std::string l;
    for (int v : f.vertices()) {
      if (!l.empty()) l += "_";
      l += K.ground().name(v);
    }
    labels.push_back(l);
  }
  const std::size_t n = faces.size();
  std::vector<Bitset> below(n, Bitset(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (faces[i].proper_subset_of(faces[j])) below[j].set(i);
  return Poset::from_closed_relation(std::move(labels), std::move(below));
}

/// K(X): the order complex, whose vertices are the elements of X and whose
/// facets are the maximal chains.
inline SimplicialComplex order_complex(const Poset& X) {
  if (X.size() > 64)
    throw SizeLimitError("order_complex: poset has more than 64 elements");
  GroundPtr g = make_ground(X.labels());
  if (X.is_empty_poset()) return SimplicialComplex::empty_complex(std::move(g));

  // cover lists once, then depth-first maximal-chain enumeration
  const int m = X.size();
  std::vector<std::vector<int>> covers_up(static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x) {
    const Bitset& up = X.above(x);
    for (std::size_t y = up.find_first(); y != Bitset::npos; y = up.find_next(y)) {
      Bitset between = X.above(x);
      between &= X.below(static_cast<int>(y));
      if (between.none()) covers_up[static_cast<std::size_t>(x)].push_back(static_cast<int>(y));
    }
  }
  std::vector<Simplex> chains;
  std::function<void(int, Simplex)> grow = [&](int e, Simplex chain) {
    const auto& ups = covers_up[static_cast<std::size_t>(e)];
    if (ups.empty()) {
      chains.push_back(chain);
      return;
    }
    for (int y : ups) grow(y, chain.with(y));
  };
  for (int e : minimal_elements(X)) grow(e, Simplex::single(e));
  return SimplicialComplex::from_facets(std::move(g), std::move(chains));
}

/// The reduced-lattice Alexander dual X* = X(T(X)*) with respect to V.
/// When the dual complex is void or empty there are no nonempty faces and
/// the result is the empty poset.
inline Poset lattice_dual(const Poset& X, GroundPtr V) {
  const SimplicialComplex dual = alexander_dual(t_complex(X), std::move(V));
  if (dual.is_void() || dual.is_empty()) return Poset{};
  return face_poset(dual);
}

struct LatticeDualityReport {
  int n = 0;
  Poset dual;
  GradedGroups homology_of_X;
  GradedGroups cohomology_of_dual;
  std::vector<DegreeCheck> degrees;  // i = −1 .. n
  bool all_match = true;
};

/// Verifies H̃_i(X) ≅ H̃^{n−i−3}(X*) for i in −1 .. n, where the (co)homology
/// of a poset is that of its order complex and n = |V|.
inline LatticeDualityReport check_lattice_duality(const Poset& X, GroundPtr V) {
  LatticeDualityReport report;
  report.n = V->size();
  report.dual = lattice_dual(X, V);
  report.homology_of_X = reduced_homology(order_complex(X));
  report.cohomology_of_dual = reduced_cohomology(order_complex(report.dual));
  for (int i = -1; i <= report.n; ++i) {
    DegreeCheck c;
    c.degree = i;
    c.homology = report.homology_of_X.at(i);
    c.cohomology = report.cohomology_of_dual.at(report.n - i - 3);
    c.match = c.homology == c.cohomology;
    report.all_match = report.all_match && c.match;
    report.degrees.push_back(std::move(c));
  }
  return report;
}

}  // namespace alexdual
