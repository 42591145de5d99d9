#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "alexdual/alexander.hpp"
#include "alexdual/complex.hpp"
#include "alexdual/snf.hpp"

namespace alexdual {

/// A finitely generated abelian group in canonical form: free rank plus the
/// invariant-factor chain d₁ | d₂ | … with every dᵢ ≥ 2. Equality of groups
/// is component-wise equality.
struct HomologyGroup {
  int rank = 0;
  std::vector<BigInt> torsion;

  bool is_trivial() const { return rank == 0 && torsion.empty(); }

  friend bool operator==(const HomologyGroup& a, const HomologyGroup& b) {
    return a.rank == b.rank && a.torsion == b.torsion;
  }

  std::string to_string() const {
    if (is_trivial()) return "0";
    std::string s;
    if (rank == 1) s = "Z";
    else if (rank > 1) s = "Z^" + std::to_string(rank);
    for (const BigInt& d : torsion) {
      if (!s.empty()) s += " + ";
      s += "Z/" + d.get_str();
    }
    return s;
  }
};

/// Degree-indexed groups; absent degrees are trivial.
class GradedGroups {
 public:
  void set(int degree, HomologyGroup g) {
    if (!g.is_trivial()) nontrivial_[degree] = std::move(g);
  }

  const HomologyGroup& at(int degree) const {
    static const HomologyGroup trivial{};
    auto it = nontrivial_.find(degree);
    return it == nontrivial_.end() ? trivial : it->second;
  }

  const std::map<int, HomologyGroup>& nontrivial() const { return nontrivial_; }

  friend bool operator==(const GradedGroups& a, const GradedGroups& b) {
    return a.nontrivial_ == b.nontrivial_;
  }

 private:
  std::map<int, HomologyGroup> nontrivial_;
};

/// Faces of K grouped by dimension: entry [d+1] holds the dimension-d faces
/// in increasing bitmask order (entry [0] is the empty simplex for non-void
/// complexes). Void complexes give an empty table.
inline std::vector<std::vector<Simplex>> faces_by_dimension(const SimplicialComplex& K) {
  std::vector<std::vector<Simplex>> table;
  if (K.is_void()) return table;
  table.resize(static_cast<std::size_t>(K.dim() + 2));
  for (Simplex s : K.faces()) table[static_cast<std::size_t>(s.dimension() + 1)].push_back(s);
  return table;
}

/// Boundary operator ∂_d of the augmented chain complex: columns are the
/// d-faces, rows the (d−1)-faces. ∂₀ is the augmentation (each vertex ↦ ∅).
inline IntegerMatrix boundary_matrix(const std::vector<std::vector<Simplex>>& table, int d) {
  const auto& domain = table.at(static_cast<std::size_t>(d + 1));
  const auto& range = table.at(static_cast<std::size_t>(d));
  IntegerMatrix M(static_cast<int>(range.size()), static_cast<int>(domain.size()));
  for (int j = 0; j < M.cols; ++j) {
    const Simplex s = domain[static_cast<std::size_t>(j)];
    int k = 0;
    for (int v : s.vertices()) {
      const Simplex face = s.without(v);
      const auto it = std::lower_bound(range.begin(), range.end(), face);
      const int i = static_cast<int>(it - range.begin());
      M.at(i, j) = (k % 2 == 0) ? 1 : -1;
      ++k;
    }
  }
  return M;
}

inline IntegerMatrix boundary_matrix(const SimplicialComplex& K, int d) {
  return boundary_matrix(faces_by_dimension(K), d);
}

/// Reduced integer homology H̃_i for i = −1 .. dim K, from Smith normal
/// forms of the augmented boundary operators. The void complex has every
/// group trivial; the empty complex has H̃₋₁ = ℤ only.
inline GradedGroups reduced_homology(const SimplicialComplex& K) {
  GradedGroups out;
  if (K.is_void()) return out;
  const auto table = faces_by_dimension(K);
  const int D = K.dim();

  // ranks[d+1] = rank ∂_d; factors[d+1] = its invariant factors.
  std::vector<std::vector<BigInt>> factors(static_cast<std::size_t>(D + 3));
  for (int d = 0; d <= D; ++d)
    factors[static_cast<std::size_t>(d + 1)] = smith_normal_form(boundary_matrix(table, d));

  for (int d = -1; d <= D; ++d) {
    const int n_d = static_cast<int>(table[static_cast<std::size_t>(d + 1)].size());
    const int r_d = static_cast<int>(factors[static_cast<std::size_t>(d + 1)].size());
    const int r_up = static_cast<int>(factors[static_cast<std::size_t>(d + 2)].size());
    HomologyGroup g;
    g.rank = n_d - r_d - r_up;
    for (const BigInt& f : factors[static_cast<std::size_t>(d + 2)])
      if (f >= 2) g.torsion.push_back(f);
    out.set(d, std::move(g));
  }
  return out;
}

/// Reduced integer cohomology via universal coefficients:
/// rank H̃^k = rank H̃_k and torsion H̃^k = torsion H̃_{k−1}.
inline GradedGroups reduced_cohomology(const SimplicialComplex& K) {
  const GradedGroups h = reduced_homology(K);
  GradedGroups out;
  if (K.is_void()) return out;
  for (int d = -1; d <= K.dim(); ++d) {
    HomologyGroup g;
    g.rank = h.at(d).rank;
    g.torsion = h.at(d - 1).torsion;
    out.set(d, std::move(g));
  }
  return out;
}

struct DegreeCheck {
  int degree = 0;           // i
  HomologyGroup homology;   // H̃_i(K)
  HomologyGroup cohomology; // H̃^{n-i-3}(K*)
  bool match = false;
};

struct DualityReport {
  int n = 0;
  SimplicialComplex dual;
  GradedGroups homology_of_K;
  GradedGroups cohomology_of_dual;
  std::vector<DegreeCheck> degrees;  // i = −1 .. n
  bool all_match = true;
};

/// Verifies H̃_i(K) ≅ H̃^{n−i−3}(K*) as canonical groups for every degree
/// i in −1 .. n, where n = |V|.
inline DualityReport check_duality(const SimplicialComplex& K, GroundPtr V) {
  if (V->size() > 20)
    throw SizeLimitError("check_duality: ground sets above 20 vertices are not supported");
  const int n = V->size();
  DualityReport report{n, alexander_dual(K, V), reduced_homology(K), {}, {}, true};
  report.cohomology_of_dual = reduced_cohomology(report.dual);
  for (int i = -1; i <= n; ++i) {
    DegreeCheck c;
    c.degree = i;
    c.homology = report.homology_of_K.at(i);
    c.cohomology = report.cohomology_of_dual.at(n - i - 3);
    c.match = c.homology == c.cohomology;
    report.all_match = report.all_match && c.match;
    report.degrees.push_back(std::move(c));
  }
  return report;
}

inline DualityReport check_duality(const SimplicialComplex& K,
                                   std::vector<std::string> ground_names) {
  return check_duality(K, make_ground(std::move(ground_names)));
}

}  // namespace alexdual
