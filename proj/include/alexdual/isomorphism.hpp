#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "alexdual/complex.hpp"

namespace alexdual {

/// A vertex bijection K⁰ → L⁰ carrying facets onto facets, found by
/// backtracking with degree-multiset pruning. Works on the supports only
/// (ground vertices outside K⁰ are ignored) and refuses more than 14
/// support vertices. Kind mismatches (void vs non-void) are never isomorphic.
inline std::optional<std::vector<std::pair<std::string, std::string>>> is_isomorphic(
    const SimplicialComplex& K, const SimplicialComplex& L) {
  if (K.is_void() != L.is_void()) return std::nullopt;
  if (K.is_void()) return std::vector<std::pair<std::string, std::string>>{};

  const std::vector<int> kv = K.vertex_support().vertices();
  const std::vector<int> lv = L.vertex_support().vertices();
  if (kv.size() != lv.size()) return std::nullopt;
  if (kv.size() > 14)
    throw SizeLimitError("is_isomorphic: more than 14 vertices (" +
                         std::to_string(kv.size()) + ")");
  if (K.facets().size() != L.facets().size()) return std::nullopt;

  // Per-vertex signature: sorted sizes of the facets containing it.
  auto signature = [](const SimplicialComplex& C, int v) {
    std::vector<int> sizes;
    for (Simplex f : C.facets())
      if (f.contains(v)) sizes.push_back(f.cardinality());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  };
  std::map<std::vector<int>, int> sig_count_k, sig_count_l;
  std::vector<std::vector<int>> sig_k(kv.size()), sig_l(lv.size());
  for (std::size_t i = 0; i < kv.size(); ++i) {
    sig_k[i] = signature(K, kv[i]);
    sig_count_k[sig_k[i]]++;
  }
  for (std::size_t i = 0; i < lv.size(); ++i) {
    sig_l[i] = signature(L, lv[i]);
    sig_count_l[sig_l[i]]++;
  }
  if (sig_count_k != sig_count_l) return std::nullopt;

  // "Shares a facet with" relation, indexed by support position.
  auto together = [](const SimplicialComplex& C, const std::vector<int>& verts) {
    std::vector<std::uint64_t> t(verts.size(), 0);
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = 0; j < verts.size(); ++j) {
        for (Simplex f : C.facets())
          if (f.contains(verts[i]) && f.contains(verts[j])) {
            t[i] |= std::uint64_t{1} << j;
            break;
          }
      }
    return t;
  };
  const std::vector<std::uint64_t> tog_k = together(K, kv);
  const std::vector<std::uint64_t> tog_l = together(L, lv);

  const std::size_t n = kv.size();
  std::vector<int> image(n, -1);   // K support position -> L support position
  std::vector<bool> used(n, false);

  std::vector<Simplex> l_facets = L.facets();
  std::sort(l_facets.begin(), l_facets.end());
  auto facets_match = [&]() {
    std::vector<Simplex> mapped;
    for (Simplex f : K.facets()) {
      Simplex m;
      for (int v : f.vertices()) {
        const auto pos = std::lower_bound(kv.begin(), kv.end(), v) - kv.begin();
        m = m.with(lv[static_cast<std::size_t>(image[static_cast<std::size_t>(pos)])]);
      }
      mapped.push_back(m);
    }
    std::sort(mapped.begin(), mapped.end());
    return mapped == l_facets;
  };

  auto extend = [&](auto&& self, std::size_t k) -> bool {
    if (k == n) return facets_match();
    for (std::size_t cand = 0; cand < n; ++cand) {
      if (used[cand] || sig_k[k] != sig_l[cand]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const bool kt = (tog_k[k] >> j) & 1u;
        const bool lt = (tog_l[cand] >> static_cast<std::size_t>(image[j])) & 1u;
        if (kt != lt) ok = false;
      }
      if (!ok) continue;
      image[k] = static_cast<int>(cand);
      used[cand] = true;
      if (self(self, k + 1)) return true;
      used[cand] = false;
      image[k] = -1;
    }
    return false;
  };

  if (!extend(extend, 0)) return std::nullopt;
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < n; ++i)
    out.emplace_back(K.ground().name(kv[i]),
                     L.ground().name(lv[static_cast<std::size_t>(image[i])]));
  return out;
}

}  // namespace alexdual
