#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace alexdual {

/// A simplex over a ground set of at most 64 vertices, stored as a bitmask:
/// vertex id i corresponds to bit i. Mask 0 is the empty simplex, a legal
/// value distinct from "no simplex".
struct Simplex {
  std::uint64_t bits = 0;

  constexpr Simplex() = default;
  constexpr explicit Simplex(std::uint64_t mask) : bits(mask) {}

  static constexpr Simplex single(int v) { return Simplex(std::uint64_t{1} << v); }

  constexpr int cardinality() const { return std::popcount(bits); }
  constexpr int dimension() const { return cardinality() - 1; }
  constexpr bool is_empty() const { return bits == 0; }

  constexpr bool contains(int v) const { return (bits >> v) & 1u; }
  constexpr bool subset_of(Simplex s) const { return (bits & ~s.bits) == 0; }
  constexpr bool proper_subset_of(Simplex s) const {
    return bits != s.bits && subset_of(s);
  }

  constexpr Simplex with(int v) const { return Simplex(bits | (std::uint64_t{1} << v)); }
  constexpr Simplex without(int v) const { return Simplex(bits & ~(std::uint64_t{1} << v)); }
  constexpr Simplex unite(Simplex s) const { return Simplex(bits | s.bits); }
  constexpr Simplex intersect(Simplex s) const { return Simplex(bits & s.bits); }
  constexpr Simplex minus(Simplex s) const { return Simplex(bits & ~s.bits); }

  constexpr int smallest_vertex() const { return std::countr_zero(bits); }

  /// Vertex ids in strictly increasing order.
  std::vector<int> vertices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(cardinality()));
    for (std::uint64_t m = bits; m != 0; m &= m - 1)
      out.push_back(std::countr_zero(m));
    return out;
  }

  friend constexpr bool operator==(Simplex a, Simplex b) { return a.bits == b.bits; }
  friend constexpr std::strong_ordering operator<=>(Simplex a, Simplex b) {
    return a.bits <=> b.bits;
  }
};

/// Calls f(Simplex) for every subset of s, including the empty simplex and
/// s itself, in decreasing bitmask order.
template <typename F>
void for_each_subset(Simplex s, F&& f) {
  std::uint64_t sub = s.bits;
  while (true) {
    f(Simplex(sub));
    if (sub == 0) break;
    sub = (sub - 1) & s.bits;
  }
}

/// Calls f(Simplex) for every k-element subset of s, in increasing bitmask
/// order. k = 0 yields only the empty simplex.
template <typename F>
void for_each_subset_of_size(Simplex s, int k, F&& f) {
  const std::vector<int> verts = s.vertices();
  const int n = static_cast<int>(verts.size());
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(Simplex{});
    return;
  }
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::uint64_t m = 0;
    for (int i : idx) m |= std::uint64_t{1} << verts[static_cast<std::size_t>(i)];
    f(Simplex(m));
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace alexdual
