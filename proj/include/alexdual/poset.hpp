#pragma once

#include <boost/dynamic_bitset.hpp>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "alexdual/errors.hpp"

namespace alexdual {

using Bitset = boost::dynamic_bitset<>;

/// A finite poset: dense element ids with unique printable labels and the
/// strict order relation stored transitively closed, one bitset row per
/// element. Immutable after construction.
class Poset {
 public:
  Poset() = default;

  /// Builds the poset from arbitrary strict relations (not necessarily
  /// covers); the transitive closure is taken and cycles are rejected.
  static Poset from_relations(std::vector<std::string> labels,
                              const std::vector<std::pair<std::string, std::string>>& less) {
    Poset p;
    p.labels_ = std::move(labels);
    for (int i = 0; i < static_cast<int>(p.labels_.size()); ++i)
      if (!p.index_.emplace(p.labels_[static_cast<std::size_t>(i)], i).second)
        throw DomainError("duplicate poset element '" +
                          p.labels_[static_cast<std::size_t>(i)] + "'");
    const std::size_t n = p.labels_.size();
    p.below_.assign(n, Bitset(n));
    for (const auto& [lo, hi] : less) {
      if (lo == hi) throw DomainError("cycle detected: '" + lo + "' < itself");
      p.below_[static_cast<std::size_t>(p.id(hi))].set(static_cast<std::size_t>(p.id(lo)));
    }
    // Warshall closure over bitset rows.
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (p.below_[i].test(k)) p.below_[i] |= p.below_[k];
    for (std::size_t i = 0; i < n; ++i)
      if (p.below_[i].test(i))
        throw DomainError("cycle detected through element '" +
                          p.labels_[i] + "'");
    p.rebuild_above();
    return p;
  }

  /// Directly from an already-transitive strict relation.
  static Poset from_closed_relation(std::vector<std::string> labels,
                                    std::vector<Bitset> below) {
    Poset p;
    p.labels_ = std::move(labels);
    for (int i = 0; i < static_cast<int>(p.labels_.size()); ++i)
      if (!p.index_.emplace(p.labels_[static_cast<std::size_t>(i)], i).second)
        throw DomainError("duplicate poset element '" +
                          p.labels_[static_cast<std::size_t>(i)] + "'");
    p.below_ = std::move(below);
    p.rebuild_above();
    return p;
  }

  int size() const { return static_cast<int>(labels_.size()); }
  bool is_empty_poset() const { return labels_.empty(); }
  const std::string& label(int id) const { return labels_.at(static_cast<std::size_t>(id)); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<int> find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  int id(const std::string& label) const {
    auto v = find(label);
    if (!v) throw DomainError("unknown poset element '" + label + "'");
    return *v;
  }

  bool less(int a, int b) const { return below_[static_cast<std::size_t>(b)].test(static_cast<std::size_t>(a)); }
  const Bitset& below(int e) const { return below_[static_cast<std::size_t>(e)]; }
  const Bitset& above(int e) const { return above_[static_cast<std::size_t>(e)]; }

  /// y covers x: x < y with nothing strictly between.
  bool covers(int x, int y) const {
    if (!less(x, y)) return false;
    Bitset between = above_[static_cast<std::size_t>(x)];
    between &= below_[static_cast<std::size_t>(y)];
    return between.none();
  }

  /// Equality as labeled posets: same label set and same relation on labels
  /// (element order may differ).
  friend bool operator==(const Poset& a, const Poset& b) {
    if (a.size() != b.size()) return false;
    for (const auto& l : a.labels_)
      if (!b.find(l)) return false;
    for (int x = 0; x < a.size(); ++x)
      for (int y = 0; y < a.size(); ++y) {
        if (a.less(x, y) !=
            b.less(b.id(a.label(x)), b.id(a.label(y))))
          return false;
      }
    return true;
  }

 private:
  void rebuild_above() {
    const std::size_t n = labels_.size();
    above_.assign(n, Bitset(n));
    for (std::size_t hi = 0; hi < n; ++hi)
      for (std::size_t lo = below_[hi].find_first(); lo != Bitset::npos;
           lo = below_[hi].find_next(lo))
        above_[lo].set(hi);
  }

  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<Bitset> below_;
  std::vector<Bitset> above_;
};

struct ReducedLatticeCheck {
  bool is_reduced = true;
  std::optional<std::pair<std::string, std::string>> witness;
};

/// A poset is a reduced lattice iff every lower-bounded set has an infimum;
/// checking pairs suffices (the infimum of a larger bounded set is reached
/// by iterated pairwise meets).
inline ReducedLatticeCheck is_reduced_lattice(const Poset& X) {
  const int n = X.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (X.less(x, y) || X.less(y, x)) continue;  // the smaller one is the infimum
      Bitset common = X.below(x);
      common &= X.below(y);
      if (common.none()) continue;  // not lower bounded
      bool has_greatest = false;
      for (std::size_t z = common.find_first(); z != Bitset::npos;
           z = common.find_next(z)) {
        // z is the infimum iff every other common lower bound lies below z
        Bitset others = common;
        others.reset(z);
        others -= X.below(static_cast<int>(z));
        if (others.none()) {
          has_greatest = true;
          break;
        }
      }
      if (!has_greatest)
        return ReducedLatticeCheck{false, std::pair{X.label(x), X.label(y)}};
    }
  return ReducedLatticeCheck{};
}

inline std::vector<int> minimal_elements(const Poset& X) {
  std::vector<int> out;
  for (int e = 0; e < X.size(); ++e)
    if (X.below(e).none()) out.push_back(e);
  return out;
}

}  // namespace alexdual
