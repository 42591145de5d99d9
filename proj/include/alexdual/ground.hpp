#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "alexdual/errors.hpp"
#include "alexdual/simplex.hpp"

namespace alexdual {

inline bool is_valid_vertex_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

/// An ordered vertex universe: dense ids 0..size-1 with unique printable
/// names. Immutable after construction; shared between complexes.
class Ground {
 public:
  static constexpr int kMaxVertices = 64;

  explicit Ground(std::vector<std::string> names) : names_(std::move(names)) {
    if (static_cast<int>(names_.size()) > kMaxVertices)
      throw SizeLimitError("ground set has " + std::to_string(names_.size()) +
                           " vertices; at most 64 are supported");
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
      const std::string& n = names_[static_cast<std::size_t>(i)];
      if (!is_valid_vertex_name(n))
        throw DomainError("invalid vertex name '" + n + "'");
      if (!index_.emplace(n, i).second)
        throw DomainError("duplicate vertex name '" + n + "'");
    }
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int id) const { return names_.at(static_cast<std::size_t>(id)); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<int> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  int id(const std::string& name) const {
    auto v = find(name);
    if (!v) throw DomainError("unknown vertex '" + name + "'");
    return *v;
  }

  /// Mask of the whole universe.
  Simplex full() const {
    if (names_.empty()) return Simplex{};
    return Simplex(~std::uint64_t{0} >> (64 - names_.size()));
  }

  Simplex complement(Simplex s) const { return full().minus(s); }

  /// Simplex from vertex names; rejects unknown names and duplicates.
  Simplex simplex_of(const std::vector<std::string>& verts) const {
    Simplex s;
    for (const auto& v : verts) {
      const int i = id(v);
      if (s.contains(i)) throw DomainError("duplicate vertex '" + v + "' in one simplex");
      s = s.with(i);
    }
    return s;
  }

  std::vector<std::string> names_of(Simplex s) const {
    std::vector<std::string> out;
    for (int v : s.vertices()) out.push_back(name(v));
    return out;
  }

  friend bool operator==(const Ground& a, const Ground& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

using GroundPtr = std::shared_ptr<const Ground>;

inline GroundPtr make_ground(std::vector<std::string> names) {
  return std::make_shared<const Ground>(std::move(names));
}

}  // namespace alexdual
