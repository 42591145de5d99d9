#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "alexdual/alexander.hpp"
#include "alexdual/homology.hpp"
#include "alexdual/io.hpp"
#include "alexdual/isomorphism.hpp"
#include "alexdual/lattice.hpp"
#include "alexdual/moves.hpp"
#include "alexdual/rng.hpp"
#include "alexdual/snf.hpp"

namespace alexdual {

// ---------------------------------------------------------------------------
// Instance generators beyond corpus_complex

/// Intersection-closed family of subsets of a small base set, ordered by
/// inclusion with the global minimum removed. Closure makes the
/// intersection of any lower-bounded pair its infimum, so the result is a
/// reduced lattice by construction. Elements are labeled x<mask>.
inline Poset random_reduced_lattice(std::uint64_t seed) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    CounterRng rng(counter_hash(seed, attempt));
    const int base = rng.range(2, 4);
    const std::uint64_t universe = (std::uint64_t{1} << base) - 1;
    std::set<std::uint64_t> family;
    for (int k = rng.range(2, 6); k > 0; --k)
      family.insert(1 + rng.below(universe));  // nonempty subset
    // close under pairwise intersection
    bool grew = true;
    while (grew) {
      grew = false;
      for (auto a : family)
        for (auto b : family)
          if (family.insert(a & b).second) grew = true;
    }
    // drop the global minimum (the total intersection)
    std::uint64_t bottom = universe;
    for (auto a : family) bottom &= a;
    family.erase(bottom);
    if (family.size() < 2) continue;

    std::vector<std::uint64_t> elems(family.begin(), family.end());
    std::sort(elems.begin(), elems.end(), [](std::uint64_t a, std::uint64_t b) {
      const int pa = std::popcount(a), pb = std::popcount(b);
      if (pa != pb) return pa < pb;
      return a < b;
    });
    std::vector<std::string> labels;
    for (auto e : elems) labels.push_back("x" + std::to_string(e));
    const std::size_t n = elems.size();
    std::vector<Bitset> below(n, Bitset(n));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i)
        if (i != j && (elems[i] & ~elems[j]) == 0) below[j].set(i);
    return Poset::from_closed_relation(std::move(labels), std::move(below));
  }
}

/// Duality ground set for a lattice instance, derived from the instance
/// alone: the labels of m(X) plus one or two fresh extra vertices. At least
/// one extra keeps T(X)* away from the void complex, where the empty poset
/// standing in for the dual cannot distinguish void from empty and the
/// double-dual identity degenerates.
inline GroundPtr lattice_ground_for(const Poset& X) {
  std::vector<std::string> names;
  for (int m : minimal_elements(X)) names.push_back(X.label(m));
  for (int e = 0; e < 1 + X.size() % 2; ++e) names.push_back("e" + std::to_string(e));
  return make_ground(std::move(names));
}

struct LatticeInstance {
  Poset X;
  GroundPtr V;
};

/// Random reduced lattice whose derived ground set keeps both X and the
/// dual's face poset representable: |m(X)| ≤ 6 and at most 40 nonempty
/// faces in T(X)*, resampling deterministically otherwise.
inline LatticeInstance random_lattice_instance(std::uint64_t seed) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    Poset X = random_reduced_lattice(counter_hash(seed, attempt));
    if (minimal_elements(X).size() > 6) continue;
    GroundPtr V = lattice_ground_for(X);
    const SimplicialComplex dual = alexander_dual(t_complex(X), V);
    if (!dual.is_void() && dual.faces().size() > 41) continue;
    return LatticeInstance{std::move(X), std::move(V)};
  }
}

// ---------------------------------------------------------------------------
// Properties (one per check name); each is a function of the instance only,
// so a serialized counterexample can be re-parsed and re-checked as is.

namespace checks {

inline bool duality(const SimplicialComplex& K) {
  return check_duality(K, K.ground_ptr()).all_match;
}

inline bool double_dual(const SimplicialComplex& K) {
  return double_dual_check(K, K.ground_ptr());
}

/// The lemma "K ↘e L iff K* ↗e L*" on the first free pair of K.
inline bool collapse_dual_pair(const SimplicialComplex& K) {
  const auto pairs = free_faces(K);
  if (pairs.empty()) return true;  // vacuous; generated instances have a pair
  const auto [tau, sigma] = pairs.front();
  const SimplicialComplex L = elementary_collapse(K, tau, sigma);
  const GroundPtr V = K.ground_ptr();
  const Simplex sigma_c = V->complement(sigma);
  const Simplex tau_c = V->complement(tau);
  std::vector<Simplex> dual_L_faces = alexander_dual(L, V).faces();
  if (!is_free_pair_in(dual_L_faces, sigma_c, tau_c)) return false;
  std::erase(dual_L_faces, sigma_c);
  std::erase(dual_L_faces, tau_c);
  return dual_L_faces == alexander_dual(K, V).faces();
}

inline bool nerve_homology(const SimplicialComplex& K) {
  return reduced_homology(nerve(K).complex) == reduced_homology(K);
}

inline bool core_square_nerve(const SimplicialComplex& K) {
  return is_isomorphic(core(K), core(square_nerve(K).complex)).has_value();
}

/// The nerve-collapse lemma on the smallest dominated vertex of K.
inline bool nerviocolapso(const SimplicialComplex& K) {
  const auto dom = dominated_vertices(K);
  if (dom.empty()) return true;  // vacuous; generated instances have one
  const auto img = nerve_map_image(K, dom.front().first);
  return strong_collapse_onto(img.nerve_K.complex, img.image).has_value();
}

inline std::vector<std::vector<std::string>> facet_name_sets(const SimplicialComplex& K) {
  std::vector<std::vector<std::string>> out;
  for (Simplex f : K.facets()) out.push_back(K.ground().names_of(f));
  std::sort(out.begin(), out.end());
  return out;
}

inline bool lattice_roundtrip(const SimplicialComplex& K) {
  if (K.is_void() || K.is_empty()) return true;  // no face poset; vacuous
  const SimplicialComplex back = t_complex(face_poset(K));
  return facet_name_sets(back) == facet_name_sets(K);
}

/// Lattice duality on the derived ground set, plus the homology bridge
/// H(T(X)) = H(K(X)) and the double-dual identity X** = X(T(X)).
inline bool lattice_duality(const Poset& X) {
  const GroundPtr V = lattice_ground_for(X);
  if (!check_lattice_duality(X, V).all_match) return false;
  const SimplicialComplex T = t_complex(X);
  if (!(reduced_homology(T) == reduced_homology(order_complex(X)))) return false;
  const Poset twice = lattice_dual(lattice_dual(X, V), V);
  return twice == face_poset(T);
}

inline bool snf_oracle_property(const IntegerMatrix& M);

}  // namespace checks

// ---------------------------------------------------------------------------
// Matrices as JSON (for snf-oracle instances)

inline nlohmann::json matrix_to_json(const IntegerMatrix& M) {
  nlohmann::json j;
  j["rows"] = M.rows;
  j["cols"] = M.cols;
  std::vector<long> entries;
  for (const BigInt& v : M.a) entries.push_back(v.get_si());
  j["entries"] = entries;
  return j;
}

inline IntegerMatrix matrix_from_json(const nlohmann::json& j) {
  IntegerMatrix M(j.at("rows").get<int>(), j.at("cols").get<int>());
  const auto entries = j.at("entries").get<std::vector<long>>();
  if (entries.size() != M.a.size()) throw ParseError("matrix entry count mismatch");
  for (std::size_t i = 0; i < entries.size(); ++i) M.a[i] = entries[i];
  return M;
}

namespace checks {

// gcd-of-minors route: d₁·…·d_k = gcd of all k×k minors.
inline BigInt minor_determinant(const IntegerMatrix& M, const std::vector<int>& rows,
                                const std::vector<int>& cols) {
  if (rows.size() == 1) return M.at(rows[0], cols[0]);
  BigInt acc = 0;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const BigInt& head = M.at(rows[0], cols[j]);
    if (head == 0) continue;
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    std::vector<int> sub_cols;
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (k != j) sub_cols.push_back(cols[k]);
    const BigInt minor = minor_determinant(M, sub_rows, sub_cols);
    if (j % 2 == 0) acc += head * minor;
    else acc -= head * minor;
  }
  return acc;
}

inline void for_each_index_choice(int n, int k,
                                  const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    f(idx);
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

inline bool snf_oracle_property(const IntegerMatrix& M) {
  std::vector<BigInt> gcds;
  for (int k = 1; k <= std::min(M.rows, M.cols); ++k) {
    BigInt g = 0;
    for_each_index_choice(M.rows, k, [&](const std::vector<int>& rows) {
      for_each_index_choice(M.cols, k, [&](const std::vector<int>& cols) {
        const BigInt d = minor_determinant(M, rows, cols);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      });
    });
    if (g == 0) break;
    gcds.push_back(g);
  }
  std::vector<BigInt> expected;
  BigInt prev = 1;
  for (const BigInt& g : gcds) {
    expected.push_back(g / prev);
    prev = g;
  }
  return smith_normal_form(M) == expected;
}

}  // namespace checks

inline IntegerMatrix random_matrix(std::uint64_t seed) {
  CounterRng rng(seed);
  IntegerMatrix M(rng.range(1, 5), rng.range(1, 5));
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j) M.at(i, j) = rng.range(-5, 5);
  return M;
}

// ---------------------------------------------------------------------------
// Campaign runner

struct TrialOutcome {
  bool pass = true;
  bool skipped = false;
  std::string counterexample;      // serialized failing instance
  std::string counterexample_ext;  // "scx", "pos" or "json"
};

using CheckFn = std::function<TrialOutcome(std::uint64_t trial_seed, int max_vertices)>;

namespace detail {

inline SimplicialComplex complex_with(std::uint64_t trial_seed, int max_vertices,
                                      const std::function<bool(const SimplicialComplex&)>& want) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    SimplicialComplex K = corpus_complex(counter_hash(trial_seed, attempt), max_vertices);
    if (want(K)) return K;
  }
}

inline CheckFn complex_check(std::function<bool(const SimplicialComplex&)> property,
                             std::function<bool(const SimplicialComplex&)> want) {
  return [property = std::move(property), want = std::move(want)](
             std::uint64_t trial_seed, int max_vertices) {
    const SimplicialComplex K = complex_with(trial_seed, max_vertices, want);
    TrialOutcome out;
    out.pass = property(K);
    if (!out.pass) {
      out.counterexample = write_complex(K);
      out.counterexample_ext = "scx";
    }
    return out;
  };
}

}  // namespace detail

/// The named property suites. Every check resamples instances so that the
/// property is never vacuous; counterexamples are self-contained (the
/// property depends on the serialized instance only).
inline const std::map<std::string, CheckFn>& campaign_checks() {
  static const std::map<std::string, CheckFn> registry = [] {
    std::map<std::string, CheckFn> m;
    auto any = [](const SimplicialComplex&) { return true; };
    m["duality"] = detail::complex_check(checks::duality, any);
    m["double-dual"] = detail::complex_check(checks::double_dual, any);
    m["collapse-dual-pair"] = detail::complex_check(
        checks::collapse_dual_pair,
        [](const SimplicialComplex& K) { return !free_faces(K).empty(); });
    m["nerve-homology"] = detail::complex_check(checks::nerve_homology, any);
    m["core-square-nerve"] = [](std::uint64_t trial_seed, int max_vertices) {
      const SimplicialComplex K = detail::complex_with(
          trial_seed, std::min(max_vertices, 8),
          [](const SimplicialComplex& C) { return !C.vertex_support().is_empty(); });
      TrialOutcome out;
      out.pass = checks::core_square_nerve(K);
      if (!out.pass) {
        out.counterexample = write_complex(K);
        out.counterexample_ext = "scx";
      }
      return out;
    };
    m["nerviocolapso"] = detail::complex_check(
        checks::nerviocolapso,
        [](const SimplicialComplex& K) { return !dominated_vertices(K).empty(); });
    m["lattice-roundtrip"] = detail::complex_check(
        checks::lattice_roundtrip,
        [](const SimplicialComplex& K) { return !K.is_void() && !K.is_empty(); });
    m["lattice-duality"] = [](std::uint64_t trial_seed, int) {
      const LatticeInstance inst = random_lattice_instance(trial_seed);
      TrialOutcome out;
      out.pass = checks::lattice_duality(inst.X);
      if (!out.pass) {
        out.counterexample = write_poset(inst.X);
        out.counterexample_ext = "pos";
      }
      return out;
    };
    m["snf-oracle"] = [](std::uint64_t trial_seed, int) {
      const IntegerMatrix M = random_matrix(trial_seed);
      TrialOutcome out;
      out.pass = checks::snf_oracle_property(M);
      if (!out.pass) {
        out.counterexample = matrix_to_json(M).dump(2) + "\n";
        out.counterexample_ext = "json";
      }
      return out;
    };
    return m;
  }();
  return registry;
}

/// Re-parses a serialized counterexample and re-runs the named property on
/// it; true means it still fails.
inline bool recheck_counterexample(const std::string& check, const std::string& content) {
  if (check == "lattice-duality") return !checks::lattice_duality(parse_poset(content));
  if (check == "snf-oracle")
    return !checks::snf_oracle_property(matrix_from_json(nlohmann::json::parse(content)));
  const SimplicialComplex K = parse_complex(content);
  if (check == "duality") return !checks::duality(K);
  if (check == "double-dual") return !checks::double_dual(K);
  if (check == "collapse-dual-pair") return !checks::collapse_dual_pair(K);
  if (check == "nerve-homology") return !checks::nerve_homology(K);
  if (check == "core-square-nerve") return !checks::core_square_nerve(K);
  if (check == "nerviocolapso") return !checks::nerviocolapso(K);
  if (check == "lattice-roundtrip") return !checks::lattice_roundtrip(K);
  throw DomainError("unknown check '" + check + "'");
}

struct CampaignReport {
  std::string check;
  std::uint64_t seed = 0;
  int trials = 0;
  int max_vertices = 0;
  int passes = 0;
  int failures = 0;
  int skipped = 0;
  std::optional<int> first_failure_trial;
  std::string counterexample;
  std::string counterexample_ext;
  std::chrono::milliseconds wall{0};  // excluded from the canonical body

  bool ok() const { return failures == 0; }
};

/// Runs `trials` independent instances of a check. Trial t draws its
/// randomness from counter_hash(seed, t) only, so the report body does not
/// depend on the worker count.
inline CampaignReport run_campaign_with(const CheckFn& check, const std::string& name,
                                        int trials, std::uint64_t seed, int max_vertices,
                                        int workers = 1) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<TrialOutcome> results(static_cast<std::size_t>(trials));
  std::atomic<int> next{0};
  auto work = [&] {
    while (true) {
      const int t = next.fetch_add(1);
      if (t >= trials) return;
      results[static_cast<std::size_t>(t)] = check(counter_hash(seed, static_cast<std::uint64_t>(t)),
                                                   max_vertices);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  CampaignReport report;
  report.check = name;
  report.seed = seed;
  report.trials = trials;
  report.max_vertices = max_vertices;
  for (int t = 0; t < trials; ++t) {
    const TrialOutcome& r = results[static_cast<std::size_t>(t)];
    if (r.skipped) {
      ++report.skipped;
    } else if (r.pass) {
      ++report.passes;
    } else {
      ++report.failures;
      if (!report.first_failure_trial) {
        report.first_failure_trial = t;
        report.counterexample = r.counterexample;
        report.counterexample_ext = r.counterexample_ext;
      }
    }
  }
  report.wall = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - t0);
  return report;
}

inline CampaignReport run_campaign(const std::string& check, int trials, std::uint64_t seed,
                                   int max_vertices, int workers = 1) {
  const auto& registry = campaign_checks();
  const auto it = registry.find(check);
  if (it == registry.end()) throw DomainError("unknown check '" + check + "'");
  return run_campaign_with(it->second, check, trials, seed, max_vertices, workers);
}

/// Canonical machine-readable body: sorted keys, no floats, no wall time.
inline nlohmann::json report_body(const CampaignReport& r) {
  nlohmann::json j;
  j["check"] = r.check;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["max_vertices"] = r.max_vertices;
  j["passes"] = r.passes;
  j["failures"] = r.failures;
  j["skipped"] = r.skipped;
  j["status"] = r.ok() ? "pass" : "fail";
  if (r.first_failure_trial) {
    j["first_failure_trial"] = *r.first_failure_trial;
    j["counterexample"] = r.counterexample;
    j["counterexample_format"] = r.counterexample_ext;
  } else {
    j["first_failure_trial"] = nullptr;
    j["counterexample"] = nullptr;
    j["counterexample_format"] = nullptr;
  }
  return j;
}

}  // namespace alexdual
