// alexdual: command-line workbench for combinatorial Alexander duals of
// finite simplicial complexes and reduced lattices.
//
// Exit codes: 0 success / property holds, 1 property failure or
// counterexample, 2 usage or parse error, 3 search inconclusive (budget
// exhausted, or no certificate found where absence is not a disproof).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "alexdual/alexander.hpp"
#include "alexdual/campaign.hpp"
#include "alexdual/homology.hpp"
#include "alexdual/io.hpp"
#include "alexdual/lattice.hpp"
#include "alexdual/moves.hpp"

using namespace alexdual;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kUsage = 2;
constexpr int kInconclusive = 3;

json complex_json(const SimplicialComplex& K) {
  json j;
  j["ground"] = K.ground().names();
  j["kind"] = K.is_void() ? "void" : "non-void";
  std::vector<std::vector<std::string>> facets;
  if (!K.is_void())
    for (Simplex f : K.facets()) facets.push_back(K.ground().names_of(f));
  j["facets"] = facets;
  return j;
}

json group_json(const HomologyGroup& g) {
  json j;
  j["rank"] = g.rank;
  std::vector<std::string> torsion;
  for (const BigInt& d : g.torsion) torsion.push_back(d.get_str());
  j["torsion"] = torsion;
  return j;
}

json graded_json(const GradedGroups& groups, int lo, int hi) {
  json arr = json::array();
  for (int d = lo; d <= hi; ++d) {
    json entry;
    entry["degree"] = d;
    entry["group"] = group_json(groups.at(d));
    arr.push_back(entry);
  }
  return arr;
}

void print_graded_text(const GradedGroups& groups, int lo, int hi) {
  for (int d = lo; d <= hi; ++d)
    std::cout << "H~" << d << " = " << groups.at(d).to_string() << "\n";
}

json poset_json(const Poset& X) {
  json j;
  j["elements"] = X.labels();
  std::vector<std::vector<std::string>> rels;
  for (int x = 0; x < X.size(); ++x)
    for (int y = 0; y < X.size(); ++y)
      if (X.covers(x, y)) rels.push_back({X.label(x), X.label(y)});
  j["covers"] = rels;
  return j;
}

json certificate_json(const CollapseCertificate& cert) {
  json steps = json::array();
  for (const CollapseStep& s : cert.steps) {
    json one;
    if (s.kind == CollapseStep::Kind::elementary) {
      one["kind"] = "elementary";
      one["tau"] = s.tau;
      one["sigma"] = s.sigma;
    } else {
      one["kind"] = "strong";
      one["vertex"] = s.vertex;
      one["witness"] = s.witness;
    }
    steps.push_back(one);
  }
  json j;
  j["steps"] = steps;
  j["end"] = complex_json(cert.end);
  return j;
}

void print_certificate_text(const CollapseCertificate& cert) {
  for (const CollapseStep& s : cert.steps) {
    if (s.kind == CollapseStep::Kind::elementary) {
      std::cout << "collapse (";
      for (const auto& v : s.tau) std::cout << " " << v;
      std::cout << " |";
      for (const auto& v : s.sigma) std::cout << " " << v;
      std::cout << " )\n";
    } else {
      std::cout << "delete " << s.vertex << " (dominated by " << s.witness << ")\n";
    }
  }
  std::cout << "end:\n" << write_complex(cert.end);
}

GroundPtr ground_for(const SimplicialComplex& K, const std::vector<std::string>& names) {
  if (names.empty()) return K.ground_ptr();
  return make_ground(names);
}

int degree_range_print(const std::string& format, int n,
                       const std::vector<DegreeCheck>& degrees, bool all_match, json extra) {
  if (format == "json") {
    json j = std::move(extra);
    json arr = json::array();
    for (const DegreeCheck& c : degrees) {
      json one;
      one["degree"] = c.degree;
      one["homology"] = group_json(c.homology);
      one["dual_cohomology"] = group_json(c.cohomology);
      one["match"] = c.match;
      arr.push_back(one);
    }
    j["degrees"] = arr;
    j["all_match"] = all_match;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const DegreeCheck& c : degrees)
      std::cout << (c.match ? "  ok " : "FAIL ") << "H~" << c.degree << " = "
                << c.homology.to_string() << "  vs  dual H~^" << (n - c.degree - 3)
                << " = " << c.cohomology.to_string() << "\n";
    std::cout << (all_match ? "duality holds in every degree\n"
                            : "duality FAILED in some degree\n");
  }
  return all_match ? kOk : kPropertyFailure;
}

int run(int argc, char** argv) {
  CLI::App app{"Alexander duals of simplicial complexes and reduced lattices"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::string file, target;
  std::vector<std::string> ground;
  std::uint64_t budget = 100000;
  bool square = false;

  auto* c_dual = app.add_subcommand("dual", "Alexander dual of a complex");
  c_dual->add_option("file", file)->required();
  c_dual->add_option("--ground", ground, "ground set vertex names")->expected(-1);

  auto* c_hom = app.add_subcommand("homology", "reduced integer homology");
  c_hom->add_option("file", file)->required();

  auto* c_cohom = app.add_subcommand("cohomology", "reduced integer cohomology");
  c_cohom->add_option("file", file)->required();

  auto* c_verify = app.add_subcommand("verify-duality",
                                      "check H_i(K) = H^{n-i-3}(K*) in every degree");
  c_verify->add_option("file", file)->required();
  c_verify->add_option("--ground", ground)->expected(-1);

  auto* c_nerve = app.add_subcommand("nerve", "nerve of a complex");
  c_nerve->add_option("file", file)->required();
  c_nerve->add_flag("--square", square, "apply the nerve twice");

  auto* c_core = app.add_subcommand("core", "strong-collapse core");
  c_core->add_option("file", file)->required();

  auto* c_collapse = app.add_subcommand("collapse", "search for a collapse sequence");
  c_collapse->add_option("file", file)->required();
  c_collapse->add_option("--to", target, "target .scx file, or 'boundary'")->required();
  c_collapse->add_option("--budget", budget, "search step budget");

  auto* c_sphere = app.add_subcommand("dual-sphere",
                                      "certify that the dual is a homology sphere");
  c_sphere->add_option("file", file)->required();
  c_sphere->add_option("--ground", ground)->expected(-1);

  auto* c_ldual = app.add_subcommand("lattice-dual", "Alexander dual of a reduced lattice");
  c_ldual->add_option("file", file)->required();
  c_ldual->add_option("--ground", ground)->expected(-1)->required();

  auto* c_lcheck = app.add_subcommand("lattice-check", "reduced-lattice test");
  c_lcheck->add_option("file", file)->required();

  std::string check_name;
  int trials = 100;
  std::uint64_t seed = 1;
  int max_vertices = 9;
  auto* c_campaign = app.add_subcommand("campaign", "randomized property campaign");
  c_campaign->add_option("check", check_name)->required();
  c_campaign->add_option("--trials", trials)->required();
  c_campaign->add_option("--seed", seed)->required();
  c_campaign->add_option("--max-vertices", max_vertices);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (c_dual->parsed()) {
    auto K = load_complex(file);
    auto report = dual_report(K, ground_for(K, ground));
    if (format == "json") {
      json j;
      j["ground_size"] = report.ground_size;
      j["minimal_non_face_count"] = report.minimal_non_face_count;
      j["dual"] = complex_json(report.dual);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << write_complex(report.dual);
      std::cout << "# n = " << report.ground_size << ", minimal non-faces of K: "
                << report.minimal_non_face_count << "\n";
    }
    return kOk;
  }

  if (c_hom->parsed() || c_cohom->parsed()) {
    auto K = load_complex(file);
    const bool co = c_cohom->parsed();
    auto groups = co ? reduced_cohomology(K) : reduced_homology(K);
    const int hi = std::max(K.dim(), -1);
    if (format == "json") {
      json j;
      j["kind"] = co ? "cohomology" : "homology";
      j["groups"] = graded_json(groups, -1, hi);
      std::cout << j.dump(2) << "\n";
    } else {
      print_graded_text(groups, -1, hi);
    }
    return kOk;
  }

  if (c_verify->parsed()) {
    auto K = load_complex(file);
    auto report = check_duality(K, ground_for(K, ground));
    json extra;
    extra["n"] = report.n;
    extra["dual"] = complex_json(report.dual);
    return degree_range_print(format, report.n, report.degrees, report.all_match,
                              std::move(extra));
  }

  if (c_nerve->parsed()) {
    auto K = load_complex(file);
    auto N = square ? square_nerve(K) : nerve(K);
    if (format == "json") {
      json j;
      j["nerve"] = complex_json(N.complex);
      json sources = json::object();
      for (std::size_t i = 0; i < N.source_facets.size(); ++i)
        sources["f" + std::to_string(i)] = N.source_ground->names_of(N.source_facets[i]);
      j["vertex_sources"] = sources;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << write_complex(N.complex);
      for (std::size_t i = 0; i < N.source_facets.size(); ++i) {
        std::cout << "# f" << i << " =";
        for (const auto& v : N.source_ground->names_of(N.source_facets[i]))
          std::cout << " " << v;
        std::cout << "\n";
      }
    }
    return kOk;
  }

  if (c_core->parsed()) {
    auto K = load_complex(file);
    auto c = core(K);
    if (format == "json")
      std::cout << complex_json(c).dump(2) << "\n";
    else
      std::cout << write_complex(c);
    return kOk;
  }

  if (c_collapse->parsed()) {
    auto K = load_complex(file);
    SearchStatus status;
    std::optional<CollapseCertificate> cert;
    std::optional<Simplex> sigma;
    if (target == "boundary") {
      auto res = collapses_to_some_simplex_boundary(K, budget);
      status = res.status;
      cert = res.certificate;
      sigma = res.sigma;
    } else {
      auto res = collapses_to(K, load_complex(target), budget);
      status = res.status;
      cert = res.certificate;
    }
    if (format == "json") {
      json j;
      j["status"] = status == SearchStatus::found        ? "found"
                    : status == SearchStatus::impossible ? "impossible"
                                                         : "budget-exhausted";
      if (cert) j["certificate"] = certificate_json(*cert);
      if (sigma) j["sigma"] = K.ground().names_of(*sigma);
      std::cout << j.dump(2) << "\n";
    } else {
      if (status == SearchStatus::found) {
        if (sigma) {
          std::cout << "collapses to the boundary of";
          for (const auto& v : K.ground().names_of(*sigma)) std::cout << " " << v;
          std::cout << "\n";
        }
        print_certificate_text(*cert);
      } else if (status == SearchStatus::impossible) {
        std::cout << "impossible: the search space was exhausted\n";
      } else {
        std::cout << "inconclusive: budget exhausted\n";
      }
    }
    return status == SearchStatus::found        ? kOk
           : status == SearchStatus::impossible ? kPropertyFailure
                                                : kInconclusive;
  }

  if (c_sphere->parsed()) {
    auto K = load_complex(file);
    auto ev = dual_sphere_certificate(K, ground_for(K, ground));
    if (format == "json") {
      json j;
      if (ev) {
        j["certified"] = true;
        j["core_boundary_dim"] = ev->core_boundary_dim;
        j["nerve_core"] = complex_json(ev->nerve_core);
        j["dual"] = complex_json(ev->dual);
        j["dual_homology"] = graded_json(ev->dual_homology, -1, std::max(ev->dual.dim(), -1));
        j["homology_is_sphere"] = ev->homology_is_sphere;
        j["sphere_dim"] = ev->sphere_dim;
      } else {
        j["certified"] = false;
      }
      std::cout << j.dump(2) << "\n";
    } else if (ev) {
      std::cout << "core of the nerve is the boundary of a " << ev->core_boundary_dim
                << "-simplex\n";
      std::cout << (ev->homology_is_sphere
                        ? "dual has the homology of S^" + std::to_string(ev->sphere_dim)
                        : "dual homology is NOT a single sphere")
                << "\n";
    } else {
      std::cout << "inconclusive: core of the nerve is not a simplex boundary\n";
    }
    if (!ev) return kInconclusive;
    return ev->homology_is_sphere ? kOk : kPropertyFailure;
  }

  if (c_ldual->parsed()) {
    auto X = load_poset(file);
    auto dual = lattice_dual(X, make_ground(ground));
    if (format == "json")
      std::cout << poset_json(dual).dump(2) << "\n";
    else
      std::cout << write_poset(dual);
    return kOk;
  }

  if (c_lcheck->parsed()) {
    auto X = load_poset(file);
    auto check = is_reduced_lattice(X);
    if (format == "json") {
      json j;
      j["is_reduced_lattice"] = check.is_reduced;
      if (check.witness) j["witness"] = {check.witness->first, check.witness->second};
      std::cout << j.dump(2) << "\n";
    } else if (check.is_reduced) {
      std::cout << "reduced lattice\n";
    } else {
      std::cout << "not a reduced lattice: {" << check.witness->first << ", "
                << check.witness->second << "} has lower bounds but no infimum\n";
    }
    return check.is_reduced ? kOk : kPropertyFailure;
  }

  if (c_campaign->parsed()) {
    int workers = 1;
    if (const char* env = std::getenv("ALEXDUAL_WORKERS")) workers = std::max(1, std::atoi(env));
    auto report = run_campaign(check_name, trials, seed, max_vertices, workers);
    std::cerr << "# wall time: " << report.wall.count() << " ms\n";
    std::string counterexample_path;
    if (!report.ok()) {
      counterexample_path = check_name + "_counterexample." + report.counterexample_ext;
      write_file(counterexample_path, report.counterexample);
    }
    if (format == "json") {
      std::cout << report_body(report).dump(2) << "\n";
    } else {
      std::cout << report.check << ": " << report.passes << "/" << report.trials
                << " passed";
      if (report.skipped > 0) std::cout << " (" << report.skipped << " skipped)";
      std::cout << "\n";
      if (!report.ok())
        std::cout << "first counterexample at trial " << *report.first_failure_trial
                  << " written to " << counterexample_path << "\n";
    }
    return report.ok() ? kOk : kPropertyFailure;
  }

  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kUsage;
  }
}
