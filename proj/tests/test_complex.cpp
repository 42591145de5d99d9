#include <catch2/catch_amalgamated.hpp>

#include "alexdual/complex.hpp"
#include "alexdual/homology.hpp"
#include "alexdual/isomorphism.hpp"
#include "alexdual/rng.hpp"
#include "helpers.hpp"

using namespace alexdual;
using testutil::cx;
using testutil::face_names;
using testutil::facet_names;

TEST_CASE("from_facets reduces to the maximal antichain") {
  auto K = cx({{"a", "b"}, {"b", "c"}, {"a", "b", "c"}});
  REQUIRE(facet_names(K) == std::set<std::set<std::string>>{{"a", "b", "c"}});
  REQUIRE(K.ground().names() == std::vector<std::string>{"a", "b", "c"});

  auto two_points = cx({{"a"}, {"b"}});
  REQUIRE(facet_names(two_points) == std::set<std::set<std::string>>{{"a"}, {"b"}});
}

TEST_CASE("empty and void complexes are distinct values") {
  auto g = testutil::ground({"a", "b"});
  auto empty = SimplicialComplex::empty_complex(g);
  auto voidc = SimplicialComplex::void_complex(g);
  REQUIRE(empty.is_empty());
  REQUIRE_FALSE(empty.is_void());
  REQUIRE(empty.contains(Simplex{}));
  REQUIRE(voidc.is_void());
  REQUIRE_FALSE(voidc.contains(Simplex{}));
  REQUIRE(empty.faces().size() == 1);
  REQUIRE(voidc.faces().empty());
  REQUIRE_FALSE(empty == voidc);
}

TEST_CASE("from_facets rejects bad input") {
  REQUIRE_THROWS_AS(cx({{"a", "d"}}, {"a", "b", "c"}), DomainError);
  REQUIRE_THROWS_AS(cx({{"a", "a"}}, {"a", "b"}), DomainError);
  std::vector<std::string> big;
  for (int i = 0; i < 65; ++i) big.push_back("v" + std::to_string(i));
  REQUIRE_THROWS_AS(make_ground(big), SizeLimitError);
}

TEST_CASE("faces enumerates the downward closure") {
  auto K = cx({{"a", "b"}});
  REQUIRE(face_names(K) ==
          std::set<std::set<std::string>>{{}, {"a"}, {"b"}, {"a", "b"}});

  auto bdry = boundary_of_simplex({"a", "b", "c"}, {"a", "b", "c"});
  REQUIRE(bdry.faces().size() == 7);  // ∅, 3 vertices, 3 edges
  REQUIRE(SimplicialComplex::void_complex(testutil::ground({"a"})).faces().empty());
}

TEST_CASE("minimal non-faces: boundaries and the 4-cycle") {
  auto bdry3 = boundary_of_simplex({"a", "b", "c"}, {"a", "b", "c"});
  auto mnf = minimal_non_faces(bdry3);
  REQUIRE(mnf.size() == 1);
  REQUIRE(mnf[0] == bdry3.ground().full());

  auto bdry4 = boundary_of_simplex({"a", "b", "c"}, {"a", "b", "c", "d"});
  auto mnf4 = minimal_non_faces(bdry4);
  REQUIRE(mnf4.size() == 2);  // abc and the lone vertex d

  auto cycle = cx({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}});
  auto mnf_cycle = minimal_non_faces(cycle);
  REQUIRE(mnf_cycle.size() == 2);  // the two diagonals ac, bd
  for (Simplex s : mnf_cycle) REQUIRE(s.cardinality() == 2);
}

TEST_CASE("minimal non-faces agree with the 2^n brute-force oracle") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto K = random_complex(2 + seed % 7, 1 + seed % 3, 0.1 + 0.09 * (seed % 10), seed);
    auto fast = minimal_non_faces(K);
    auto slow = testutil::brute_force_minimal_non_faces(K);
    std::sort(slow.begin(), slow.end());
    INFO("seed " << seed);
    REQUIRE(fast == slow);
  }
}

TEST_CASE("closure soundness on random complexes") {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    auto K = random_complex(5, 2, 0.5, seed);
    for (Simplex f : K.faces())
      for (int v : f.vertices()) REQUIRE(K.contains(f.without(v)));
  }
}

TEST_CASE("link: simplex, cycle, two triangles") {
  auto simplex2 = cx({{"a", "b", "c"}});
  auto lk = link(simplex2, simplex2.ground().id("a"));
  REQUIRE(facet_names(lk) == std::set<std::set<std::string>>{{"b", "c"}});
  REQUIRE(lk.ground().names() == std::vector<std::string>{"b", "c"});

  auto bdry = boundary_of_simplex({"a", "b", "c"}, {"a", "b", "c"});
  auto lk2 = link(bdry, bdry.ground().id("a"));
  REQUIRE(facet_names(lk2) == std::set<std::set<std::string>>{{"b"}, {"c"}});

  auto two_tri = cx({{"a", "b", "c"}, {"a", "b", "d"}});
  auto lk3 = link(two_tri, two_tri.ground().id("c"));
  REQUIRE(facet_names(lk3) == std::set<std::set<std::string>>{{"a", "b"}});

  REQUIRE_THROWS_AS(link(two_tri, 17), DomainError);
}

TEST_CASE("deletion: full subcomplexes") {
  auto simplex2 = cx({{"a", "b", "c"}});
  auto del = deletion(simplex2, simplex2.ground().id("c"));
  REQUIRE(facet_names(del) == std::set<std::set<std::string>>{{"a", "b"}});

  auto two_tri = cx({{"a", "b", "c"}, {"a", "b", "d"}});
  auto del2 = deletion(two_tri, two_tri.ground().id("c"));
  REQUIRE(facet_names(del2) == std::set<std::set<std::string>>{{"a", "b", "d"}});

  auto pts = cx({{"a"}, {"b"}});
  auto del3 = deletion(pts, pts.ground().id("b"));
  REQUIRE(facet_names(del3) == std::set<std::set<std::string>>{{"a"}});
}

TEST_CASE("deletion/link consistency") {
  for (std::uint64_t seed = 7; seed < 27; ++seed) {
    auto K = random_complex(6, 2, 0.4, seed);
    const Simplex support = K.vertex_support();
    if (support.is_empty()) continue;
    const int v = support.smallest_vertex();
    auto lk = link(K, v);
    std::set<std::set<std::string>> expected;
    for (Simplex f : K.faces()) {
      if (f.contains(v)) continue;
      if (!K.contains(f.with(v))) continue;
      std::set<std::string> names;
      for (int w : f.vertices()) names.insert(K.ground().name(w));
      expected.insert(names);
    }
    REQUIRE(face_names(lk) == expected);
  }
}

TEST_CASE("is_cone: apex detection") {
  auto simplex = cx({{"a", "b", "c"}});
  auto apex = is_cone(simplex);
  REQUIRE(apex);
  REQUIRE(simplex.ground().name(*apex) == "a");  // smallest id among apices

  REQUIRE_FALSE(is_cone(boundary_of_simplex({"a", "b", "c"}, {"a", "b", "c"})));

  auto wedge = cx({{"a", "b"}, {"a", "c"}});
  auto apex2 = is_cone(wedge);
  REQUIRE(apex2);
  REQUIRE(wedge.ground().name(*apex2) == "a");
}

TEST_CASE("cones have trivial reduced homology everywhere") {
  for (std::uint64_t seed = 50; seed < 62; ++seed) {
    auto base = random_complex(4, 2, 0.5, seed);
    if (base.is_empty()) continue;
    // cone = join with one fresh vertex
    std::vector<std::string> names = base.ground().names();
    names.push_back("apex");
    auto g = make_ground(names);
    std::vector<Simplex> facets;
    for (Simplex f : base.facets())
      facets.push_back(detail::remap(base.ground(), *g, f).with(g->id("apex")));
    auto cone = SimplicialComplex::from_facets(g, facets);
    REQUIRE(is_cone(cone));
    REQUIRE(reduced_homology(cone).nontrivial().empty());
  }
}

TEST_CASE("boundary_of_simplex: triangle, edge, vertex") {
  auto b1 = boundary_of_simplex({"a", "b", "c"}, {"a", "b", "c", "d"});
  REQUIRE(facet_names(b1) ==
          std::set<std::set<std::string>>{{"a", "b"}, {"a", "c"}, {"b", "c"}});

  auto b2 = boundary_of_simplex({"a", "b"}, {"a", "b", "c", "d"});
  REQUIRE(facet_names(b2) == std::set<std::set<std::string>>{{"a"}, {"b"}});

  auto b3 = boundary_of_simplex({"a"}, {"a", "b"});
  REQUIRE(b3.is_empty());

  REQUIRE_THROWS_AS(boundary_of_simplex({"x"}, {"a", "b"}), DomainError);
}

TEST_CASE("contains_skeleton") {
  auto full = cx({{"a", "b", "c"}});
  REQUIRE(contains_skeleton(full, 2));
  auto bdry = boundary_of_simplex({"a", "b", "c"}, {"a", "b", "c"});
  REQUIRE_FALSE(contains_skeleton(bdry, 2));
  REQUIRE(contains_skeleton(bdry, 1));
}

TEST_CASE("facet antichain invariant holds after operations") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto K = random_complex(6, 2, 0.5, seed);
    const auto& fs = K.facets();
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (std::size_t j = 0; j < fs.size(); ++j)
        if (i != j) REQUIRE_FALSE(fs[i].subset_of(fs[j]));
  }
}

TEST_CASE("is_isomorphic: symmetric, mismatched, subtle cases") {
  auto b1 = boundary_of_simplex({"a", "b", "c"}, {"a", "b", "c"});
  auto b2 = boundary_of_simplex({"x", "y", "z"}, {"x", "y", "z"});
  REQUIRE(is_isomorphic(b1, b2));

  auto full = cx({{"a", "b", "c"}});
  REQUIRE_FALSE(is_isomorphic(b1, full));

  auto cycle = cx({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}});
  auto two_edges = cx({{"a", "b"}, {"c", "d"}});
  REQUIRE_FALSE(is_isomorphic(cycle, two_edges));
}

TEST_CASE("is_isomorphic returns a facet-preserving bijection") {
  auto K = cx({{"a", "b", "c"}, {"c", "d"}});
  auto L = cx({{"q", "r"}, {"r", "s", "t"}});
  auto bij = is_isomorphic(K, L);
  REQUIRE(bij);
  std::map<std::string, std::string> f(bij->begin(), bij->end());
  std::set<std::set<std::string>> mapped;
  for (const auto& facet : facet_names(K)) {
    std::set<std::string> m;
    for (const auto& v : facet) m.insert(f.at(v));
    mapped.insert(m);
  }
  REQUIRE(mapped == facet_names(L));
}

TEST_CASE("is_isomorphic refuses oversized inputs") {
  std::vector<std::vector<std::string>> star;
  for (int i = 0; i < 15; ++i) star.push_back({"c", "v" + std::to_string(i)});
  auto big = cx(star);
  REQUIRE_THROWS_AS(is_isomorphic(big, big), SizeLimitError);
}
