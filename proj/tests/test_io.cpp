#include <catch2/catch_amalgamated.hpp>

#include "alexdual/io.hpp"
#include "alexdual/rng.hpp"
#include "helpers.hpp"

using namespace alexdual;
using testutil::facet_names;

namespace {
const std::string kFixtures = ALEXDUAL_FIXTURE_DIR;
}

TEST_CASE("parse_complex: facets, empty, void") {
  auto K = parse_complex("ground: a b c d\nfacet: a b c\n");
  REQUIRE(K.ground().names() == std::vector<std::string>{"a", "b", "c", "d"});
  REQUIRE(facet_names(K) == std::set<std::set<std::string>>{{"a", "b", "c"}});

  REQUIRE(parse_complex("ground: a b c\nempty\n").is_empty());
  REQUIRE(parse_complex("ground: a b c\nvoid\n").is_void());
}

TEST_CASE("parse_complex: comments and whitespace") {
  auto K = parse_complex("# a comment\nground: a b   c\n\nfacet: a b # trailing\nfacet: c\n");
  REQUIRE(facet_names(K) == std::set<std::set<std::string>>{{"a", "b"}, {"c"}});
}

TEST_CASE("parse_complex: errors") {
  REQUIRE_THROWS_AS(parse_complex(""), ParseError);
  REQUIRE_THROWS_AS(parse_complex("facet: a b\n"), ParseError);           // ground missing
  REQUIRE_THROWS_AS(parse_complex("ground: a b\nfacet: a c\n"), ParseError);  // unknown vertex
  REQUIRE_THROWS_AS(parse_complex("ground: a b\nfacet: a a\n"), ParseError);  // duplicate in facet
  REQUIRE_THROWS_AS(parse_complex("ground: a a\nfacet: a\n"), ParseError);    // duplicate ground
  REQUIRE_THROWS_AS(parse_complex("ground: a b\n"), ParseError);          // no body
  REQUIRE_THROWS_AS(parse_complex("ground: a b\nvoid\nfacet: a\n"), ParseError);
  REQUIRE_THROWS_AS(parse_complex("ground: a b\nfacet:\n"), ParseError);
  REQUIRE_THROWS_AS(parse_complex("ground: a$\nfacet: a$\n"), ParseError);

  std::string big = "ground:";
  for (int i = 0; i < 65; ++i) big += " v" + std::to_string(i);
  REQUIRE_THROWS_AS(parse_complex(big + "\nempty\n"), ParseError);
}

TEST_CASE("write ∘ parse round-trips byte-identically on canonical files") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto K = corpus_complex(counter_hash(41, seed), 8);
    const std::string text = write_complex(K);
    auto reparsed = parse_complex(text);
    REQUIRE(reparsed == K);
    REQUIRE(write_complex(reparsed) == text);
  }
  const std::string void_text = "ground: a b\nvoid\n";
  REQUIRE(write_complex(parse_complex(void_text)) == void_text);
  const std::string empty_text = "ground: a b\nempty\n";
  REQUIRE(write_complex(parse_complex(empty_text)) == empty_text);
}

TEST_CASE("golden file: random_complex(6, 2, 0.5, 42)") {
  const std::string frozen = read_file(kFixtures + "/random_6_2_p50_42.scx");
  REQUIRE(write_complex(random_complex(6, 2, 0.5, 42)) == frozen);
  REQUIRE(parse_complex(frozen) == random_complex(6, 2, 0.5, 42));
}

TEST_CASE("random_complex: density endpoints") {
  auto full = random_complex(4, 2, 1.0, 99);
  // full 2-skeleton of the 3-simplex: all four triangles
  REQUIRE(full.facets().size() == 4);
  for (Simplex f : full.facets()) REQUIRE(f.cardinality() == 3);

  REQUIRE(random_complex(4, 2, 0.0, 99).is_empty());
}

TEST_CASE("parse_poset: chains, singletons, bad input") {
  auto chain = parse_poset("el: a b c\nrel: a < b\nrel: b < c\n");
  REQUIRE(chain.size() == 3);
  REQUIRE(chain.less(chain.id("a"), chain.id("c")));

  auto single = parse_poset("el: a\n");
  REQUIRE(single.size() == 1);

  REQUIRE_THROWS_AS(parse_poset("rel: a < b\nrel: b < a\n"), ParseError);  // cycle
  REQUIRE_THROWS_AS(parse_poset("el: a a\n"), ParseError);                 // duplicate
  REQUIRE_THROWS_AS(parse_poset("rel: a b\n"), ParseError);                // syntax
}

TEST_CASE("poset writer emits covers whose closure restores the order") {
  auto chain = parse_poset("el: a b c\nrel: a < b\nrel: b < c\nrel: a < c\n");
  const std::string text = write_poset(chain);
  // the redundant a < c is dropped from the canonical form
  REQUIRE(text == "el: a b c\nrel: a < b\nrel: b < c\n");
  REQUIRE(parse_poset(text) == chain);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CounterRng rng(counter_hash(42, seed));
    const int m = rng.range(2, 7);
    std::vector<std::string> labels;
    for (int i = 0; i < m; ++i) labels.push_back("p" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> rels;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (rng.unit() < 0.4)
          rels.emplace_back(labels[static_cast<std::size_t>(i)],
                            labels[static_cast<std::size_t>(j)]);
    auto X = Poset::from_relations(labels, rels);
    const std::string out = write_poset(X);
    REQUIRE(parse_poset(out) == X);
    REQUIRE(write_poset(parse_poset(out)) == out);
  }
}
