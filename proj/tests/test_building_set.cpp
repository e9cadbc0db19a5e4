#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "nesto/building_set.hpp"
#include "nesto/errors.hpp"
#include "oracles.hpp"

using namespace nesto;

namespace {

Mask bits(std::initializer_list<int> labels) {
  Mask m = 0;
  for (int v : labels) m |= Mask{1} << v;
  return m;
}

std::set<std::vector<int>> as_lists(const BuildingSet& b) {
  std::set<std::vector<int>> out;
  for (Mask s : b.sets()) {
    std::vector<int> elems;
    for (int v = 0; v < 32; ++v)
      if ((s >> v) & 1U) elems.push_back(v);
    out.insert(elems);
  }
  return out;
}

}  // namespace

TEST_SUITE("building_set") {
  TEST_CASE("graph constructors") {
    Graph k11 = Graph::bipartite(1, 1);
    CHECK(k11.node_count() == 2);
    CHECK(k11.edges() == std::vector<Graph::Edge>{{0, 1}});

    Graph c4 = Graph::join(Graph::empty(2), Graph::empty(2));
    CHECK(c4.node_count() == 4);
    CHECK(c4.edges().size() == 4);
    CHECK(c4 == Graph::bipartite(2, 2));

    Graph s3 = Graph::star(3);
    CHECK(s3.edges() == std::vector<Graph::Edge>{{0, 1}, {0, 2}, {0, 3}});
    CHECK(s3 == Graph::join(Graph::complete(1), Graph::empty(3)));
    CHECK(Graph::join(Graph::complete(2), Graph::complete(3)) == Graph::complete(5));
  }

  TEST_CASE("graph validation") {
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), PreconditionError);
    CHECK_THROWS_AS(Graph(2, {{1, 1}}), PreconditionError);
    CHECK(Graph(3, {{0, 1}, {1, 0}}).edges().size() == 1);
  }

  TEST_CASE("graph spec parsing") {
    CHECK(parse_graph_spec("bipartite:2,3") == Graph::bipartite(2, 3));
    CHECK(parse_graph_spec("join(complete:2,empty:3)") == Graph::join(Graph::complete(2), Graph::empty(3)));
    CHECK(parse_graph_spec("edges:3:0-1,1-2") == Graph::path(3));
    CHECK(parse_graph_spec("edges:2") == Graph::empty(2));
    CHECK(parse_graph_spec("star:4") == Graph::star(4));
    CHECK_THROWS_AS(parse_graph_spec("edges:2:0-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_spec("cycle:4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_spec("complete:3x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_spec("join(complete:2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_spec("complete:-1"), std::invalid_argument);
  }

  TEST_CASE("building set of a graph") {
    CHECK(as_lists(building_set_from_graph(Graph::path(3))) ==
          std::set<std::vector<int>>{{0}, {1}, {2}, {0, 1}, {1, 2}, {0, 1, 2}});
    CHECK(building_set_from_graph(Graph::complete(3)).size() == 7);

    // K_{2,2}: 4 singletons, 4 edges, 4 triples, the whole set.
    BuildingSet c4 = building_set_from_graph(Graph::bipartite(2, 2));
    CHECK(c4.size() == 13);
    CHECK(as_lists(c4) == oracle::connected_subsets(4, Graph::bipartite(2, 2).edges()));
    CHECK(c4.is_connected());
  }

  TEST_CASE("building set enumeration matches brute force on random graphs") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 1 + trial % 8;
      std::vector<Graph::Edge> edges;
      std::bernoulli_distribution coin(0.4);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (coin(rng)) edges.emplace_back(u, v);
      Graph g(n, edges);
      BuildingSet b = building_set_from_graph(g);
      CHECK(as_lists(b) == oracle::connected_subsets(n, g.edges()));
      CHECK_FALSE(validate(b).has_value());
      CHECK(b.is_connected() == g.is_connected());
    }
  }

  TEST_CASE("enumeration size bound") {
    CHECK_THROWS_AS(building_set_from_graph(Graph::empty(21)), PreconditionError);
    CHECK(building_set_from_graph(Graph::empty(20)).size() == 20);
  }

  TEST_CASE("validate") {
    CHECK_FALSE(validate(BuildingSet(bits({0, 1}), {bits({0}), bits({1}), bits({0, 1})})).has_value());

    auto missing_union =
        validate(BuildingSet(bits({0, 1, 2}), {bits({0}), bits({1}), bits({0, 1}), bits({1, 2}), bits({2})}));
    REQUIRE(missing_union.has_value());
    CHECK(missing_union->kind == BuildingSetViolation::Kind::MissingUnion);
    CHECK((missing_union->first | missing_union->second) == bits({0, 1, 2}));

    auto missing_single = validate(BuildingSet(bits({0, 1}), {bits({0, 1})}));
    REQUIRE(missing_single.has_value());
    CHECK(missing_single->kind == BuildingSetViolation::Kind::MissingSingleton);
    CHECK(missing_single->first == bits({0}));

    CHECK_THROWS_AS(BuildingSet(bits({0}), {bits({1})}), PreconditionError);
  }

  TEST_CASE("restriction") {
    BuildingSet p3 = building_set_from_graph(Graph::path(3));
    CHECK(as_lists(restriction(p3, bits({0, 1}))) == std::set<std::vector<int>>{{0}, {1}, {0, 1}});
    for (int v = 0; v < 3; ++v) CHECK(restriction(p3, bits({v})).sets() == std::vector<Mask>{bits({v})});
    CHECK_THROWS_AS(restriction(p3, bits({0, 2})), PreconditionError);

    // Any triple of K_{2,2} induces a path on three nodes.
    BuildingSet c4 = building_set_from_graph(Graph::bipartite(2, 2));
    BuildingSet r = restriction(c4, bits({0, 1, 2}));
    CHECK(r.size() == 6);
    CHECK(canonical_key(r, KeyMode::Isomorphism) ==
          canonical_key(building_set_from_graph(Graph::path(3)), KeyMode::Isomorphism));
  }

  TEST_CASE("removal") {
    BuildingSet p3 = building_set_from_graph(Graph::path(3));
    CHECK(as_lists(removal(p3, bits({1}))) == std::set<std::vector<int>>{{0}, {2}, {0, 2}});
    CHECK_THROWS_AS(removal(p3, bits({0, 1, 2})), PreconditionError);
    CHECK_THROWS_AS(removal(p3, bits({0, 2})), PreconditionError);

    // Deleting a leaf of the two-leaf star leaves an edge.
    BuildingSet s2 = building_set_from_graph(Graph::star(2));
    CHECK(canonical_key(removal(s2, bits({2}))) == canonical_key(building_set_from_graph(Graph::path(2))));

    // In K_{2,2}, the two neighbours of a deleted vertex become adjacent: a triangle.
    BuildingSet c4 = building_set_from_graph(Graph::bipartite(2, 2));
    BuildingSet minus0 = removal(c4, bits({0}));
    CHECK(minus0.ground() == bits({1, 2, 3}));
    CHECK_FALSE(validate(minus0).has_value());
    CHECK(canonical_key(minus0) == canonical_key(building_set_from_graph(Graph::complete(3))));
  }

  TEST_CASE("components") {
    BuildingSet two_points(bits({0, 1}), {bits({0}), bits({1})});
    auto parts = components(two_points);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].sets() == std::vector<Mask>{bits({0})});
    CHECK(parts[1].sets() == std::vector<Mask>{bits({1})});

    BuildingSet p3 = building_set_from_graph(Graph::path(3));
    CHECK(components(p3) == std::vector<BuildingSet>{p3});

    BuildingSet mixed(bits({0, 1, 2}), {bits({0}), bits({1}), bits({2}), bits({0, 1})});
    auto mp = components(mixed);
    REQUIRE(mp.size() == 2);
    CHECK(mp[0].ground() == bits({0, 1}));
    CHECK(mp[1].ground() == bits({2}));
  }

  TEST_CASE("components partition the ground set") {
    std::mt19937 rng(29);
    std::bernoulli_distribution coin(0.25);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 2 + trial % 7;
      std::vector<Graph::Edge> edges;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (coin(rng)) edges.emplace_back(u, v);
      BuildingSet b = building_set_from_graph(Graph(n, edges));
      Mask covered = 0;
      std::size_t total = 0;
      for (const auto& c : components(b)) {
        CHECK((covered & c.ground()) == 0);
        CHECK(c.is_connected());
        covered |= c.ground();
        total += c.size();
      }
      CHECK(covered == b.ground());
      CHECK(total == b.size());
    }
  }

  TEST_CASE("canonical keys") {
    BuildingSet shifted(bits({3, 7}), {bits({3}), bits({7}), bits({3, 7})});
    BuildingSet base(bits({0, 1}), {bits({0}), bits({1}), bits({0, 1})});
    CHECK(canonical_key(shifted) == canonical_key(base));
    CHECK(canonical_key(base) == canonical_key(base));
    CHECK(decode_key(canonical_key(shifted)) == base);

    // Path 0-1-2 versus path 1-0-2: isomorphic, differently labelled.
    BuildingSet p_mid1 = building_set_from_graph(Graph::path(3));
    BuildingSet p_mid0 = building_set_from_graph(Graph(3, {{1, 0}, {0, 2}}));
    CHECK(canonical_key(p_mid1) != canonical_key(p_mid0));
    CHECK(canonical_key(p_mid1, KeyMode::Isomorphism) == canonical_key(p_mid0, KeyMode::Isomorphism));
  }

  TEST_CASE("isomorphism keys identify relabelled graphs") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 3 + trial % 4;
      std::vector<Graph::Edge> edges;
      std::bernoulli_distribution coin(0.5);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (coin(rng)) edges.emplace_back(u, v);
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<Graph::Edge> relabelled;
      for (auto [u, v] : edges) relabelled.emplace_back(perm[u], perm[v]);
      auto k1 = canonical_key(building_set_from_graph(Graph(n, edges)), KeyMode::Isomorphism);
      auto k2 = canonical_key(building_set_from_graph(Graph(n, relabelled)), KeyMode::Isomorphism);
      CHECK(k1 == k2);
    }
  }

  TEST_CASE("restriction of a graphical building set is the induced subgraph's") {
    for (int n = 1; n <= 5; ++n) {
      for (const Graph& g : connected_graphs(n)) {
        BuildingSet b = building_set_from_graph(g);
        for (Mask s : b.sets())
          CHECK(canonical_key(restriction(b, s)) == canonical_key(building_set_from_graph(induced_subgraph(g, s))));
      }
    }
  }

  TEST_CASE("removal of a graphical building set is the contracted graph's") {
    for (int n = 2; n <= 6; ++n) {
      for (const Graph& g : connected_graphs(n)) {
        BuildingSet b = building_set_from_graph(g);
        for (Mask s : b.sets()) {
          if (s == b.ground()) continue;
          BuildingSet removed = removal(b, s);
          REQUIRE_FALSE(validate(removed).has_value());
          REQUIRE(canonical_key(removed) == canonical_key(building_set_from_graph(contracted_complement(g, s))));
        }
      }
    }
  }

  TEST_CASE("connected graph enumeration counts") {
    // Labelled connected graphs: OEIS A001187; unlabelled: A001349.
    const std::vector<std::size_t> labelled{1, 1, 4, 38, 728, 26704};
    const std::vector<std::size_t> classes{1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) {
      CHECK(connected_graphs(n).size() == labelled[static_cast<std::size_t>(n - 1)]);
      CHECK(connected_graph_classes(n).size() == classes[static_cast<std::size_t>(n - 1)]);
    }
  }
}
