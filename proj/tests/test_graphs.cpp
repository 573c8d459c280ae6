#include <doctest.h>

#include <sstream>

#include "ogc/basis.hpp"
#include "ogc/canon.hpp"
#include "ogc/graph.hpp"
#include "oracles.hpp"

using namespace ogc;

namespace {

const std::pair<int, int> kGamma2[] = {{1, 2}, {1, 2}};
const std::pair<int, int> kFan[] = {{1, 2}, {1, 3}, {3, 2}, {3, 2}};

LabeledGraph gamma2() { return new_graph(2, kGamma2); }
LabeledGraph fan() { return new_graph(3, kFan); }

}  // namespace

TEST_CASE("new_graph builds and validates") {
  auto g = gamma2();
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 2);
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(fan().edge(2) == Edge{2, 1});

  const std::pair<int, int> loop[] = {{1, 1}};
  try {
    new_graph(1, loop);
    FAIL("expected SelfLoop");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SelfLoop);
  }
  const std::pair<int, int> out_of_range[] = {{1, 3}};
  try {
    new_graph(2, out_of_range);
    FAIL("expected OutOfRangeEndpoint");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OutOfRangeEndpoint);
  }
}

TEST_CASE("admissibility rules report the first failure") {
  CHECK_FALSE(check_admissible(gamma2()));
  CHECK_FALSE(check_admissible(fan()));

  const std::pair<int, int> cycle[] = {{1, 2}, {2, 3}, {3, 1}};
  auto v = check_admissible(new_graph(3, cycle));
  REQUIRE(v);
  CHECK(v->rule == Violation::Rule::DirectedCycle);

  const std::pair<int, int> path[] = {{1, 2}, {2, 3}};
  v = check_admissible(new_graph(3, path));
  REQUIRE(v);
  CHECK(v->rule == Violation::Rule::PassingVertex);
  CHECK(v->vertex == 1);

  const std::pair<int, int> split[] = {{1, 2}, {1, 2}, {3, 4}, {3, 4}};
  v = check_admissible(new_graph(4, split));
  REQUIRE(v);
  CHECK(v->rule == Violation::Rule::Disconnected);

  const std::pair<int, int> leaf[] = {{1, 2}, {1, 2}, {1, 3}};
  v = check_admissible(new_graph(3, leaf));
  REQUIRE(v);
  CHECK(v->rule == Violation::Rule::LowValence);

  CHECK(check_admissible(LabeledGraph::from_edges(1, {})));
}

TEST_CASE("reverse_all is an involution preserving admissibility") {
  auto r = reverse_all(gamma2());
  CHECK(r.edge(0) == Edge{1, 0});
  CHECK(reverse_all(r) == gamma2());
  CHECK_FALSE(check_admissible(reverse_all(fan())));
}

TEST_CASE("Gamma2 in coinvariants") {
  CHECK_FALSE(canonicalize(gamma2(), Parity::Even));
  auto odd = canonicalize(gamma2(), Parity::Odd);
  REQUIRE(odd);
  CHECK(odd->coefficient == 1);

  auto even_report = automorphism_report(gamma2(), Parity::Even);
  CHECK(even_report.group_size == 2);
  CHECK(even_report.has_odd_automorphism);
  auto odd_report = automorphism_report(gamma2(), Parity::Odd);
  CHECK(odd_report.group_size == 2);
  CHECK_FALSE(odd_report.has_odd_automorphism);
}

TEST_CASE("fan graph against the brute-force automorphism oracle") {
  for (Parity p : {Parity::Even, Parity::Odd}) {
    auto brute = oracle::all_automorphisms(fan(), p);
    auto report = automorphism_report(fan(), p);
    CHECK(report.group_size == static_cast<std::uint64_t>(brute.count));
    CHECK(report.has_odd_automorphism == brute.odd);
  }
  // the parallel pair (3,2),(3,2) makes F vanish for even d, and swapping it
  // is invisible for odd d
  const std::pair<int, int> swapped[] = {{1, 2}, {1, 3}, {3, 2}, {3, 2}};
  CHECK_FALSE(canonicalize(new_graph(3, swapped), Parity::Even));
  auto a = canonicalize(fan(), Parity::Odd);
  auto b = canonicalize(new_graph(3, swapped), Parity::Odd);
  REQUIRE(a);
  REQUIRE(b);
  CHECK(a->cls.canonical == b->cls.canonical);
  CHECK(a->coefficient == b->coefficient);
}

TEST_CASE("canonicalize is idempotent and rejects inadmissible input") {
  auto c = canonicalize(fan(), Parity::Odd);
  REQUIRE(c);
  auto again = canonicalize(c->cls.canonical, Parity::Odd);
  REQUIRE(again);
  CHECK(again->coefficient == 1);
  CHECK(again->cls.canonical == c->cls.canonical);

  const std::pair<int, int> path[] = {{1, 2}, {2, 3}};
  CHECK_THROWS_AS(canonicalize(new_graph(3, path), Parity::Odd), Error);
}

TEST_CASE("relabeling sign law on random relabelings") {
  CoreCatalog cores;
  std::mt19937_64 rng(7);
  for (int d : {2, 3}) {
    const Parity p = parity_of(d);
    for (int v = 2; v <= 4; ++v)
      for (int e = v; e <= 6; ++e)
        for (const auto& g : enumerate_basis(d, v, e, cores).classes) {
          for (int t = 0; t < 200; ++t) {
            auto vp = oracle::shuffled(v, rng), ep = oracle::shuffled(e, rng);
            auto c = canonicalize(relabel(g, vp, ep), p);
            REQUIRE(c);
            CHECK(c->cls.canonical == g);
            CHECK(c->coefficient == permutation_sign(p == Parity::Even ? ep : vp));
          }
        }
  }
}

TEST_CASE("zero verdict agrees with automorphism report on small slices") {
  std::mt19937_64 rng(3);
  for (Parity p : {Parity::Even, Parity::Odd}) {
    int seen = 0;
    for (int attempt = 0; attempt < 3000 && seen < 200; ++attempt) {
      int v = 2 + static_cast<int>(rng() % 3), e = v + static_cast<int>(rng() % 3);
      std::vector<Edge> edges;
      for (int i = 0; i < e; ++i) {
        int t = static_cast<int>(rng() % v), h = static_cast<int>(rng() % v);
        if (t == h) h = (h + 1) % v;
        edges.push_back({static_cast<Vertex>(t), static_cast<Vertex>(h)});
      }
      auto g = LabeledGraph::from_edges(v, edges);
      if (check_admissible(g)) continue;
      ++seen;
      bool zero = !canonicalize(g, p);
      CHECK(zero == automorphism_report(g, p).has_odd_automorphism);
      CHECK(zero == oracle::all_automorphisms(g, p).odd);
    }
    CHECK(seen > 50);
  }
}

TEST_CASE("text and json round trips") {
  std::istringstream in(to_text(fan()) + to_text(gamma2()));
  auto gs = read_text_records(in);
  REQUIRE(gs.size() == 2);
  CHECK(gs[0] == fan());
  CHECK(gs[1] == gamma2());
  CHECK(graph_from_json(to_json(fan())) == fan());
  CHECK(to_json(gamma2()).dump() == R"({"edges":[[1,2],[1,2]],"v":2})");

  std::istringstream bad("3 2\n1 2\n");
  CHECK_THROWS_AS(read_text_records(bad), Error);
}
