#include <doctest.h>

#include <sstream>

#include "ogc/skeleton.hpp"

using namespace ogc;

namespace {

Chain differential(const Chain& c, int d) {
  Chain out;
  for (const auto& [key, t] : c.terms()) out.add(ogc::differential(t.first, d), t.second);
  return out;
}

Chain expand_all(const SkChain& c, int d, int weight = 1) {
  Chain out;
  for (const auto& [key, t] : c.terms()) out.add(expand(t.first, d), weight * t.second);
  return out;
}

}  // namespace

TEST_CASE("expansion of Ed only skeletons and of one Ess edge") {
  for (int d : {2, 3}) {
    // theta with all edges directed: an honest graph
    SkeletonGraph s{2, {{0, 1, SkEdgeType::Ed}, {0, 1, SkEdgeType::Ed}, {0, 1, SkEdgeType::Ed}}};
    Chain c = expand(s, d);
    const std::pair<int, int> e3[] = {{1, 2}, {1, 2}, {1, 2}};
    auto g = to_term(new_graph(2, e3), parity_of(d));
    if (!g) {
      CHECK(c.is_zero());
    } else {
      CHECK(c.size() == 1);
      CHECK(c.coefficient(g->key) == g->coefficient);
    }

    SkeletonGraph t{2, {{0, 1, SkEdgeType::Ed}, {0, 1, SkEdgeType::Ed}, {0, 1, SkEdgeType::Ess}}};
    CHECK(t.total_vertices() == 3);
    CHECK(t.total_edges() == 4);
    Chain ct = expand(t, d);
    CHECK(ct.size() <= 2);
    for (const auto& [key, term] : ct.terms()) {
      CHECK(term.first.vertex_count() == 3);
      CHECK(term.first.edge_count() == 4);
      CHECK(std::abs(term.second) == 1);
    }
  }
}

TEST_CASE("edge differential of a single Ess edge") {
  CoreCatalog cores;
  const SkeletonGraph lopsided{5,
                               {{0, 1, SkEdgeType::Ed},
                                {0, 2, SkEdgeType::Ed},
                                {1, 3, SkEdgeType::Ed},
                                {2, 3, SkEdgeType::Ed},
                                {2, 4, SkEdgeType::Ed},
                                {0, 4, SkEdgeType::Ed},
                                {1, 2, SkEdgeType::Ess}}};
  for (int d : {2, 3}) {
    std::vector<SkeletonGraph> samples{lopsided};
    for (const auto& [e, slice] : o1_basis_by_loop_order(d, 3, cores).slices)
      for (const auto& s : slice.classes)
        if (s.ess_count() == 1) samples.push_back(s);
    int seen = 0;
    for (const auto& s : samples) {
      int i = 0;
      while (s.edges[i].type != SkEdgeType::Ess) ++i;
      auto term = [&](SkEdgeType t) {
        SkeletonGraph r = s;
        r.edges[i].type = t;
        return std::make_pair(canonical_form(r, parity_of(d)), has_cycle(r));
      };
      auto [ed, ed_cycle] = term(SkEdgeType::Ed);
      auto [de, de_cycle] = term(SkEdgeType::dE);
      auto dd = skeleton_differential(s, d);
      if (ed_cycle || de_cycle || ed.zero || de.zero || ed.key == de.key) continue;
      ++seen;
      // Ed - (-1)^d dE up to one overall sign
      std::int64_t a = dd.edge.coefficient(ed.key) * ed.sign, b = dd.edge.coefficient(de.key) * de.sign;
      CHECK(dd.edge.size() == 2);
      CHECK(std::abs(a) == 1);
      CHECK(b == -sign_pow(d) * a);
    }
    CHECK(seen > 0);
  }
}

TEST_CASE("skeleton differential squares to zero and the expansion is a chain map") {
  CoreCatalog cores;
  for (int d : {2, 3})
    for (int b : {2, 3}) {
      auto bases = o1_basis_by_loop_order(d, b, cores);
      for (const auto& [e, slice] : bases.slices) {
        auto t1 = bases.slice_or_empty(e - 1), t2 = bases.slice_or_empty(e - 2);
        for (int w : {1, 2}) {
          auto m1 = skeleton_differential_matrix(slice, t1, w), m2 = skeleton_differential_matrix(t1, t2, w);
          CHECK((m2 * m1).is_zero());
        }
        for (const auto& s : slice.classes) {
          auto dd = skeleton_differential(s, d);
          Chain rhs = expand_all(dd.core, d);
          rhs.add(expand_all(dd.edge, d, 2));
          CHECK(differential(expand(s, d), d) == rhs);
        }
      }
    }
}

TEST_CASE("skeleton bases need loop order two") {
  CoreCatalog cores;
  try {
    o1_basis_by_loop_order(3, 1, cores);
    FAIL("expected UnsupportedLoopOrder");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedLoopOrder);
  }
  auto b = o1_basis_by_loop_order(3, 2, cores);
  CHECK_THROWS_AS(b.at_edges(100), Error);
  CHECK(b.slice_or_empty(100).size() == 0);
}

TEST_CASE("skeleton text round trip") {
  SkeletonGraph s{3,
                  {{0, 1, SkEdgeType::Ed}, {1, 2, SkEdgeType::dE}, {0, 2, SkEdgeType::Ess}, {1, 2, SkEdgeType::EE}}};
  std::istringstream in(to_text(s));
  auto r = read_skeleton_record(in);
  REQUIRE(r);
  CHECK(*r == s);
  CHECK(s.count(SkEdgeType::EE) == 1);
  CHECK(s.loop_order() == 2);
}
