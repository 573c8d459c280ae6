#include <doctest.h>

#include "ogc/proofcheck.hpp"

using namespace ogc;

namespace {

const CoreGraph kTheta{2, {{0, 1}, {0, 1}, {0, 1}}};
const CoreGraph kFigure{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {2, 3}}};

}  // namespace

TEST_CASE("tree orders") {
  CoreGraph star{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}}};
  auto t = choose_tree_order(star);
  CHECK(t.edges == std::vector<int>{0, 1, 2});
  CHECK(is_prefix_tree_order(star, t));
  CHECK_FALSE(is_prefix_tree_order(star, TreeOrder{{3, 0, 1}}));
  CHECK(choose_tree_order(kTheta).edges.size() == 1);
  CHECK(choose_tree_order(kFigure).edges.size() == 3);

  CoreGraph split{4, {{0, 1}, {2, 3}}};
  try {
    choose_tree_order(split);
    FAIL("expected Disconnected");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Disconnected);
  }
}

TEST_CASE("stage complexes exclude directed cycles") {
  CoreGraph triangle{3, {{0, 1}, {0, 2}, {1, 2}}};
  auto order = choose_tree_order(triangle);
  auto c = phi_basis(triangle, order, 0, 3);
  // 0 -> 1 -> 2 -> 0
  CHECK(c.find({PhiEdge::Fwd, PhiEdge::Bwd, PhiEdge::Fwd}) == -1);
  CHECK(c.find({PhiEdge::Fwd, PhiEdge::Fwd, PhiEdge::Fwd}) >= 0);
  CHECK(c.find({PhiEdge::Ess, PhiEdge::Ess, PhiEdge::Ess}) >= 0);
  // 3^3 assignments minus the two cyclic ones
  CHECK(c.total_dimension() == 25);
  CHECK_THROWS_AS(phi_basis(triangle, order, 3, 3), Error);

  auto last = phi_basis(triangle, order, 2, 3);
  for (const auto& grade : last.by_ess)
    for (const auto& a : grade) {
      CHECK(a[order.edges[0]] == PhiEdge::EE);
      CHECK(a[order.edges[1]] == PhiEdge::EE);
    }
}

TEST_CASE("f maps") {
  for (int d : {2, 3}) {
    auto order = choose_tree_order(kTheta);
    auto target = phi_basis(kTheta, order, 1, d);
    const int a1 = order.edges[0];
    PhiAssignment a(3, PhiEdge::Ess);
    a[a1] = PhiEdge::Ess;
    CHECK_FALSE(f_map(target, a));
    a[a1] = PhiEdge::Fwd;
    auto fwd = f_map(target, a);
    REQUIRE(fwd);
    CHECK(fwd->second == 1);
    CHECK(fwd->first[a1] == PhiEdge::EE);
    a[a1] = PhiEdge::Bwd;
    auto bwd = f_map(target, a);
    REQUIRE(bwd);
    CHECK(bwd->second == (d % 2 == 0 ? 1 : -1));
    a[a1] = PhiEdge::EE;
    CHECK_THROWS_AS(f_map(target, a), Error);
    auto stage0 = phi_basis(kTheta, order, 0, d);
    try {
      f_map(stage0, a);
      FAIL("expected WrongStage");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::WrongStage);
    }
  }
}

TEST_CASE("edge differential and involution on stage complexes") {
  for (int d : {2, 3})
    for (int stage = 0; stage <= 3; ++stage) {
      auto c = phi_basis(kFigure, choose_tree_order(kFigure), stage, d);
      for (int s = 0; s <= c.max_ess(); ++s) {
        auto i = c.iota(s);
        CHECK(i * i == SparseMatrix::identity(i.rows()));
        if (s >= 1) CHECK(c.edge_differential(s).cols() == i.cols());
        if (s >= 2) CHECK((c.edge_differential(s - 1) * c.edge_differential(s)).is_zero());
        if (s >= 1) CHECK(c.edge_differential(s) * i == c.iota(s - 1) * c.edge_differential(s));
      }
      c.as_cochain().validate();
    }
}

TEST_CASE("full chain of maps on the theta and figure cores") {
  for (int d : {2, 3})
    for (const CoreGraph& core : {kTheta, kFigure}) {
      auto r = verify_phi_chain(core, d);
      CHECK(r.passed());
      CHECK(r.stages.size() == static_cast<std::size_t>(core.vertex_count));
      for (long b : r.stages.back().betti_minus) CHECK(b == 0);
      CHECK(r.to_json().contains("stages"));
    }
}
