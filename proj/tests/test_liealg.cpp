#include <doctest.h>

#include "ogc/liealg.hpp"

using namespace ogc;

namespace {

const std::pair<int, int> kGamma2[] = {{1, 2}, {1, 2}};

std::vector<LabeledGraph> sample(int d, int max_v, int max_e) {
  CoreCatalog cores;
  std::vector<LabeledGraph> out;
  for (int v = 2; v <= max_v; ++v)
    for (int e = v; e <= max_e; ++e)
      for (const auto& g : enumerate_basis(d, v, e, cores).classes) out.push_back(g);
  return out;
}

int koszul(long long a, long long b) { return sign_pow(a * b); }

}  // namespace

TEST_CASE("unit of the extension") {
  ExtElement one{1, {}};
  CHECK(ext_bracket(one, one, 3) == ExtElement{});
  auto g = new_graph(2, kGamma2);
  ExtElement x{0, QChain::of(g, 3)};
  auto r = ext_bracket(one, x, 3);
  CHECK(r.scalar == 0);
  CHECK(r.body.is_zero());  // 2(#V - #E) = 0
  CHECK(unit_degree(3) == -3);
}

TEST_CASE("insertion lands on admissible classes with the right grading") {
  auto g = new_graph(2, kGamma2);
  QChain a = QChain::of(g, 3);
  REQUIRE_FALSE(a.is_zero());
  QChain p = insert(a, a, 3);
  for (const auto& [key, t] : p.terms()) {
    CHECK_FALSE(check_admissible(t.first));
    CHECK(t.first.vertex_count() == 3);
    CHECK(t.first.edge_count() == 4);
  }
  InsertMemo memo(3);
  CHECK(insert(a, a, 3, &memo) == p);
  CHECK(insert(a, a, 3, &memo) == p);
  InsertMemo wrong(2);
  CHECK_THROWS(insert(a, a, 3, &wrong));
}

TEST_CASE("bracket is graded antisymmetric and the splitting differential is a derivation") {
  for (int d : {2, 3}) {
    auto gs = d % 2 == 0 ? sample(d, 4, 5) : sample(d, 3, 4);
    REQUIRE(gs.size() >= 2);
    for (const auto& x : gs)
      for (const auto& y : gs) {
        QChain a = QChain::of(x, d), b = QChain::of(y, d);
        long long dx = lie_degree(x, d), dy = lie_degree(y, d);
        QChain ab = bracket(a, b, d), ba = bracket(b, a, d);
        QChain sum = ab;
        sum.add(ba, koszul(dx, dy));
        CHECK(sum.is_zero());

        QChain lhs = vertex_splitting(ab, d);
        QChain rhs = bracket(a, vertex_splitting(b, d), d);
        rhs.add(bracket(vertex_splitting(a, d), b, d), sign_pow(dy));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("splitting squares to zero and commutes with the involution") {
  for (int d : {2, 3})
    for (const auto& g : sample(d, 4, 5)) {
      QChain c = QChain::of(g, d);
      CHECK(vertex_splitting(vertex_splitting(c, d), d).is_zero());
      CHECK(vertex_splitting(iota(c, d), d) == iota(vertex_splitting(c, d), d));
      CHECK(iota(iota(c, d), d) == c);
    }
}

TEST_CASE("unit acts by twice the vertex minus edge count") {
  for (int d : {2, 3})
    for (const auto& g : sample(d, 4, 6)) {
      ExtElement x{0, QChain::of(g, d)};
      auto r = ext_bracket(ExtElement{1, {}}, x, d);
      QChain expect;
      expect.add(x.body, 2 * (g.vertex_count() - g.edge_count()));
      CHECK(r.scalar == 0);
      CHECK(r.body == expect);
    }
}
