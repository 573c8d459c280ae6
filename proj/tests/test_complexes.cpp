#include <doctest.h>

#include <sstream>

#include "ogc/basis.hpp"
#include "ogc/complex.hpp"
#include "ogc/matrix.hpp"
#include "oracles.hpp"

using namespace ogc;

namespace {

const std::pair<int, int> kGamma2[] = {{1, 2}, {1, 2}};
const std::pair<int, int> kFan[] = {{1, 2}, {1, 3}, {3, 2}, {3, 2}};
const std::pair<int, int> kGamma3[] = {{1, 2}, {1, 2}, {1, 2}};

}  // namespace

TEST_CASE("grading") {
  auto g = grade(3, 7, 9);
  CHECK(g.degree_ogc == 0);
  CHECK(g.loop_order == 3);
  CHECK(grade(2, 4, 6).degree_og == 0);
  for (int d : {2, 3, 4})
    for (int v = 2; v < 8; ++v)
      for (int e = v; e < 12; ++e) {
        CHECK(grade(d, v - 1, e - 1).degree_og == grade(d, v, e).degree_og + 1);
        CHECK(grade(d, v, e).degree_ogc == -grade(d, v, e).degree_og);
      }
}

TEST_CASE("contractions of the small examples") {
  auto g2 = new_graph(2, kGamma2);
  CHECK_FALSE(contract_edge(g2, 1, 3));
  CHECK_FALSE(contract_edge(g2, 2, 3));
  CHECK(differential(g2, 3).is_zero());
  CHECK_THROWS_AS(contract_edge(g2, 3, 3), Error);
  CHECK_THROWS_AS(contract_edge(g2, 0, 3), Error);

  auto f = new_graph(3, kFan);
  auto gamma3 = canonicalize(new_graph(2, kGamma3), Parity::Odd);
  REQUIRE(gamma3);
  auto t = contract_edge(f, 2, 3);  // the edge 1 -> 3
  REQUIRE(t);
  CHECK(t->graph == gamma3->cls.canonical);
  CHECK(std::abs(t->coefficient) == 1);
  auto lit = oracle::literal_contraction(f, 1, 3);
  REQUIRE(lit);
  CHECK(lit->second == t->coefficient);
  CHECK_FALSE(contract_edge(f, 2, 2));

  // the other three contractions produce a passing vertex or a cycle
  Chain df = differential(f, 3);
  CHECK(df.size() == 1);
  CHECK(df.coefficient(t->key) == t->coefficient);
}

TEST_CASE("contraction signs agree with the literal relabel-and-merge recipe") {
  CoreCatalog cores;
  for (int d : {2, 3})
    for (int v = 2; v <= 5; ++v)
      for (int e = v; e <= 7; ++e)
        for (const auto& g : enumerate_basis(d, v, e, cores).classes)
          for (int i = 0; i < e; ++i) {
            auto fast = contract_edge(g, i + 1, d);
            auto slow = oracle::literal_contraction(g, i, d);
            REQUIRE(fast.has_value() == slow.has_value());
            if (fast) {
              CHECK(fast->graph == slow->first);
              CHECK(fast->coefficient == slow->second);
            }
          }
}

TEST_CASE("differential is well defined on coinvariants") {
  CoreCatalog cores;
  std::mt19937_64 rng(11);
  for (int d : {2, 3}) {
    const Parity p = parity_of(d);
    for (const auto& g : enumerate_basis(d, 5, 7, cores).classes) {
      Chain base = differential(g, d);
      for (int t = 0; t < 5; ++t) {
        auto vp = oracle::shuffled(5, rng), ep = oracle::shuffled(7, rng);
        int s = permutation_sign(p == Parity::Even ? ep : vp);
        Chain moved = differential(relabel(g, vp, ep), d);
        Chain expect;
        expect.add(base, s);
        CHECK(moved == expect);
      }
    }
  }
}

TEST_CASE("differential matrices square to zero and have the right shape") {
  CoreCatalog cores;
  for (int d : {2, 3})
    for (int v = 3; v <= 5; ++v)
      for (int e = v; e <= 7; ++e) {
        auto a = enumerate_basis(d, v, e, cores), b = enumerate_basis(d, v - 1, e - 1, cores),
             c = enumerate_basis(d, v - 2, e - 2, cores);
        auto m1 = differential_matrix(a, b), m2 = differential_matrix(b, c);
        CHECK(m1.cols() == static_cast<int>(a.size()));
        CHECK(m1.rows() == static_cast<int>(b.size()));
        CHECK((m2 * m1).is_zero());
        CHECK(differential_matrix(a, b, 3) == m1);
      }
  auto s = enumerate_basis(3, 2, 2, cores), t = enumerate_basis(3, 1, 1, cores);
  auto m = differential_matrix(s, t);
  CHECK(m.rows() == 0);
  CHECK(m.cols() == 1);
}

TEST_CASE("missing target classes are reported") {
  CoreCatalog cores;
  auto s = enumerate_basis(3, 3, 4, cores);
  FullBasis empty;
  empty.d = 3;
  empty.v = 2;
  empty.e = 3;
  empty.reindex();
  CHECK_THROWS_AS(differential_matrix(s, empty), Error);
}

TEST_CASE("sparse matrix algebra and coordinate format") {
  auto m = SparseMatrix::from_entries(2, 3, {{0, 0, 1}, {1, 2, 4}, {0, 0, 2}, {1, 1, 0}});
  CHECK(m.nnz() == 2);
  CHECK(dual_matrix(dual_matrix(m)) == m);
  CHECK((m - m).is_zero());
  CHECK(m * SparseMatrix::identity(3) == m);
  std::istringstream in(to_coordinate_text(m));
  CHECK(from_coordinate_text(in) == m);
  CHECK(to_coordinate_text(m) == "2 3 2\n1 1 3\n2 3 4\n");
}
