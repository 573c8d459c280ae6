#include <doctest.h>

#include "ogc/involution.hpp"
#include "ogc/skeleton.hpp"

using namespace ogc;

namespace {

const std::pair<int, int> kGamma2[] = {{1, 2}, {1, 2}};

// reversal followed by the grading sign, applied to a chain
Chain iota_chain(const Chain& c, int d) {
  Chain out;
  for (const auto& [key, t] : c.terms()) {
    auto r = iota(t.first, d);
    if (r) out.add(r->key, r->graph, r->coefficient * t.second);
  }
  return out;
}

}  // namespace

TEST_CASE("Gamma2 is fixed by the involution") {
  auto g = new_graph(2, kGamma2);
  auto t = iota(g, 3);
  REQUIRE(t);
  CHECK(t->coefficient == 1);
  CHECK(t->graph == canonicalize(g, Parity::Odd)->cls.canonical);
  CHECK_FALSE(minus_relation_check(g, 3));

  CoreCatalog cores;
  auto s = split_basis(enumerate_basis(3, 2, 2, cores));
  CHECK(s.dimension(Part::Plus) == 1);
  CHECK(s.dimension(Part::Minus) == 0);
  CHECK(s.dimension(Part::All) == 1);
  auto j = to_json(s);
  CHECK(j.is_object());
}

TEST_CASE("involution squares to one and commutes with the differential") {
  CoreCatalog cores;
  for (int d : {2, 3})
    for (int v = 3; v <= 5; ++v)
      for (int e = v; e <= 7; ++e) {
        auto a = enumerate_basis(d, v, e, cores), b = enumerate_basis(d, v - 1, e - 1, cores);
        auto ia = iota_matrix(a), ib = iota_matrix(b);
        CHECK(ia * ia == SparseMatrix::identity(static_cast<int>(a.size())));
        auto m = differential_matrix(a, b);
        CHECK(m * ia == ib * m);
        auto s = split_involution(ia);
        CHECK(s.dimension(Part::Plus) + s.dimension(Part::Minus) == a.size());
        long fixed_minus = 0;
        for (const auto& g : a.classes) fixed_minus += minus_relation_check(g, d);
        long fixed = 0;
        for (const auto& x : ia.entries())
          if (x.row == x.col && x.value == -1) ++fixed;
        CHECK(fixed_minus == fixed);
      }
}

TEST_CASE("eigenparts of a signed permutation") {
  // swap of 0 and 1 with sign -1, 2 fixed with -1
  auto m = SparseMatrix::from_entries(3, 3, {{1, 0, -1}, {0, 1, -1}, {2, 2, -1}});
  auto s = split_involution(m);
  CHECK(s.dimension(Part::Plus) == 1);
  CHECK(s.dimension(Part::Minus) == 2);
  for (Part p : {Part::Plus, Part::Minus}) {
    auto b = s.basis(p);
    CHECK(m * b == b.scaled(p == Part::Plus ? 1 : -1));
  }
  CHECK(s.basis(Part::All) == SparseMatrix::identity(3));
}

TEST_CASE("skeleton involution agrees with reversal of the expansion") {
  CoreCatalog cores;
  for (int d : {2, 3})
    for (int b : {2, 3}) {
      auto bases = o1_basis_by_loop_order(d, b, cores);
      for (const auto& [e, slice] : bases.slices) {
        auto im = iota_matrix(slice);
        CHECK(im * im == SparseMatrix::identity(static_cast<int>(slice.size())));
        for (const auto& s : slice.classes) {
          auto r = iota_skeleton(s, d);
          REQUIRE(r);
          Chain lhs;
          lhs.add(expand(r->first, d), r->second);
          CHECK(lhs == iota_chain(expand(s, d), d));
        }
      }
    }
}

TEST_CASE("reversing a stored Ess direction costs -(-1)^d") {
  for (int d : {2, 3}) {
    SkeletonGraph s{2, {{0, 1, SkEdgeType::Ed}, {0, 1, SkEdgeType::Ed}, {0, 1, SkEdgeType::Ess}}};
    SkeletonGraph r = s;
    r.edges[2] = {1, 0, SkEdgeType::Ess};
    auto a = canonical_form(s, parity_of(d)), b = canonical_form(r, parity_of(d));
    if (a.zero) {
      CHECK(b.zero);
      continue;
    }
    CHECK(a.key == b.key);
    CHECK(b.sign == -sign_pow(d) * a.sign);
  }
}
