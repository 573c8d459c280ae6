#include <doctest.h>

#include <random>

#include "ogc/homology.hpp"
#include "ogc/kernels.hpp"

using namespace ogc;

namespace {

SparseMatrix random_matrix(int rows, int cols, double density, int rank_cap, std::mt19937_64& rng) {
  // product of two random factors, so the rank is at most rank_cap
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<int> val(-3, 3);
  std::vector<Entry> a, b;
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < rank_cap; ++k)
      if (u(rng) < density) a.push_back({i, k, val(rng)});
  for (int k = 0; k < rank_cap; ++k)
    for (int j = 0; j < cols; ++j)
      if (u(rng) < density) b.push_back({k, j, val(rng)});
  return SparseMatrix::from_entries(rows, rank_cap, a) * SparseMatrix::from_entries(rank_cap, cols, b);
}

}  // namespace

TEST_CASE("ranks of small matrices") {
  SparseMatrix zero(4, 5);
  CHECK(rank_mod_p(zero, kPrimeA) == 0);
  CHECK(rational_rank(zero) == 0);
  auto perm = SparseMatrix::from_entries(3, 3, {{0, 2, 1}, {1, 0, -1}, {2, 1, 1}});
  CHECK(exact_rank(perm) == 3);
  auto diag = SparseMatrix::from_entries(3, 3, {{0, 0, 2}, {1, 1, 4}, {2, 2, 6}});
  CHECK(exact_rank(diag) == 3);
  auto dependent = SparseMatrix::from_entries(2, 2, {{0, 0, 1}, {0, 1, 2}, {1, 0, 2}, {1, 1, 4}});
  CHECK(exact_rank(dependent) == 1);
  CHECK(dense_rank_mod_p(dependent, kPrimeB) == 1);
}

TEST_CASE("sparse and dense elimination agree with the rational rank") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    int rows = 5 + static_cast<int>(rng() % 40), cols = 5 + static_cast<int>(rng() % 40);
    int cap = 1 + static_cast<int>(rng() % 35);
    auto m = random_matrix(rows, cols, 0.3, cap, rng);
    long q = rational_rank(m);
    CHECK(q <= cap);
    for (auto p : {kPrimeA, kPrimeB}) {
      CHECK(rank_mod_p(m, p, t) == q);
      CHECK(dense_rank_mod_p(m, p) == q);
      CHECK(rank_mod_p(m.transpose(), p) == q);
    }
  }
}

TEST_CASE("kernel vectors") {
  std::mt19937_64 rng(9);
  auto m = random_matrix(12, 20, 0.4, 7, rng);
  auto k = kernel_mod_p(m, kPrimeA);
  CHECK(k.cols() == 20 - rank_mod_p(m, kPrimeA));
  const SparseMatrix mk = m * k;
  for (const auto& x : mk.entries()) CHECK(x.value % static_cast<std::int64_t>(kPrimeA) == 0);
}

TEST_CASE("scalar and AVX2 kernels agree") {
  using namespace ogc::kernels;
  std::mt19937_64 rng(1);
  for (std::uint32_t p : {kPrimeA, kPrimeB, 3u, 65521u})
    for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 31u, 100u}) {
      std::vector<std::uint32_t> x(n), y(n);
      for (auto& a : x) a = static_cast<std::uint32_t>(rng() % p);
      for (auto& a : y) a = static_cast<std::uint32_t>(rng() % p);
      std::uint32_t c = static_cast<std::uint32_t>(rng() % p);
      auto expect = y;
      for (std::size_t i = 0; i < n; ++i)
        expect[i] = static_cast<std::uint32_t>((y[i] + static_cast<std::uint64_t>(c) * x[i]) % p);
      auto s = y;
      axpy_mod_scalar(s.data(), x.data(), c, p, n);
      CHECK(s == expect);
      if (cpu_has_avx2()) {
        auto v = y;
        axpy_mod_avx2(v.data(), x.data(), c, p, n);
        CHECK(v == expect);
      }
    }
  CHECK(select_axpy() != nullptr);
  CHECK(std::string(selected_kernel_name()).size() > 0);
  for (std::uint32_t a : {1u, 2u, 12345u, kPrimeA - 1})
    CHECK(static_cast<std::uint64_t>(a) * inverse_mod(a, kPrimeA) % kPrimeA == 1);
}

TEST_CASE("prime disagreement and guards") {
  // vanishes mod the first prime only
  auto two = SparseMatrix::from_entries(1, 1, {{0, 0, kPrimeA}});
  RankOptions opts;
  CHECK(exact_rank(two, opts) == 1);
  opts.escalate_to_rational = false;
  try {
    exact_rank(two, opts);
    FAIL("expected PrimeDisagreement");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PrimeDisagreement);
  }
  opts.primes = {3};
  try {
    exact_rank(two, opts);
    FAIL("expected a rejected prime");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
  }
  try {
    rational_rank(SparseMatrix::identity(20), 100);
    FAIL("expected ResourceLimitExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResourceLimitExceeded);
  }
}

TEST_CASE("cohomology and quasi-isomorphisms") {
  // 0 -> Z -> Z^2 -> Z -> 0 with d0 = (1,1)^T and d1 = (1,-1)
  CochainComplex c;
  c.dims = {1, 2, 1};
  c.diff = {SparseMatrix::from_entries(2, 1, {{0, 0, 1}, {1, 0, 1}}),
            SparseMatrix::from_entries(1, 2, {{0, 0, 1}, {0, 1, -1}})};
  c.validate();
  CHECK(betti_numbers(c) == std::vector<long>{0, 0, 0});

  std::vector<SparseMatrix> id{SparseMatrix::identity(1), SparseMatrix::identity(2), SparseMatrix::identity(1)};
  CHECK(verify_quasi_iso(id, c, c));

  CochainComplex a;
  a.dims = {1, 1};
  a.diff = {SparseMatrix(1, 1)};
  std::vector<SparseMatrix> ida{SparseMatrix::identity(1), SparseMatrix::identity(1)};
  std::vector<SparseMatrix> zero{SparseMatrix(1, 1), SparseMatrix(1, 1)};
  CHECK(verify_quasi_iso(ida, a, a));
  CHECK_FALSE(verify_quasi_iso(zero, a, a));

  std::vector<SparseMatrix> bad{SparseMatrix::identity(1), SparseMatrix(2, 2), SparseMatrix(1, 1)};
  try {
    verify_quasi_iso(bad, c, c);
    FAIL("expected NotAChainMap");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAChainMap);
  }

  CochainComplex broken;
  broken.dims = {1, 2, 1};
  broken.diff = {SparseMatrix::identity(1), SparseMatrix(1, 2)};
  CHECK_THROWS(broken.validate());
}

TEST_CASE("betti table formats") {
  BettiTable t;
  t.rows.push_back({3, 7, 9, Flavor::Skeleton1, Part::Plus, 49, 1});
  CHECK(t.to_csv() == "d,v,e,flavor,part,dim,betti\n3,7,9,skeleton1,plus,49,1\n");
  CHECK(t.to_json().size() == 1);
}
