#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ogc/basis.hpp"
#include "ogc/matrix.hpp"

namespace ogc {

inline constexpr std::uint32_t kPrimeA = 2147483647u;  // 2^31 - 1
inline constexpr std::uint32_t kPrimeB = 2147483629u;

struct RankOptions {
  std::vector<std::uint32_t> primes{kPrimeA, kPrimeB};
  std::uint64_t seed = 0;
  bool escalate_to_rational = true;
};

/// Rank over F_p by sparse elimination (rows bucketed by leading column,
/// sparsest row pivots), switching to dense SIMD elimination once the
/// remaining block fills in.
long rank_mod_p(const SparseMatrix& m, std::uint32_t prime, std::uint64_t seed = 0);

/// Dense elimination only; reference for rank_mod_p.
long dense_rank_mod_p(const SparseMatrix& m, std::uint32_t prime);

/// Exact rank over Q by fraction-free (Bareiss) elimination.
long rational_rank(const SparseMatrix& m, std::size_t max_dense_entries = 250'000);

/// Rank over every configured prime; on disagreement escalates to Q, or
/// throws PrimeDisagreement when escalation is disabled or too large.
long exact_rank(const SparseMatrix& m, const RankOptions& opts = {});

/// Basis of the right kernel over F_p, one column per kernel vector.
SparseMatrix kernel_mod_p(const SparseMatrix& m, std::uint32_t prime);

/// Cochain complex: dims[k] in degree k, diff[k] : C^k -> C^{k+1}
/// (rows dims[k+1], cols dims[k]).
struct CochainComplex {
  std::vector<long> dims;
  std::vector<SparseMatrix> diff;

  void validate() const;
};

std::vector<long> betti_numbers(const CochainComplex& c, const RankOptions& opts = {});

/// Decides whether the chain map f (f[k] : C^k -> D^k) induces isomorphisms
/// in cohomology for degrees first..last. Throws NotAChainMap if it does not
/// commute with the differentials.
bool verify_quasi_iso(const std::vector<SparseMatrix>& f, const CochainComplex& source, const CochainComplex& target,
                      int first, int last, const RankOptions& opts = {});
inline bool verify_quasi_iso(const std::vector<SparseMatrix>& f, const CochainComplex& source,
                             const CochainComplex& target, const RankOptions& opts = {}) {
  return verify_quasi_iso(f, source, target, 0, static_cast<int>(source.dims.size()) - 1, opts);
}

void check_chain_map(const std::vector<SparseMatrix>& f, const CochainComplex& source, const CochainComplex& target);

struct BettiRow {
  int d = 0;
  int v = 0;
  int e = 0;
  Flavor flavor = Flavor::Full;
  Part part = Part::All;
  long dim = 0;
  long betti = 0;
};

struct BettiTable {
  std::vector<BettiRow> rows;

  std::string to_csv() const;
  nlohmann::json to_json() const;
};

}  // namespace ogc
