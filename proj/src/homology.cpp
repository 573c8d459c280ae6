#include "ogc/homology.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ogc/kernels.hpp"

namespace ogc {

namespace {

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

using SparseRow = std::vector<std::pair<int, std::uint32_t>>;

// r <- r - f * q over F_p, both sorted by column.
SparseRow subtract_multiple(const SparseRow& r, const SparseRow& q, std::uint32_t f, std::uint32_t p) {
  SparseRow out;
  out.reserve(r.size() + q.size());
  std::size_t i = 0, j = 0;
  const std::uint64_t neg = p - f;
  while (i < r.size() || j < q.size()) {
    if (j == q.size() || (i < r.size() && r[i].first < q[j].first)) {
      out.push_back(r[i++]);
    } else if (i == r.size() || q[j].first < r[i].first) {
      out.emplace_back(q[j].first, static_cast<std::uint32_t>(neg * q[j].second % p));
      ++j;
    } else {
      auto v = static_cast<std::uint32_t>((r[i].second + neg * q[j].second) % p);
      if (v != 0) out.emplace_back(r[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

long dense_rank(std::vector<std::uint32_t>& a, std::size_t rows, std::size_t cols, std::uint32_t p) {
  kernels::AxpyFn axpy = kernels::select_axpy();
  long rank = 0;
  std::size_t top = 0;
  for (std::size_t c = 0; c < cols && top < rows; ++c) {
    std::size_t piv = top;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != top)
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(piv * cols),
                       a.begin() + static_cast<std::ptrdiff_t>((piv + 1) * cols),
                       a.begin() + static_cast<std::ptrdiff_t>(top * cols));
    const std::uint32_t inv = kernels::inverse_mod(a[top * cols + c], p);
    const std::uint32_t* prow = &a[top * cols];
    for (std::size_t r = top + 1; r < rows; ++r) {
      std::uint32_t v = a[r * cols + c];
      if (v == 0) continue;
      auto f = static_cast<std::uint32_t>(static_cast<std::uint64_t>(p - v) * inv % p);
      axpy(&a[r * cols + c], prow + c, f, p, cols - c);
    }
    ++top;
    ++rank;
  }
  return rank;
}

// deterministic tie-break key for pivot choice
std::uint64_t mix(std::uint64_t seed, std::uint64_t x) {
  std::uint64_t z = seed * 0x9E3779B97F4A7C15ull + x + 0x632BE59BD9B4E019ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

long dense_rank_mod_p(const SparseMatrix& m, std::uint32_t prime) {
  const auto rows = static_cast<std::size_t>(m.rows()), cols = static_cast<std::size_t>(m.cols());
  std::vector<std::uint32_t> a(rows * cols, 0);
  for (const Entry& x : m.entries()) a[static_cast<std::size_t>(x.row) * cols + static_cast<std::size_t>(x.col)] = reduce(x.value, prime);
  return dense_rank(a, rows, cols, prime);
}

long rank_mod_p(const SparseMatrix& input, std::uint32_t p, std::uint64_t seed) {
  if (p < (1u << 20) || p >= (1u << 31)) throw Error(ErrorKind::ParseError, "prime must lie in (2^20, 2^31)");
  // Work with the orientation that has fewer rows.
  const SparseMatrix& m = input;
  const bool flip = m.rows() > m.cols();
  const int nrows = flip ? m.cols() : m.rows();
  const int ncols = flip ? m.rows() : m.cols();

  // sparse columns first
  std::vector<int> count(static_cast<std::size_t>(ncols), 0);
  for (const Entry& x : m.entries()) ++count[flip ? x.row : x.col];
  std::vector<int> order(static_cast<std::size_t>(ncols));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return count[a] < count[b]; });
  std::vector<int> position(static_cast<std::size_t>(ncols));
  for (int i = 0; i < ncols; ++i) position[order[i]] = i;

  std::vector<SparseRow> rows(static_cast<std::size_t>(nrows));
  for (const Entry& x : m.entries()) {
    std::uint32_t v = reduce(x.value, p);
    if (v == 0) continue;
    int r = flip ? x.col : x.row;
    int c = flip ? x.row : x.col;
    rows[r].emplace_back(position[c], v);
  }
  std::vector<std::vector<int>> bucket(static_cast<std::size_t>(ncols));
  std::vector<std::uint64_t> tie(static_cast<std::size_t>(nrows));
  std::size_t live_nnz = 0;
  for (int r = 0; r < nrows; ++r) {
    auto& row = rows[r];
    std::sort(row.begin(), row.end());
    tie[r] = mix(seed, static_cast<std::uint64_t>(r));
    if (!row.empty()) {
      bucket[row.front().first].push_back(r);
      live_nnz += row.size();
    }
  }
  long live_rows = 0;
  for (int r = 0; r < nrows; ++r) live_rows += rows[r].empty() ? 0 : 1;

  long rank = 0;
  for (int c = 0; c < ncols; ++c) {
    const long remaining_cols = ncols - c;
    const double density = live_rows == 0 ? 0.0 : static_cast<double>(live_nnz) / (static_cast<double>(live_rows) * remaining_cols);
    const double cells = static_cast<double>(live_rows) * static_cast<double>(remaining_cols);
    if (live_rows > 64 && density > 0.05 && cells <= 1.2e8) {
      // dense tail over the live rows and remaining columns
      std::size_t R = 0;
      for (int cc = c; cc < ncols; ++cc) R += bucket[cc].size();
      const auto C = static_cast<std::size_t>(remaining_cols);
      std::vector<std::uint32_t> a(R * C, 0);
      std::size_t k = 0;
      for (int cc = c; cc < ncols; ++cc) {
        for (int r : bucket[cc]) {
          for (auto [col, v] : rows[r]) a[k * C + static_cast<std::size_t>(col - c)] = v;
          ++k;
        }
      }
      return rank + dense_rank(a, R, C, p);
    }
    auto& b = bucket[c];
    if (b.empty()) continue;
    auto best = std::min_element(b.begin(), b.end(), [&](int x, int y) {
      return rows[x].size() != rows[y].size() ? rows[x].size() < rows[y].size() : tie[x] < tie[y];
    });
    const int piv = *best;
    std::vector<int> others;
    for (int r : b)
      if (r != piv) others.push_back(r);
    b.clear();
    const SparseRow& prow = rows[piv];
    const std::uint32_t inv = kernels::inverse_mod(prow.front().second, p);
    for (int r : others) {
      auto f = static_cast<std::uint32_t>(static_cast<std::uint64_t>(rows[r].front().second) * inv % p);
      live_nnz -= rows[r].size();
      rows[r] = subtract_multiple(rows[r], prow, f, p);
      if (rows[r].empty()) {
        --live_rows;
      } else {
        live_nnz += rows[r].size();
        bucket[rows[r].front().first].push_back(r);
      }
    }
    live_nnz -= prow.size();
    --live_rows;
    rows[piv].clear();
    rows[piv].shrink_to_fit();
    ++rank;
  }
  return rank;
}

long rational_rank(const SparseMatrix& m, std::size_t max_dense_entries) {
  const auto rows = static_cast<std::size_t>(m.rows()), cols = static_cast<std::size_t>(m.cols());
  if (rows * cols > max_dense_entries)
    throw Error(ErrorKind::ResourceLimitExceeded, "rational rank guard: " + std::to_string(rows) + "x" + std::to_string(cols));
  std::vector<mpz_class> a(rows * cols);
  for (const Entry& x : m.entries()) a[static_cast<std::size_t>(x.row) * cols + static_cast<std::size_t>(x.col)] = static_cast<long>(x.value);
  mpz_class prev = 1;
  std::size_t top = 0;
  long rank = 0;
  for (std::size_t c = 0; c < cols && top < rows; ++c) {
    std::size_t piv = top;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != top)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[top * cols + j]);
    const mpz_class pv = a[top * cols + c];
    for (std::size_t r = top + 1; r < rows; ++r) {
      const mpz_class lead = a[r * cols + c];
      for (std::size_t j = c; j < cols; ++j) {
        mpz_class t = pv * a[r * cols + j] - lead * a[top * cols + j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[r * cols + j] = t;
      }
    }
    prev = pv;
    ++top;
    ++rank;
  }
  return rank;
}

long exact_rank(const SparseMatrix& m, const RankOptions& opts) {
  if (m.is_zero()) return 0;
  long first = -1;
  bool agree = true;
  for (std::uint32_t p : opts.primes) {
    long r = rank_mod_p(m, p, opts.seed);
    if (first < 0) first = r;
    else if (r != first) agree = false;
  }
  if (agree) return first;
  if (!opts.escalate_to_rational) throw Error(ErrorKind::PrimeDisagreement, "ranks differ across primes");
  try {
    return rational_rank(m);
  } catch (const Error&) {
    throw Error(ErrorKind::PrimeDisagreement, "ranks differ across primes and the matrix exceeds the rational guard");
  }
}

SparseMatrix kernel_mod_p(const SparseMatrix& m, std::uint32_t p) {
  const auto rows = static_cast<std::size_t>(m.rows()), cols = static_cast<std::size_t>(m.cols());
  std::vector<std::uint32_t> a(rows * cols, 0);
  for (const Entry& x : m.entries()) a[static_cast<std::size_t>(x.row) * cols + static_cast<std::size_t>(x.col)] = reduce(x.value, p);
  kernels::AxpyFn axpy = kernels::select_axpy();
  // reduced row echelon form
  std::vector<std::size_t> pivot_cols;
  std::size_t top = 0;
  for (std::size_t c = 0; c < cols && top < rows; ++c) {
    std::size_t piv = top;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != top)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[top * cols + j]);
    const std::uint32_t inv = kernels::inverse_mod(a[top * cols + c], p);
    for (std::size_t j = 0; j < cols; ++j) a[top * cols + j] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a[top * cols + j]) * inv % p);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == top || a[r * cols + c] == 0) continue;
      axpy(&a[r * cols], &a[top * cols], p - a[r * cols + c], p, cols);
    }
    pivot_cols.push_back(c);
    ++top;
  }
  std::vector<char> is_pivot(cols, 0);
  for (std::size_t c : pivot_cols) is_pivot[c] = 1;
  std::vector<Entry> entries;
  int k = 0;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    entries.push_back({static_cast<int>(f), k, 1});
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      std::uint32_t v = a[i * cols + f];
      if (v != 0) entries.push_back({static_cast<int>(pivot_cols[i]), k, static_cast<std::int64_t>(p - v)});
    }
    ++k;
  }
  return SparseMatrix::from_entries(static_cast<int>(cols), k, std::move(entries));
}

void CochainComplex::validate() const {
  if (!dims.empty() && diff.size() + 1 != dims.size())
    throw Error(ErrorKind::MissingBasis, "complex needs one differential between consecutive degrees");
  for (std::size_t k = 0; k < diff.size(); ++k)
    if (diff[k].cols() != dims[k] || diff[k].rows() != dims[k + 1])
      throw Error(ErrorKind::MissingBasis, "differential shape does not match dimensions in degree " + std::to_string(k));
}

std::vector<long> betti_numbers(const CochainComplex& c, const RankOptions& opts) {
  c.validate();
  std::vector<long> ranks;
  for (const auto& d : c.diff) ranks.push_back(exact_rank(d, opts));
  std::vector<long> out;
  for (std::size_t k = 0; k < c.dims.size(); ++k) {
    long b = c.dims[k];
    if (k < ranks.size()) b -= ranks[k];
    if (k > 0) b -= ranks[k - 1];
    out.push_back(b);
  }
  return out;
}

void check_chain_map(const std::vector<SparseMatrix>& f, const CochainComplex& source, const CochainComplex& target) {
  source.validate();
  target.validate();
  if (f.size() != source.dims.size() || source.dims.size() != target.dims.size())
    throw Error(ErrorKind::NotAChainMap, "degree ranges differ");
  for (std::size_t k = 0; k < f.size(); ++k)
    if (f[k].cols() != source.dims[k] || f[k].rows() != target.dims[k])
      throw Error(ErrorKind::NotAChainMap, "map shape mismatch in degree " + std::to_string(k));
  for (std::size_t k = 0; k + 1 < f.size(); ++k)
    if (!(target.diff[k] * f[k] == f[k + 1] * source.diff[k]))
      throw Error(ErrorKind::NotAChainMap, "map does not commute with the differentials in degree " + std::to_string(k));
}

bool verify_quasi_iso(const std::vector<SparseMatrix>& f, const CochainComplex& source, const CochainComplex& target,
                      int first, int last, const RankOptions& opts) {
  check_chain_map(f, source, target);
  const int top = static_cast<int>(source.dims.size()) - 1;
  auto rank_or_zero = [&](const CochainComplex& c, int k) -> long {
    return (k < 0 || k >= static_cast<int>(c.diff.size())) ? 0 : exact_rank(c.diff[k], opts);
  };
  for (int k = std::max(first, 0); k <= std::min(last, top); ++k) {
    long hs = source.dims[k] - rank_or_zero(source, k) - rank_or_zero(source, k - 1);
    long ht = target.dims[k] - rank_or_zero(target, k) - rank_or_zero(target, k - 1);
    if (hs != ht) return false;
    if (hs == 0) continue;
    // rank of the induced map: rank[f Z | B] - rank B over each prime
    long induced = -1;
    for (std::uint32_t p : opts.primes) {
      SparseMatrix z = (k < static_cast<int>(source.diff.size())) ? kernel_mod_p(source.diff[k], p)
                                                                   : SparseMatrix::identity(static_cast<int>(source.dims[k]));
      SparseMatrix fz = f[k] * z;
      SparseMatrix b = k > 0 ? target.diff[k - 1] : SparseMatrix(static_cast<int>(target.dims[k]), 0);
      long r = rank_mod_p(fz.hconcat(b), p, opts.seed) - rank_mod_p(b, p, opts.seed);
      if (induced >= 0 && r != induced) throw Error(ErrorKind::PrimeDisagreement, "induced map rank differs across primes");
      induced = r;
    }
    if (induced != hs) return false;
  }
  return true;
}

std::string BettiTable::to_csv() const {
  std::ostringstream os;
  os << "d,v,e,flavor,part,dim,betti\n";
  for (const BettiRow& r : rows)
    os << r.d << ',' << r.v << ',' << r.e << ',' << to_string(r.flavor) << ',' << to_string(r.part) << ',' << r.dim
       << ',' << r.betti << '\n';
  return os.str();
}

nlohmann::json BettiTable::to_json() const {
  nlohmann::json a = nlohmann::json::array();
  for (const BettiRow& r : rows)
    a.push_back({{"d", r.d}, {"v", r.v}, {"e", r.e}, {"flavor", to_string(r.flavor)}, {"part", to_string(r.part)},
                 {"dim", r.dim}, {"betti", r.betti}});
  return a;
}

}  // namespace ogc
