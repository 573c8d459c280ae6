#include "ogc/pipeline.hpp"

#include "ogc/cache.hpp"
#include "ogc/complex.hpp"

namespace ogc {

int min_edges(int b) { return b + 1; }
int skeleton_max_edges(int b) { return 6 * (b - 1); }

CochainComplex LoopComplex::part(Part p) const {
  if (p == Part::All) return complex;
  CochainComplex out;
  for (const auto& s : split) out.dims.push_back(static_cast<long>(s.dimension(p)));
  for (std::size_t k = 0; k < complex.diff.size(); ++k)
    out.diff.push_back(restrict_to_part(complex.diff[k], split[k], split[k + 1], p));
  return out;
}

bool LoopComplex::blocks_closed(Part p) const {
  for (std::size_t k = 0; k < complex.diff.size(); ++k)
    if (!block_is_closed(complex.diff[k], split[k], split[k + 1], p)) return false;
  return true;
}

LoopComplex full_loop_complex(int d, int b, int e_bottom, int e_top, CoreCatalog& cores,
                              const PipelineOptions& opts) {
  LoopComplex c;
  c.d = d;
  c.loop_order = b;
  c.flavor = Flavor::Full;
  c.e_bottom = std::max(e_bottom, min_edges(b));
  c.e_top = std::max(e_top, c.e_bottom);
  // the full complex never ends at a fixed loop order, so the top is a cut
  c.complete = false;
  for (int e = c.e_top; e >= c.e_bottom; --e) {
    c.full.push_back(cache::full_basis(d, e - b + 1, e, cores, opts.cache_dir));
    c.complex.dims.push_back(static_cast<long>(c.full.back().size()));
  }
  for (std::size_t k = 0; k + 1 < c.full.size(); ++k)
    c.complex.diff.push_back(differential_matrix(c.full[k], c.full[k + 1], opts.threads));
  for (const auto& basis : c.full) {
    c.iota.push_back(iota_matrix(basis));
    c.split.push_back(split_involution(c.iota.back()));
  }
  return c;
}

LoopComplex skeleton_loop_complex(int d, int b, CoreCatalog& cores, int edge_weight, int e_bottom, int e_top,
                                  const PipelineOptions& opts) {
  SkeletonComplexBases bases = o1_basis_by_loop_order(d, b, cores);
  if (opts.cache_dir)
    for (const auto& [e, slice] : bases.slices) cache::store_basis(slice, *opts.cache_dir);
  LoopComplex c;
  c.d = d;
  c.loop_order = b;
  c.flavor = Flavor::Skeleton1;
  c.e_bottom = e_bottom < 0 ? min_edges(b) : e_bottom;
  c.e_top = e_top < 0 ? skeleton_max_edges(b) : e_top;
  c.complete = c.e_top >= skeleton_max_edges(b) && c.e_bottom <= min_edges(b);
  for (int e = c.e_top; e >= c.e_bottom; --e) {
    c.skeleton.push_back(bases.slice_or_empty(e));
    c.complex.dims.push_back(static_cast<long>(c.skeleton.back().size()));
  }
  for (std::size_t k = 0; k + 1 < c.skeleton.size(); ++k)
    c.complex.diff.push_back(skeleton_differential_matrix(c.skeleton[k], c.skeleton[k + 1], edge_weight));
  for (const auto& basis : c.skeleton) {
    c.iota.push_back(iota_matrix(basis));
    c.split.push_back(split_involution(c.iota.back()));
  }
  return c;
}

std::vector<SparseMatrix> inclusion_maps(const LoopComplex& skeleton, const LoopComplex& full) {
  if (skeleton.e_top != full.e_top || skeleton.e_bottom != full.e_bottom)
    throw Error(ErrorKind::MissingBasis, "skeleton and full windows differ");
  std::vector<SparseMatrix> f;
  for (int k = 0; k < skeleton.degrees(); ++k) f.push_back(inclusion_matrix(skeleton.skeleton[k], full.full[k]));
  return f;
}

std::vector<SparseMatrix> restrict_maps(const std::vector<SparseMatrix>& f, const LoopComplex& source,
                                        const LoopComplex& target, Part p) {
  std::vector<SparseMatrix> out;
  for (std::size_t k = 0; k < f.size(); ++k) out.push_back(restrict_to_part(f[k], source.split[k], target.split[k], p));
  return out;
}

std::vector<BettiRow> betti_rows(const LoopComplex& c, Part p, const RankOptions& opts) {
  CochainComplex cx = c.part(p);
  std::vector<long> betti = betti_numbers(cx, opts);
  std::vector<BettiRow> rows;
  for (int k = c.degrees() - 1; k >= c.first_final_degree(); --k) {
    rows.push_back({c.d, c.vertices_at(k), c.edges_at(k), c.flavor, p, cx.dims[k], betti[k]});
  }
  return rows;
}

EulerResult euler_check(const LoopComplex& c, Part p, const RankOptions& opts) {
  if (!c.complete)
    throw Error(ErrorKind::IncompleteRange, std::string(to_string(c.flavor)) + " complex at loop order " +
                                                std::to_string(c.loop_order) + " is truncated");
  CochainComplex cx = c.part(p);
  std::vector<long> betti = betti_numbers(cx, opts);
  EulerResult r;
  for (std::size_t k = 0; k < betti.size(); ++k) {
    long s = (k % 2 == 0) ? 1 : -1;
    r.from_dims += s * cx.dims[k];
    r.from_betti += s * betti[k];
  }
  return r;
}

}  // namespace ogc
