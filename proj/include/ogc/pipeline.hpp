#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "ogc/basis.hpp"
#include "ogc/homology.hpp"
#include "ogc/involution.hpp"
#include "ogc/skeleton.hpp"

namespace ogc {

struct PipelineOptions {
  int threads = 1;
  RankOptions rank;
  std::optional<std::filesystem::path> cache_dir;
};

/// One loop order of a flavor as a cochain complex. Degree k holds the slice
/// with e = e_top - k, so the contraction differential raises k. Only one of
/// `full` / `skeleton` is filled, depending on the flavor.
struct LoopComplex {
  int d = 0;
  int loop_order = 0;
  Flavor flavor = Flavor::Full;
  int e_top = 0;
  int e_bottom = 0;
  /// False when the top slice is a truncation: its Betti number is not final.
  bool complete = true;

  std::vector<FullBasis> full;
  std::vector<SkeletonBasis> skeleton;
  CochainComplex complex;  // in the stored bases
  std::vector<SparseMatrix> iota;
  std::vector<EigenSplit> split;

  int degrees() const { return static_cast<int>(complex.dims.size()); }
  int edges_at(int k) const { return e_top - k; }
  int vertices_at(int k) const { return e_top - k - loop_order + 1; }
  /// The complex of the given eigenpart; Part::All returns `complex`.
  CochainComplex part(Part p) const;
  bool blocks_closed(Part p) const;
  /// Degrees whose Betti numbers are final.
  int first_final_degree() const { return complete ? 0 : 1; }
};

/// Full slices with e_bottom <= e <= e_top at loop order b (v = e - b + 1 >= 2).
LoopComplex full_loop_complex(int d, int b, int e_bottom, int e_top, CoreCatalog& cores,
                              const PipelineOptions& opts = {});

/// The whole reduced skeleton complex at loop order b >= 2, padded with empty
/// slices to [e_bottom, e_top] when those exceed its own range. edge_weight 2
/// gives the basis of integral expansions, matching inclusion_matrix.
LoopComplex skeleton_loop_complex(int d, int b, CoreCatalog& cores, int edge_weight = 1, int e_bottom = -1,
                                  int e_top = -1, const PipelineOptions& opts = {});

/// Smallest expanded edge count of an admissible graph at loop order b.
int min_edges(int b);
/// Largest expanded edge count of a reduced skeleton graph at loop order b.
int skeleton_max_edges(int b);

/// Inclusion of the skeleton complex into the full window with the same degrees.
std::vector<SparseMatrix> inclusion_maps(const LoopComplex& skeleton, const LoopComplex& full);
std::vector<SparseMatrix> restrict_maps(const std::vector<SparseMatrix>& f, const LoopComplex& source,
                                        const LoopComplex& target, Part p);

/// Rows for the final degrees of a loop complex.
std::vector<BettiRow> betti_rows(const LoopComplex& c, Part p, const RankOptions& opts = {});

struct EulerResult {
  long from_dims = 0;
  long from_betti = 0;
  bool agrees() const { return from_dims == from_betti; }
};

/// Alternating sums of dimensions and Betti numbers over the whole complex.
/// Throws IncompleteRange unless the loop complex covers its loop order.
EulerResult euler_check(const LoopComplex& c, Part p, const RankOptions& opts = {});

}  // namespace ogc
