#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ogc/basis.hpp"
#include "ogc/complex.hpp"
#include "ogc/cores.hpp"

namespace ogc {

enum class SkEdgeType : std::uint8_t { Ed, dE, Ess, EE };

/// Skeleton edge. Ed runs tail -> head and dE head -> tail; Ess carries a
/// stored direction tail -> head whose flip costs -(-1)^d; EE is undirected.
struct SkeletonEdge {
  int tail;
  int head;
  SkEdgeType type;

  bool operator==(const SkeletonEdge&) const = default;
};

struct SkeletonGraph {
  int vertex_count = 0;  // skeleton vertices only
  std::vector<SkeletonEdge> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  int count(SkEdgeType t) const;
  int ess_count() const { return count(SkEdgeType::Ess); }
  /// Vertex and edge counts of the expanded graph: one middle vertex and
  /// one extra edge per Ess.
  int total_vertices() const { return vertex_count + ess_count(); }
  int total_edges() const { return edge_count() + ess_count(); }
  int loop_order() const { return edge_count() - vertex_count + 1; }

  bool operator==(const SkeletonGraph&) const = default;
};

/// dE is normalised to a reversed Ed; Ess and EE become undirected colours.
TypedGraph to_typed(const SkeletonGraph& s);
SkeletonGraph skeleton_from_typed(const TypedGraph& t);

/// Ed and dE edges must not close a directed cycle; EE edges may be walked
/// either way but never twice in a row.
bool has_cycle(const SkeletonGraph& s);

struct SkeletonCanon {
  SkeletonGraph graph;
  std::string key;
  int sign = 1;
  bool zero = false;
  std::uint64_t automorphism_count = 1;
};

SkeletonCanon canonical_form(const SkeletonGraph& s, Parity parity);

using SkChain = BasicChain<SkeletonGraph>;

/// Expansion into the full complex, scaled by 2^{#Ess}: each Ess edge x -> y
/// becomes (x -> w, y -> w) minus (w -> x, w -> y) with a new vertex w.
/// Vertices: skeleton vertices, then middles in Ess order; edges in skeleton
/// order with each Ess contributing its x-side then its y-side.
Chain expand(const SkeletonGraph& s, int d);

struct SkeletonDifferential {
  SkChain core;  // contraction of Ed / dE edges
  SkChain edge;  // Ess -> eps (Ed - (-1)^d dE)
};

SkeletonDifferential skeleton_differential(const SkeletonGraph& s, int d);

/// Direction reversal of Ed/dE edges with the sign transported from the
/// full complex. Returns nullopt only for classes that vanish.
std::optional<std::pair<SkeletonGraph, int>> iota_skeleton(const SkeletonGraph& s, int d);

struct SkeletonBasis : IndexedBasis<SkeletonGraph> {
  int d = 0;
  int v = 0;  // expanded vertex count
  int e = 0;  // expanded edge count

  void reindex();
};

/// The finite reduced complex at loop order b, keyed by expanded edge count.
struct SkeletonComplexBases {
  int d = 0;
  int loop_order = 0;
  std::map<int, SkeletonBasis> slices;

  const SkeletonBasis& at_edges(int e) const;
  SkeletonBasis slice_or_empty(int e) const;
};

SkeletonComplexBases o1_basis_by_loop_order(int d, int b, CoreCatalog& cores);

/// Matrix of the skeleton differential between slices with expanded edge
/// counts e and e-1. `edge_weight` scales the Ess part: 1 for the normalised
/// basis, 2 for the basis of integral expansions used by inclusion_matrix.
SparseMatrix skeleton_differential_matrix(const SkeletonBasis& source, const SkeletonBasis& target,
                                          int edge_weight = 1, bool core_part = true, bool edge_part = true);

/// Expansion written in the stored bases, rows indexed by the full basis.
SparseMatrix inclusion_matrix(const SkeletonBasis& source, const FullBasis& target);

// Text format: `v_sk m` then m lines `tail head type`, type in {>, <, S, E}.
std::string to_text(const SkeletonGraph& s);
std::optional<SkeletonGraph> read_skeleton_record(std::istream& in);

}  // namespace ogc
