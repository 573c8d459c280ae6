#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ogc/cores.hpp"
#include "ogc/homology.hpp"
#include "ogc/skeleton.hpp"

namespace ogc {

/// Edge states on a labelled core. Fwd/Bwd are Ed edges along / against the
/// stored core direction (lower to higher vertex label); Ess uses the stored
/// direction; EE marks processed tree edges.
enum class PhiEdge : std::uint8_t { Fwd, Bwd, Ess, EE };

using PhiAssignment = std::vector<PhiEdge>;

struct TreeOrder {
  std::vector<int> edges;  // a_1..a_{v-1}, 0-based core edge labels
};

/// Breadth-first from vertex 0, scanning edges in label order.
TreeOrder choose_tree_order(const CoreGraph& core);
bool is_prefix_tree_order(const CoreGraph& core, const TreeOrder& order);

SkeletonGraph to_skeleton(const CoreGraph& core, const PhiAssignment& a);

/// The complex at stage i: edges a_1..a_i are EE, the rest Fwd/Bwd/Ess
/// (self-loops only Ess) without cycles; graded by the number of Ess edges.
struct PhiComplex {
  CoreGraph core;
  TreeOrder order;
  int stage = 0;
  int d = 0;
  std::vector<std::vector<PhiAssignment>> by_ess;  // by_ess[s], sorted

  int find(const PhiAssignment& a) const;
  int max_ess() const { return static_cast<int>(by_ess.size()) - 1; }
  std::size_t total_dimension() const;

  /// Edge differential from grade s to s-1 (rows grade s-1).
  SparseMatrix edge_differential(int s) const;
  SparseMatrix iota(int s) const;
  /// As a cochain complex, degree k holding grade max_ess - k.
  CochainComplex as_cochain() const;

 private:
  friend PhiComplex phi_basis(const CoreGraph&, const TreeOrder&, int, int, std::uint64_t);
  std::vector<std::map<PhiAssignment, int>> index_;
};

PhiComplex phi_basis(const CoreGraph& core, const TreeOrder& order, int stage, int d,
                     std::uint64_t max_assignments = 5'000'000);

/// Edge differential of a single assignment: (target, coefficient) pairs.
std::vector<std::pair<PhiAssignment, int>> phi_edge_differential(const CoreGraph& core, const PhiAssignment& a, int d);
/// Involution on a single assignment.
std::pair<PhiAssignment, int> phi_iota(const CoreGraph& core, const PhiAssignment& a, int d);

/// f_i on one class of stage i-1; nullopt when the image vanishes.
std::optional<std::pair<PhiAssignment, int>> f_map(const PhiComplex& target, const PhiAssignment& a);
SparseMatrix f_map_matrix(const PhiComplex& from, const PhiComplex& to, int s);

struct PhiStageRecord {
  int stage = 0;
  std::vector<long> dims;         // by number of Ess edges
  std::vector<long> betti_minus;  // by number of Ess edges
  std::vector<long> betti_all;
};

struct PhiReport {
  CoreGraph core;
  TreeOrder order;
  int d = 0;
  std::vector<PhiStageRecord> stages;
  bool iota_involution = true;
  bool iota_commutes = true;      // with the edge differential and with every f_i
  bool f_chain_maps = true;
  bool f_minus_quasi_iso = true;
  bool terminal_minus_zero = true;
  bool minus_acyclic = true;
  bool composite_consistent = true;  // stage-0 minus homology equals terminal minus homology

  bool passed() const {
    return iota_involution && iota_commutes && f_chain_maps && f_minus_quasi_iso && terminal_minus_zero &&
           minus_acyclic && composite_consistent;
  }
  nlohmann::json to_json() const;
};

PhiReport verify_phi_chain(const CoreGraph& core, int d, const RankOptions& opts = {},
                           std::uint64_t max_assignments = 5'000'000);

}  // namespace ogc
