#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ogc/basis.hpp"
#include "ogc/complex.hpp"
#include "ogc/skeleton.hpp"

namespace ogc {

/// Reversal of all edges times (-1)^{e+v+1} (d even) or (-1)^{v+1} (d odd),
/// canonicalized.
std::optional<Term> iota(const LabeledGraph& g, int d);

/// True iff the class is fixed by reversal with the sign of the minus relation:
/// reverse(g) = (-1)^{e+v} g (d even) or (-1)^v g (d odd).
bool minus_relation_check(const LabeledGraph& g, int d);

/// Signed permutation matrix of the involution in a stored basis.
SparseMatrix iota_matrix(const FullBasis& basis);
SparseMatrix iota_matrix(const SkeletonBasis& basis);

/// Eigenvectors of an involution given as a signed permutation matrix.
/// Fixed classes come first in basis order, then pairs ordered by their
/// smaller index; each eigenvector is stored with its representative index,
/// where it has coefficient 1.
struct EigenSplit {
  struct Vector {
    int representative;
    std::vector<std::pair<int, int>> terms;  // (class index, coefficient)
  };
  int source_size = 0;
  std::vector<Vector> plus;
  std::vector<Vector> minus;

  const std::vector<Vector>& part(Part p) const { return p == Part::Minus ? minus : plus; }
  /// Columns are the eigenvectors of the part; Part::All gives the identity.
  SparseMatrix basis(Part p) const;
  std::vector<int> representatives(Part p) const;
  std::size_t dimension(Part p) const;
};

EigenSplit split_involution(const SparseMatrix& iota);
EigenSplit split_basis(const FullBasis& basis);
EigenSplit split_basis(const SkeletonBasis& basis);

/// Matrix of m restricted to the eigenpart: columns m * (source eigenvectors)
/// read at the target representatives. Valid when m commutes with the
/// involutions; block_is_closed checks that.
SparseMatrix restrict_to_part(const SparseMatrix& m, const EigenSplit& source, const EigenSplit& target, Part p);
bool block_is_closed(const SparseMatrix& m, const EigenSplit& source, const EigenSplit& target, Part p);

nlohmann::json to_json(const EigenSplit& s);

}  // namespace ogc
