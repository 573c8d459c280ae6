#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ogc/complex.hpp"

namespace ogc {

/// Linear combination of canonical classes with rational coefficients.
class QChain {
 public:
  using Map = std::map<std::string, std::pair<LabeledGraph, mpq_class>>;

  QChain() = default;
  static QChain of(const LabeledGraph& g, int d, const mpq_class& c = 1);

  void add(const std::string& key, const LabeledGraph& canonical, const mpq_class& c);
  void add(const QChain& other, const mpq_class& c = 1);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  mpq_class coefficient(const std::string& key) const;

  bool operator==(const QChain& other) const;
  std::string to_string() const;

 private:
  Map terms_;
};

/// Cohomological degree in the dual complex; its parity drives Koszul signs.
long long lie_degree(const LabeledGraph& g, int d);

/// Sum over vertices x of g1 of g2 inserted at x, with every reattachment of
/// the edges at x to vertices of g2. Vertices: g1 without x, then g2; edges:
/// g1 then g2.
QChain insert(const LabeledGraph& g1, const LabeledGraph& g2, int d);

/// Memo of insertions between canonical classes, keyed by their keys.
/// Not thread safe; one per worker.
class InsertMemo {
 public:
  explicit InsertMemo(int d) : d_(d) {}
  const QChain& get(const std::string& k1, const LabeledGraph& g1, const std::string& k2, const LabeledGraph& g2);
  int d() const { return d_; }

 private:
  int d_;
  std::map<std::pair<std::string, std::string>, QChain> memo_;
};

QChain insert(const QChain& a, const QChain& b, int d, InsertMemo* memo = nullptr);

/// [a,b] = a.b - (-1)^{|a||b|} b.a, extended bilinearly over homogeneous terms.
QChain bracket(const QChain& a, const QChain& b, int d, InsertMemo* memo = nullptr);

/// Differential of the dual complex, adjoint to contraction under the pairing
/// <G, G> = |Aut G|: delta(G) = sum over splittings G' of
/// coeff_G(contraction of G') |Aut G| / |Aut G'| G'.
/// With these conventions delta acts as a derivation from the right:
/// delta[x,y] = [x, delta y] + (-1)^{|y|} [delta x, y].
QChain vertex_splitting(const LabeledGraph& g, int d);
QChain vertex_splitting(const QChain& c, int d);

QChain iota(const QChain& c, int d);

/// Element of the extension by the empty graph.
struct ExtElement {
  mpq_class scalar = 0;  // coefficient of the unit
  QChain body;

  bool operator==(const ExtElement& o) const { return scalar == o.scalar && body == o.body; }
};

/// [1,1] = 0, [1,G] = 2(#V - #E) G, graded antisymmetry for [G,1], and the
/// insertion bracket on bodies.
ExtElement ext_bracket(const ExtElement& a, const ExtElement& b, int d);

/// Degree of the unit (the graph with no vertices and no edges).
inline long long unit_degree(int d) { return -static_cast<long long>(d); }

}  // namespace ogc
