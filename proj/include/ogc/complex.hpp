#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "ogc/basis.hpp"
#include "ogc/matrix.hpp"

namespace ogc {

struct Grading {
  int loop_order;
  long long degree_og;   // (d-1)e - d(v-1); contraction raises it by one
  long long degree_ogc;  // its negative; vertex splitting raises it by one
};

Grading grade(int d, int v, int e);

/// A class with its coefficient; the graph is the canonical representative.
struct Term {
  LabeledGraph graph;
  std::string key;
  std::int64_t coefficient = 0;
};

/// Formal linear combination of canonical classes, keyed by canonical key.
template <class G>
class BasicChain {
 public:
  using Map = std::map<std::string, std::pair<G, std::int64_t>>;

  void add(const std::string& key, const G& canonical, std::int64_t c) {
    if (c == 0) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, std::make_pair(canonical, c));
      return;
    }
    it->second.second += c;
    if (it->second.second == 0) terms_.erase(it);
  }
  void add(const BasicChain& other, std::int64_t c = 1) {
    for (const auto& [k, t] : other.terms_) add(k, t.first, c * t.second);
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::int64_t coefficient(const std::string& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second.second;
  }
  const Map& terms() const { return terms_; }

  bool operator==(const BasicChain& other) const {
    if (terms_.size() != other.terms_.size()) return false;
    for (const auto& [k, t] : terms_)
      if (other.coefficient(k) != t.second) return false;
    return true;
  }

 private:
  Map terms_;
};

using Chain = BasicChain<LabeledGraph>;

/// Canonical class of g with the sign relating g's labelling to it, or
/// nullopt when the class vanishes.
std::optional<Term> to_term(const LabeledGraph& g, Parity parity, std::int64_t coefficient = 1);

/// Raw contraction of edge `index` (0-based): the edge is moved to the last
/// position and its head to the last vertex, then deleted and merged into
/// the tail. Returns the labelled result and the relabeling sign, or nullopt
/// when the result has a directed cycle or a passing vertex.
std::optional<std::pair<LabeledGraph, int>> contract_raw(const LabeledGraph& g, int index, Parity parity);

/// Contraction of the edge with 1-based label `edge_label`, canonicalized.
std::optional<Term> contract_edge(const LabeledGraph& g, int edge_label, int d);

Chain differential(const LabeledGraph& g, int d);

/// Matrix of the differential from `source` (v, e) to `target` (v-1, e-1).
SparseMatrix differential_matrix(const FullBasis& source, const FullBasis& target, int threads = 1);

/// The dual complex is the transpose.
inline SparseMatrix dual_matrix(const SparseMatrix& m) { return m.transpose(); }

}  // namespace ogc
