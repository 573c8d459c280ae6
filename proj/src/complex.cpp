#include "ogc/complex.hpp"

#include "ogc/parallel.hpp"

namespace ogc {

Grading grade(int d, int v, int e) {
  long long og = static_cast<long long>(d - 1) * e - static_cast<long long>(d) * (v - 1);
  return {e - v + 1, og, -og};
}

std::optional<Term> to_term(const LabeledGraph& g, Parity parity, std::int64_t coefficient) {
  FullCanon c = canonical_form(g, parity);
  if (c.zero) return std::nullopt;
  return Term{std::move(c.graph), std::move(c.key), coefficient * c.sign};
}

std::optional<std::pair<LabeledGraph, int>> contract_raw(const LabeledGraph& g, int index, Parity parity) {
  const int v = g.vertex_count();
  const int e = g.edge_count();
  const Edge a = g.edge(index);
  const int t = a.tail, h = a.head;
  int sign = parity == Parity::Even ? sign_pow(e - 1 - index) : sign_pow(v - 1 - h);
  auto shift = [&](int x) -> Vertex {
    if (x == h) x = t;
    return static_cast<Vertex>(x > h ? x - 1 : x);
  };
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(e - 1));
  for (int i = 0; i < e; ++i) {
    if (i == index) continue;
    const Edge& x = g.edge(i);
    edges.push_back({shift(x.tail), shift(x.head)});
  }
  if (has_directed_cycle(v - 1, edges)) return std::nullopt;
  LabeledGraph out = GraphBuilder::make(v - 1, std::move(edges));
  AdmissibilityRules rules;
  rules.require_connected = false;
  rules.forbid_directed_cycles = false;
  if (check_admissible(out, rules)) return std::nullopt;
  return std::make_pair(std::move(out), sign);
}

std::optional<Term> contract_edge(const LabeledGraph& g, int edge_label, int d) {
  if (edge_label < 1 || edge_label > g.edge_count())
    throw Error(ErrorKind::EdgeOutOfRange, "edge label " + std::to_string(edge_label) + " outside [1, " +
                                               std::to_string(g.edge_count()) + "]");
  auto raw = contract_raw(g, edge_label - 1, parity_of(d));
  if (!raw) return std::nullopt;
  return to_term(raw->first, parity_of(d), raw->second);
}

Chain differential(const LabeledGraph& g, int d) {
  Chain out;
  const Parity p = parity_of(d);
  for (int i = 0; i < g.edge_count(); ++i) {
    auto raw = contract_raw(g, i, p);
    if (!raw) continue;
    if (auto t = to_term(raw->first, p, raw->second)) out.add(t->key, t->graph, t->coefficient);
  }
  return out;
}

SparseMatrix differential_matrix(const FullBasis& source, const FullBasis& target, int threads) {
  const int d = source.d;
  std::vector<std::vector<Entry>> columns(source.size());
  parallel_for(source.size(), threads, [&](std::size_t j) {
    Chain c = differential(source.classes[j], d);
    for (const auto& [key, term] : c.terms()) {
      int row = target.find(key);
      if (row < 0)
        throw Error(ErrorKind::MissingBasis, "contraction of class " + std::to_string(j) + " in (" +
                                                 std::to_string(source.v) + "," + std::to_string(source.e) +
                                                 ") not found in target slice");
      columns[j].push_back({row, static_cast<int>(j), term.second});
    }
  });
  std::vector<Entry> all;
  for (auto& c : columns) all.insert(all.end(), c.begin(), c.end());
  return SparseMatrix::from_entries(static_cast<int>(target.size()), static_cast<int>(source.size()), std::move(all));
}

}  // namespace ogc
