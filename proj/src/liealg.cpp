#include "ogc/liealg.hpp"

#include <set>
#include <stdexcept>
#include <sstream>

namespace ogc {

QChain QChain::of(const LabeledGraph& g, int d, const mpq_class& c) {
  QChain out;
  if (auto t = to_term(g, parity_of(d))) out.add(t->key, t->graph, c * static_cast<long>(t->coefficient));
  return out;
}

void QChain::add(const std::string& key, const LabeledGraph& canonical, const mpq_class& c) {
  if (c == 0) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, std::make_pair(canonical, c));
    return;
  }
  it->second.second += c;
  if (it->second.second == 0) terms_.erase(it);
}

void QChain::add(const QChain& other, const mpq_class& c) {
  for (const auto& [k, t] : other.terms_) add(k, t.first, c * t.second);
}

mpq_class QChain::coefficient(const std::string& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? mpq_class(0) : it->second.second;
}

bool QChain::operator==(const QChain& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (const auto& [k, t] : terms_)
    if (other.coefficient(k) != t.second) return false;
  return true;
}

std::string QChain::to_string() const {
  std::ostringstream os;
  for (const auto& [k, t] : terms_) os << t.second.get_str() << " * [" << ogc::to_text(t.first) << "] ";
  return os.str();
}

long long lie_degree(const LabeledGraph& g, int d) { return grade(d, g.vertex_count(), g.edge_count()).degree_ogc; }

namespace {

bool odd(long long x) { return x % 2 != 0; }

}  // namespace

QChain insert(const LabeledGraph& g1, const LabeledGraph& g2, int d) {
  const Parity parity = parity_of(d);
  const int v1 = g1.vertex_count(), v2 = g2.vertex_count();
  QChain out;
  for (int x = 0; x < v1; ++x) {
    std::vector<int> at_x;
    for (int i = 0; i < g1.edge_count(); ++i)
      if (g1.edge(i).tail == x || g1.edge(i).head == x) at_x.push_back(i);
    // x moves to the end of the vertex order, then is replaced by g2's vertices
    const int sign = parity == Parity::Odd ? sign_pow(v1 - 1 - x) : 1;
    auto base = [&](int y) { return y > x ? y - 1 : y; };
    std::vector<int> choice(at_x.size(), 0);
    while (true) {
      std::vector<Edge> edges;
      for (int i = 0; i < g1.edge_count(); ++i) {
        const Edge& e = g1.edge(i);
        int t = e.tail, h = e.head;
        auto pos = std::find(at_x.begin(), at_x.end(), i);
        int target = pos == at_x.end() ? -1 : (v1 - 1) + choice[static_cast<std::size_t>(pos - at_x.begin())];
        t = t == x ? target : base(t);
        h = h == x ? target : base(h);
        edges.push_back({static_cast<Vertex>(t), static_cast<Vertex>(h)});
      }
      for (const Edge& e : g2.edges())
        edges.push_back({static_cast<Vertex>(v1 - 1 + e.tail), static_cast<Vertex>(v1 - 1 + e.head)});
      LabeledGraph g = GraphBuilder::make(v1 - 1 + v2, std::move(edges));
      if (!check_admissible(g)) {
        if (auto t = to_term(g, parity, sign)) out.add(t->key, t->graph, static_cast<long>(t->coefficient));
      }
      std::size_t k = 0;
      while (k < choice.size() && ++choice[k] == v2) choice[k++] = 0;
      if (k == choice.size()) break;
    }
  }
  return out;
}

const QChain& InsertMemo::get(const std::string& k1, const LabeledGraph& g1, const std::string& k2,
                              const LabeledGraph& g2) {
  auto key = std::make_pair(k1, k2);
  auto it = memo_.find(key);
  if (it == memo_.end()) it = memo_.emplace(std::move(key), insert(g1, g2, d_)).first;
  return it->second;
}

namespace {

QChain insert_terms(const std::string& k1, const LabeledGraph& g1, const std::string& k2, const LabeledGraph& g2,
                    int d, InsertMemo* memo) {
  if (memo) {
    if (memo->d() != d) throw std::invalid_argument("insert memo built for another d");
    return memo->get(k1, g1, k2, g2);
  }
  return insert(g1, g2, d);
}

}  // namespace

QChain insert(const QChain& a, const QChain& b, int d, InsertMemo* memo) {
  QChain out;
  for (const auto& [ka, ta] : a.terms())
    for (const auto& [kb, tb] : b.terms())
      out.add(insert_terms(ka, ta.first, kb, tb.first, d, memo), ta.second * tb.second);
  return out;
}

QChain bracket(const QChain& a, const QChain& b, int d, InsertMemo* memo) {
  QChain out;
  for (const auto& [ka, ta] : a.terms()) {
    for (const auto& [kb, tb] : b.terms()) {
      const mpq_class c = ta.second * tb.second;
      out.add(insert_terms(ka, ta.first, kb, tb.first, d, memo), c);
      int s = odd(lie_degree(ta.first, d) * lie_degree(tb.first, d)) ? 1 : -1;
      out.add(insert_terms(kb, tb.first, ka, ta.first, d, memo), c * s);
    }
  }
  return out;
}

QChain vertex_splitting(const LabeledGraph& g, int d) {
  const Parity parity = parity_of(d);
  FullCanon self = canonical_form(g, parity);
  QChain out;
  if (self.zero) return out;
  // every graph contracting onto g is a splitting of one of its vertices
  const int v = g.vertex_count(), e = g.edge_count();
  std::set<std::string> seen;
  for (int x = 0; x < v; ++x) {
    std::vector<int> at_x;
    for (int i = 0; i < e; ++i)
      if (g.edge(i).tail == x || g.edge(i).head == x) at_x.push_back(i);
    for (std::uint32_t mask = 0; mask < (1u << at_x.size()); ++mask) {
      for (int dir = 0; dir < 2; ++dir) {
        std::vector<Edge> edges;
        for (int i = 0; i < e; ++i) {
          Edge ed = g.edge(i);
          auto pos = std::find(at_x.begin(), at_x.end(), i);
          if (pos != at_x.end() && ((mask >> (pos - at_x.begin())) & 1u)) {
            if (ed.tail == x) ed.tail = static_cast<Vertex>(v);
            if (ed.head == x) ed.head = static_cast<Vertex>(v);
          }
          edges.push_back(ed);
        }
        edges.push_back(dir == 0 ? Edge{static_cast<Vertex>(x), static_cast<Vertex>(v)}
                                 : Edge{static_cast<Vertex>(v), static_cast<Vertex>(x)});
        LabeledGraph split = GraphBuilder::make(v + 1, std::move(edges));
        if (check_admissible(split)) continue;
        FullCanon c = canonical_form(split, parity);
        if (c.zero || !seen.insert(c.key).second) continue;
        Chain boundary = differential(c.graph, d);
        std::int64_t k = boundary.coefficient(self.key);
        if (k == 0) continue;
        // coefficient of the canonical class of g, then transported to g itself
        mpq_class coef(static_cast<long>(k) * static_cast<long>(self.sign));
        coef *= mpq_class(static_cast<unsigned long>(self.automorphism_count), static_cast<unsigned long>(c.automorphism_count));
        coef.canonicalize();
        out.add(c.key, c.graph, coef);
      }
    }
  }
  return out;
}

QChain vertex_splitting(const QChain& c, int d) {
  QChain out;
  for (const auto& [k, t] : c.terms()) out.add(vertex_splitting(t.first, d), t.second);
  return out;
}

QChain iota(const QChain& c, int d) {
  QChain out;
  for (const auto& [k, t] : c.terms()) {
    const LabeledGraph& g = t.first;
    int sign = parity_of(d) == Parity::Even ? sign_pow(g.edge_count() + g.vertex_count() + 1) : sign_pow(g.vertex_count() + 1);
    out.add(QChain::of(reverse_all(g), d, t.second * sign));
  }
  return out;
}

ExtElement ext_bracket(const ExtElement& a, const ExtElement& b, int d) {
  ExtElement out;
  out.body = bracket(a.body, b.body, d);
  auto unit_with = [&](const QChain& body) {
    QChain r;
    for (const auto& [k, t] : body.terms())
      r.add(k, t.first, t.second * 2 * (t.first.vertex_count() - t.first.edge_count()));
    return r;
  };
  // [1, G] from the unit on the left; [G, 1] by graded antisymmetry
  out.body.add(unit_with(b.body), a.scalar);
  QChain right;
  for (const auto& [k, t] : a.body.terms()) {
    int s = odd(lie_degree(t.first, d) * unit_degree(d)) ? 1 : -1;
    right.add(k, t.first, t.second * 2 * (t.first.vertex_count() - t.first.edge_count()) * s);
  }
  out.body.add(right, b.scalar);
  return out;
}

}  // namespace ogc
