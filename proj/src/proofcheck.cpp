#include "ogc/proofcheck.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "ogc/involution.hpp"

namespace ogc {

TreeOrder choose_tree_order(const CoreGraph& core) {
  if (!is_connected(core)) throw Error(ErrorKind::Disconnected, "core graph is disconnected");
  TreeOrder t;
  std::vector<char> seen(static_cast<std::size_t>(core.vertex_count), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int j = 0; j < core.edge_count(); ++j) {
      auto [a, b] = core.edges[j];
      int other = a == x ? b : b == x ? a : -1;
      if (other < 0 || seen[other]) continue;
      seen[other] = 1;
      t.edges.push_back(j);
      queue.push_back(other);
    }
  }
  return t;
}

bool is_prefix_tree_order(const CoreGraph& core, const TreeOrder& order) {
  if (static_cast<int>(order.edges.size()) != core.vertex_count - 1) return false;
  std::vector<char> in_tree(static_cast<std::size_t>(core.vertex_count), 0);
  for (std::size_t i = 0; i < order.edges.size(); ++i) {
    int j = order.edges[i];
    if (j < 0 || j >= core.edge_count()) return false;
    auto [a, b] = core.edges[j];
    if (a == b) return false;
    if (i == 0) {
      in_tree[a] = in_tree[b] = 1;
      continue;
    }
    // a prefix tree grows by one leaf at a time
    if (in_tree[a] == in_tree[b]) return false;
    in_tree[a] = in_tree[b] = 1;
  }
  return true;
}

SkeletonGraph to_skeleton(const CoreGraph& core, const PhiAssignment& a) {
  SkeletonGraph s;
  s.vertex_count = core.vertex_count;
  for (int j = 0; j < core.edge_count(); ++j) {
    auto [x, y] = core.edges[j];
    SkEdgeType t = a[j] == PhiEdge::Fwd   ? SkEdgeType::Ed
                   : a[j] == PhiEdge::Bwd ? SkEdgeType::dE
                   : a[j] == PhiEdge::Ess ? SkEdgeType::Ess
                                          : SkEdgeType::EE;
    s.edges.push_back({x, y, t});
  }
  return s;
}

namespace {

int count_type(const PhiAssignment& a, PhiEdge t) { return static_cast<int>(std::count(a.begin(), a.end(), t)); }

}  // namespace

std::vector<std::pair<PhiAssignment, int>> phi_edge_differential(const CoreGraph& core, const PhiAssignment& a, int d) {
  const Parity parity = parity_of(d);
  const int m = core.edge_count();
  const int ess = count_type(a, PhiEdge::Ess);
  std::vector<std::pair<PhiAssignment, int>> out;
  int rank = 0;
  for (int j = 0; j < m; ++j) {
    if (a[j] != PhiEdge::Ess) continue;
    int eps;
    if (parity == Parity::Even) {
      int after = 0;
      for (int i = j + 1; i < m; ++i)
        if (a[i] != PhiEdge::Ess) ++after;
      eps = sign_pow(after);
    } else {
      eps = sign_pow(ess - 1 - rank);
    }
    ++rank;
    if (core.edges[j].first == core.edges[j].second) continue;
    PhiAssignment fwd = a, bwd = a;
    fwd[j] = PhiEdge::Fwd;
    bwd[j] = PhiEdge::Bwd;
    if (!has_cycle(to_skeleton(core, fwd))) out.emplace_back(std::move(fwd), eps);
    if (!has_cycle(to_skeleton(core, bwd))) out.emplace_back(std::move(bwd), parity == Parity::Even ? -eps : eps);
  }
  return out;
}

std::pair<PhiAssignment, int> phi_iota(const CoreGraph& core, const PhiAssignment& a, int d) {
  PhiAssignment r = a;
  for (PhiEdge& t : r) {
    if (t == PhiEdge::Fwd) t = PhiEdge::Bwd;
    else if (t == PhiEdge::Bwd) t = PhiEdge::Fwd;
  }
  const int n = core.vertex_count;
  const int ed = count_type(a, PhiEdge::Fwd) + count_type(a, PhiEdge::Bwd);
  const int ee = count_type(a, PhiEdge::EE);
  int sign = parity_of(d) == Parity::Even ? -sign_pow(n + ed + ee) : -sign_pow(n + ee);
  return {std::move(r), sign};
}

int PhiComplex::find(const PhiAssignment& a) const {
  int s = count_type(a, PhiEdge::Ess);
  if (s >= static_cast<int>(index_.size())) return -1;
  auto it = index_[s].find(a);
  return it == index_[s].end() ? -1 : it->second;
}

std::size_t PhiComplex::total_dimension() const {
  std::size_t n = 0;
  for (const auto& v : by_ess) n += v.size();
  return n;
}

PhiComplex phi_basis(const CoreGraph& core, const TreeOrder& order, int stage, int d, std::uint64_t max_assignments) {
  if (stage < 0 || stage > static_cast<int>(order.edges.size()))
    throw Error(ErrorKind::WrongStage, "stage " + std::to_string(stage) + " outside [0, v-1]");
  const int m = core.edge_count();
  PhiComplex c;
  c.core = core;
  c.order = order;
  c.stage = stage;
  c.d = d;
  c.by_ess.assign(static_cast<std::size_t>(m + 1), {});
  std::vector<char> fixed_ee(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < stage; ++i) fixed_ee[order.edges[i]] = 1;
  std::vector<int> free_edges;
  for (int j = 0; j < m; ++j)
    if (!fixed_ee[j]) free_edges.push_back(j);
  std::uint64_t total = 1;
  for (int j : free_edges) {
    total *= core.edges[j].first == core.edges[j].second ? 1u : 3u;
    if (total > max_assignments) throw Error(ErrorKind::ResourceLimitExceeded, "too many edge assignments");
  }
  PhiAssignment a(static_cast<std::size_t>(m), PhiEdge::EE);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (int j : free_edges) {
      if (core.edges[j].first == core.edges[j].second) {
        a[j] = PhiEdge::Ess;
        continue;
      }
      a[j] = static_cast<PhiEdge>(rest % 3);
      rest /= 3;
    }
    if (has_cycle(to_skeleton(core, a))) continue;
    c.by_ess[count_type(a, PhiEdge::Ess)].push_back(a);
  }
  while (c.by_ess.size() > 1 && c.by_ess.back().empty()) c.by_ess.pop_back();
  c.index_.resize(c.by_ess.size());
  for (std::size_t s = 0; s < c.by_ess.size(); ++s) {
    std::sort(c.by_ess[s].begin(), c.by_ess[s].end());
    for (std::size_t k = 0; k < c.by_ess[s].size(); ++k) c.index_[s].emplace(c.by_ess[s][k], static_cast<int>(k));
  }
  return c;
}

SparseMatrix PhiComplex::edge_differential(int s) const {
  auto dim = [&](int g) { return (g < 0 || g > max_ess()) ? 0 : static_cast<int>(by_ess[g].size()); };
  std::vector<Entry> entries;
  if (s >= 0 && s <= max_ess()) {
    for (std::size_t j = 0; j < by_ess[s].size(); ++j) {
      for (auto& [t, coef] : phi_edge_differential(core, by_ess[s][j], d)) {
        int row = find(t);
        if (row < 0) throw Error(ErrorKind::MissingBasis, "edge differential leaves the stage complex");
        entries.push_back({row, static_cast<int>(j), coef});
      }
    }
  }
  return SparseMatrix::from_entries(dim(s - 1), dim(s), std::move(entries));
}

SparseMatrix PhiComplex::iota(int s) const {
  int n = (s < 0 || s > max_ess()) ? 0 : static_cast<int>(by_ess[s].size());
  std::vector<Entry> entries;
  for (int j = 0; j < n; ++j) {
    auto [t, sign] = phi_iota(core, by_ess[s][j], d);
    int row = find(t);
    if (row < 0) throw Error(ErrorKind::MissingBasis, "involution leaves the stage complex");
    entries.push_back({row, j, sign});
  }
  return SparseMatrix::from_entries(n, n, std::move(entries));
}

CochainComplex PhiComplex::as_cochain() const {
  CochainComplex c;
  for (int s = max_ess(); s >= 0; --s) c.dims.push_back(static_cast<long>(by_ess[s].size()));
  for (int s = max_ess(); s >= 1; --s) c.diff.push_back(edge_differential(s));
  return c;
}

std::optional<std::pair<PhiAssignment, int>> f_map(const PhiComplex& target, const PhiAssignment& a) {
  const int i = target.stage;
  if (i < 1) throw Error(ErrorKind::WrongStage, "f_i needs i >= 1");
  for (int k = 0; k < i - 1; ++k)
    if (a[target.order.edges[k]] != PhiEdge::EE) throw Error(ErrorKind::WrongStage, "class is not in stage i-1");
  const int ai = target.order.edges[i - 1];
  PhiAssignment t = a;
  int coef;
  switch (a[ai]) {
    case PhiEdge::Ess: return std::nullopt;
    case PhiEdge::Fwd: coef = 1; break;
    case PhiEdge::Bwd: coef = parity_of(target.d) == Parity::Even ? 1 : -1; break;
    default: throw Error(ErrorKind::WrongStage, "edge a_i is already EE");
  }
  t[ai] = PhiEdge::EE;
  if (has_cycle(to_skeleton(target.core, t))) return std::nullopt;
  return std::make_pair(std::move(t), coef);
}

SparseMatrix f_map_matrix(const PhiComplex& from, const PhiComplex& to, int s) {
  auto dim = [](const PhiComplex& c, int g) { return (g < 0 || g > c.max_ess()) ? 0 : static_cast<int>(c.by_ess[g].size()); };
  std::vector<Entry> entries;
  for (int j = 0; j < dim(from, s); ++j) {
    auto img = f_map(to, from.by_ess[s][j]);
    if (!img) continue;
    int row = to.find(img->first);
    if (row < 0) throw Error(ErrorKind::MissingBasis, "f_i leaves the next stage");
    entries.push_back({row, j, img->second});
  }
  return SparseMatrix::from_entries(dim(to, s), dim(from, s), std::move(entries));
}

namespace {

struct MinusView {
  std::vector<EigenSplit> splits;  // by grade
  CochainComplex all;
  CochainComplex minus;
};

// degree k <-> grade top - k, with a common top so maps line up
MinusView minus_view(const PhiComplex& c, int top) {
  MinusView mv;
  for (int s = 0; s <= top; ++s) mv.splits.push_back(split_involution(c.iota(s)));
  for (int s = top; s >= 0; --s) {
    mv.all.dims.push_back(static_cast<long>(mv.splits[s].dimension(Part::All)));
    mv.minus.dims.push_back(static_cast<long>(mv.splits[s].dimension(Part::Minus)));
  }
  for (int s = top; s >= 1; --s) {
    SparseMatrix dm = c.edge_differential(s);
    mv.all.diff.push_back(dm);
    mv.minus.diff.push_back(restrict_to_part(dm, mv.splits[s], mv.splits[s - 1], Part::Minus));
  }
  return mv;
}

}  // namespace

PhiReport verify_phi_chain(const CoreGraph& core, int d, const RankOptions& opts, std::uint64_t max_assignments) {
  PhiReport r;
  r.core = core;
  r.d = d;
  r.order = core.vertex_count >= 2 ? choose_tree_order(core) : TreeOrder{};
  const int stages = core.vertex_count;  // 0..v-1
  const int top = core.edge_count();

  std::vector<PhiComplex> cx;
  std::vector<MinusView> views;
  for (int i = 0; i < stages; ++i) {
    cx.push_back(phi_basis(core, r.order, i, d, max_assignments));
    views.push_back(minus_view(cx.back(), top));
  }
  for (int i = 0; i < stages; ++i) {
    const PhiComplex& c = cx[i];
    const MinusView& mv = views[i];
    PhiStageRecord rec;
    rec.stage = i;
    for (int s = 0; s <= top; ++s) {
      SparseMatrix io = c.iota(s);
      if (!(io * io == SparseMatrix::identity(io.rows()))) r.iota_involution = false;
      if (s >= 1) {
        SparseMatrix dm = c.edge_differential(s);
        if (!(dm * io == c.iota(s - 1) * dm)) r.iota_commutes = false;
        if (!block_is_closed(dm, mv.splits[s], mv.splits[s - 1], Part::Minus)) r.iota_commutes = false;
      }
    }
    std::vector<long> bm = betti_numbers(mv.minus, opts);
    std::vector<long> ba = betti_numbers(mv.all, opts);
    for (int s = 0; s <= top; ++s) {
      rec.dims.push_back(mv.all.dims[top - s]);
      rec.betti_minus.push_back(bm[top - s]);
      rec.betti_all.push_back(ba[top - s]);
    }
    r.stages.push_back(std::move(rec));

    if (i >= 1) {
      const PhiComplex& prev = cx[i - 1];
      std::vector<SparseMatrix> f_all, f_minus;
      for (int s = top; s >= 0; --s) {
        SparseMatrix f = f_map_matrix(prev, c, s);
        if (!(f * prev.iota(s) == c.iota(s) * f)) r.iota_commutes = false;
        f_all.push_back(f);
        f_minus.push_back(restrict_to_part(f, views[i - 1].splits[s], mv.splits[s], Part::Minus));
      }
      try {
        check_chain_map(f_all, views[i - 1].all, mv.all);
      } catch (const Error&) {
        r.f_chain_maps = false;
      }
      try {
        if (!verify_quasi_iso(f_minus, views[i - 1].minus, mv.minus, opts)) r.f_minus_quasi_iso = false;
      } catch (const Error&) {
        r.f_minus_quasi_iso = false;
      }
    }
  }
  const PhiStageRecord& last = r.stages.back();
  const MinusView& lv = views.back();
  long terminal_dim = 0, terminal_minus = 0;
  for (long x : last.dims) terminal_dim += x;
  for (long x : lv.minus.dims) terminal_minus += x;
  r.terminal_minus_zero = terminal_dim == 1 && terminal_minus == 0;
  for (long b : r.stages.front().betti_minus)
    if (b != 0) r.minus_acyclic = false;
  r.composite_consistent = r.stages.front().betti_minus == last.betti_minus;
  return r;
}

nlohmann::json PhiReport::to_json() const {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [a, b] : core.edges) edges.push_back({a + 1, b + 1});
  nlohmann::json order_json = nlohmann::json::array();
  for (int j : order.edges) order_json.push_back(j + 1);
  nlohmann::json st = nlohmann::json::array();
  for (const auto& s : stages) st.push_back({{"i", s.stage}, {"dims", s.dims}, {"betti_minus", s.betti_minus}, {"betti_all", s.betti_all}});
  return {{"core", {{"v", core.vertex_count}, {"edges", edges}}},
          {"d", d},
          {"tree_order", order_json},
          {"stages", st},
          {"verdicts",
           {{"iota_involution", iota_involution},
            {"iota_commutes", iota_commutes},
            {"f_chain_maps", f_chain_maps},
            {"f_minus_quasi_iso", f_minus_quasi_iso},
            {"terminal_minus_zero", terminal_minus_zero},
            {"minus_acyclic", minus_acyclic},
            {"composite_consistent", composite_consistent},
            {"passed", passed()}}}};
}

}  // namespace ogc
