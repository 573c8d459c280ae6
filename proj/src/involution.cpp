#include "ogc/involution.hpp"

namespace ogc {

std::optional<Term> iota(const LabeledGraph& g, int d) {
  const int v = g.vertex_count(), e = g.edge_count();
  int sign = parity_of(d) == Parity::Even ? sign_pow(e + v + 1) : sign_pow(v + 1);
  return to_term(reverse_all(g), parity_of(d), sign);
}

bool minus_relation_check(const LabeledGraph& g, int d) {
  const Parity parity = parity_of(d);
  auto self = to_term(g, parity);
  auto rev = to_term(reverse_all(g), parity);
  if (!self || !rev || self->key != rev->key) return false;
  const int v = g.vertex_count(), e = g.edge_count();
  int expected = parity == Parity::Even ? sign_pow(e + v) : sign_pow(v);
  return rev->coefficient == expected * self->coefficient;
}

SparseMatrix iota_matrix(const FullBasis& basis) {
  std::vector<Entry> entries;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto t = iota(basis.classes[j], basis.d);
    int row = t ? basis.find(t->key) : -1;
    if (row < 0) throw Error(ErrorKind::MissingBasis, "reversed class not in slice");
    entries.push_back({row, static_cast<int>(j), t->coefficient});
  }
  int n = static_cast<int>(basis.size());
  return SparseMatrix::from_entries(n, n, std::move(entries));
}

SparseMatrix iota_matrix(const SkeletonBasis& basis) {
  std::vector<Entry> entries;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto t = iota_skeleton(basis.classes[j], basis.d);
    int row = t ? basis.find(canonical_form(t->first, parity_of(basis.d)).key) : -1;
    if (row < 0) throw Error(ErrorKind::MissingBasis, "reversed skeleton class not in slice");
    entries.push_back({row, static_cast<int>(j), t->second});
  }
  int n = static_cast<int>(basis.size());
  return SparseMatrix::from_entries(n, n, std::move(entries));
}

EigenSplit split_involution(const SparseMatrix& iota) {
  const int n = iota.cols();
  std::vector<int> image(static_cast<std::size_t>(n), -1), sign(static_cast<std::size_t>(n), 0);
  for (const Entry& x : iota.entries()) {
    if (image[x.col] >= 0 || (x.value != 1 && x.value != -1))
      throw Error(ErrorKind::NotAChainMap, "involution is not a signed permutation");
    image[x.col] = x.row;
    sign[x.col] = static_cast<int>(x.value);
  }
  EigenSplit s;
  s.source_size = n;
  std::vector<EigenSplit::Vector> plus_pairs, minus_pairs;
  for (int j = 0; j < n; ++j) {
    int k = image[j];
    if (k < 0) throw Error(ErrorKind::NotAChainMap, "involution kills a basis class");
    if (k == j) {
      (sign[j] > 0 ? s.plus : s.minus).push_back({j, {{j, 1}}});
    } else if (j < k) {
      plus_pairs.push_back({j, {{j, 1}, {k, sign[j]}}});
      minus_pairs.push_back({j, {{j, 1}, {k, -sign[j]}}});
    }
  }
  s.plus.insert(s.plus.end(), plus_pairs.begin(), plus_pairs.end());
  s.minus.insert(s.minus.end(), minus_pairs.begin(), minus_pairs.end());
  return s;
}

EigenSplit split_basis(const FullBasis& basis) { return split_involution(iota_matrix(basis)); }
EigenSplit split_basis(const SkeletonBasis& basis) { return split_involution(iota_matrix(basis)); }

SparseMatrix EigenSplit::basis(Part p) const {
  if (p == Part::All) return SparseMatrix::identity(source_size);
  const auto& vs = part(p);
  std::vector<Entry> entries;
  for (std::size_t c = 0; c < vs.size(); ++c)
    for (auto [i, coef] : vs[c].terms) entries.push_back({i, static_cast<int>(c), coef});
  return SparseMatrix::from_entries(source_size, static_cast<int>(vs.size()), std::move(entries));
}

std::vector<int> EigenSplit::representatives(Part p) const {
  std::vector<int> out;
  if (p == Part::All) {
    for (int i = 0; i < source_size; ++i) out.push_back(i);
    return out;
  }
  for (const auto& v : part(p)) out.push_back(v.representative);
  return out;
}

std::size_t EigenSplit::dimension(Part p) const {
  return p == Part::All ? static_cast<std::size_t>(source_size) : part(p).size();
}

SparseMatrix restrict_to_part(const SparseMatrix& m, const EigenSplit& source, const EigenSplit& target, Part p) {
  if (p == Part::All) return m;
  return (m * source.basis(p)).select_rows(target.representatives(p));
}

bool block_is_closed(const SparseMatrix& m, const EigenSplit& source, const EigenSplit& target, Part p) {
  if (p == Part::All) return true;
  return target.basis(p) * restrict_to_part(m, source, target, p) == m * source.basis(p);
}

nlohmann::json to_json(const EigenSplit& s) {
  auto side = [](const std::vector<EigenSplit::Vector>& vs) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& v : vs) {
      nlohmann::json terms = nlohmann::json::array();
      for (auto [i, c] : v.terms) terms.push_back({i + 1, c});
      a.push_back(std::move(terms));
    }
    return a;
  };
  return {{"size", s.source_size}, {"plus", side(s.plus)}, {"minus", side(s.minus)}};
}

}  // namespace ogc
