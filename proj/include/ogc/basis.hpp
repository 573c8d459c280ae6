#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "ogc/canon.hpp"
#include "ogc/cores.hpp"
#include "ogc/graph.hpp"

namespace ogc {

enum class Flavor : std::uint8_t { Full, Skeleton1, CorePhi };
enum class Part : std::uint8_t { All, Plus, Minus };

const char* to_string(Flavor f);
const char* to_string(Part p);
Flavor parse_flavor(const std::string& s);
Part parse_part(const std::string& s);

inline constexpr int kFormatVersion = 1;

struct EnumerationLimits {
  std::uint64_t max_candidates = 20'000'000;
};

/// Ordered list of classes with a key index. `Item` is a canonical
/// representative; `key_of` must return its canonical key.
template <class Item>
class IndexedBasis {
 public:
  std::vector<Item> classes;

  std::size_t size() const { return classes.size(); }
  int find(const std::string& key) const {
    auto it = index_.find(key);
    return it == index_.end() ? -1 : it->second;
  }
  template <class KeyOf>
  void reindex(KeyOf key_of) {
    index_.clear();
    for (std::size_t i = 0; i < classes.size(); ++i) index_.emplace(key_of(classes[i]), static_cast<int>(i));
  }

 private:
  std::unordered_map<std::string, int> index_;
};

/// Basis of the (v, e) slice of the full complex for degree parameter d:
/// canonical representatives of the nonzero coinvariant classes, sorted by key.
struct FullBasis : IndexedBasis<LabeledGraph> {
  int d = 0;
  int v = 0;
  int e = 0;

  void reindex() {
    IndexedBasis::reindex([](const LabeledGraph& g) { return graph_key(g); });
  }
};

FullBasis enumerate_basis(int d, int v, int e, CoreCatalog& cores, const EnumerationLimits& limits = {});

/// Independent oracle: every labelled edge multiset, admissibility filter,
/// minimum over all vertex relabelings, direct automorphism sign test.
/// Representatives are the global minima, which differ from the fast
/// canonical form; compare via brute_canonical.
FullBasis brute_force_basis(int d, int v, int e, const EnumerationLimits& limits = {});

LabeledGraph brute_canonical(const LabeledGraph& g);
bool brute_is_zero(const LabeledGraph& g, Parity parity);

}  // namespace ogc
