#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ogc/error.hpp"
#include "ogc/graph.hpp"

namespace ogc {

enum class EdgeKind : std::uint8_t { Directed = 0, Undirected = 1 };

/// Edge of a coloured multigraph. Directed edges run a -> b; undirected
/// edges are stored with an arbitrary endpoint order and remember, through
/// Relabeling::flipped, when a relabeling reverses that order.
struct TypedEdge {
  Vertex a;
  Vertex b;
  std::uint8_t color;
  EdgeKind kind;
};

struct TypedGraph {
  int vertex_count = 0;
  std::vector<TypedEdge> edges;
};

// Colours used by the skeleton encodings.
inline constexpr std::uint8_t kColorEd = 0;
inline constexpr std::uint8_t kColorEss = 1;
inline constexpr std::uint8_t kColorEE = 2;

/// How a relabeling acts on the orientation line of a graph.
enum class Orientation : std::uint8_t {
  None,          // unsigned (core multigraphs)
  EdgeOrder,     // sign of the edge permutation
  VertexOrder,   // sign of the vertex permutation
  SkeletonEven,  // sign on expanded edges: Ed/EE are one edge, Ess is an ordered pair
  SkeletonOdd,   // sign on expanded vertices: skeleton vertices, then one middle vertex per Ess
};

constexpr Orientation full_orientation(Parity p) {
  return p == Parity::Even ? Orientation::EdgeOrder : Orientation::VertexOrder;
}
constexpr Orientation skeleton_orientation(Parity p) {
  return p == Parity::Even ? Orientation::SkeletonEven : Orientation::SkeletonOdd;
}

struct Relabeling {
  std::vector<int> vertex;    // input vertex -> new vertex
  std::vector<int> edge;      // input edge -> new position
  std::vector<bool> flipped;  // undirected input edge stored reversed in the new frame
};

/// Sign by which the relabeling acts on the orientation. A homomorphism from
/// the relabeling group to {+1, -1} for every Orientation.
int relabeling_sign(const TypedGraph& source, const Relabeling& r, Orientation o);

struct CanonicalForm {
  TypedGraph graph;  // canonical representative, edges sorted
  Relabeling map;    // input -> canonical
  int sign = 1;      // relabeling_sign(input, map)
  bool odd_automorphism = false;
  std::uint64_t automorphism_count = 1;  // vertex maps x parallel-edge permutations x loop flips
  std::string key;
};

/// Canonical form via colour refinement and exhaustive individualisation.
/// The representative is the lexicographically least sorted edge list over
/// all leaves of the search tree, which makes it labelling independent.
CanonicalForm canonical_form(const TypedGraph& g, Orientation o);

std::string encode_key(const TypedGraph& g);

TypedGraph to_typed(const LabeledGraph& g);

// ---------------------------------------------------------------------------
// Coinvariant classes of oriented graphs.

enum class ClassStatus : std::uint8_t { Nonzero, ZeroByOddAutomorphism };

struct GraphClass {
  LabeledGraph canonical;
  Parity parity = Parity::Even;
  ClassStatus status = ClassStatus::Nonzero;
};

struct SignedClass {
  GraphClass cls;
  int coefficient = 1;
};

struct FullCanon {
  LabeledGraph graph;
  int sign = 1;
  bool zero = false;
  std::uint64_t automorphism_count = 1;
  std::string key;
};

/// Canonicalization without admissibility checks; used on intermediate graphs.
FullCanon canonical_form(const LabeledGraph& g, Parity parity);

/// Empty optional means the class vanishes in coinvariants.
std::optional<SignedClass> canonicalize(const LabeledGraph& g, Parity parity);

struct AutomorphismReport {
  std::uint64_t group_size = 1;
  bool has_odd_automorphism = false;
};

AutomorphismReport automorphism_report(const LabeledGraph& g, Parity parity);

std::string graph_key(const LabeledGraph& g);

int permutation_sign(const std::vector<int>& perm);

}  // namespace ogc
