#ifndef WONDERFUL_GRAPH_HPP
#define WONDERFUL_GRAPH_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace wonderful {

inline constexpr std::size_t kDefaultVertexCap = 24;
inline constexpr std::size_t kMaxVertexCap = 64;

/// Subset of a graph's vertices, keyed to the graph's canonical vertex order
/// (bit i <=> the i-th smallest label).
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(std::size_t i) {
    return VertexSet(std::uint64_t{1} << i);
  }
  static constexpr VertexSet first_n(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr bool subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(VertexSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  constexpr std::size_t lowest() const {
    return static_cast<std::size_t>(std::countr_zero(bits_));
  }

  constexpr void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const = default;
  constexpr auto operator<=>(const VertexSet&) const = default;

  /// Indices of the members, ascending.
  std::vector<std::size_t> indices() const;

  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      f(static_cast<std::size_t>(std::countr_zero(b)));
    }
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical subgraph order: larger vertex sets first, ties broken by the
/// bitset value ascending. Containment implies precedence.
constexpr bool canonical_less(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a.bits() < b.bits();
}

struct Edge {
  std::uint32_t u = 0;  // index, u < v
  std::uint32_t v = 0;
  constexpr bool operator==(const Edge&) const = default;
  constexpr auto operator<=>(const Edge&) const = default;
};

struct GraphLimits {
  std::size_t max_vertices = kDefaultVertexCap;
};

/// Finite simple graph with integer vertex labels. Vertices are stored
/// ascending by label; edges are index pairs sorted lexicographically.
/// Instances only come out of validate_graph() and the quotient/induced
/// helpers, so every Graph satisfies the simple-graph invariants.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const int> labels() const { return labels_; }
  int label(std::size_t index) const { return labels_[index]; }
  std::optional<std::size_t> index_of(int label) const;
  std::span<const Edge> edges() const { return edges_; }

  VertexSet all() const { return VertexSet::first_n(vertex_count()); }
  VertexSet neighbors(std::size_t i) const { return adjacency_[i]; }
  bool adjacent(std::size_t i, std::size_t j) const {
    return adjacency_[i].contains(j);
  }

  /// Number of edges with both endpoints in `s`.
  std::size_t edges_within(VertexSet s) const;
  std::vector<std::size_t> edge_indices_within(VertexSet s) const;
  /// Union of neighbourhoods of `s`, excluding `s` itself.
  VertexSet boundary(VertexSet s) const;

  /// Connectivity of the subgraph induced on `s`. The empty set is not connected.
  bool is_connected(VertexSet s) const;
  /// Vertex sets of the connected components of the subgraph induced on `s`.
  std::vector<VertexSet> components(VertexSet s) const;

  VertexSet to_set(std::span<const int> labels) const;
  std::vector<int> to_labels(VertexSet s) const;

  bool operator==(const Graph& other) const {
    return labels_ == other.labels_ && edges_ == other.edges_;
  }

 private:
  friend Graph make_graph_unchecked(std::vector<int>, std::vector<Edge>);

  std::vector<int> labels_;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adjacency_;
};

/// Builds a graph from already-canonical data (sorted distinct labels,
/// sorted distinct in-range index edges, u < v). Internal use.
Graph make_graph_unchecked(std::vector<int> labels, std::vector<Edge> edges);

/// Validates raw input and returns the canonical graph.
/// Throws LoopEdge, DuplicateEdge, UnknownVertex, or SizeCap.
Graph validate_graph(std::vector<int> vertices,
                     const std::vector<std::pair<int, int>>& edges,
                     GraphLimits limits = {});

/// The subgraph induced on `s`, as a standalone graph keeping the labels.
Graph induced_graph(const Graph& g, VertexSet s);

/// Non-owning view of a subgraph of `parent`. The parent must outlive it.
/// Induced subgraphs store only their vertex set; edges are recomputed.
class SubgraphRef {
 public:
  static SubgraphRef induced(const Graph& parent, VertexSet vertices);
  /// Throws UnknownVertex when an edge leaves `vertices`, InvalidArgument on
  /// an out-of-range edge index.
  static SubgraphRef with_edges(const Graph& parent, VertexSet vertices,
                                std::vector<std::size_t> edge_indices);
  static SubgraphRef whole(const Graph& parent) {
    return induced(parent, parent.all());
  }

  const Graph& parent() const { return *parent_; }
  VertexSet vertices() const { return vertices_; }
  bool is_induced() const { return induced_; }
  std::vector<std::size_t> edge_indices() const;
  std::size_t edge_count() const;

 private:
  SubgraphRef(const Graph* parent, VertexSet vertices, bool induced,
              std::vector<std::size_t> edges)
      : parent_(parent), vertices_(vertices), induced_(induced), edges_(std::move(edges)) {}

  const Graph* parent_;
  VertexSet vertices_;
  bool induced_;
  std::vector<std::size_t> edges_;  // empty when induced_
};

struct ComponentStats {
  std::size_t b0 = 0;  // connected components, isolated vertices included
  std::size_t b1 = 0;  // loop number |E| - |V| + b0
};

ComponentStats component_stats(const Graph& g);
ComponentStats component_stats(const SubgraphRef& s);

struct BlockDecomposition {
  std::vector<SubgraphRef> blocks;  // canonical order of vertex sets
  VertexSet cut_vertices;
};

/// Biconnected components by the articulation-point DFS. A bridge is a
/// block of its own. Throws NoEdges on an edgeless input.
BlockDecomposition block_decomposition(const SubgraphRef& s);
BlockDecomposition block_decomposition(const Graph& g);

/// Single edges count as biconnected; graphs without edges do not.
bool is_biconnected(const SubgraphRef& s);
/// Vertex sets of the blocks of the subgraph of `g` induced on `s`.
std::vector<VertexSet> induced_blocks(const Graph& g, VertexSet s);

/// Smallest induced subgraph containing `s`.
SubgraphRef induced_closure(const SubgraphRef& s);

struct Quotient {
  Graph graph;
  /// Old vertex index -> new vertex index.
  std::vector<std::size_t> vertex_map;
};

/// Contracts every part to a single vertex (labelled by the part's smallest
/// label), merging parallel edges. Untouched vertices keep their labels.
/// Throws DisconnectedPart, OverlappingParts, or LoopCreated.
Quotient quotient_contract(const Graph& g, std::span<const VertexSet> parts);

/// All connected induced subgraphs, optionally only those with `k` vertices,
/// in canonical order.
std::vector<VertexSet> enumerate_connected_induced(
    const Graph& g, std::optional<std::size_t> k = std::nullopt);

/// A nonempty family of pairwise vertex-disjoint connected induced subgraphs,
/// each with at least one edge; parts in canonical order.
using PolydiagonalSupport = std::vector<VertexSet>;

/// Every polydiagonal support, ordered by covered vertex count descending,
/// then lexicographically by parts.
std::vector<PolydiagonalSupport> enumerate_polydiagonal_supports(const Graph& g);

}  // namespace wonderful

#endif  // WONDERFUL_GRAPH_HPP
