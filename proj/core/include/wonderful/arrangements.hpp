#ifndef WONDERFUL_ARRANGEMENTS_HPP
#define WONDERFUL_ARRANGEMENTS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wonderful/graph.hpp"

namespace wonderful {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 22;

struct EnumerationOptions {
  /// Upper bound on candidate subsets visited by exponential enumerations.
  std::uint64_t budget = kDefaultBudget;
};

/// The induced biconnected subgraphs with at least two vertices, i.e. the
/// diagonals that get blown up. Elements are in canonical order, so a
/// superset always precedes its subsets.
class BuildingSet {
 public:
  BuildingSet(Graph graph, std::vector<VertexSet> elements);

  const Graph& graph() const { return graph_; }
  std::span<const VertexSet> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const VertexSet& operator[](std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> index_of(VertexSet s) const;

 private:
  Graph graph_;
  std::vector<VertexSet> elements_;
};

/// Throws NoEdges on an edgeless graph.
BuildingSet building_set(const Graph& g);

/// Rooted forest over the members of a nest: each member's parent is the
/// smallest member strictly containing it.
struct NestForest {
  std::vector<std::optional<std::size_t>> parent;  // positions within the nest

  std::vector<std::size_t> roots() const;
  std::vector<std::size_t> children(std::size_t position) const;
};

class Nest {
 public:
  Nest(std::vector<std::size_t> indices, std::vector<VertexSet> elements, NestForest forest)
      : indices_(std::move(indices)), elements_(std::move(elements)), forest_(std::move(forest)) {}

  /// Positions in the building set, ascending.
  std::span<const std::size_t> indices() const { return indices_; }
  /// Members in the same order as indices().
  std::span<const VertexSet> elements() const { return elements_; }
  const NestForest& forest() const { return forest_; }
  std::size_t size() const { return elements_.size(); }
  /// True when no member contains another, i.e. the nest is the block set of
  /// a single polydiagonal support.
  bool is_antichain() const;

  bool operator==(const Nest& o) const { return indices_ == o.indices_; }

 private:
  std::vector<std::size_t> indices_;
  std::vector<VertexSet> elements_;
  NestForest forest_;
};

/// Nested, disjoint, or meeting in a single vertex.
bool pairwise_compatible(VertexSet a, VertexSet b);

struct NestTest {
  bool is_nest = false;
  std::optional<Nest> nest;  // with its forest certificate, when is_nest
};

/// Flag-realizability test: pairwise compatibility plus, for every antichain
/// of two or more members with connected union, the union is induced and its
/// blocks are exactly that antichain.
/// Throws ForeignElement for a set not in `b`, InvalidArgument on empty input.
NestTest is_nest(const BuildingSet& b, std::span<const VertexSet> elements);

/// Whether the exceptional divisors of `elements` have a common point.
bool divisors_intersect(const BuildingSet& b, std::span<const VertexSet> elements);

/// The pairwise-only criterion (nested, disjoint, or one shared vertex),
/// kept as a diagnostic; it over-accepts.
bool satisfies_pairwise_criterion(const BuildingSet& b, std::span<const VertexSet> elements);

struct NestEnumeration {
  std::vector<Nest> nests;  // ordered by size, then by index list
  /// Families accepted by the pairwise-only criterion (diagnostic).
  std::uint64_t pairwise_family_count = 0;
};

/// All nonempty nests. Throws ExplosionGuard when more than `options.budget`
/// pairwise-compatible candidates would be visited.
NestEnumeration enumerate_nests(const BuildingSet& b, EnumerationOptions options = {});

/// Vertex sets of the connected components of the union of `members`
/// (members meeting in a vertex are glued).
std::vector<VertexSet> union_components(std::span<const VertexSet> members);

struct ElementQuotient {
  VertexSet element;
  Quotient quotient;  // element / (maximal members strictly inside it)
  int r = 0;          // codimension jump r_{element, nest}
};

struct NestQuotientData {
  Quotient whole;  // graph / (union of members)
  std::vector<ElementQuotient> per_element;  // same order as the nest
};

/// Quotients and codimension jumps for dimension `d`. r is computed from the
/// diagonal dimensions and cross-checked against d * (|V(quotient)| - 1);
/// a mismatch throws InconsistentR.
NestQuotientData nest_quotients(const BuildingSet& b, const Nest& nest, int d);

}  // namespace wonderful

#endif  // WONDERFUL_ARRANGEMENTS_HPP
