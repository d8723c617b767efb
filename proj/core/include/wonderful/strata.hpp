#ifndef WONDERFUL_STRATA_HPP
#define WONDERFUL_STRATA_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wonderful/arrangements.hpp"
#include "wonderful/polynomial.hpp"

namespace wonderful {

struct FiberDescriptor {
  VertexSet element;
  Graph quotient_graph;          // element / (members strictly inside it)
  long long screen_space_dim = 0;  // d|V(quotient)| - d - 1
  KPolynomial fiber_class;       // c_class(quotient_graph, d)
};

/// One open stratum: a fibre bundle over the configuration space of the base
/// quotient with one screen-space fibre per nest member.
struct StratumDescriptor {
  std::optional<Nest> nest;  // empty for the open configuration space
  Graph base_graph;
  long long base_dim = 0;
  KPolynomial base_class;    // conf class of base_graph
  std::vector<FiberDescriptor> fibers;
  long long total_dim = 0;   // d|V| - |nest|
};

struct StratPoset {
  /// (smaller, larger): the larger nest adds exactly one member. Node 0 is
  /// the open stratum, node i > 0 is nest i - 1.
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  /// Unordered pairs (i <= j) whose closures meet, i.e. whose union is a nest.
  std::vector<std::pair<std::size_t, std::size_t>> incidence;
};

struct Stratification {
  int d = 0;
  std::vector<StratumDescriptor> strata;  // open stratum first, then nests
  StratPoset poset;
};

Stratification stratification(const Graph& g, int d, EnumerationOptions options = {});

/// Sum over strata of base class times fibre classes.
KPolynomial strata_class_sum(const Stratification& s);

struct DimensionAuditEntry {
  std::string stratum;
  long long base_plus_fibers = 0;
  long long expected = 0;
  bool passed() const { return base_plus_fibers == expected; }
};

struct DimensionAudit {
  std::vector<DimensionAuditEntry> entries;
  bool all_passed() const;
};

DimensionAudit dimension_audit(const Graph& g, int d, EnumerationOptions options = {});

/// Graphviz digraph of the covering relation, nodes labelled "nest: dim".
std::string to_dot(const Graph& g, const Stratification& s);

/// Text label of a stratum: "open" or the nest in [[..],..] notation.
std::string stratum_label(const Graph& g, const StratumDescriptor& s);

}  // namespace wonderful

#endif  // WONDERFUL_STRATA_HPP
