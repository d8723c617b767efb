#ifndef WONDERFUL_DIVERGENCE_HPP
#define WONDERFUL_DIVERGENCE_HPP

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "wonderful/arrangements.hpp"
#include "wonderful/graph.hpp"

namespace wonderful {

enum class Verdict { Convergent, LogDivergent, WorseThanLog };

std::string_view verdict_name(Verdict v);

struct Rational {
  long long num = 0;
  long long den = 1;
  bool is_integer() const { return den == 1; }
};

struct DivergenceReport {
  int d = 0;
  Verdict verdict = Verdict::Convergent;
  bool primitive = false;
  /// Connected induced subgraphs with at least one edge and d*b1 = 2|E|,
  /// the whole graph included when it qualifies. Canonical order.
  std::vector<VertexSet> divergent_subgraphs;
  /// The subset of the above that are building-set elements.
  std::vector<VertexSet> divergent_building_elements;
  /// Some connected induced subgraph has d*b1 > 2|E|.
  bool has_worse_subdivergence = false;
  long long superficial_degree = 0;  // d*b1 - 2|E|
  Rational propagator_exponent;      // (d - 2) / 2, reduced
};

/// Power counting for a connected graph. The all-subgraph condition is
/// checked on connected induced subgraphs, which dominate every other
/// subgraph on the same vertex set when d > 2 and make it vacuous otherwise.
/// A graph with d*b1 = 2|E| but a worse subgraph is WorseThanLog.
/// Throws DisconnectedGraph, NoEdges.
DivergenceReport classify_divergence(const Graph& g, int d);

struct PoleEntry {
  VertexSet element;
  long long order = 0;  // (d-2)|E| - d(|V|-1) + 1
  bool is_pole() const { return order >= 1; }
  /// Vanishing order along the divisor when regular (1 - order).
  long long zero_order() const { return is_pole() ? 0 : 1 - order; }
};

struct PoleProfile {
  int d = 0;
  std::vector<PoleEntry> entries;  // building-set order
};

PoleProfile pole_orders(const Graph& g, int d);

struct FiltrationEntry {
  VertexSet element;
  long long pole_order = 0;
  std::pair<long long, long long> index;  // (d|V| - 1 - k, d|V| - 1)
};

struct ResidueProfile {
  int d = 0;
  std::vector<VertexSet> log_elements;  // building-set elements with pole order exactly 1
  bool log_elements_form_nest = false;
  std::optional<Nest> residue_locus;    // set when log_elements form a nest
  std::optional<long long> form_degree; // d|V| - |log_elements| when a nest
  std::vector<FiltrationEntry> filtrations;  // elements with pole order >= 2
};

ResidueProfile residue_profile(const Graph& g, int d);

}  // namespace wonderful

#endif  // WONDERFUL_DIVERGENCE_HPP
