#include "wonderful/divergence.hpp"

#include <numeric>

#include "wonderful/error.hpp"

namespace wonderful {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Convergent: return "convergent";
    case Verdict::LogDivergent: return "log_divergent";
    case Verdict::WorseThanLog: return "worse_than_log";
  }
  return "unknown";
}

namespace {

void check_input(const Graph& g, int d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be at least 1");
  if (g.edge_count() == 0) throw Error(ErrorCode::NoEdges, "power counting needs at least one edge");
  if (!g.is_connected(g.all())) {
    throw Error(ErrorCode::DisconnectedGraph, "power counting is defined for connected graphs");
  }
}

long long pole_order(const Graph& g, VertexSet s, int d) {
  const long long e = static_cast<long long>(g.edges_within(s));
  const long long v = static_cast<long long>(s.size());
  return (d - 2) * e - d * (v - 1) + 1;
}

}  // namespace

DivergenceReport classify_divergence(const Graph& g, int d) {
  check_input(g, d);
  DivergenceReport r;
  r.d = d;
  const long long e = static_cast<long long>(g.edge_count());
  const long long b1 = static_cast<long long>(component_stats(g).b1);
  r.superficial_degree = d * b1 - 2 * e;
  const long long gcd = std::gcd(static_cast<long long>(d - 2), 2LL);
  r.propagator_exponent = gcd == 0 ? Rational{0, 1} : Rational{(d - 2) / gcd, 2 / gcd};

  for (VertexSet s : enumerate_connected_induced(g)) {
    const long long se = static_cast<long long>(g.edges_within(s));
    if (se == 0) continue;
    const long long sb1 = se - static_cast<long long>(s.size()) + 1;
    if (d * sb1 > 2 * se) r.has_worse_subdivergence = true;
    if (d * sb1 == 2 * se) {
      r.divergent_subgraphs.push_back(s);
      if (is_biconnected(SubgraphRef::induced(g, s))) r.divergent_building_elements.push_back(s);
    }
  }

  if (r.superficial_degree > 0) {
    r.verdict = Verdict::WorseThanLog;
  } else if (r.superficial_degree == 0) {
    r.verdict = r.has_worse_subdivergence ? Verdict::WorseThanLog : Verdict::LogDivergent;
  } else {
    r.verdict = Verdict::Convergent;
  }
  r.primitive = r.verdict == Verdict::LogDivergent && r.divergent_subgraphs.size() == 1 &&
                r.divergent_subgraphs.front() == g.all();
  return r;
}

PoleProfile pole_orders(const Graph& g, int d) {
  check_input(g, d);
  PoleProfile p;
  p.d = d;
  const BuildingSet b = building_set(g);
  for (VertexSet s : b.elements()) p.entries.push_back({s, pole_order(g, s, d)});
  return p;
}

ResidueProfile residue_profile(const Graph& g, int d) {
  check_input(g, d);
  ResidueProfile r;
  r.d = d;
  const BuildingSet b = building_set(g);
  const long long top = static_cast<long long>(d) * static_cast<long long>(g.vertex_count()) - 1;
  for (VertexSet s : b.elements()) {
    const long long k = pole_order(g, s, d);
    if (k == 1) r.log_elements.push_back(s);
    if (k >= 2) r.filtrations.push_back({s, k, {top - k, top}});
  }
  if (!r.log_elements.empty()) {
    NestTest t = is_nest(b, r.log_elements);
    r.log_elements_form_nest = t.is_nest;
    if (t.is_nest) {
      r.residue_locus = std::move(t.nest);
      r.form_degree = top + 1 - static_cast<long long>(r.log_elements.size());
    }
  }
  return r;
}

}  // namespace wonderful
