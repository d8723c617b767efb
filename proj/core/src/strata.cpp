#include "wonderful/strata.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "wonderful/error.hpp"
#include "wonderful/kclass.hpp"

namespace wonderful {

Stratification stratification(const Graph& g, int d, EnumerationOptions options) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be at least 1");
  Stratification out;
  out.d = d;
  const long long n = static_cast<long long>(g.vertex_count());

  StratumDescriptor open;
  open.base_graph = g;
  open.base_dim = d * n;
  open.base_class = conf_class(g, options);
  open.total_dim = d * n;
  out.strata.push_back(std::move(open));
  if (g.edge_count() == 0) {
    out.poset.incidence.emplace_back(0, 0);
    return out;
  }

  const BuildingSet b = building_set(g);
  std::vector<Nest> nests = enumerate_nests(b, options).nests;
  std::map<std::vector<std::size_t>, std::size_t> node_of;
  node_of[{}] = 0;

  for (Nest& nest : nests) {
    const NestQuotientData q = nest_quotients(b, nest, d);
    StratumDescriptor s;
    s.base_graph = q.whole.graph;
    s.base_dim = d * static_cast<long long>(q.whole.graph.vertex_count());
    s.base_class = conf_class(q.whole.graph, options);
    for (const ElementQuotient& e : q.per_element) {
      const long long m = static_cast<long long>(e.quotient.graph.vertex_count());
      s.fibers.push_back({e.element, e.quotient.graph, d * m - d - 1,
                          c_class(e.quotient.graph, d, options)});
    }
    s.total_dim = d * n - static_cast<long long>(nest.size());
    node_of[std::vector<std::size_t>(nest.indices().begin(), nest.indices().end())] = out.strata.size();
    s.nest = std::move(nest);
    out.strata.push_back(std::move(s));
  }

  auto indices_of = [&](std::size_t node) {
    const auto& nest = out.strata[node].nest;
    return nest ? std::vector<std::size_t>(nest->indices().begin(), nest->indices().end())
                : std::vector<std::size_t>{};
  };
  for (std::size_t i = 0; i < out.strata.size(); ++i) {
    const std::vector<std::size_t> a = indices_of(i);
    for (std::size_t j = i; j < out.strata.size(); ++j) {
      const std::vector<std::size_t> c = indices_of(j);
      std::vector<std::size_t> u;
      std::set_union(a.begin(), a.end(), c.begin(), c.end(), std::back_inserter(u));
      if (node_of.count(u)) out.poset.incidence.emplace_back(i, j);
      if (c.size() == a.size() + 1 && std::includes(c.begin(), c.end(), a.begin(), a.end())) {
        out.poset.covers.emplace_back(i, j);
      }
    }
  }
  return out;
}

KPolynomial strata_class_sum(const Stratification& s) {
  KPolynomial out;
  for (const StratumDescriptor& st : s.strata) {
    KPolynomial term = st.base_class;
    for (const FiberDescriptor& f : st.fibers) term *= f.fiber_class;
    out += term;
  }
  return out;
}

bool DimensionAudit::all_passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.passed(); });
}

DimensionAudit dimension_audit(const Graph& g, int d, EnumerationOptions options) {
  DimensionAudit audit;
  const Stratification s = stratification(g, d, options);
  const long long n = static_cast<long long>(g.vertex_count());
  for (const StratumDescriptor& st : s.strata) {
    DimensionAuditEntry e;
    e.stratum = stratum_label(g, st);
    e.base_plus_fibers = d * static_cast<long long>(st.base_graph.vertex_count());
    for (const FiberDescriptor& f : st.fibers) {
      e.base_plus_fibers += d * (static_cast<long long>(f.quotient_graph.vertex_count()) - 1) - 1;
    }
    e.expected = d * n - static_cast<long long>(st.nest ? st.nest->size() : 0);
    audit.entries.push_back(std::move(e));
  }
  return audit;
}

std::string stratum_label(const Graph& g, const StratumDescriptor& s) {
  return s.nest ? nest_label(g, *s.nest) : std::string("open");
}

std::string to_dot(const Graph& g, const Stratification& s) {
  std::ostringstream os;
  os << "digraph strata {\n";
  for (std::size_t i = 0; i < s.strata.size(); ++i) {
    os << "  s" << i << " [label=\"" << stratum_label(g, s.strata[i]) << ": "
       << s.strata[i].total_dim << "\"];\n";
  }
  for (auto [a, b] : s.poset.covers) os << "  s" << a << " -> s" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace wonderful
