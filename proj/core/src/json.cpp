#include "wonderful/json.hpp"

#include <algorithm>

#include "wonderful/error.hpp"

namespace wonderful {

namespace {

template <class Poly>
json terms_json(const Poly& p, const char* a, const char* b) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    terms.push_back({{a, it->first.first}, {b, it->first.second}, {"c", it->second.str()}});
  }
  return {{"terms", std::move(terms)}};
}

template <class Poly>
Poly terms_from_json(const json& j, const char* a, const char* b) {
  Poly out;
  try {
    for (const auto& t : j.at("terms")) {
      const json& c = t.at("c");
      BigInt coeff = c.is_string() ? BigInt(c.get<std::string>()) : BigInt(c.get<long long>());
      out.add_term(t.at(a).get<int>(), t.at(b).get<int>(), coeff);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed polynomial JSON: ") + e.what());
  } catch (const std::runtime_error& e) {
    throw Error(ErrorCode::ParseError, std::string("bad coefficient: ") + e.what());
  }
  return out;
}

json sets_json(const Graph& g, std::span<const VertexSet> sets) {
  json out = json::array();
  for (VertexSet s : sets) out.push_back(vertex_set_json(g, s));
  return out;
}

}  // namespace

json to_json(const KPolynomial& p) { return terms_json(p, "t", "l"); }
json to_json(const HodgePolynomial& h) { return terms_json(h, "p", "q"); }

KPolynomial kpolynomial_from_json(const json& j) { return terms_from_json<KPolynomial>(j, "t", "l"); }
HodgePolynomial hodge_from_json(const json& j) { return terms_from_json<HodgePolynomial>(j, "p", "q"); }

json to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({g.label(e.u), g.label(e.v)});
  return {{"vertices", std::vector<int>(g.labels().begin(), g.labels().end())},
          {"edges", std::move(edges)}};
}

json vertex_set_json(const Graph& g, VertexSet s) { return g.to_labels(s); }

json nest_json(const Graph& g, const Nest& nest) {
  std::vector<std::vector<int>> members;
  for (VertexSet m : nest.elements()) members.push_back(g.to_labels(m));
  std::sort(members.begin(), members.end());
  return members;
}

json to_json(const Graph& g, const DivergenceReport& r) {
  return {{"d", r.d},
          {"verdict", verdict_name(r.verdict)},
          {"primitive", r.primitive},
          {"superficial_degree", r.superficial_degree},
          {"propagator_exponent", {{"num", r.propagator_exponent.num}, {"den", r.propagator_exponent.den}}},
          {"has_worse_subdivergence", r.has_worse_subdivergence},
          {"divergent_subgraphs", sets_json(g, r.divergent_subgraphs)},
          {"divergent_building_elements", sets_json(g, r.divergent_building_elements)}};
}

json to_json(const Graph& g, const PoleProfile& p) {
  json entries = json::array();
  for (const PoleEntry& e : p.entries) {
    json item = {{"element", vertex_set_json(g, e.element)},
                 {"order", e.order},
                 {"interpretation", e.is_pole() ? "pole" : "regular"}};
    if (!e.is_pole()) item["zero_order"] = e.zero_order();
    entries.push_back(std::move(item));
  }
  return {{"d", p.d}, {"entries", std::move(entries)}};
}

json to_json(const Graph& g, const ResidueProfile& r) {
  json filtrations = json::array();
  for (const FiltrationEntry& f : r.filtrations) {
    filtrations.push_back({{"element", vertex_set_json(g, f.element)},
                           {"pole_order", f.pole_order},
                           {"index", {f.index.first, f.index.second}}});
  }
  json out = {{"d", r.d},
              {"g_log", sets_json(g, r.log_elements)},
              {"g_log_is_nest", r.log_elements_form_nest},
              {"residue_locus", r.residue_locus ? nest_json(g, *r.residue_locus) : json(nullptr)},
              {"form_degree", r.form_degree ? json(*r.form_degree) : json(nullptr)},
              {"hodge_filtration", std::move(filtrations)}};
  return out;
}

json to_json(const Graph& g, const Stratification& s) {
  json strata = json::array();
  for (std::size_t i = 0; i < s.strata.size(); ++i) {
    const StratumDescriptor& st = s.strata[i];
    json fibers = json::array();
    for (const FiberDescriptor& f : st.fibers) {
      fibers.push_back({{"element", vertex_set_json(g, f.element)},
                        {"quotient_graph", to_json(f.quotient_graph)},
                        {"screen_space_dim", f.screen_space_dim},
                        {"fiber_class", to_json(f.fiber_class)}});
    }
    strata.push_back({{"id", i},
                      {"nest", st.nest ? nest_json(g, *st.nest) : json(nullptr)},
                      {"base_graph", to_json(st.base_graph)},
                      {"base_dim", st.base_dim},
                      {"base_class", to_json(st.base_class)},
                      {"fibers", std::move(fibers)},
                      {"total_dim", st.total_dim}});
  }
  json covers = json::array(), incidence = json::array();
  for (auto [a, b] : s.poset.covers) covers.push_back({a, b});
  for (auto [a, b] : s.poset.incidence) incidence.push_back({a, b});
  return {{"d", s.d},
          {"strata", std::move(strata)},
          {"covers", std::move(covers)},
          {"incidence", std::move(incidence)}};
}

}  // namespace wonderful
