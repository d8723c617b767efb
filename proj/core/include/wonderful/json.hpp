#ifndef WONDERFUL_JSON_HPP
#define WONDERFUL_JSON_HPP

#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "wonderful/arrangements.hpp"
#include "wonderful/divergence.hpp"
#include "wonderful/graph.hpp"
#include "wonderful/identity.hpp"
#include "wonderful/kclass.hpp"
#include "wonderful/polynomial.hpp"
#include "wonderful/strata.hpp"

namespace wonderful {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

/// {"terms":[{"t":..,"l":..,"c":"-3"}]}, terms by (t desc, l desc).
json to_json(const KPolynomial& p);
/// {"terms":[{"p":..,"q":..,"c":".."}]}, terms by (p desc, q desc).
json to_json(const HodgePolynomial& h);
KPolynomial kpolynomial_from_json(const json& j);
/// Throws ParseError on malformed input.
HodgePolynomial hodge_from_json(const json& j);

json to_json(const Graph& g);
/// Sorted label list.
json vertex_set_json(const Graph& g, VertexSet s);
/// Members as sorted label lists, the list itself sorted.
json nest_json(const Graph& g, const Nest& nest);

template <class Poly>
json to_json(const Graph& g, const IdentityReport<Poly>& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"identity", c.identity},
                      {"variant", variant_name(c.variant)},
                      {"scope", c.scope},
                      {"required", c.required},
                      {"passed", c.passed()},
                      {"lhs", to_json(c.lhs)},
                      {"rhs", to_json(c.rhs)},
                      {"discrepancy", to_json(c.discrepancy())}});
  }
  (void)g;
  return {{"required_passed", report.required_passed()}, {"checks", std::move(checks)}};
}

json to_json(const Graph& g, const DivergenceReport& r);
json to_json(const Graph& g, const PoleProfile& p);
json to_json(const Graph& g, const ResidueProfile& r);
json to_json(const Graph& g, const Stratification& s);

}  // namespace wonderful

#endif  // WONDERFUL_JSON_HPP
