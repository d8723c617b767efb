#include "wonderful/hodge.hpp"

#include "wonderful/error.hpp"
#include "wonderful/kclass.hpp"

namespace wonderful {

namespace {

HodgePolynomial xy() { return HodgePolynomial::monomial(1, 1); }

std::vector<Nest> nests_of(const Graph& g, EnumerationOptions options,
                           std::optional<BuildingSet>& b) {
  if (g.edge_count() == 0) return {};
  b.emplace(building_set(g));
  return enumerate_nests(*b, options).nests;
}

}  // namespace

HodgePolynomial hodge_projective(int n) {
  HodgePolynomial out;
  for (int k = 0; k <= n; ++k) out.add_term(k, k, 1);
  return out;
}

HodgePolynomial hodge_affine(int n) { return HodgePolynomial::monomial(n, n); }

HodgePolynomial realize_hodge(const KPolynomial& p, const HodgePolynomial& eX) {
  return p.substitute(eX, xy());
}

HodgePolynomial wonderful_hodge(const Graph& g, int d, const HodgePolynomial& eX,
                                EnumerationOptions options) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be at least 1");
  HodgePolynomial out = eX.pow(static_cast<unsigned>(g.vertex_count()));
  std::optional<BuildingSet> b;
  for (const Nest& nest : nests_of(g, options, b)) {
    const NestQuotientData q = nest_quotients(*b, nest, d);
    HodgePolynomial term = eX.pow(static_cast<unsigned>(q.whole.graph.vertex_count()));
    for (const ElementQuotient& e : q.per_element) {
      // e(P^{r-1}) - 1
      term *= hodge_projective(e.r - 1) - HodgePolynomial(1);
    }
    out += term;
  }
  return out;
}

BigInt euler_characteristic(const HodgePolynomial& h) { return h.evaluate(1, 1); }

IdentityReport<HodgePolynomial> verify_hodge_identity(const Graph& g, int d,
                                                      const HodgePolynomial& eX,
                                                      EnumerationOptions options) {
  IdentityReport<HodgePolynomial> report;
  report.checks.push_back({"hodge-factorization", IdentityVariant::Exact, "graph", true,
                           wonderful_hodge(g, d, eX, options),
                           realize_hodge(wonderful_class(g, d, options).wonderful_class, eX)});

  // Hodge image of the stratum expansion, one check per indexing.
  for (const auto& check : verify_identities(g, d, options).checks) {
    if (check.identity != "stratum-expansion") continue;
    report.checks.push_back({"hodge-stratum-expansion", check.variant, check.scope,
                             check.required, realize_hodge(check.lhs, eX),
                             realize_hodge(check.rhs, eX)});
  }
  return report;
}

}  // namespace wonderful
