#include "wonderful/kclass.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>

#include "wonderful/error.hpp"

namespace wonderful {

namespace {

struct ClassCache {
  std::map<std::pair<std::size_t, std::vector<Edge>>, KPolynomial> conf;
  EnumerationOptions options;

  const KPolynomial& conf_of(const Graph& g) {
    auto key = std::make_pair(g.vertex_count(), std::vector<Edge>(g.edges().begin(), g.edges().end()));
    auto it = conf.find(key);
    if (it == conf.end()) it = conf.emplace(std::move(key), conf_class(g, options)).first;
    return it->second;
  }
};

std::vector<Nest> nests_of(const Graph& g, EnumerationOptions options,
                           std::optional<BuildingSet>& b) {
  if (g.edge_count() == 0) return {};
  b.emplace(building_set(g));
  return enumerate_nests(*b, options).nests;
}

KPolynomial screen_product(const NestQuotientData& q) {
  KPolynomial out(1);
  for (const ElementQuotient& e : q.per_element) out *= lefschetz_range(1, e.r - 1);
  return out;
}

// T^|V(G)| written as the sum over the open polydiagonal strata of G.
KPolynomial diagonal_expansion(const Graph& g, ClassCache& cache) {
  KPolynomial out = cache.conf_of(g);
  for (const PolydiagonalSupport& s : enumerate_polydiagonal_supports(g)) {
    out += cache.conf_of(quotient_contract(g, s).graph);
  }
  return out;
}

void check_dimension(int d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be at least 1");
}

}  // namespace

KPolynomial conf_class(const Graph& g, EnumerationOptions options) {
  const std::size_t m = g.edge_count();
  if (m >= 63 || (std::uint64_t{1} << m) > options.budget) {
    throw Error(ErrorCode::ExplosionGuard, "inclusion-exclusion over 2^" + std::to_string(m) +
                                               " edge subsets exceeds the budget");
  }
  const std::size_t n = g.vertex_count();
  // counts[c][parity] = number of edge subsets with c components and |S| parity.
  std::vector<std::array<BigInt, 2>> counts(n + 1);

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [](std::vector<std::size_t>& p, std::size_t x) {
    while (p[x] != x) x = p[x];
    return x;
  };
  std::function<void(std::size_t, std::size_t, std::size_t, std::vector<std::size_t>&)> walk =
      [&](std::size_t k, std::size_t components, std::size_t picked, std::vector<std::size_t>& p) {
        if (k == m) {
          counts[components][picked & 1U] += 1;
          return;
        }
        walk(k + 1, components, picked, p);
        const Edge& e = g.edges()[k];
        std::size_t a = root(p, e.u), b = root(p, e.v);
        if (a == b) {
          walk(k + 1, components, picked + 1, p);
        } else {
          std::vector<std::size_t> merged = p;
          merged[a] = b;
          walk(k + 1, components - 1, picked + 1, merged);
        }
      };
  walk(0, n, 0, parent);

  KPolynomial out;
  for (std::size_t c = 0; c <= n; ++c) {
    out.add_term(static_cast<int>(c), 0, counts[c][0] - counts[c][1]);
  }
  return out;
}

KPolynomial c_class(const Graph& g, int d, EnumerationOptions options) {
  check_dimension(d);
  if (g.edge_count() == 0) {
    throw Error(ErrorCode::NoEdges, "fixing the translation-homothety section needs an edge");
  }
  const KPolynomial affine = conf_class(g, options)
                                 .substitute(KPolynomial::monomial(0, d), KPolynomial::second_var());
  // L^d (L - 1) = L^{d+1} - L^d
  std::vector<BigInt> divisor(static_cast<std::size_t>(d) + 2, 0);
  divisor[static_cast<std::size_t>(d) + 1] = 1;
  divisor[static_cast<std::size_t>(d)] = -1;
  return from_univariate_l(divide_exact(to_univariate_l(affine), divisor));
}

ClassReport wonderful_class(const Graph& g, int d, EnumerationOptions options) {
  check_dimension(d);
  ClassReport report;
  report.d = d;
  report.vertex_count = g.vertex_count();
  report.conf_class = conf_class(g, options);
  report.wonderful_class = KPolynomial::monomial(static_cast<int>(g.vertex_count()), 0);

  std::optional<BuildingSet> b;
  for (Nest& nest : nests_of(g, options, b)) {
    const NestQuotientData q = nest_quotients(*b, nest, d);
    KPolynomial term = KPolynomial::monomial(static_cast<int>(q.whole.graph.vertex_count()), 0) *
                       screen_product(q);
    report.wonderful_class += term;
    report.per_nest_terms.push_back(NestTerm{std::move(nest), std::move(term)});
  }
  return report;
}

KPolynomial wonderful_class_via_strata(const Graph& g, int d, EnumerationOptions options) {
  check_dimension(d);
  ClassCache cache{{}, options};
  KPolynomial out = cache.conf_of(g);
  std::optional<BuildingSet> b;
  for (const Nest& nest : nests_of(g, options, b)) {
    const NestQuotientData q = nest_quotients(*b, nest, d);
    KPolynomial term = cache.conf_of(q.whole.graph);
    for (const ElementQuotient& e : q.per_element) term *= c_class(e.quotient.graph, d, options);
    out += term;
  }
  return out;
}

KPolynomial specialize_target(const KPolynomial& p, Target target) {
  switch (target.kind) {
    case TargetKind::Symbolic:
      return p;
    case TargetKind::Projective:
      return p.substitute(projective_class(target.d), KPolynomial::second_var());
    case TargetKind::Affine:
      return p.substitute(KPolynomial::monomial(0, target.d), KPolynomial::second_var());
  }
  return p;
}

KPolynomial specialize_target(const ClassReport& report, Target target) {
  if (target.kind != TargetKind::Symbolic && target.d != report.d) {
    throw Error(ErrorCode::DimensionMismatch,
                "target dimension " + std::to_string(target.d) +
                    " differs from the class dimension " + std::to_string(report.d));
  }
  return specialize_target(report.wonderful_class, target);
}

std::string nest_label(const Graph& g, const Nest& nest) {
  std::vector<std::vector<int>> members;
  for (VertexSet m : nest.elements()) members.push_back(g.to_labels(m));
  std::sort(members.begin(), members.end());
  std::string out = "[";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += "[";
    for (std::size_t j = 0; j < members[i].size(); ++j) {
      if (j) out += ",";
      out += std::to_string(members[i][j]);
    }
    out += "]";
  }
  return out + "]";
}

IdentityReport<KPolynomial> verify_identities(const Graph& g, int d, EnumerationOptions options) {
  check_dimension(d);
  IdentityReport<KPolynomial> report;
  ClassCache cache{{}, options};
  const int n = static_cast<int>(g.vertex_count());

  std::optional<BuildingSet> b;
  const std::vector<Nest> nests = nests_of(g, options, b);
  std::vector<NestQuotientData> quotients;
  std::vector<KPolynomial> screens;
  for (const Nest& nest : nests) {
    quotients.push_back(nest_quotients(*b, nest, d));
    screens.push_back(screen_product(quotients.back()));
  }

  // Blowup sums per nest: explicit enumeration of the exponent tuples against
  // the closed form (L^r - L) / (L - 1) per member.
  for (std::size_t i = 0; i < nests.size(); ++i) {
    std::vector<int> upper;
    std::uint64_t tuples = 1;
    for (const ElementQuotient& e : quotients[i].per_element) {
      upper.push_back(e.r - 1);
      tuples *= static_cast<std::uint64_t>(std::max(e.r - 1, 0));
      if (tuples > options.budget) {
        throw Error(ErrorCode::ExplosionGuard, "exponent tuple enumeration exceeds the budget");
      }
    }
    KPolynomial lhs;
    if (tuples > 0) {
      std::vector<int> mu(upper.size(), 1);
      while (true) {
        lhs.add_term(0, std::accumulate(mu.begin(), mu.end(), 0), 1);
        std::size_t k = 0;
        while (k < mu.size() && mu[k] == upper[k]) mu[k++] = 1;
        if (k == mu.size()) break;
        ++mu[k];
      }
    }
    KPolynomial rhs(1);
    for (const ElementQuotient& e : quotients[i].per_element) {
      std::vector<BigInt> num(static_cast<std::size_t>(e.r) + 1, 0);
      num[static_cast<std::size_t>(e.r)] += 1;
      num[1] -= 1;
      rhs *= from_univariate_l(divide_exact(num, {BigInt(-1), BigInt(1)}));
    }
    report.checks.push_back({"blowup-sum", IdentityVariant::Exact, nest_label(g, nests[i]),
                             true, std::move(lhs), std::move(rhs)});
  }

  // Diagonal stratification of the product X^V.
  const KPolynomial power = KPolynomial::monomial(n, 0);
  report.checks.push_back({"diagonal-stratification", IdentityVariant::SupportIndexed, "graph",
                           true, power, diagonal_expansion(g, cache)});
  {
    KPolynomial rhs = cache.conf_of(g);
    for (const NestQuotientData& q : quotients) rhs += cache.conf_of(q.whole.graph);
    report.checks.push_back({"diagonal-stratification", IdentityVariant::NestIndexed, "graph",
                             false, power, std::move(rhs)});
  }

  // The same stratification for each base quotient.
  std::vector<KPolynomial> expansions;
  for (std::size_t i = 0; i < nests.size(); ++i) {
    const Graph& base = quotients[i].whole.graph;
    const KPolynomial lhs = KPolynomial::monomial(static_cast<int>(base.vertex_count()), 0);
    expansions.push_back(diagonal_expansion(base, cache));
    report.checks.push_back({"quotient-stratification", IdentityVariant::SupportIndexed,
                             nest_label(g, nests[i]), true, lhs, expansions.back()});
    KPolynomial rhs = cache.conf_of(base);
    for (std::size_t j = 0; j < nests.size(); ++j) {
      if (nests[j].size() <= nests[i].size()) continue;
      const auto ji = nests[j].indices();
      if (std::includes(ji.begin(), ji.end(), nests[i].indices().begin(), nests[i].indices().end())) {
        rhs += cache.conf_of(quotients[j].whole.graph);
      }
    }
    report.checks.push_back({"quotient-stratification", IdentityVariant::NestIndexed,
                             nest_label(g, nests[i]), false, lhs, std::move(rhs)});
  }

  // Strata sum expanded through the blowup formula.
  KPolynomial strata_sum;
  for (std::size_t i = 0; i < nests.size(); ++i) {
    KPolynomial term = cache.conf_of(quotients[i].whole.graph);
    for (const ElementQuotient& e : quotients[i].per_element) term *= c_class(e.quotient.graph, d, options);
    strata_sum += term;
  }
  {
    KPolynomial rhs;
    for (std::size_t i = 0; i < nests.size(); ++i) {
      if (nests[i].is_antichain()) rhs += cache.conf_of(quotients[i].whole.graph);
      rhs += screens[i] * expansions[i];
    }
    report.checks.push_back({"stratum-expansion", IdentityVariant::SupportIndexed, "graph", true,
                             strata_sum, std::move(rhs)});
  }
  {
    KPolynomial rhs;
    for (std::size_t i = 0; i < nests.size(); ++i) {
      KPolynomial factor(1);
      const auto ii = nests[i].indices();
      for (std::size_t j = 0; j < nests.size(); ++j) {
        const auto jj = nests[j].indices();
        if (std::includes(ii.begin(), ii.end(), jj.begin(), jj.end())) factor += screens[j];
      }
      rhs += cache.conf_of(quotients[i].whole.graph) * factor;
    }
    report.checks.push_back({"stratum-expansion", IdentityVariant::NestIndexed, "graph", false,
                             strata_sum, std::move(rhs)});
  }

  report.checks.push_back({"engine-equivalence", IdentityVariant::Exact, "graph", true,
                           wonderful_class(g, d, options).wonderful_class,
                           cache.conf_of(g) + strata_sum});
  return report;
}

}  // namespace wonderful
