#include "wonderful/arrangements.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "wonderful/error.hpp"

namespace wonderful {

BuildingSet::BuildingSet(Graph graph, std::vector<VertexSet> elements)
    : graph_(std::move(graph)), elements_(std::move(elements)) {}

std::optional<std::size_t> BuildingSet::index_of(VertexSet s) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), s, canonical_less);
  if (it == elements_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

BuildingSet building_set(const Graph& g) {
  if (g.edge_count() == 0) throw Error(ErrorCode::NoEdges, "the building set of an edgeless graph is empty");
  std::vector<VertexSet> elements;
  for (VertexSet s : enumerate_connected_induced(g)) {
    if (s.size() < 2) continue;
    if (is_biconnected(SubgraphRef::induced(g, s))) elements.push_back(s);
  }
  return BuildingSet(g, std::move(elements));
}

std::vector<std::size_t> NestForest::roots() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < parent.size(); ++i) {
    if (!parent[i]) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> NestForest::children(std::size_t position) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < parent.size(); ++i) {
    if (parent[i] == position) out.push_back(i);
  }
  return out;
}

bool Nest::is_antichain() const {
  for (const auto& p : forest_.parent) {
    if (p) return false;
  }
  return true;
}

bool pairwise_compatible(VertexSet a, VertexSet b) {
  return a.subset_of(b) || b.subset_of(a) || (a & b).size() <= 1;
}

std::vector<VertexSet> union_components(std::span<const VertexSet> members) {
  std::vector<VertexSet> clusters;
  for (VertexSet m : members) {
    VertexSet merged = m;
    std::vector<VertexSet> kept;
    for (VertexSet c : clusters) {
      if (c.intersects(merged)) {
        merged |= c;
      } else {
        kept.push_back(c);
      }
    }
    kept.push_back(merged);
    clusters = std::move(kept);
  }
  std::sort(clusters.begin(), clusters.end(), canonical_less);
  return clusters;
}

namespace {

std::vector<std::size_t> resolve(const BuildingSet& b, std::span<const VertexSet> elements) {
  if (elements.empty()) throw Error(ErrorCode::InvalidArgument, "a nest must be nonempty");
  std::vector<std::size_t> idx;
  for (VertexSet s : elements) {
    auto i = b.index_of(s);
    if (!i) {
      throw Error(ErrorCode::ForeignElement,
                  "subgraph is not an element of this building set");
    }
    idx.push_back(*i);
  }
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return idx;
}

// An antichain with connected union must be exactly the block set of that
// union, and the union must be induced.
bool antichain_is_factor_set(const Graph& g, std::span<const VertexSet> antichain) {
  VertexSet u;
  std::size_t union_edges = 0;
  for (VertexSet m : antichain) u |= m;
  for (std::size_t k : g.edge_indices_within(u)) {
    const Edge& e = g.edges()[k];
    for (VertexSet m : antichain) {
      if (m.contains(e.u) && m.contains(e.v)) {
        ++union_edges;
        break;
      }
    }
  }
  if (union_edges != g.edges_within(u)) return false;
  std::vector<VertexSet> blocks = induced_blocks(g, u);
  std::vector<VertexSet> members(antichain.begin(), antichain.end());
  std::sort(members.begin(), members.end(), canonical_less);
  return blocks == members;
}

bool antichains_realizable(const Graph& g, std::span<const VertexSet> members) {
  std::vector<VertexSet> chosen;
  bool ok = true;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    for (std::size_t i = from; i < members.size() && ok; ++i) {
      bool comparable = false;
      for (VertexSet c : chosen) {
        if (c.subset_of(members[i]) || members[i].subset_of(c)) {
          comparable = true;
          break;
        }
      }
      if (comparable) continue;
      chosen.push_back(members[i]);
      if (chosen.size() >= 2 && union_components(chosen).size() == 1 &&
          !antichain_is_factor_set(g, chosen)) {
        ok = false;
      }
      grow(i + 1);
      chosen.pop_back();
    }
  };
  grow(0);
  return ok;
}

NestForest forest_of(std::span<const VertexSet> members) {
  NestForest f;
  f.parent.assign(members.size(), std::nullopt);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (i == j || !members[i].subset_of(members[j]) || members[i] == members[j]) continue;
      if (!f.parent[i] || members[j].subset_of(members[*f.parent[i]])) f.parent[i] = j;
    }
  }
  return f;
}

Nest make_nest(const BuildingSet& b, std::vector<std::size_t> idx) {
  std::vector<VertexSet> members;
  members.reserve(idx.size());
  for (std::size_t i : idx) members.push_back(b[i]);
  NestForest f = forest_of(members);
  return Nest(std::move(idx), std::move(members), std::move(f));
}

}  // namespace

NestTest is_nest(const BuildingSet& b, std::span<const VertexSet> elements) {
  std::vector<std::size_t> idx = resolve(b, elements);
  std::vector<VertexSet> members;
  for (std::size_t i : idx) members.push_back(b[i]);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!pairwise_compatible(members[i], members[j])) return {};
    }
  }
  if (!antichains_realizable(b.graph(), members)) return {};
  return NestTest{true, make_nest(b, std::move(idx))};
}

bool divisors_intersect(const BuildingSet& b, std::span<const VertexSet> elements) {
  return is_nest(b, elements).is_nest;
}

bool satisfies_pairwise_criterion(const BuildingSet& b, std::span<const VertexSet> elements) {
  std::vector<std::size_t> idx = resolve(b, elements);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      if (!pairwise_compatible(b[idx[i]], b[idx[j]])) return false;
    }
  }
  return true;
}

NestEnumeration enumerate_nests(const BuildingSet& b, EnumerationOptions options) {
  const std::size_t n = b.size();
  std::vector<std::vector<bool>> compatible(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) compatible[i][j] = pairwise_compatible(b[i], b[j]);
  }

  NestEnumeration out;
  std::vector<std::size_t> clique;
  std::vector<VertexSet> members;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    for (std::size_t i = from; i < n; ++i) {
      bool ok = true;
      for (std::size_t c : clique) {
        if (!compatible[c][i]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (++out.pairwise_family_count > options.budget) {
        throw Error(ErrorCode::ExplosionGuard,
                    "nest enumeration exceeded the candidate budget of " +
                        std::to_string(options.budget) + "; raise it with --budget");
      }
      clique.push_back(i);
      members.push_back(b[i]);
      if (antichains_realizable(b.graph(), members)) out.nests.push_back(make_nest(b, clique));
      grow(i + 1);
      clique.pop_back();
      members.pop_back();
    }
  };
  grow(0);

  std::stable_sort(out.nests.begin(), out.nests.end(), [](const Nest& x, const Nest& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return std::lexicographical_compare(x.indices().begin(), x.indices().end(),
                                        y.indices().begin(), y.indices().end());
  });
  return out;
}

NestQuotientData nest_quotients(const BuildingSet& b, const Nest& nest, int d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be at least 1");
  const Graph& g = b.graph();
  const long long n = static_cast<long long>(g.vertex_count());

  NestQuotientData out;
  const std::vector<VertexSet> parts = union_components(nest.elements());
  out.whole = quotient_contract(g, parts);

  for (VertexSet gamma : nest.elements()) {
    std::vector<VertexSet> inner;
    for (VertexSet m : nest.elements()) {
      if (m != gamma && m.subset_of(gamma)) inner.push_back(m);
    }
    const std::vector<VertexSet> inner_parts = union_components(inner);

    // Contract inside the standalone subgraph gamma.
    const Graph sub = induced_graph(g, gamma);
    std::vector<VertexSet> local_parts;
    for (VertexSet p : inner_parts) local_parts.push_back(sub.to_set(g.to_labels(p)));
    ElementQuotient eq{gamma, quotient_contract(sub, local_parts), 0};

    // Codimension of the diagonal of gamma inside the intersection of the
    // inner diagonals.
    long long covered = 0;
    for (VertexSet p : inner_parts) covered += static_cast<long long>(p.size());
    const long long dim_inner =
        d * (n - covered + static_cast<long long>(inner_parts.size()));
    const long long dim_gamma = d * (n - static_cast<long long>(gamma.size()) + 1);
    const long long r = dim_inner - dim_gamma;
    const long long expected =
        d * (static_cast<long long>(eq.quotient.graph.vertex_count()) - 1);
    if (r != expected || r < d) {
      throw Error(ErrorCode::InconsistentR, "codimension jump " + std::to_string(r) +
                                                " disagrees with quotient size (" +
                                                std::to_string(expected) + ")");
    }
    eq.r = static_cast<int>(r);
    out.per_element.push_back(std::move(eq));
  }
  return out;
}

}  // namespace wonderful
