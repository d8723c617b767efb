#include "wonderful/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "wonderful/error.hpp"

namespace wonderful {

std::vector<std::size_t> VertexSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

// ---------------------------------------------------------------------------
// Graph

Graph make_graph_unchecked(std::vector<int> labels, std::vector<Edge> edges) {
  Graph g;
  g.labels_ = std::move(labels);
  g.edges_ = std::move(edges);
  g.adjacency_.assign(g.labels_.size(), VertexSet{});
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].insert(e.v);
    g.adjacency_[e.v].insert(e.u);
  }
  return g;
}

std::optional<std::size_t> Graph::index_of(int label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t Graph::edges_within(VertexSet s) const {
  std::size_t twice = 0;
  s.for_each([&](std::size_t i) { twice += (adjacency_[i] & s).size(); });
  return twice / 2;
}

std::vector<std::size_t> Graph::edge_indices_within(VertexSet s) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    if (s.contains(edges_[k].u) && s.contains(edges_[k].v)) out.push_back(k);
  }
  return out;
}

VertexSet Graph::boundary(VertexSet s) const {
  VertexSet out;
  s.for_each([&](std::size_t i) { out |= adjacency_[i]; });
  return out - s;
}

bool Graph::is_connected(VertexSet s) const {
  if (s.empty()) return false;
  VertexSet seen = VertexSet::single(s.lowest());
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](std::size_t i) { next |= adjacency_[i]; });
    next = (next & s) - seen;
    seen |= next;
    frontier = next;
  }
  return seen == s;
}

std::vector<VertexSet> Graph::components(VertexSet s) const {
  std::vector<VertexSet> out;
  VertexSet rest = s;
  while (!rest.empty()) {
    VertexSet comp = VertexSet::single(rest.lowest());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      frontier.for_each([&](std::size_t i) { next |= adjacency_[i]; });
      next = (next & rest) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

VertexSet Graph::to_set(std::span<const int> labels) const {
  VertexSet out;
  for (int l : labels) {
    auto i = index_of(l);
    if (!i) throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(l) + " is not in the graph");
    out.insert(*i);
  }
  return out;
}

std::vector<int> Graph::to_labels(VertexSet s) const {
  std::vector<int> out;
  out.reserve(s.size());
  s.for_each([&](std::size_t i) { out.push_back(labels_[i]); });
  return out;
}

Graph validate_graph(std::vector<int> vertices,
                     const std::vector<std::pair<int, int>>& edges,
                     GraphLimits limits) {
  const std::size_t cap = std::min(limits.max_vertices, kMaxVertexCap);
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.size() > cap) {
    throw Error(ErrorCode::SizeCap, "graph has " + std::to_string(vertices.size()) +
                                        " vertices, cap is " + std::to_string(cap));
  }
  auto index = [&](int label) -> std::uint32_t {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), label);
    if (it == vertices.end() || *it != label) {
      throw Error(ErrorCode::UnknownVertex,
                  "edge endpoint " + std::to_string(label) + " is not a declared vertex");
    }
    return static_cast<std::uint32_t>(it - vertices.begin());
  };

  std::vector<Edge> out;
  std::set<Edge> seen;
  for (auto [a, b] : edges) {
    if (a == b) {
      throw Error(ErrorCode::LoopEdge, "loop edge at vertex " + std::to_string(a));
    }
    std::uint32_t u = index(a), v = index(b);
    if (u > v) std::swap(u, v);
    if (!seen.insert(Edge{u, v}).second) {
      throw Error(ErrorCode::DuplicateEdge, "edge (" + std::to_string(a) + ", " +
                                                std::to_string(b) + ") appears twice");
    }
    out.push_back(Edge{u, v});
  }
  std::sort(out.begin(), out.end());
  return make_graph_unchecked(std::move(vertices), std::move(out));
}

Graph induced_graph(const Graph& g, VertexSet s) {
  std::vector<std::size_t> remap(g.vertex_count(), 0);
  std::vector<int> labels;
  s.for_each([&](std::size_t i) {
    remap[i] = labels.size();
    labels.push_back(g.label(i));
  });
  std::vector<Edge> edges;
  for (std::size_t k : g.edge_indices_within(s)) {
    const Edge& e = g.edges()[k];
    edges.push_back(Edge{static_cast<std::uint32_t>(remap[e.u]),
                         static_cast<std::uint32_t>(remap[e.v])});
  }
  return make_graph_unchecked(std::move(labels), std::move(edges));
}

// ---------------------------------------------------------------------------
// SubgraphRef

SubgraphRef SubgraphRef::induced(const Graph& parent, VertexSet vertices) {
  if (!vertices.subset_of(parent.all())) {
    throw Error(ErrorCode::UnknownVertex, "vertex set exceeds parent graph");
  }
  return SubgraphRef(&parent, vertices, true, {});
}

SubgraphRef SubgraphRef::with_edges(const Graph& parent, VertexSet vertices,
                                    std::vector<std::size_t> edge_indices) {
  if (!vertices.subset_of(parent.all())) {
    throw Error(ErrorCode::UnknownVertex, "vertex set exceeds parent graph");
  }
  std::sort(edge_indices.begin(), edge_indices.end());
  edge_indices.erase(std::unique(edge_indices.begin(), edge_indices.end()), edge_indices.end());
  for (std::size_t k : edge_indices) {
    if (k >= parent.edge_count()) {
      throw Error(ErrorCode::InvalidArgument, "edge index out of range");
    }
    const Edge& e = parent.edges()[k];
    if (!vertices.contains(e.u) || !vertices.contains(e.v)) {
      throw Error(ErrorCode::UnknownVertex, "edge endpoint outside the subgraph's vertex set");
    }
  }
  const bool induced = edge_indices == parent.edge_indices_within(vertices);
  if (induced) return SubgraphRef(&parent, vertices, true, {});
  return SubgraphRef(&parent, vertices, false, std::move(edge_indices));
}

std::vector<std::size_t> SubgraphRef::edge_indices() const {
  if (induced_) return parent_->edge_indices_within(vertices_);
  return edges_;
}

std::size_t SubgraphRef::edge_count() const {
  return induced_ ? parent_->edges_within(vertices_) : edges_.size();
}

// ---------------------------------------------------------------------------
// Connectivity

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

ComponentStats stats_of(const Graph& g, VertexSet vertices,
                        const std::vector<std::size_t>& edges) {
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::size_t b0 = vertices.size();
  for (std::size_t k : edges) {
    const Edge& e = g.edges()[k];
    std::size_t a = find_root(parent, e.u), b = find_root(parent, e.v);
    if (a != b) {
      parent[a] = b;
      --b0;
    }
  }
  ComponentStats s;
  s.b0 = b0;
  s.b1 = edges.size() + b0 - vertices.size();
  return s;
}

}  // namespace

ComponentStats component_stats(const Graph& g) {
  std::vector<std::size_t> all(g.edge_count());
  std::iota(all.begin(), all.end(), 0);
  return stats_of(g, g.all(), all);
}

ComponentStats component_stats(const SubgraphRef& s) {
  return stats_of(s.parent(), s.vertices(), s.edge_indices());
}

BlockDecomposition block_decomposition(const SubgraphRef& s) {
  const Graph& g = s.parent();
  const std::vector<std::size_t> edges = s.edge_indices();
  if (edges.empty()) throw Error(ErrorCode::NoEdges, "block decomposition needs at least one edge");

  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);  // (neighbour, edge)
  for (std::size_t k : edges) {
    const Edge& e = g.edges()[k];
    adj[e.u].emplace_back(e.v, k);
    adj[e.v].emplace_back(e.u, k);
  }

  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::size_t> stack;
  int timer = 0;
  BlockDecomposition out;

  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t v, std::size_t parent_edge) {
    disc[v] = low[v] = timer++;
    std::size_t children = 0;
    for (auto [w, k] : adj[v]) {
      if (k == parent_edge) continue;
      if (disc[w] == -1) {
        stack.push_back(k);
        ++children;
        dfs(w, k);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          // v separates the subtree at w: pop one block.
          if (parent_edge != SIZE_MAX || children > 1) out.cut_vertices.insert(v);
          std::vector<std::size_t> block_edges;
          VertexSet block_vertices;
          while (true) {
            std::size_t top = stack.back();
            stack.pop_back();
            block_edges.push_back(top);
            block_vertices.insert(g.edges()[top].u);
            block_vertices.insert(g.edges()[top].v);
            if (top == k) break;
          }
          out.blocks.push_back(SubgraphRef::with_edges(g, block_vertices, std::move(block_edges)));
        }
      } else if (disc[w] < disc[v]) {
        stack.push_back(k);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };

  s.vertices().for_each([&](std::size_t v) {
    if (disc[v] == -1 && !adj[v].empty()) dfs(v, SIZE_MAX);
  });

  // A root is a cut vertex only with two or more DFS children; the check above
  // marks it on the second child's block, which is the right condition.
  std::sort(out.blocks.begin(), out.blocks.end(), [](const SubgraphRef& a, const SubgraphRef& b) {
    return canonical_less(a.vertices(), b.vertices());
  });
  return out;
}

BlockDecomposition block_decomposition(const Graph& g) {
  return block_decomposition(SubgraphRef::whole(g));
}

bool is_biconnected(const SubgraphRef& s) {
  if (s.edge_count() == 0) return false;
  BlockDecomposition d = block_decomposition(s);
  return d.blocks.size() == 1 && d.blocks.front().vertices() == s.vertices();
}

std::vector<VertexSet> induced_blocks(const Graph& g, VertexSet s) {
  std::vector<VertexSet> out;
  if (g.edges_within(s) == 0) return out;
  for (const SubgraphRef& b : block_decomposition(SubgraphRef::induced(g, s)).blocks) {
    out.push_back(b.vertices());
  }
  return out;
}

SubgraphRef induced_closure(const SubgraphRef& s) {
  return SubgraphRef::induced(s.parent(), s.vertices());
}

// ---------------------------------------------------------------------------
// Quotients

Quotient quotient_contract(const Graph& g, std::span<const VertexSet> parts) {
  VertexSet covered;
  for (VertexSet p : parts) {
    if (!p.subset_of(g.all())) {
      throw Error(ErrorCode::UnknownVertex, "part exceeds the graph's vertex set");
    }
    if (p.intersects(covered)) {
      throw Error(ErrorCode::OverlappingParts, "parts of a quotient must be vertex-disjoint");
    }
    if (!g.is_connected(p)) {
      throw Error(ErrorCode::DisconnectedPart, "every part of a quotient must induce a connected subgraph");
    }
    covered |= p;
  }

  // Representative label per old vertex: the smallest label of its part.
  const std::size_t n = g.vertex_count();
  std::vector<int> rep(n);
  std::vector<std::size_t> part_of(n, SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i) rep[i] = g.label(i);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const int m = g.label(parts[p].lowest());
    parts[p].for_each([&](std::size_t i) {
      rep[i] = m;
      part_of[i] = p;
    });
  }
  std::vector<int> labels = rep;
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  Quotient q;
  q.vertex_map.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    q.vertex_map[i] = static_cast<std::size_t>(
        std::lower_bound(labels.begin(), labels.end(), rep[i]) - labels.begin());
  }

  std::set<Edge> merged;
  for (const Edge& e : g.edges()) {
    std::size_t a = q.vertex_map[e.u], b = q.vertex_map[e.v];
    if (a == b) {
      if (part_of[e.u] == SIZE_MAX || part_of[e.u] != part_of[e.v]) {
        throw Error(ErrorCode::LoopCreated, "contraction produced a loop edge");
      }
      continue;
    }
    if (a > b) std::swap(a, b);
    merged.insert(Edge{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
  }
  q.graph = make_graph_unchecked(std::move(labels), std::vector<Edge>(merged.begin(), merged.end()));
  return q;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// Each connected set is reached exactly once: it is grown from its lowest
// vertex, and the extension set only admits vertices that are neither in the
// current set nor adjacent to it at the time they are first seen.
void extend_connected(const Graph& g, VertexSet current, VertexSet extension,
                      std::size_t root, std::size_t max_size,
                      std::vector<VertexSet>& out) {
  out.push_back(current);
  if (current.size() == max_size) return;
  const VertexSet above = VertexSet(~std::uint64_t{0} << root) - VertexSet::single(root);
  const VertexSet closed = current | g.boundary(current);
  while (!extension.empty()) {
    const std::size_t w = extension.lowest();
    extension.erase(w);
    const VertexSet exclusive = (g.neighbors(w) - closed) & above;
    extend_connected(g, current | VertexSet::single(w), extension | exclusive, root,
                     max_size, out);
  }
}

}  // namespace

std::vector<VertexSet> enumerate_connected_induced(const Graph& g,
                                                   std::optional<std::size_t> k) {
  std::vector<VertexSet> all;
  const std::size_t max_size = k ? *k : g.vertex_count();
  if (max_size == 0) return all;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const VertexSet above = VertexSet(~std::uint64_t{0} << v) - VertexSet::single(v);
    extend_connected(g, VertexSet::single(v), g.neighbors(v) & above, v, max_size, all);
  }
  if (k) {
    std::erase_if(all, [&](VertexSet s) { return s.size() != *k; });
  }
  std::sort(all.begin(), all.end(), canonical_less);
  return all;
}

std::vector<PolydiagonalSupport> enumerate_polydiagonal_supports(const Graph& g) {
  std::vector<VertexSet> pieces = enumerate_connected_induced(g);
  std::erase_if(pieces, [](VertexSet s) { return s.size() < 2; });

  std::vector<PolydiagonalSupport> out;
  PolydiagonalSupport current;
  std::function<void(std::size_t, VertexSet)> pick = [&](std::size_t from, VertexSet used) {
    for (std::size_t i = from; i < pieces.size(); ++i) {
      if (pieces[i].intersects(used)) continue;
      current.push_back(pieces[i]);
      out.push_back(current);
      pick(i + 1, used | pieces[i]);
      current.pop_back();
    }
  };
  pick(0, VertexSet{});

  auto covered = [](const PolydiagonalSupport& s) {
    std::size_t c = 0;
    for (VertexSet p : s) c += p.size();
    return c;
  };
  std::sort(out.begin(), out.end(), [&](const PolydiagonalSupport& a, const PolydiagonalSupport& b) {
    const std::size_t ca = covered(a), cb = covered(b);
    if (ca != cb) return ca > cb;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), canonical_less);
  });
  return out;
}

}  // namespace wonderful
