#ifndef WONDERFUL_GRAPH_IO_HPP
#define WONDERFUL_GRAPH_IO_HPP

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "wonderful/graph.hpp"

namespace wonderful {

struct LoadedGraph {
  Graph graph;
  /// Optional per-vertex metadata, echoed back verbatim by reports.
  std::optional<nlohmann::json> potentials;
};

/// {"vertices":[..],"edges":[[u,v],..]} with an optional "potentials" object.
LoadedGraph parse_graph_json(std::string_view text, GraphLimits limits = {});

/// One "u v" edge per line; "vertex u" declares an isolated vertex; blank
/// lines and lines starting with '#' are ignored.
LoadedGraph parse_graph_text(std::string_view text, GraphLimits limits = {});

/// Dispatches on the first non-blank character ('{' means JSON).
LoadedGraph parse_graph(std::string_view text, GraphLimits limits = {});

/// complete:n, cycle:n, path:n, star:n (n leaves around centre 1), bowtie.
/// Throws UnknownFamily or SizeCap.
Graph builtin_graph(std::string_view spec, GraphLimits limits = {});

/// "builtin:<spec>" or a file path.
LoadedGraph load_graph(const std::string& source, GraphLimits limits = {});

}  // namespace wonderful

#endif  // WONDERFUL_GRAPH_IO_HPP
