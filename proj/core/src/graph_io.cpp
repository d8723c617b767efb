#include "wonderful/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "wonderful/error.hpp"

namespace wonderful {

namespace {

Error parse_error(const std::string& what) { return Error(ErrorCode::ParseError, what); }

int to_int(std::string_view s, const std::string& context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw parse_error(context + ": expected an integer, got '" + std::string(s) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

LoadedGraph parse_graph_json(std::string_view text, GraphLimits limits) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw parse_error("graph JSON must be an object");
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;
  try {
    if (doc.contains("vertices")) vertices = doc.at("vertices").get<std::vector<int>>();
    if (doc.contains("edges")) {
      for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw parse_error("each edge must be a pair [u, v]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("malformed graph JSON: ") + e.what());
  }
  LoadedGraph out{validate_graph(std::move(vertices), edges, limits), std::nullopt};
  if (doc.contains("potentials")) out.potentials = doc.at("potentials");
  return out;
}

LoadedGraph parse_graph_text(std::string_view text, GraphLimits limits) {
  std::set<int> vertices;
  std::vector<std::pair<int, int>> edges;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    const std::string where = "line " + std::to_string(line_no);
    if (tokens.size() == 2 && tokens[0] == "vertex") {
      vertices.insert(to_int(tokens[1], where));
    } else if (tokens.size() == 2) {
      const int u = to_int(tokens[0], where), v = to_int(tokens[1], where);
      vertices.insert(u);
      vertices.insert(v);
      edges.emplace_back(u, v);
    } else {
      throw parse_error(where + ": expected 'u v' or 'vertex u'");
    }
  }
  return {validate_graph({vertices.begin(), vertices.end()}, edges, limits), std::nullopt};
}

LoadedGraph parse_graph(std::string_view text, GraphLimits limits) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_graph_json(text, limits) : parse_graph_text(text, limits);
  }
  return parse_graph_text(text, limits);
}

Graph builtin_graph(std::string_view spec, GraphLimits limits) {
  if (spec == "bowtie") {
    return validate_graph({1, 2, 3, 4, 5}, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}, limits);
  }
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::UnknownFamily, "unknown graph family '" + std::string(spec) + "'");
  }
  const std::string_view family = spec.substr(0, colon);
  const int n = to_int(spec.substr(colon + 1), "builtin size");
  if (family != "complete" && family != "cycle" && family != "path" && family != "star") {
    throw Error(ErrorCode::UnknownFamily, "unknown graph family '" + std::string(family) + "'");
  }
  const int count = family == "star" ? n + 1 : n;
  if (n < 1 || (family == "cycle" && n < 3)) {
    throw Error(ErrorCode::InvalidArgument, "size out of range for " + std::string(family));
  }
  if (static_cast<std::size_t>(count) > limits.max_vertices) {
    throw Error(ErrorCode::SizeCap, std::to_string(count) + " vertices exceed the cap of " +
                                        std::to_string(limits.max_vertices));
  }
  std::vector<int> vertices;
  for (int i = 1; i <= count; ++i) vertices.push_back(i);
  std::vector<std::pair<int, int>> edges;
  if (family == "complete") {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    }
  } else if (family == "path" || family == "cycle") {
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    if (family == "cycle") edges.emplace_back(1, n);
  } else {
    for (int i = 2; i <= count; ++i) edges.emplace_back(1, i);
  }
  return validate_graph(std::move(vertices), edges, limits);
}

LoadedGraph load_graph(const std::string& source, GraphLimits limits) {
  constexpr std::string_view prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) {
    return {builtin_graph(std::string_view(source).substr(prefix.size()), limits), std::nullopt};
  }
  std::ifstream in(source);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read graph file '" + source + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str(), limits);
}

}  // namespace wonderful
