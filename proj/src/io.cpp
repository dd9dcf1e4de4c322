#include "tspanner/io.hpp"

#include <json.hpp>
#include <set>
#include <sstream>

#include "tree_partition.hpp"
#include "tspanner/error.hpp"

namespace tspanner {

namespace {

Edge parse_pair(const std::vector<std::string>& tokens, int line, int n) {
  if (tokens.size() != 2) throw ParseError(line, "expected `u v`");
  const auto u = detail::parse_integer(tokens[0], line);
  const auto v = detail::parse_integer(tokens[1], line);
  if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(line, "vertex id outside 0.." + std::to_string(n - 1));
  if (u == v) throw ParseError(line, "loop edge");
  return {static_cast<Vertex>(u), static_cast<Vertex>(v)};
}

}  // namespace

Graph parse_graph_file(const std::string& text) {
  const auto lines = detail::tokenize_lines(text);
  if (lines.empty()) throw ParseError(1, "missing `n m` header");
  const auto& [header_line, header] = lines[0];
  if (header.size() != 2) throw ParseError(header_line, "expected `n m`");
  const auto n = detail::parse_integer(header[0], header_line);
  const auto m = detail::parse_integer(header[1], header_line);
  if (n < 1 || m < 0) throw ParseError(header_line, "vertex count must be positive and edge count nonnegative");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [line, tokens] = lines[i];
    if (static_cast<long long>(edges.size()) == m) throw ParseError(line, "more than m edge lines");
    const Edge e = parse_pair(tokens, line, static_cast<int>(n));
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) throw ParseError(line, "repeated edge");
    edges.push_back(e);
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(lines.back().first, "expected " + std::to_string(m) + " edge lines, found " +
                                              std::to_string(edges.size()));
  }
  return Graph(static_cast<int>(n), edges);
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

SpanningTree parse_tree_file(const std::string& text, const Graph& g) {
  std::vector<EdgeId> ids;
  for (const auto& [line, tokens] : detail::tokenize_lines(text)) {
    const Edge e = parse_pair(tokens, line, g.num_vertices());
    const auto id = g.find_edge(e.u, e.v);
    if (!id) throw ParseError(line, "tree edge is not an edge of the graph");
    ids.push_back(*id);
  }
  return SpanningTree(g, std::move(ids));
}

std::string emit_result(const Graph& g, const SpannerResult& result) {
  std::ostringstream out;
  out << "# exists " << (result.exists ? 1 : 0) << '\n';
  out << "# t " << result.t_queried << '\n';
  if (result.certificate) out << "# stretch " << result.certificate->t << '\n';
  for (EdgeId e : result.tree) out << g.edge(e).u << ' ' << g.edge(e).v << '\n';
  return out.str();
}

std::string emit_result_json(const Graph& g, const SpannerResult& result) {
  nlohmann::json doc;
  doc["exists"] = result.exists;
  doc["t"] = result.t_queried;
  doc["stretch"] = result.certificate ? nlohmann::json(result.certificate->t) : nlohmann::json(nullptr);
  auto edges = nlohmann::json::array();
  for (EdgeId e : result.tree) edges.push_back({g.edge(e).u, g.edge(e).v});
  doc["tree_edges"] = std::move(edges);
  auto blocks = nlohmann::json::array();
  for (const BlockReport& b : result.blocks) {
    blocks.push_back({{"vertices", b.vertices}, {"edges", b.edges}, {"bound", b.bound}, {"feasible", b.feasible}});
  }
  doc["blocks"] = std::move(blocks);
  auto timings = nlohmann::json::object();
  for (const auto& [name, ms] : result.timings_ms) timings[name] = ms;
  doc["timings_ms"] = std::move(timings);
  return doc.dump() + "\n";
}

Fraction parse_fraction(const std::string& text) {
  auto bad = [&]() { return Error(Errc::PreconditionViolated, "not a fraction in [0,1]: '" + text + "'"); };
  auto digits_only = [](const std::string& s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
  };
  Fraction f;
  if (auto slash = text.find('/'); slash != std::string::npos) {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!digits_only(num) || !digits_only(den) || num.size() > 12 || den.size() > 12) throw bad();
    f = {std::stoll(num), std::stoll(den)};
  } else {
    const auto dot = text.find('.');
    std::string whole = text.substr(0, dot);
    std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!digits_only(whole) || (!frac.empty() && !digits_only(frac)) || whole.size() + frac.size() > 15) throw bad();
    f.den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) f.den *= 10;
    f.num = std::stoll(whole + frac);
  }
  if (f.den <= 0 || f.num > f.den) throw bad();
  return f;
}

}  // namespace tspanner
