#pragma once

#include <string>

#include "tspanner/graph.hpp"
#include "tspanner/outerplanar.hpp"
#include "tspanner/solver.hpp"

namespace tspanner {

/// Graph file: `#` comment lines allowed anywhere; first data line `n m`,
/// then exactly m lines `u v` with 0-based ids. Throws ParseError with the
/// offending line number (loops, repeated edges and out-of-range ids included).
Graph parse_graph_file(const std::string& text);
std::string format_graph(const Graph& g);

/// Tree file: n-1 lines `u v`, each an edge of g. Throws ParseError, or
/// Error(NotSpanningTree) when the edges do not form a spanning tree.
SpanningTree parse_tree_file(const std::string& text, const Graph& g);

/// Tree-file text preceded by `#` lines carrying exists / t / stretch, so the
/// output of `solve` can be fed back to `verify`.
std::string emit_result(const Graph& g, const SpannerResult& result);

/// {exists, t, stretch, tree_edges, blocks, timings_ms}
std::string emit_result_json(const Graph& g, const SpannerResult& result);

/// Accepts `p/q` or a decimal such as `0.25`.
Fraction parse_fraction(const std::string& text);

}  // namespace tspanner
