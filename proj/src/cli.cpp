#include "tspanner/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tspanner/bench.hpp"
#include "tspanner/error.hpp"
#include "tspanner/io.hpp"
#include "tspanner/outerplanar.hpp"
#include "tspanner/solver.hpp"
#include "tspanner/spanner.hpp"

namespace tspanner::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> sizes;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    std::size_t used = 0;
    double value = 0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || value < 3 || value != std::floor(value) || value > 5e7) {
      throw Error(Errc::ParseError, "bad size '" + item + "'");
    }
    sizes.push_back(static_cast<int>(value));
  }
  if (sizes.empty()) throw Error(Errc::ParseError, "no sizes given");
  return sizes;
}

struct Options {
  std::string input;
  std::string tree;
  int t = 0;
  bool json = false;
  bool check_canonical = false;
  int n = 0;
  std::string chords = "1/2";
  std::uint64_t seed = 1;
  std::string sizes = "1e5,2e5,4e5";
  int repeats = 5;
};

int do_solve(const Options& o, std::ostream& out) {
  const Graph g = parse_graph_file(read_file(o.input));
  const SpannerResult result = tree_t_spanner(g, o.t);
  out << (o.json ? emit_result_json(g, result) : emit_result(g, result));
  return result.exists ? kOk : kNoSpanner;
}

int do_minstretch(const Options& o, std::ostream& out) {
  const Graph g = parse_graph_file(read_file(o.input));
  const MinStretchResult result = min_stretch(g);
  out << (o.json ? emit_result_json(g, result.result) : emit_result(g, result.result));
  return kOk;
}

int do_verify(const Options& o, bool t_given, std::ostream& out) {
  const Graph g = parse_graph_file(read_file(o.input));
  const std::string tree_text = read_file(o.tree);
  std::optional<SpanningTree> tree;
  try {
    tree.emplace(parse_tree_file(tree_text, g));
  } catch (const Error& e) {
    if (e.code() != Errc::NotSpanningTree) throw;
    out << "spanning_tree 0\n# " << e.what() << '\n';
    return kNoSpanner;
  }
  const StretchCertificate cert = stretch(g, *tree);
  out << "spanning_tree 1\nstretch " << cert.t << '\n';
  bool ok = true;
  if (t_given) {
    out << "within_t " << (cert.t <= o.t ? 1 : 0) << '\n';
    ok = ok && cert.t <= o.t;
  }
  if (o.check_canonical) {
    bool p1 = true;
    bool p2 = true;
    for (const Block& block : biconnected_components(g).blocks) {
      if (block.edges.size() == 1) continue;
      const Graph local = block_graph(g, block);
      std::vector<EdgeId> local_tree;
      for (std::size_t i = 0; i < block.edges.size(); ++i) {
        if (tree->contains(block.edges[i])) local_tree.push_back(static_cast<EdgeId>(i));
      }
      const OuterplaneEmbedding emb = outerplane_embed(local);
      const CanonicalReport report = check_canonical(emb, SpanningTree(local, std::move(local_tree)));
      p1 = p1 && report.p1;
      p2 = p2 && report.p2;
    }
    out << "p1 " << (p1 ? "pass" : "fail") << "\np2 " << (p2 ? "pass" : "fail") << '\n';
    ok = ok && p1 && p2;
  }
  return ok ? kOk : kNoSpanner;
}

int do_gen(const Options& o, std::ostream& out) {
  out << format_graph(random_outerplanar(o.n, parse_fraction(o.chords), o.seed));
  return kOk;
}

int do_bench(const Options& o, std::ostream& out) {
  const BenchReport report = run_bench(parse_sizes(o.sizes), o.repeats, o.seed);
  if (o.json) {
    out << bench_to_json(report);
    return kOk;
  }
  for (const BenchRow& row : report.rows) {
    out << "n=" << row.n << " min_t=" << row.min_t << " tree_t_spanner_ms=" << row.spanner_ms
        << " minstretch_ms=" << row.minstretch_ms << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tree t-spanners of outerplanar graphs"};
  app.require_subcommand(1);
  Options o;

  auto* solve = app.add_subcommand("solve", "Decide and build a tree t-spanner");
  solve->add_option("--input", o.input, "Graph file")->required();
  solve->add_option("--t", o.t, "Stretch bound")->required()->check(CLI::PositiveNumber);
  solve->add_flag("--json", o.json, "JSON output");

  auto* minstretch = app.add_subcommand("minstretch", "Minimum stretch spanning tree");
  minstretch->add_option("--input", o.input, "Graph file")->required();
  minstretch->add_flag("--json", o.json, "JSON output");

  auto* verify = app.add_subcommand("verify", "Check a spanning tree against a graph");
  verify->add_option("--input", o.input, "Graph file")->required();
  verify->add_option("--tree", o.tree, "Tree file")->required();
  auto* t_opt = verify->add_option("--t", o.t, "Stretch bound")->check(CLI::PositiveNumber);
  verify->add_flag("--check-canonical", o.check_canonical, "Check properties P1 and P2 per block");

  auto* gen = app.add_subcommand("gen", "Random 2-connected outerplanar graph");
  gen->add_option("--n", o.n, "Vertex count")->required()->check(CLI::Range(3, 50000000));
  gen->add_option("--chords", o.chords, "Chord fraction, p/q or decimal")->required();
  gen->add_option("--seed", o.seed, "Random seed")->required();

  auto* bench = app.add_subcommand("bench", "Scaling benchmark on random maximal outerplanar graphs");
  bench->add_option("--sizes", o.sizes, "Comma-separated vertex counts");
  bench->add_option("--repeats", o.repeats, "Runs per size (median reported)")->check(CLI::PositiveNumber);
  bench->add_option("--seed", o.seed, "Random seed");
  bench->add_flag("--json", o.json, "JSON output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*solve) return do_solve(o, out);
    if (*minstretch) return do_minstretch(o, out);
    if (*verify) return do_verify(o, t_opt->count() > 0, out);
    if (*gen) return do_gen(o, out);
    if (*bench) return do_bench(o, out);
  } catch (const NotOuterplanar& e) {
    err << "error: " << e.what() << '\n';
    return kNotOuterplanar;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  return kParseError;
}

}  // namespace tspanner::cli
