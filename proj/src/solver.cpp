#include "tspanner/solver.hpp"

#include <algorithm>
#include <chrono>

#include "tspanner/error.hpp"
#include "tspanner/outerplanar.hpp"
#include "tspanner/sdpartition.hpp"
#include "tspanner/spanner.hpp"
#include "tspanner/spartition.hpp"

namespace tspanner {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

// Embedding and weak dual of one 2-connected block, reused across queries.
class BlockSolver {
 public:
  explicit BlockSolver(const Graph& block) : block_(block), emb_(outerplane_embed(block_)), dual_(weak_dual(emb_)) {}
  BlockSolver(const BlockSolver&) = delete;
  BlockSolver& operator=(const BlockSolver&) = delete;

  bool feasible(int t) const { return sd_feasible(reduce_to_sd(reduce_to_spartition(dual_, t))); }

  std::optional<SpanningTree> solve(int t) const {
    const SPartitionInstance inst = reduce_to_spartition(dual_, t);
    const SDInstance sd = reduce_to_sd(inst);
    const SDSolveResult solved = solve_sd(sd);
    if (!solved.feasible()) return std::nullopt;
    return build_spanner(emb_, sd_to_spartition(sd, *solved.partition), inst.bound);
  }

 private:
  const Graph& block_;
  OuterplaneEmbedding emb_;
  WeakDual dual_;
};

void require_bound(int t) {
  if (t < 1) throw Error(Errc::PreconditionViolated, "stretch bound must be at least 1");
}

}  // namespace

std::optional<SpanningTree> solve_block(const Graph& block, int t) {
  require_bound(t);
  if (block.num_vertices() == 2 && block.num_edges() == 1) return SpanningTree(block, {0});
  if (t < 2) {
    // Every block with a cycle needs t >= 2; still reject non-outerplanar input.
    (void)outerplane_embed(block);
    return std::nullopt;
  }
  return BlockSolver(block).solve(t);
}

namespace {

// Solves each block with `pick_t` choosing the bound and merges the trees.
template <typename PickT>
SpannerResult solve_blocks(const Graph& g, int t_queried, PickT&& pick_t) {
  require_connected(g);
  SpannerResult result;
  result.t_queried = t_queried;
  result.exists = true;

  auto start = Clock::now();
  const BlockDecomposition decomposition = biconnected_components(g);
  result.timings_ms.emplace_back("blocks", elapsed_ms(start));

  start = Clock::now();
  std::vector<EdgeId> merged;
  merged.reserve(std::max(0, g.num_vertices() - 1));
  for (const Block& block : decomposition.blocks) {
    BlockReport report{static_cast<int>(block.vertices.size()), static_cast<int>(block.edges.size()), 0, true};
    if (block.edges.size() == 1) {
      merged.push_back(block.edges.front());
      result.blocks.push_back(report);
      continue;
    }
    const Graph local = block_graph(g, block);
    const BlockSolver solver(local);
    const int t = pick_t(solver, report.vertices);
    report.bound = t - 1;
    std::optional<SpanningTree> tree = t >= 2 ? solver.solve(t) : std::nullopt;
    report.feasible = tree.has_value();
    result.blocks.push_back(report);
    if (!tree) {
      result.exists = false;
      continue;
    }
    for (EdgeId e : tree->edges()) merged.push_back(block.edges[e]);
  }
  result.timings_ms.emplace_back("solve", elapsed_ms(start));

  if (result.exists) {
    start = Clock::now();
    SpanningTree tree(g, std::move(merged));
    result.certificate = stretch(g, tree);
    result.tree.assign(tree.edges().begin(), tree.edges().end());
    result.timings_ms.emplace_back("certificate", elapsed_ms(start));
  }
  return result;
}

}  // namespace

SpannerResult tree_t_spanner(const Graph& g, int t) {
  require_bound(t);
  return solve_blocks(g, t, [t](const BlockSolver&, int) { return t; });
}

MinStretchResult min_stretch(const Graph& g) {
  MinStretchResult out;
  out.result = solve_blocks(g, 0, [&out](const BlockSolver& solver, int vertices) {
    int lo = 2;
    int hi = vertices - 1;
    while (lo < hi) {
      const int mid = lo + (hi - lo) / 2;
      if (solver.feasible(mid)) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    out.t = std::max(out.t, lo);
    return lo;
  });
  out.result.t_queried = out.t;
  return out;
}

}  // namespace tspanner
