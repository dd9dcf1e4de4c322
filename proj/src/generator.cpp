#include <algorithm>
#include <random>
#include <string>

#include "tspanner/error.hpp"
#include "tspanner/outerplanar.hpp"

namespace tspanner {

Graph random_outerplanar(int n, Fraction chord_fraction, std::uint64_t seed) {
  if (n < 3) throw Error(Errc::PreconditionViolated, "random_outerplanar needs n >= 3");
  if (chord_fraction.den <= 0 || chord_fraction.num < 0 || chord_fraction.num > chord_fraction.den) {
    throw Error(Errc::PreconditionViolated, "chord fraction must lie in [0,1]");
  }
  std::mt19937_64 rng(seed);

  // Triangulate the polygon: the arc a..b closed by edge (a,b) is split at a
  // random apex c, giving triangle (a,c,b).
  std::vector<Edge> chords;
  chords.reserve(n - 3);
  std::vector<std::pair<Vertex, Vertex>> arcs{{0, n - 1}};
  while (!arcs.empty()) {
    auto [a, b] = arcs.back();
    arcs.pop_back();
    std::uniform_int_distribution<Vertex> pick(a + 1, b - 1);
    const Vertex c = pick(rng);
    if (c - a >= 2) {
      chords.push_back({a, c});
      arcs.emplace_back(a, c);
    }
    if (b - c >= 2) {
      chords.push_back({c, b});
      arcs.emplace_back(c, b);
    }
  }

  const std::int64_t available = n - 3;
  const std::int64_t keep = (2 * chord_fraction.num * available + chord_fraction.den) / (2 * chord_fraction.den);
  std::shuffle(chords.begin(), chords.end(), rng);
  chords.resize(static_cast<std::size_t>(keep));
  std::sort(chords.begin(), chords.end(),
            [](const Edge& x, const Edge& y) { return std::pair(x.u, x.v) < std::pair(y.u, y.v); });

  std::vector<Edge> pairs;
  pairs.reserve(n + chords.size());
  for (Vertex v = 0; v < n; ++v) pairs.push_back({v, static_cast<Vertex>((v + 1) % n)});
  pairs.insert(pairs.end(), chords.begin(), chords.end());
  return Graph(n, pairs);
}

}  // namespace tspanner
