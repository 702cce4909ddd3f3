#include <algorithm>
#include <numeric>

#include "calambda/construct.hpp"
#include "calambda/errors.hpp"
#include "calambda/verify.hpp"

namespace calambda {

std::int64_t IncompatibilityGraph::edge_count() const {
  std::int64_t twice = 0;
  for (const auto& adj : adjacency) twice += static_cast<std::int64_t>(adj.size());
  return twice / 2;
}

std::int64_t IncompatibilityGraph::max_degree() const {
  std::int64_t best = 0;
  for (const auto& adj : adjacency) best = std::max(best, static_cast<std::int64_t>(adj.size()));
  return best;
}

bool IncompatibilityGraph::has_edge(std::int32_t a, std::int32_t b) const {
  const auto& adj = adjacency.at(static_cast<std::size_t>(a));
  return std::binary_search(adj.begin(), adj.end(), b);
}

IncompatibilityGraph build_incompatibility_graph(
    const std::vector<std::pair<Interaction, std::int64_t>>& deficient, std::int64_t lambda) {
  IncompatibilityGraph g;
  std::vector<std::size_t> owner;
  for (std::size_t i = 0; i < deficient.size(); ++i) {
    const auto& [interaction, count] = deficient[i];
    for (std::int64_t r = std::max<std::int64_t>(count, 0) + 1; r <= lambda; ++r) {
      g.vertices.push_back({interaction, r});
      owner.push_back(i);
    }
  }
  const std::size_t n = g.vertices.size();
  g.adjacency.assign(n, {});
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const bool edge = owner[a] == owner[b] ||
                        !compatible(deficient[owner[a]].first, deficient[owner[b]].first);
      if (edge) {
        g.adjacency[a].push_back(static_cast<std::int32_t>(b));
        g.adjacency[b].push_back(static_cast<std::int32_t>(a));
      }
    }
  }
  return g;
}

IncompatibilityGraph build_incompatibility_graph(const CoverageArray& array, std::int64_t interactionCap) {
  const CoverageReport report = coverage_report(array, std::nullopt, interactionCap);
  return build_incompatibility_graph(report.deficient, array.params.lambda);
}

Coloring greedy_color(const IncompatibilityGraph& graph, std::span<const std::int32_t> order) {
  const std::size_t n = graph.vertices.size();
  if (order.size() != n) throw ValidationError("coloring order must list every vertex once");
  Coloring c;
  c.color.assign(n, -1);
  std::vector<char> used;
  for (std::int32_t vtx : order) {
    const auto& adj = graph.adjacency[static_cast<std::size_t>(vtx)];
    used.assign(adj.size() + 1, 0);
    for (std::int32_t w : adj) {
      const std::int32_t cw = c.color[static_cast<std::size_t>(w)];
      if (cw >= 0 && static_cast<std::size_t>(cw) < used.size()) used[static_cast<std::size_t>(cw)] = 1;
    }
    std::int32_t pick = 0;
    while (used[static_cast<std::size_t>(pick)]) ++pick;
    c.color[static_cast<std::size_t>(vtx)] = pick;
    c.colors = std::max(c.colors, pick + 1);
  }
  return c;
}

Coloring greedy_color(const IncompatibilityGraph& graph) {
  std::vector<std::int32_t> order(graph.vertices.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
    return graph.adjacency[static_cast<std::size_t>(a)].size() > graph.adjacency[static_cast<std::size_t>(b)].size();
  });
  return greedy_color(graph, order);
}

bool is_proper(const IncompatibilityGraph& graph, const Coloring& coloring) {
  if (coloring.color.size() != graph.vertices.size()) return false;
  for (std::size_t a = 0; a < graph.adjacency.size(); ++a) {
    if (coloring.color[a] < 0 || coloring.color[a] >= coloring.colors) return false;
    for (std::int32_t b : graph.adjacency[a])
      if (coloring.color[a] == coloring.color[static_cast<std::size_t>(b)]) return false;
  }
  return true;
}

}  // namespace calambda
