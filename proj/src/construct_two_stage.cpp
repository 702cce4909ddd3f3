#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "calambda/bounds.hpp"
#include "calambda/construct.hpp"
#include "calambda/errors.hpp"
#include "calambda/verify.hpp"

namespace calambda {
namespace {

std::vector<Symbol> random_row(const CAParams& params, std::mt19937_64& rng) {
  std::uniform_int_distribution<Symbol> symbol(0, static_cast<Symbol>(params.v - 1));
  std::vector<Symbol> row(static_cast<std::size_t>(params.k));
  for (Symbol& s : row) s = symbol(rng);
  return row;
}

}  // namespace

void append_naive_second_stage(CoverageArray& array, std::mt19937_64& rng, std::int64_t interactionCap) {
  const CoverageReport report = coverage_report(array, std::nullopt, interactionCap);
  for (const auto& [interaction, count] : report.deficient) {
    for (std::int64_t i = count; i < array.params.lambda; ++i) {
      std::vector<Symbol> row = random_row(array.params, rng);
      for (std::size_t j = 0; j < interaction.columns.size(); ++j)
        row[static_cast<std::size_t>(interaction.columns[j])] = interaction.symbols[j];
      array.append_row(row);
    }
  }
}

CoverageArray two_stage_naive_construct(const CAParams& params, std::uint64_t seed, const ConstructOptions& options,
                                        ConstructStats* stats) {
  const auto N = static_cast<std::int64_t>(two_stage_exact_min(params).diagnostics.at("argmin_N"));
  std::mt19937_64 rng(seed);
  CoverageArray array = random_array(params, N, rng);
  append_naive_second_stage(array, rng, options.interactionCap);
  if (stats) {
    stats->firstStageRows = N;
    stats->secondStageRows = array.rows - N;
  }
  return array;
}

void append_color_rows(CoverageArray& array, const IncompatibilityGraph& graph, const Coloring& coloring,
                       std::mt19937_64& rng) {
  if (!is_proper(graph, coloring)) throw InternalError("coloring is not proper");
  std::vector<std::vector<std::size_t>> classes(static_cast<std::size_t>(coloring.colors));
  for (std::size_t i = 0; i < coloring.color.size(); ++i)
    classes[static_cast<std::size_t>(coloring.color[i])].push_back(i);
  for (const auto& members : classes) {
    std::vector<Symbol> row = random_row(array.params, rng);
    for (std::size_t vtx : members) {
      const Interaction& in = graph.vertices[vtx].interaction;
      for (std::size_t j = 0; j < in.columns.size(); ++j)
        row[static_cast<std::size_t>(in.columns[j])] = in.symbols[j];
    }
    array.append_row(row);
  }
}

CoverageArray two_stage_coloring_construct(const CAParams& params, std::uint64_t seed,
                                           const ConstructOptions& options, ConstructStats* stats) {
  const BoundResult bound = coloring_bound_min(params);
  const auto N = static_cast<std::int64_t>(bound.diagnostics.at("argmin_N"));
  const double expected = bound.diagnostics.at("expected_edges");
  std::mt19937_64 rng(seed);

  CoverageArray array;
  IncompatibilityGraph graph;
  std::int64_t redraws = 0;
  while (true) {
    array = random_array(params, N, rng);
    graph = build_incompatibility_graph(array, options.interactionCap);
    if (static_cast<double>(graph.edge_count()) <= expected) break;
    if (++redraws > options.maxRedraws)
      throw BudgetExhausted("two-stage coloring: first stage exceeded " + std::to_string(expected) +
                                " expected edges on " + std::to_string(options.maxRedraws + 1) + " draws",
                            {"last draw had " + std::to_string(graph.edge_count()) + " edges"});
  }

  // Greedy in decreasing-degree order first, then random orders while the
  // color count stays above 1/2 + sqrt(2|E| + 1/4).
  const auto target = static_cast<std::int32_t>(
      std::floor(coloring_chromatic_upper(static_cast<double>(graph.edge_count()))));
  Coloring best = greedy_color(graph);
  std::int64_t attempts = 1;
  std::vector<std::int32_t> order(graph.vertices.size());
  std::iota(order.begin(), order.end(), 0);
  while (best.colors > target && attempts < options.maxColoringAttempts) {
    std::shuffle(order.begin(), order.end(), rng);
    Coloring c = greedy_color(graph, order);
    if (c.colors < best.colors) best = std::move(c);
    ++attempts;
  }
  append_color_rows(array, graph, best, rng);

  if (stats) {
    stats->firstStageRows = N;
    stats->secondStageRows = array.rows - N;
    stats->redraws = redraws;
    stats->coloringAttempts = attempts;
    stats->graphEdges = graph.edge_count();
    stats->expectedEdges = expected;
  }
  return array;
}

}  // namespace calambda
