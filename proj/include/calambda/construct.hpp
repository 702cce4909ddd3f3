#pragma once

// Covering arrays and the constructions that build them.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <vector>

#include "calambda/cadomain.hpp"

namespace calambda {

using Symbol = std::int32_t;

/// N x k symbol matrix over {0..v-1}, stored row-major. params.lambda is the
/// target index the array is meant to achieve.
struct CoverageArray {
  CAParams params;
  std::int64_t rows = 0;
  std::vector<Symbol> cells;

  static CoverageArray empty(const CAParams& params);

  Symbol at(std::int64_t row, std::int64_t col) const {
    return cells[static_cast<std::size_t>(row * params.k + col)];
  }
  Symbol& at(std::int64_t row, std::int64_t col) {
    return cells[static_cast<std::size_t>(row * params.k + col)];
  }
  std::span<const Symbol> row(std::int64_t r) const {
    return {cells.data() + r * params.k, static_cast<std::size_t>(params.k)};
  }
  void append_row(std::span<const Symbol> row);

  /// Throws ValidationError on bad dimensions or out-of-range symbols.
  void check() const;

  friend bool operator==(const CoverageArray&, const CoverageArray&) = default;
};

/// t (column, symbol) pairs with strictly increasing columns.
struct Interaction {
  std::vector<std::int32_t> columns;
  std::vector<Symbol> symbols;

  friend auto operator<=>(const Interaction&, const Interaction&) = default;
  friend bool operator==(const Interaction&, const Interaction&) = default;
};

/// Two interactions are compatible when every shared column carries the same
/// symbol, i.e. some row can realize both.
bool compatible(const Interaction& a, const Interaction& b);

/// Above this many interactions (C(k,t) v^t) construction and verification
/// refuse to allocate counters.
inline constexpr std::int64_t kDefaultInteractionCap = 10'000'000;

/// Dense numbering of the t-way interactions: column sets in lexicographic
/// order, and within a set the value tuples in lexicographic order (first
/// column most significant). index = setRank * v^t + tupleRank.
class InteractionSpace {
 public:
  /// Throws CapExceeded when C(k,t) v^t exceeds cap.
  explicit InteractionSpace(const CAParams& params, std::int64_t cap = kDefaultInteractionCap);

  std::int64_t column_set_count() const { return setCount_; }
  std::int64_t tuples_per_set() const { return vt_; }
  std::int64_t size() const { return setCount_ * vt_; }
  const CAParams& params() const { return params_; }

  std::span<const std::int32_t> column_set(std::int64_t setRank) const;
  /// Ranks of the column sets that contain col, increasing.
  const std::vector<std::int64_t>& sets_containing(std::int32_t col) const;

  std::int64_t set_rank(std::span<const std::int32_t> columns) const;
  std::int64_t tuple_rank(std::span<const Symbol> symbols) const;
  /// Tuple rank of the value tuple that row r of array shows on a column set.
  std::int64_t tuple_rank_in_row(const CoverageArray& array, std::int64_t r, std::int64_t setRank) const;

  Interaction interaction(std::int64_t index) const;
  std::int64_t index_of(const Interaction& interaction) const;

 private:
  CAParams params_;
  std::int64_t setCount_ = 0;
  std::int64_t vt_ = 0;
  std::vector<std::int32_t> sets_;
  std::vector<std::vector<std::int64_t>> containing_;
};

/// Counters for the randomized constructions. Filled when a pointer is passed.
struct ConstructStats {
  std::int64_t firstStageRows = 0;
  std::int64_t secondStageRows = 0;
  std::int64_t resamples = 0;
  std::int64_t redraws = 0;
  std::int64_t coloringAttempts = 0;
  std::int64_t graphEdges = 0;
  double expectedEdges = 0.0;
  /// Density construction: the tracked expected number of deficient
  /// interactions after each fixed cell, starting with the initial value.
  std::vector<double> expectationTrace;
};

struct ConstructOptions {
  std::int64_t interactionCap = kDefaultInteractionCap;
  std::int64_t maxResamples = 1'000'000;
  std::int64_t maxRedraws = 50;
  std::int64_t maxColoringAttempts = 20;
};

/// N rows of i.i.d. uniform symbols from mt19937_64 seeded with seed.
CoverageArray random_array(const CAParams& params, std::int64_t N, std::uint64_t seed);
CoverageArray random_array(const CAParams& params, std::int64_t N, std::mt19937_64& rng);

/// Method of conditional expectations over slj_exact_min rows, one cell at a
/// time; stops early once every interaction is lambda-covered.
CoverageArray density_construct(const CAParams& params, std::uint64_t seed,
                                const ConstructOptions& options = {}, ConstructStats* stats = nullptr);

/// Random lll_exact_min-row array, then resample the columns of any t-set
/// that is not fully lambda-covered. Throws BudgetExhausted after
/// maxResamples resamples.
CoverageArray moser_tardos_construct(const CAParams& params, std::uint64_t seed, std::int64_t maxResamples,
                                     const ConstructOptions& options = {}, ConstructStats* stats = nullptr);

/// Resampling loop on an existing array. Returns the number of resamples.
std::int64_t moser_tardos_repair(CoverageArray& array, std::mt19937_64& rng, std::int64_t maxResamples,
                                 std::int64_t interactionCap = kDefaultInteractionCap);

/// Random first stage at the two-stage argmin, then lambda - c explicit rows
/// for every interaction covered c < lambda times.
CoverageArray two_stage_naive_construct(const CAParams& params, std::uint64_t seed,
                                        const ConstructOptions& options = {}, ConstructStats* stats = nullptr);

/// Appends the naive second stage to an existing first stage.
void append_naive_second_stage(CoverageArray& array, std::mt19937_64& rng,
                               std::int64_t interactionCap = kDefaultInteractionCap);

// Incompatibility graph of a partial array.

struct GraphVertex {
  Interaction interaction;
  std::int64_t replica = 0;
};

struct IncompatibilityGraph {
  std::vector<GraphVertex> vertices;
  std::vector<std::vector<std::int32_t>> adjacency;

  std::int64_t edge_count() const;
  std::int64_t max_degree() const;
  bool has_edge(std::int32_t a, std::int32_t b) const;
};

/// Vertices (I, r) for d(I) < r <= lambda; edges join replicas of one
/// interaction and incompatible interactions.
IncompatibilityGraph build_incompatibility_graph(const CoverageArray& array,
                                                 std::int64_t interactionCap = kDefaultInteractionCap);
IncompatibilityGraph build_incompatibility_graph(
    const std::vector<std::pair<Interaction, std::int64_t>>& deficient, std::int64_t lambda);

struct Coloring {
  std::vector<std::int32_t> color;
  std::int32_t colors = 0;
};

/// Greedy coloring in decreasing-degree order (ties by vertex index).
Coloring greedy_color(const IncompatibilityGraph& graph);
Coloring greedy_color(const IncompatibilityGraph& graph, std::span<const std::int32_t> order);
bool is_proper(const IncompatibilityGraph& graph, const Coloring& coloring);

/// First stage at the coloring_bound_min argmin, redrawn while the realized
/// graph has more edges than expected, then one row per color class.
CoverageArray two_stage_coloring_construct(const CAParams& params, std::uint64_t seed,
                                           const ConstructOptions& options = {}, ConstructStats* stats = nullptr);

/// Appends one row per color class of a proper coloring of graph.
void append_color_rows(CoverageArray& array, const IncompatibilityGraph& graph, const Coloring& coloring,
                       std::mt19937_64& rng);

/// base stacked lambda times. base must be lambda = 1 covering.
CoverageArray juxtapose(const CoverageArray& base, std::int64_t lambda,
                        std::int64_t interactionCap = kDefaultInteractionCap);

// Text format: "N k v t lambda", then N lines of k space-separated symbols.

void write_array(std::ostream& out, const CoverageArray& array);
CoverageArray read_array(std::istream& in);

}  // namespace calambda
