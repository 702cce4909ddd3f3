#include <algorithm>
#include <string>
#include <vector>

#include "calambda/bounds.hpp"
#include "calambda/construct.hpp"
#include "calambda/errors.hpp"

namespace calambda {
namespace {

// True when every value tuple on the column set appears at least lambda times.
bool set_covered(const CoverageArray& array, const InteractionSpace& space, std::int64_t setRank,
                 std::vector<std::int64_t>& scratch) {
  std::fill(scratch.begin(), scratch.end(), 0);
  std::int64_t short_ = space.tuples_per_set();
  for (std::int64_t r = 0; r < array.rows && short_ > 0; ++r)
    if (++scratch[static_cast<std::size_t>(space.tuple_rank_in_row(array, r, setRank))] == array.params.lambda)
      --short_;
  return short_ == 0;
}

std::string describe_set(const InteractionSpace& space, std::int64_t setRank) {
  std::string out = "columns {";
  bool first = true;
  for (std::int32_t c : space.column_set(setRank)) {
    if (!first) out += ",";
    out += std::to_string(c);
    first = false;
  }
  return out + "}";
}

}  // namespace

std::int64_t moser_tardos_repair(CoverageArray& array, std::mt19937_64& rng, std::int64_t maxResamples,
                                 std::int64_t interactionCap) {
  const InteractionSpace space(array.params, interactionCap);
  std::uniform_int_distribution<Symbol> symbol(0, static_cast<Symbol>(array.params.v - 1));
  std::vector<std::int64_t> scratch(static_cast<std::size_t>(space.tuples_per_set()));
  std::int64_t resamples = 0;
  std::int64_t s = 0;
  while (s < space.column_set_count()) {
    if (set_covered(array, space, s, scratch)) {
      ++s;
      continue;
    }
    if (resamples == maxResamples) {
      std::vector<std::string> failing;
      for (std::int64_t f = s; f < space.column_set_count(); ++f)
        if (!set_covered(array, space, f, scratch)) failing.push_back(describe_set(space, f));
      throw BudgetExhausted("moser-tardos: resample budget of " + std::to_string(maxResamples) + " exhausted",
                            std::move(failing));
    }
    const auto cols = space.column_set(s);
    for (std::int64_t r = 0; r < array.rows; ++r)
      for (std::int32_t c : cols) array.at(r, c) = symbol(rng);
    ++resamples;
    s = 0;
  }
  return resamples;
}

CoverageArray moser_tardos_construct(const CAParams& params, std::uint64_t seed, std::int64_t maxResamples,
                                     const ConstructOptions& options, ConstructStats* stats) {
  const std::int64_t N = lll_exact_min(params).rows;
  std::mt19937_64 rng(seed);
  CoverageArray array = random_array(params, N, rng);
  const std::int64_t resamples = moser_tardos_repair(array, rng, maxResamples, options.interactionCap);
  if (stats) {
    stats->firstStageRows = N;
    stats->resamples = resamples;
  }
  return array;
}

}  // namespace calambda
