#include "calambda/verify.hpp"

#include <algorithm>
#include <numeric>

#include "calambda/errors.hpp"

namespace calambda {

std::int64_t CoverageReport::count(const Interaction& interaction) const {
  return counts.at(static_cast<std::size_t>(space->index_of(interaction)));
}

std::int64_t CoverageReport::total_coverage() const {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

std::vector<Interaction> enumerate_interactions(std::int64_t t, std::int64_t k, std::int64_t v, std::int64_t cap) {
  const InteractionSpace space(CAParams{t, k, v, 1}, cap);
  std::vector<Interaction> out;
  out.reserve(static_cast<std::size_t>(space.size()));
  for (std::int64_t i = 0; i < space.size(); ++i) out.push_back(space.interaction(i));
  return out;
}

CoverageReport coverage_report(const CoverageArray& array, std::optional<std::int64_t> lambda, std::int64_t cap) {
  array.check();
  CoverageReport report;
  report.space = std::make_shared<const InteractionSpace>(array.params, cap);
  report.lambda = lambda.value_or(array.params.lambda);
  if (report.lambda < 1) throw ValidationError("lambda >= 1 violated");
  const InteractionSpace& space = *report.space;
  report.totalInteractions = space.size();
  report.counts.assign(static_cast<std::size_t>(space.size()), 0);
  for (std::int64_t s = 0; s < space.column_set_count(); ++s) {
    const std::int64_t base = s * space.tuples_per_set();
    for (std::int64_t r = 0; r < array.rows; ++r)
      ++report.counts[static_cast<std::size_t>(base + space.tuple_rank_in_row(array, r, s))];
  }
  report.minCoverage = *std::min_element(report.counts.begin(), report.counts.end());
  for (std::int64_t i = 0; i < space.size(); ++i) {
    const std::int64_t c = report.counts[static_cast<std::size_t>(i)];
    if (c < report.lambda) report.deficient.emplace_back(space.interaction(i), c);
  }
  return report;
}

bool is_ca_lambda(const CoverageArray& array, std::int64_t cap) {
  return coverage_report(array, std::nullopt, cap).minCoverage >= array.params.lambda;
}

}  // namespace calambda
