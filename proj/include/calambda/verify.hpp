#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "calambda/construct.hpp"

namespace calambda {

struct CoverageReport {
  std::shared_ptr<const InteractionSpace> space;
  std::int64_t lambda = 1;
  std::int64_t totalInteractions = 0;
  std::int64_t minCoverage = 0;
  /// Coverage count per interaction, in InteractionSpace order.
  std::vector<std::int64_t> counts;
  std::vector<std::pair<Interaction, std::int64_t>> deficient;

  std::int64_t count(const Interaction& interaction) const;
  std::int64_t total_coverage() const;
};

/// Every t-way interaction over k columns and v symbols, in lexicographic
/// order. Throws ValidationError on invalid dimensions.
std::vector<Interaction> enumerate_interactions(std::int64_t t, std::int64_t k, std::int64_t v,
                                                std::int64_t cap = kDefaultInteractionCap);

/// Exact coverage counts. lambda defaults to array.params.lambda.
CoverageReport coverage_report(const CoverageArray& array, std::optional<std::int64_t> lambda = std::nullopt,
                               std::int64_t cap = kDefaultInteractionCap);

bool is_ca_lambda(const CoverageArray& array, std::int64_t cap = kDefaultInteractionCap);

}  // namespace calambda
