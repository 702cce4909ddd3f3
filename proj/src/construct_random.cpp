#include <string>

#include "calambda/construct.hpp"
#include "calambda/errors.hpp"
#include "calambda/verify.hpp"

namespace calambda {

CoverageArray random_array(const CAParams& params, std::int64_t N, std::mt19937_64& rng) {
  if (N < 0) throw ValidationError("N >= 0 violated (N = " + std::to_string(N) + ")");
  CoverageArray a = CoverageArray::empty(params);
  std::uniform_int_distribution<Symbol> symbol(0, static_cast<Symbol>(params.v - 1));
  a.rows = N;
  a.cells.resize(static_cast<std::size_t>(N * params.k));
  for (Symbol& s : a.cells) s = symbol(rng);
  return a;
}

CoverageArray random_array(const CAParams& params, std::int64_t N, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_array(params, N, rng);
}

CoverageArray juxtapose(const CoverageArray& base, std::int64_t lambda, std::int64_t interactionCap) {
  if (lambda < 1) throw ValidationError("lambda >= 1 violated (lambda = " + std::to_string(lambda) + ")");
  if (coverage_report(base, 1, interactionCap).minCoverage < 1)
    throw ValidationError("juxtapose requires a verified lambda = 1 covering array");
  CoverageArray out = CoverageArray::empty(base.params);
  out.params.lambda = lambda;
  for (std::int64_t i = 0; i < lambda; ++i) {
    out.cells.insert(out.cells.end(), base.cells.begin(), base.cells.end());
    out.rows += base.rows;
  }
  return out;
}

}  // namespace calambda
