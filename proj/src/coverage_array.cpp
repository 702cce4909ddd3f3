#include <string>

#include "calambda/construct.hpp"
#include "calambda/errors.hpp"

namespace calambda {

CoverageArray CoverageArray::empty(const CAParams& params) {
  validate(params);
  CoverageArray a;
  a.params = params;
  return a;
}

void CoverageArray::append_row(std::span<const Symbol> row) {
  if (static_cast<std::int64_t>(row.size()) != params.k)
    throw ValidationError("row has " + std::to_string(row.size()) + " cells, expected k = " +
                          std::to_string(params.k));
  cells.insert(cells.end(), row.begin(), row.end());
  ++rows;
}

void CoverageArray::check() const {
  validate(params);
  if (rows < 0 || static_cast<std::int64_t>(cells.size()) != rows * params.k)
    throw ValidationError("cell count does not match N x k");
  for (Symbol s : cells)
    if (s < 0 || s >= params.v)
      throw ValidationError("symbol " + std::to_string(s) + " outside [0, " + std::to_string(params.v) + ")");
}

}  // namespace calambda
