#include <doctest.h>

#include <algorithm>
#include <set>

#include "calambda/construct.hpp"
#include "calambda/errors.hpp"
#include "calambda/verify.hpp"
#include "oracles.hpp"

using namespace calambda;

namespace {

CoverageArray full_factorial_2x2(std::int64_t lambda) {
  CoverageArray a = CoverageArray::empty({2, 2, 2, lambda});
  for (Symbol x : {0, 1})
    for (Symbol y : {0, 1}) a.append_row(std::vector<Symbol>{x, y});
  return a;
}

// Interaction-major count: scan the rows for each interaction.
std::int64_t count_rows(const CoverageArray& a, const Interaction& in) {
  std::int64_t n = 0;
  for (std::int64_t r = 0; r < a.rows; ++r) {
    bool all = true;
    for (std::size_t j = 0; j < in.columns.size(); ++j) all = all && a.at(r, in.columns[j]) == in.symbols[j];
    n += all;
  }
  return n;
}

// Keep the rows with symbol s in column c and drop that column.
CoverageArray derived_array(const CoverageArray& a, std::int64_t c, Symbol s) {
  CAParams p = a.params;
  p.t -= 1;
  p.k -= 1;
  CoverageArray out = CoverageArray::empty(p);
  for (std::int64_t r = 0; r < a.rows; ++r) {
    if (a.at(r, c) != s) continue;
    std::vector<Symbol> row;
    for (std::int64_t j = 0; j < a.params.k; ++j)
      if (j != c) row.push_back(a.at(r, j));
    out.append_row(row);
  }
  return out;
}

}  // namespace

TEST_CASE("interaction enumeration") {
  CHECK(enumerate_interactions(2, 3, 2).size() == 12);
  CHECK(enumerate_interactions(2, 2, 2).size() == 4);
  CHECK_THROWS_AS(enumerate_interactions(6, 5, 2), ValidationError);

  const auto all = enumerate_interactions(3, 6, 3);
  CHECK(all.size() == 20 * 27);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  for (const auto& in : all) {
    CHECK(in.columns.size() == 3);
    CHECK(std::is_sorted(in.columns.begin(), in.columns.end()));
  }
}

TEST_CASE("interaction space ranks round trip") {
  const InteractionSpace space({3, 7, 3, 1});
  CHECK(space.size() == 35 * 27);
  for (std::int64_t i = 0; i < space.size(); i += 7) CHECK(space.index_of(space.interaction(i)) == i);
  for (std::int32_t col = 0; col < 7; ++col) CHECK(space.sets_containing(col).size() == 15);
  CHECK_THROWS_AS(InteractionSpace({6, 40, 7, 1}), CapExceeded);
}

TEST_CASE("full factorial coverage") {
  const auto a = full_factorial_2x2(1);
  const auto report = coverage_report(a);
  CHECK(report.totalInteractions == 4);
  CHECK(report.minCoverage == 1);
  for (auto c : report.counts) CHECK(c == 1);
  CHECK(report.deficient.empty());
  CHECK(is_ca_lambda(a));
  CHECK_FALSE(is_ca_lambda(full_factorial_2x2(2)));
  CHECK(coverage_report(a, 2).deficient.size() == 4);

  const auto doubled = juxtapose(a, 2);
  for (auto c : coverage_report(doubled).counts) CHECK(c == 2);

  const auto empty = coverage_report(CoverageArray::empty({2, 4, 2, 1}));
  CHECK(empty.minCoverage == 0);
  CHECK(empty.total_coverage() == 0);
  CHECK(empty.deficient.size() == 24);
}

TEST_CASE("fewer than lambda v^t rows never cover") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK_FALSE(is_ca_lambda(random_array({2, 3, 2, 2}, 7, seed)));
    CHECK_FALSE(is_ca_lambda(random_array({2, 3, 3, 1}, 8, seed)));
  }
}

TEST_CASE("row-major counts match interaction-major counts") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto a = random_array({3, 6, 2, 2}, 15, seed);
    const auto report = coverage_report(a);
    const auto all = enumerate_interactions(3, 6, 2);
    std::int64_t minimum = a.rows;
    std::size_t deficient = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
      const std::int64_t c = count_rows(a, all[i]);
      CHECK(report.counts[i] == c);
      CHECK(report.count(all[i]) == c);
      minimum = std::min(minimum, c);
      deficient += c < 2;
    }
    CHECK(report.minCoverage == minimum);
    CHECK(report.deficient.size() == deficient);
    // Every row realizes one tuple per column set.
    CHECK(report.total_coverage() == a.rows * 20);
  }
}

TEST_CASE("deleting a column and keeping one symbol's rows lowers the strength") {
  const auto a = density_construct({3, 5, 2, 2}, 0);
  REQUIRE(is_ca_lambda(a));
  for (std::int64_t c = 0; c < 5; ++c)
    for (Symbol s : {0, 1}) CHECK(is_ca_lambda(derived_array(a, c, s)));
}

TEST_CASE("deleting lambda - 1 rows keeps every interaction covered") {
  const auto a = density_construct({2, 6, 2, 3}, 0);
  REQUIRE(is_ca_lambda(a));
  for (std::int64_t start = 0; start + 2 <= a.rows; ++start) {
    CoverageArray b = CoverageArray::empty(a.params);
    for (std::int64_t r = 0; r < a.rows; ++r)
      if (r < start || r >= start + 2) b.append_row(a.row(r));
    b.params.lambda = 1;
    CHECK(is_ca_lambda(b));
  }
}

TEST_CASE("verification respects the cap") {
  CHECK_THROWS_AS(coverage_report(random_array({2, 5, 2, 1}, 3, 1), std::nullopt, 10), CapExceeded);
}

TEST_CASE("malformed arrays are rejected") {
  auto a = full_factorial_2x2(1);
  a.cells[0] = 2;
  CHECK_THROWS_AS(coverage_report(a), ValidationError);
  a.cells.pop_back();
  CHECK_THROWS_AS(coverage_report(a), ValidationError);
}
