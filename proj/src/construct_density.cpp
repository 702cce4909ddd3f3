// Derandomized SLJ construction by conditional expectations.
//
// Cells are fixed row by row, left to right. For an interaction I with
// current count c < lambda, let m be the number of rows after the current
// one and q the probability that the current partially fixed row realizes I.
// I ends deficient with probability
//   q P(Bin(m,p) < lambda-c-1) + (1-q) P(Bin(m,p) < lambda-c)
//     = T(need) - q D(need),   need = lambda - c, D(need) = P(Bin(m,p) = need-1).
// Fixing column col to s changes q only for interactions on column sets S
// containing col. If col sits at position j of S with u = t - j unfixed
// positions, q moves from v^-u to v^-(u-1) (symbol matches) or 0, so
//   dE(s) = sum_S [ v^-u A_S - v^-(u-1) A_S(s) ]
// with A_S(s) the sum of D over the consistent interactions showing s on col.

#include <cmath>
#include <string>
#include <vector>

#include "calambda/bounds.hpp"
#include "calambda/construct.hpp"
#include "calambda/errors.hpp"

namespace calambda {
namespace {

struct TailTable {
  std::vector<double> T;  // T[need] = P(Bin(m,p) < need), need in [0, lambda]
  std::vector<double> D;  // D[need] = P(Bin(m,p) = need-1), D[0] = 0
};

TailTable tail_table(std::int64_t m, std::int64_t lambda, double p) {
  TailTable tab;
  tab.T.assign(static_cast<std::size_t>(lambda + 1), 0.0);
  tab.D.assign(static_cast<std::size_t>(lambda + 1), 0.0);
  for (std::int64_t need = 1; need <= lambda; ++need) {
    tab.D[static_cast<std::size_t>(need)] = std::exp(log_binomial_pmf(m, need - 1, p));
    tab.T[static_cast<std::size_t>(need)] = tab.T[static_cast<std::size_t>(need - 1)] + tab.D[static_cast<std::size_t>(need)];
  }
  return tab;
}

}  // namespace

CoverageArray density_construct(const CAParams& params, std::uint64_t /*seed*/, const ConstructOptions& options,
                                ConstructStats* stats) {
  const InteractionSpace space(params, options.interactionCap);
  const std::int64_t R = slj_exact_min(params).rows;
  const std::int64_t t = params.t;
  const std::int64_t v = params.v;
  const std::int64_t lambda = params.lambda;
  const std::int64_t vt = space.tuples_per_set();
  const double p = 1.0 / static_cast<double>(vt);

  std::vector<std::int64_t> counts(static_cast<std::size_t>(space.size()), 0);
  std::int64_t deficient = space.size();
  std::vector<double> vPowNeg(static_cast<std::size_t>(t + 1), 1.0);  // v^-i
  std::vector<std::int64_t> vPow(static_cast<std::size_t>(t + 1), 1);
  for (std::int64_t i = 1; i <= t; ++i) {
    vPowNeg[static_cast<std::size_t>(i)] = vPowNeg[static_cast<std::size_t>(i - 1)] / static_cast<double>(v);
    vPow[static_cast<std::size_t>(i)] = vPow[static_cast<std::size_t>(i - 1)] * v;
  }

  CoverageArray out = CoverageArray::empty(params);
  std::vector<Symbol> row(static_cast<std::size_t>(params.k), 0);
  std::vector<double> score(static_cast<std::size_t>(v));
  std::vector<double> trace;
  double tracked = 0.0;

  auto need_of = [&](std::int64_t index) { return lambda - counts[static_cast<std::size_t>(index)]; };

  for (std::int64_t r = 0; r < R && deficient > 0; ++r) {
    const TailTable tab = tail_table(R - r - 1, lambda, p);
    auto D = [&](std::int64_t index) {
      const std::int64_t need = need_of(index);
      return need > 0 ? tab.D[static_cast<std::size_t>(need)] : 0.0;
    };

    double E = 0.0;
    for (std::int64_t i = 0; i < space.size(); ++i) {
      const std::int64_t need = need_of(i);
      if (need > 0) E += tab.T[static_cast<std::size_t>(need)] - p * tab.D[static_cast<std::size_t>(need)];
    }
    if (r > 0 && E > tracked + 1e-9 * std::max(1.0, tracked))
      throw InternalError("density: expectation increased across a row boundary");
    tracked = E;
    if (r == 0) trace.push_back(E);

    for (std::int64_t col = 0; col < params.k; ++col) {
      std::fill(score.begin(), score.end(), 0.0);
      double keep = 0.0;  // sum_S v^-u A_S
      for (std::int64_t s : space.sets_containing(static_cast<std::int32_t>(col))) {
        const auto cols = space.column_set(s);
        std::int64_t j = 0;
        std::int64_t prefix = 0;
        while (cols[static_cast<std::size_t>(j)] != col) {
          prefix = prefix * v + row[static_cast<std::size_t>(cols[static_cast<std::size_t>(j)])];
          ++j;
        }
        const std::int64_t u = t - j;
        const std::int64_t block = vPow[static_cast<std::size_t>(u - 1)];
        const std::int64_t base = s * vt + prefix * vPow[static_cast<std::size_t>(u)];
        const double weight = vPowNeg[static_cast<std::size_t>(u - 1)];
        for (std::int64_t sym = 0; sym < v; ++sym) {
          double acc = 0.0;
          const std::int64_t start = base + sym * block;
          for (std::int64_t i = start; i < start + block; ++i) acc += D(i);
          score[static_cast<std::size_t>(sym)] += weight * acc;
          keep += vPowNeg[static_cast<std::size_t>(u)] * acc;
        }
      }
      Symbol best = 0;
      for (Symbol sym = 1; sym < v; ++sym)
        if (score[static_cast<std::size_t>(sym)] > score[static_cast<std::size_t>(best)] * (1.0 + 1e-12) + 1e-300)
          best = sym;
      const double delta = keep - score[static_cast<std::size_t>(best)];
      if (delta > 1e-9 * std::max(1.0, tracked))
        throw InternalError("density: expectation increased after fixing a cell");
      tracked += delta;
      trace.push_back(tracked);
      row[static_cast<std::size_t>(col)] = best;
    }

    out.append_row(row);
    for (std::int64_t s = 0; s < space.column_set_count(); ++s) {
      const std::int64_t i = s * vt + space.tuple_rank_in_row(out, out.rows - 1, s);
      if (++counts[static_cast<std::size_t>(i)] == lambda) --deficient;
    }
  }

  if (deficient > 0)
    throw InternalError("density: " + std::to_string(deficient) + " interactions deficient after " +
                        std::to_string(R) + " rows");
  if (stats) {
    stats->firstStageRows = out.rows;
    stats->expectationTrace = std::move(trace);
  }
  return out;
}

}  // namespace calambda
