#include <algorithm>
#include <cmath>
#include <string>

#include "calambda/construct.hpp"
#include "calambda/errors.hpp"

namespace calambda {

bool compatible(const Interaction& a, const Interaction& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.columns.size() && j < b.columns.size()) {
    if (a.columns[i] < b.columns[j]) {
      ++i;
    } else if (a.columns[i] > b.columns[j]) {
      ++j;
    } else {
      if (a.symbols[i] != b.symbols[j]) return false;
      ++i;
      ++j;
    }
  }
  return true;
}

InteractionSpace::InteractionSpace(const CAParams& params, std::int64_t cap) : params_(params) {
  validate(params);
  const double logSize = log_binomial(params.k, params.t) +
                         static_cast<double>(params.t) * std::log(static_cast<double>(params.v));
  if (logSize > std::log(static_cast<double>(cap)) + 1e-9)
    throw CapExceeded("C(k,t) v^t = " + std::to_string(std::exp(logSize)) + " interactions exceeds cap " +
                      std::to_string(cap));
  vt_ = alphabet_power(params);
  const auto t = static_cast<std::size_t>(params.t);
  const auto k = static_cast<std::int32_t>(params.k);
  containing_.assign(static_cast<std::size_t>(k), {});

  std::vector<std::int32_t> cols(t);
  for (std::size_t i = 0; i < t; ++i) cols[i] = static_cast<std::int32_t>(i);
  while (true) {
    for (std::int32_t c : cols) containing_[static_cast<std::size_t>(c)].push_back(setCount_);
    sets_.insert(sets_.end(), cols.begin(), cols.end());
    ++setCount_;
    // Advance to the next combination in lexicographic order.
    std::size_t i = t;
    while (i > 0 && cols[i - 1] == k - static_cast<std::int32_t>(t - i + 1)) --i;
    if (i == 0) break;
    ++cols[i - 1];
    for (std::size_t j = i; j < t; ++j) cols[j] = cols[j - 1] + 1;
  }
  if (setCount_ * vt_ > cap)
    throw CapExceeded("C(k,t) v^t = " + std::to_string(setCount_ * vt_) + " interactions exceeds cap " +
                      std::to_string(cap));
}

std::span<const std::int32_t> InteractionSpace::column_set(std::int64_t setRank) const {
  const auto t = static_cast<std::size_t>(params_.t);
  return {sets_.data() + static_cast<std::size_t>(setRank) * t, t};
}

const std::vector<std::int64_t>& InteractionSpace::sets_containing(std::int32_t col) const {
  return containing_.at(static_cast<std::size_t>(col));
}

std::int64_t InteractionSpace::set_rank(std::span<const std::int32_t> columns) const {
  std::int64_t lo = 0;
  std::int64_t hi = setCount_;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    const auto s = column_set(mid);
    if (std::lexicographical_compare(s.begin(), s.end(), columns.begin(), columns.end())) lo = mid + 1;
    else hi = mid;
  }
  if (lo == setCount_ || !std::ranges::equal(column_set(lo), columns))
    throw ValidationError("not a valid column set");
  return lo;
}

std::int64_t InteractionSpace::tuple_rank(std::span<const Symbol> symbols) const {
  std::int64_t rank = 0;
  for (Symbol s : symbols) rank = rank * params_.v + s;
  return rank;
}

std::int64_t InteractionSpace::tuple_rank_in_row(const CoverageArray& array, std::int64_t r,
                                                 std::int64_t setRank) const {
  std::int64_t rank = 0;
  for (std::int32_t c : column_set(setRank)) rank = rank * params_.v + array.at(r, c);
  return rank;
}

Interaction InteractionSpace::interaction(std::int64_t index) const {
  const std::int64_t setRank = index / vt_;
  std::int64_t tuple = index % vt_;
  Interaction out;
  const auto cols = column_set(setRank);
  out.columns.assign(cols.begin(), cols.end());
  out.symbols.assign(cols.size(), 0);
  for (std::size_t i = cols.size(); i-- > 0;) {
    out.symbols[i] = static_cast<Symbol>(tuple % params_.v);
    tuple /= params_.v;
  }
  return out;
}

std::int64_t InteractionSpace::index_of(const Interaction& interaction) const {
  if (interaction.symbols.size() != static_cast<std::size_t>(params_.t) ||
      interaction.columns.size() != interaction.symbols.size())
    throw ValidationError("interaction has the wrong strength");
  for (Symbol s : interaction.symbols)
    if (s < 0 || s >= params_.v) throw ValidationError("interaction symbol out of range");
  return set_rank(interaction.columns) * vt_ + tuple_rank(interaction.symbols);
}

}  // namespace calambda
