#include <charconv>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "calambda/construct.hpp"
#include "calambda/errors.hpp"

namespace calambda {
namespace {

std::vector<std::int64_t> parse_integers(std::string_view line, std::size_t lineNo) {
  std::vector<std::int64_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r'))
      throw ParseError("line " + std::to_string(lineNo) + ": expected integers");
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace

void write_array(std::ostream& out, const CoverageArray& array) {
  const CAParams& p = array.params;
  out << array.rows << ' ' << p.k << ' ' << p.v << ' ' << p.t << ' ' << p.lambda << '\n';
  for (std::int64_t r = 0; r < array.rows; ++r) {
    for (std::int64_t c = 0; c < p.k; ++c) {
      if (c) out << ' ';
      out << array.at(r, c);
    }
    out << '\n';
  }
}

CoverageArray read_array(std::istream& in) {
  std::string line;
  std::size_t lineNo = 1;
  if (!std::getline(in, line)) throw ParseError("missing header line");
  const auto header = parse_integers(line, lineNo);
  if (header.size() != 5) throw ParseError("header must be 'N k v t lambda'");
  CoverageArray array;
  array.params = CAParams{header[3], header[1], header[2], header[4]};
  try {
    validate(array.params);
  } catch (const ValidationError& e) {
    throw ParseError(std::string("header: ") + e.what());
  }
  const std::int64_t N = header[0];
  if (N < 0) throw ParseError("header: N must be non-negative");
  std::vector<Symbol> row(static_cast<std::size_t>(array.params.k));
  for (std::int64_t r = 0; r < N; ++r) {
    ++lineNo;
    if (!std::getline(in, line)) throw ParseError("expected " + std::to_string(N) + " rows, found " + std::to_string(r));
    const auto values = parse_integers(line, lineNo);
    if (static_cast<std::int64_t>(values.size()) != array.params.k)
      throw ParseError("line " + std::to_string(lineNo) + ": expected " + std::to_string(array.params.k) +
                       " symbols");
    for (std::size_t c = 0; c < values.size(); ++c) {
      if (values[c] < 0 || values[c] >= array.params.v)
        throw ParseError("line " + std::to_string(lineNo) + ": symbol out of range");
      row[c] = static_cast<Symbol>(values[c]);
    }
    array.append_row(row);
  }
  while (std::getline(in, line)) {
    ++lineNo;
    if (!parse_integers(line, lineNo).empty())
      throw ParseError("line " + std::to_string(lineNo) + ": data after the last row");
  }
  return array;
}

}  // namespace calambda
