#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "calambda/bounds.hpp"
#include "calambda/construct.hpp"
#include "calambda/errors.hpp"
#include "calambda/verify.hpp"

namespace calambda::cli {
namespace {

using nlohmann::json;

std::string num(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

struct SweepColumn {
  std::string name;
  Method method;
};

const std::vector<SweepColumn>& sweep_columns() {
  static const std::vector<SweepColumn> cols = {
      {"slj_no_sum_no_W", Method::SljUpperElementary},
      {"slj_no_sum_with_W", Method::SljUpperW},
      {"slj_with_sum", Method::SljExactMin},
      {"lll_no_sum_no_W", Method::LllUpperElementary},
      {"lll_no_sum_with_W", Method::LllUpperW},
      {"lll_with_sum", Method::LllExactMin},
      {"two_stage_no_sum_no_W", Method::TwoStageGeneralElementary},
      {"two_stage_no_sum_with_W", Method::TwoStageGeneralW},
      {"two_stage_with_sum", Method::TwoStageExactMin},
      {"two_stage_coloring", Method::ColoringBoundMin},
  };
  return cols;
}

std::int64_t interaction_cap() {
  if (const char* env = std::getenv("CA_LAMBDA_CAP")) {
    std::int64_t cap = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
    if (ec == std::errc() && ptr == s.data() + s.size() && cap > 0) return cap;
    throw ValidationError("CA_LAMBDA_CAP must be a positive integer");
  }
  return kDefaultInteractionCap;
}

std::vector<Method> resolve_methods(const std::vector<std::string>& names) {
  std::vector<Method> out;
  for (const auto& n : names) {
    const auto m = parse_method(n);
    if (!m) throw ValidationError("unknown method '" + n + "'");
    out.push_back(*m);
  }
  return out;
}

void print_bound(std::ostream& out, const BoundResult& r, bool asJson) {
  if (asJson) {
    json j;
    j["method"] = std::string(method_name(r.method));
    j["rows"] = r.rows;
    j["realBound"] = r.realBound;
    for (const auto& [key, value] : r.diagnostics) j[key] = value;
    out << j.dump() << '\n';
    return;
  }
  out << method_name(r.method) << ": rows " << r.rows << " (real bound " << num(r.realBound) << ")\n";
  for (const auto& [key, value] : r.diagnostics) out << "  " << key << " = " << num(value) << '\n';
}

struct ParamArgs {
  std::int64_t t = 0, k = 0, v = 0, lambda = 1;
  CAParams params() const { return CAParams{t, k, v, lambda}; }
};

void add_param_options(CLI::App* cmd, ParamArgs& p, bool withLambda = true) {
  cmd->add_option("-t,--strength", p.t, "strength t")->required();
  cmd->add_option("-k,--columns", p.k, "number of columns k")->required();
  cmd->add_option("-v,--symbols", p.v, "alphabet size v")->required();
  if (withLambda) cmd->add_option("-l,--lambda", p.lambda, "coverage index lambda")->capture_default_str();
}

int cmd_bounds(const ParamArgs& pa, const std::vector<std::string>& methodNames, bool best, bool asJson,
               std::ostream& out) {
  const CAParams params = pa.params();
  validate(params);
  if (best) {
    print_bound(out, best_bound(params), asJson);
    return kExitOk;
  }
  const std::vector<Method> methods = methodNames.empty() ? applicable_methods(params) : resolve_methods(methodNames);
  for (Method m : methods) {
    try {
      print_bound(out, evaluate_bound(m, params), asJson);
    } catch (const DomainError& e) {
      if (!methodNames.empty()) throw;
      if (asJson) out << json{{"method", std::string(method_name(m))}, {"error", e.what()}}.dump() << '\n';
      else out << method_name(m) << ": not applicable (" << e.what() << ")\n";
    }
  }
  return kExitOk;
}

struct SweepArgs {
  std::int64_t t = 0, v = 0, lambda = 1;
  std::int64_t kStart = 0, kEnd = 0, kStep = 1;
  std::vector<std::string> methods;
  std::string outPath;
  unsigned threads = 0;
};

int cmd_sweep(const SweepArgs& s, std::ostream& out) {
  if (s.kStep < 1) throw ValidationError("k step must be >= 1");
  if (s.kEnd < s.kStart) throw ValidationError("k range is empty (end < start)");
  validate(CAParams{s.t, s.kStart, s.v, s.lambda});

  std::vector<SweepColumn> columns;
  if (s.methods.empty()) {
    columns = sweep_columns();
  } else {
    const std::vector<Method> requested = resolve_methods(s.methods);
    auto wanted = [&](Method m) { return std::find(requested.begin(), requested.end(), m) != requested.end(); };
    for (const auto& c : sweep_columns())
      if (wanted(c.method)) columns.push_back(c);
    for (Method m : requested) {
      const bool known = std::any_of(columns.begin(), columns.end(), [&](const SweepColumn& c) { return c.method == m; });
      if (!known) columns.push_back({std::string(method_name(m)), m});
    }
  }

  std::vector<std::int64_t> ks;
  for (std::int64_t k = s.kStart; k <= s.kEnd; k += s.kStep) ks.push_back(k);
  std::vector<std::string> lines(ks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failureMutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < ks.size(); i = next++) {
      try {
        const CAParams params{s.t, ks[i], s.v, s.lambda};
        std::string line = std::to_string(ks[i]);
        for (const auto& c : columns) {
          line += ',';
          try {
            line += std::to_string(evaluate_bound(c.method, params).rows);
          } catch (const DomainError&) {
          }
        }
        lines[i] = std::move(line);
      } catch (...) {
        std::lock_guard lock(failureMutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned n = std::min<std::size_t>(s.threads ? s.threads : hw, ks.size());
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  std::ostringstream csv;
  csv << 'k';
  for (const auto& c : columns) csv << ',' << c.name;
  csv << '\n';
  for (const auto& line : lines) csv << line << '\n';

  if (s.outPath.empty()) {
    out << csv.str();
  } else {
    std::ofstream f(s.outPath, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + s.outPath + "' for writing");
    f << csv.str();
    if (!f) throw std::runtime_error("write to '" + s.outPath + "' failed");
  }
  return kExitOk;
}

struct ConstructArgs {
  ParamArgs p;
  std::string algorithm;
  std::uint64_t seed = 1;
  std::string outPath;
  std::optional<std::int64_t> rows;
  std::int64_t maxResamples = 1'000'000;
};

int cmd_construct(const ConstructArgs& a, bool asJson, std::ostream& out, std::ostream& err) {
  const CAParams params = a.p.params();
  validate(params);
  ConstructOptions options;
  options.interactionCap = interaction_cap();
  options.maxResamples = a.maxResamples;
  ConstructStats stats;

  CoverageArray array;
  std::optional<BoundResult> bound;
  if (a.algorithm == "random") {
    const std::int64_t N = a.rows.value_or(slj_exact_min(params).rows);
    array = random_array(params, N, a.seed);
  } else if (a.algorithm == "density") {
    array = density_construct(params, a.seed, options, &stats);
    bound = slj_exact_min(params);
  } else if (a.algorithm == "moser-tardos") {
    array = moser_tardos_construct(params, a.seed, a.maxResamples, options, &stats);
    bound = lll_exact_min(params);
  } else if (a.algorithm == "two-stage") {
    array = two_stage_naive_construct(params, a.seed, options, &stats);
    bound = two_stage_exact_min(params);
  } else if (a.algorithm == "two-stage-coloring") {
    array = two_stage_coloring_construct(params, a.seed, options, &stats);
    bound = coloring_bound_min(params);
  } else if (a.algorithm == "juxtapose") {
    CAParams base = params;
    base.lambda = 1;
    array = juxtapose(density_construct(base, a.seed, options), params.lambda, options.interactionCap);
    bound = slj_exact_min(base);
    bound->rows *= params.lambda;
    bound->realBound *= static_cast<double>(params.lambda);
  } else {
    throw ValidationError("unknown algorithm '" + a.algorithm +
                          "' (expected random, density, moser-tardos, two-stage, two-stage-coloring, juxtapose)");
  }

  const CoverageReport report = coverage_report(array, std::nullopt, options.interactionCap);
  const bool verified = report.minCoverage >= params.lambda;

  std::ostream& summary = a.outPath.empty() ? err : out;
  if (a.outPath.empty()) {
    write_array(out, array);
  } else {
    std::ofstream f(a.outPath, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + a.outPath + "' for writing");
    write_array(f, array);
  }
  if (asJson) {
    json j{{"algorithm", a.algorithm},    {"rows", array.rows},
           {"min_coverage", report.minCoverage}, {"deficient", report.deficient.size()},
           {"verified", verified},        {"first_stage_rows", stats.firstStageRows},
           {"second_stage_rows", stats.secondStageRows}, {"resamples", stats.resamples},
           {"redraws", stats.redraws}};
    if (bound) {
      j["bound_method"] = std::string(method_name(bound->method));
      j["bound_rows"] = bound->rows;
    }
    summary << j.dump() << '\n';
  } else {
    summary << "algorithm " << a.algorithm << ": " << array.rows << " rows\n";
    if (bound) summary << "analytic bound (" << method_name(bound->method) << "): " << bound->rows << " rows\n";
    summary << "min coverage " << report.minCoverage << ", deficient " << report.deficient.size() << '\n';
    summary << (verified ? "verified CA_" : "NOT a CA_") << params.lambda << '\n';
  }
  if (verified) return kExitOk;
  if (a.algorithm == "random") {
    err << "warning: random array is not a CA_" << params.lambda << '\n';
    return kExitOk;
  }
  return kExitNotVerified;
}

int cmd_verify(const std::string& path, std::optional<std::int64_t> lambda, bool asJson, std::ostream& out) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open '" + path + "'");
  const CoverageArray array = read_array(f);
  const CoverageReport report = coverage_report(array, lambda, interaction_cap());
  const bool verified = report.minCoverage >= report.lambda;
  if (asJson) {
    out << json{{"rows", array.rows},
                {"lambda", report.lambda},
                {"min_coverage", report.minCoverage},
                {"deficient", report.deficient.size()},
                {"interactions", report.totalInteractions},
                {"verified", verified}}
               .dump()
        << '\n';
  } else {
    out << "rows " << array.rows << ", interactions " << report.totalInteractions << '\n';
    out << "min coverage " << report.minCoverage << ", deficient " << report.deficient.size() << '\n';
    out << (verified ? "verified CA_" : "NOT a CA_") << report.lambda << '\n';
  }
  return verified ? kExitOk : kExitNotVerified;
}

int cmd_max_lambda(std::int64_t N, const ParamArgs& pa, const std::string& method, bool asJson, std::ostream& out) {
  const CAParams params = pa.params();
  validate(params);
  FixedRowsResult r;
  if (method == "w") r = max_lambda_fixed_rows_w(N, params);
  else if (method == "elementary") r = max_lambda_fixed_rows_elementary(N, params);
  else if (method == "lll") r = max_lambda_fixed_rows_lll(N, params);
  else throw ValidationError("unknown method '" + method + "' (expected w, elementary, lll)");
  const char* status = r.status == FixedRowsStatus::Guaranteed ? "guaranteed" : "vacuous";
  if (asJson) {
    out << json{{"method", method},         {"lambda", r.lambda},   {"status", status},
                {"lambda_real", r.lambdaReal}, {"log_b", r.logB}, {"w_argument", r.wArgument}}
               .dump()
        << '\n';
  } else {
    out << "lambda " << r.lambda << " (" << status << ")\n";
    out << "  lambda_real = " << num(r.lambdaReal) << "\n  log_b = " << num(r.logB)
        << "\n  w_argument = " << num(r.wArgument) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Upper bounds and constructions for covering arrays of index lambda", "calambda"};
  app.require_subcommand(1);
  bool asJson = false;
  app.add_flag("--json", asJson, "one JSON object per result line");

  ParamArgs boundsArgs;
  std::vector<std::string> methodNames;
  bool best = false;
  auto* bounds = app.add_subcommand("bounds", "evaluate upper bounds on CAN_lambda(t,k,v)");
  add_param_options(bounds, boundsArgs);
  bounds->add_option("-m,--method", methodNames, "bound method (repeatable; default: all applicable)");
  bounds->add_flag("--best", best, "report only the smallest bound");
  bounds->add_flag("--json", asJson, "one JSON object per result line");

  SweepArgs sweepArgs;
  auto* sweep = app.add_subcommand("sweep", "bounds over a range of k as CSV");
  sweep->add_option("-t,--strength", sweepArgs.t)->required();
  sweep->add_option("-v,--symbols", sweepArgs.v)->required();
  sweep->add_option("-l,--lambda", sweepArgs.lambda)->capture_default_str();
  sweep->add_option("--k-start", sweepArgs.kStart)->required();
  sweep->add_option("--k-end", sweepArgs.kEnd)->required();
  sweep->add_option("--k-step", sweepArgs.kStep)->capture_default_str();
  sweep->add_option("-m,--method", sweepArgs.methods, "restrict to these methods");
  sweep->add_option("-o,--output", sweepArgs.outPath, "CSV path (default: stdout)");
  sweep->add_option("-j,--threads", sweepArgs.threads, "worker threads (default: hardware)");

  ConstructArgs constructArgs;
  auto* construct = app.add_subcommand("construct", "build and verify a covering array");
  add_param_options(construct, constructArgs.p);
  construct->add_option("-a,--algorithm", constructArgs.algorithm)->required();
  construct->add_option("-s,--seed", constructArgs.seed)->capture_default_str();
  construct->add_option("-o,--output", constructArgs.outPath, "array path (default: stdout)");
  construct->add_option("-N,--rows", constructArgs.rows, "rows for the random algorithm");
  construct->add_option("--max-resamples", constructArgs.maxResamples)->capture_default_str();
  construct->add_flag("--json", asJson);

  std::string verifyPath;
  std::optional<std::int64_t> verifyLambda;
  auto* verify = app.add_subcommand("verify", "count coverage of an array file");
  verify->add_option("path", verifyPath)->required();
  verify->add_option("-l,--lambda", verifyLambda, "index to check (default: the file's)");
  verify->add_flag("--json", asJson);

  ParamArgs maxArgs;
  std::int64_t maxRows = 0;
  std::string maxMethod = "w";
  auto* maxLambda = app.add_subcommand("max-lambda", "largest lambda guaranteed with N rows");
  maxLambda->add_option("-N,--rows", maxRows)->required();
  add_param_options(maxLambda, maxArgs, false);
  maxLambda->add_option("-m,--method", maxMethod, "w, elementary or lll")->capture_default_str();
  maxLambda->add_flag("--json", asJson);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*bounds) return cmd_bounds(boundsArgs, methodNames, best, asJson, out);
    if (*sweep) return cmd_sweep(sweepArgs, out);
    if (*construct) return cmd_construct(constructArgs, asJson, out, err);
    if (*verify) return cmd_verify(verifyPath, verifyLambda, asJson, out);
    if (*maxLambda) return cmd_max_lambda(maxRows, maxArgs, maxMethod, asJson, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RowsRangeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << " (raise CA_LAMBDA_CAP to override)\n";
    return kExitUsage;
  } catch (const BudgetExhausted& e) {
    err << "error: " << e.what() << '\n';
    for (const auto& d : e.details()) err << "  " << d << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace calambda::cli
