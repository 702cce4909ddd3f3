#include <algorithm>
#include <cctype>
#include <string>
#include <utility>

#include "calambda/bounds.hpp"
#include "calambda/errors.hpp"

namespace calambda {
namespace {

const std::pair<std::string_view, Method> kAliases[] = {
    {"slj_exact", Method::SljExactMin},
    {"slj_w", Method::SljUpperW},
    {"slj_elementary", Method::SljUpperElementary},
    {"lll_exact", Method::LllExactMin},
    {"lll_w", Method::LllUpperW},
    {"lll_elementary", Method::LllUpperElementary},
    {"two_stage_exact", Method::TwoStageExactMin},
    {"coloring", Method::ColoringBoundMin},
    // Sweep column names.
    {"slj_no_sum_no_w", Method::SljUpperElementary},
    {"slj_no_sum_with_w", Method::SljUpperW},
    {"slj_with_sum", Method::SljExactMin},
    {"lll_no_sum_no_w", Method::LllUpperElementary},
    {"lll_no_sum_with_w", Method::LllUpperW},
    {"lll_with_sum", Method::LllExactMin},
    {"two_stage_no_sum_no_w", Method::TwoStageGeneralElementary},
    {"two_stage_no_sum_with_w", Method::TwoStageGeneralW},
    {"two_stage_with_sum", Method::TwoStageExactMin},
    {"two_stage_coloring", Method::ColoringBoundMin},
};

constexpr Method kAllMethods[] = {
    Method::SljExactMin,          Method::SljUpperW,
    Method::SljUpperElementary,   Method::LllExactMin,
    Method::LllUpperW,            Method::LllUpperElementary,
    Method::TwoStageL2W,          Method::TwoStageL2Elementary,
    Method::TwoStageExactMin,     Method::TwoStageGeneralW,
    Method::TwoStageGeneralElementary, Method::ColoringBoundMin,
};

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::optional<Method> parse_method(std::string_view name) {
  const std::string key = lowercase(name);
  for (Method m : kAllMethods)
    if (method_name(m) == key) return m;
  for (const auto& [alias, m] : kAliases)
    if (alias == key) return m;
  return std::nullopt;
}

std::vector<Method> applicable_methods(const CAParams& params) {
  validate(params);
  const bool l2 = params.lambda == 2;
  std::vector<Method> out = {Method::SljExactMin, Method::LllExactMin, Method::TwoStageExactMin,
                             Method::ColoringBoundMin, Method::SljUpperW, Method::LllUpperW};
  if (l2) out.push_back(Method::TwoStageL2W);
  out.push_back(Method::TwoStageGeneralW);
  out.push_back(Method::SljUpperElementary);
  out.push_back(Method::LllUpperElementary);
  if (l2) out.push_back(Method::TwoStageL2Elementary);
  out.push_back(Method::TwoStageGeneralElementary);
  return out;
}

BoundResult evaluate_bound(Method method, const CAParams& params) {
  switch (method) {
    case Method::SljExactMin: return slj_exact_min(params);
    case Method::SljUpperW: return slj_upper_w(params);
    case Method::SljUpperElementary: return slj_upper_elementary(params);
    case Method::LllExactMin: return lll_exact_min(params);
    case Method::LllUpperW: return lll_upper_w(params);
    case Method::LllUpperElementary: return lll_upper_elementary(params);
    case Method::TwoStageL2W: return two_stage_l2_w(params);
    case Method::TwoStageL2Elementary: return two_stage_l2_elementary(params);
    case Method::TwoStageExactMin: return two_stage_exact_min(params);
    case Method::TwoStageGeneralW: return two_stage_general_w(params);
    case Method::TwoStageGeneralElementary: return two_stage_general_elementary(params);
    case Method::ColoringBoundMin: return coloring_bound_min(params);
  }
  throw InternalError("unknown bound method");
}

BoundResult best_bound(const CAParams& params) {
  const std::vector<Method> methods = applicable_methods(params);
  return best_bound(params, methods);
}

BoundResult best_bound(const CAParams& params, std::span<const Method> methods) {
  validate(params);
  std::optional<BoundResult> best;
  for (Method m : methods) {
    BoundResult r;
    try {
      r = evaluate_bound(m, params);
    } catch (const DomainError&) {
      continue;  // lambda = 2 forms elsewhere, or no W-1 solution at k = t
    }
    if (!best || r.rows < best->rows) best = std::move(r);
  }
  if (!best) throw InternalError("no bound method applied");
  return *best;
}

}  // namespace calambda
