#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieq/lambda_poset.hpp"
#include "lieq/plethysm.hpp"

namespace lieq {

class SpecError : public LieError {
 public:
  using LieError::LieError;
};

enum class OutputFormat { kDot, kTsv, kJson };

OutputFormat parse_format(const std::string& s);
std::string format_name(OutputFormat f);

/// One problem document:
///   {"lie": "D6" | {"family": "D", "rank": 6},
///    "gamma": {"points": [["w", g], ...]} | {"interval": [["w", g], ["w", g]]},
///    "options": {"max_degree": 6, "override_interval_closed": false, "format": "dot"}}
struct ProblemSpec {
  LieType lie;
  std::vector<LambdaPoint> points;
  std::optional<std::pair<LambdaPoint, LambdaPoint>> interval;
  int max_degree = kDefaultMaxDegree;
  bool override_interval_closed = false;
  std::optional<OutputFormat> format;
};

/// Validates type, label lengths and grades; throws SpecError.
ProblemSpec parse_problem(const std::string& text);

/// The explicit points, or the interval; an empty interval is a SpecError.
GammaSet resolve_gamma(const RootSystem& rs, const ProblemSpec& spec);

/// "w" with the right label count and a nonnegative grade, as a dominant point.
LambdaPoint make_point(const RootSystem& rs, const std::string& labels, int grade);

}  // namespace lieq
