#include "lieq/problem.hpp"

#include <json.hpp>

namespace lieq {
namespace {

using nlohmann::json;

LieType parse_lie(const json& j) {
  LieType t;
  if (j.is_string()) {
    t = LieType::parse(j.get<std::string>());
  } else if (j.is_object()) {
    const auto family = j.at("family").get<std::string>();
    if (family.size() != 1) throw SpecError("lie.family must be a single letter");
    t = LieType::parse(family + std::to_string(j.at("rank").get<int>()));
  } else {
    throw SpecError("\"lie\" must be a string like \"D6\" or {family, rank}");
  }
  return t;
}

LambdaPoint parse_point(const RootSystem& rs, const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_number_integer())
    throw SpecError("a point must be [\"labels\", grade], got " + j.dump());
  return make_point(rs, j[0].get<std::string>(), j[1].get<int>());
}

}  // namespace

OutputFormat parse_format(const std::string& s) {
  if (s == "dot") return OutputFormat::kDot;
  if (s == "tsv") return OutputFormat::kTsv;
  if (s == "json") return OutputFormat::kJson;
  throw SpecError("unknown format '" + s + "' (dot, tsv, json)");
}

std::string format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::kDot: return "dot";
    case OutputFormat::kTsv: return "tsv";
    case OutputFormat::kJson: return "json";
  }
  return "?";
}

LambdaPoint make_point(const RootSystem& rs, const std::string& labels, int grade) {
  LambdaPoint p;
  try {
    p.weight = Weight::parse(labels, rs.rank());
  } catch (const LieError& e) {
    throw SpecError(e.what());
  }
  p.grade = grade;
  if (grade < 0) throw SpecError("grade must be nonnegative in " + p.str());
  if (!p.weight.is_dominant()) throw SpecError("weight " + p.weight.str() + " is not dominant");
  return p;
}

ProblemSpec parse_problem(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw SpecError(std::string("malformed JSON: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw SpecError("problem spec must be a JSON object");
    ProblemSpec spec;
    try {
      spec.lie = parse_lie(doc.at("lie"));
      spec.lie.validate();
    } catch (const SpecError&) {
      throw;
    } catch (const LieError& e) {
      throw SpecError(e.what());
    }
    const RootSystem rs(spec.lie);
    const json& gamma = doc.at("gamma");
    if (gamma.contains("points") == gamma.contains("interval"))
      throw SpecError("gamma needs exactly one of \"points\" or \"interval\"");
    if (gamma.contains("points")) {
      for (const auto& p : gamma.at("points")) spec.points.push_back(parse_point(rs, p));
      if (spec.points.empty()) throw SpecError("gamma.points is empty");
    } else {
      const json& iv = gamma.at("interval");
      if (!iv.is_array() || iv.size() != 2) throw SpecError("gamma.interval must be [low, high]");
      spec.interval = std::pair(parse_point(rs, iv[0]), parse_point(rs, iv[1]));
    }
    if (doc.contains("options")) {
      const json& o = doc.at("options");
      spec.max_degree = o.value("max_degree", spec.max_degree);
      spec.override_interval_closed = o.value("override_interval_closed", false);
      if (o.contains("format")) spec.format = parse_format(o.at("format").get<std::string>());
      if (spec.max_degree < 1) throw SpecError("options.max_degree must be positive");
    }
    return spec;
  } catch (const json::exception& e) {
    throw SpecError(std::string("bad problem spec: ") + e.what());
  }
}

GammaSet resolve_gamma(const RootSystem& rs, const ProblemSpec& spec) {
  if (!spec.interval) return GammaSet(rs, spec.points);
  const auto& [low, high] = *spec.interval;
  GammaSet g = interval(rs, low, high);
  if (g.empty()) throw SpecError("interval is empty: " + low.str() + " is not below " + high.str());
  return g;
}

}  // namespace lieq
