#include "lieq/reproduce.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lieq/problem.hpp"
#include "lieq/quiverlab.hpp"

namespace lieq {
namespace {

using nlohmann::json;

const json& golden() {
  static const json doc = json::parse(golden_json_text());
  return doc;
}

LambdaPoint point_of(const RootSystem& rs, const json& j) {
  return make_point(rs, j.at(0).get<std::string>(), j.at(1).get<int>());
}

std::string list(const std::vector<LambdaPoint>& pts) {
  std::string s;
  for (const auto& p : pts) s += (s.empty() ? "" : " ") + p.str();
  return s.empty() ? "-" : s;
}

std::string pair_str(const LambdaPoint& a, const LambdaPoint& b) { return a.str() + " -> " + b.str(); }

// Simple roots i with theta - alpha_i a positive root.
std::vector<int> bullet_nodes(const RootSystem& rs) {
  std::vector<int> out;
  const auto& roots = rs.positive_root_weights();
  for (int i = 1; i <= rs.rank(); ++i) {
    const Weight w = rs.highest_root_weight() - rs.simple_root_weight(i);
    if (std::find(roots.begin(), roots.end(), w) != roots.end()) out.push_back(i);
  }
  return out;
}

// "theta" or "theta-a<i>"
Weight parse_alpha(const RootSystem& rs, const std::string& s) {
  if (s == "theta") return rs.highest_root_weight();
  if (s.rfind("theta-a", 0) == 0) {
    const int i = std::stoi(s.substr(7));
    const auto nodes = bullet_nodes(rs);
    if (std::find(nodes.begin(), nodes.end(), i) == nodes.end())
      throw SpecError("theta - alpha_" + std::to_string(i) + " is not a root");
    return rs.highest_root_weight() - rs.simple_root_weight(i);
  }
  throw SpecError("unknown alpha '" + s + "'");
}

struct Run {
  CharacterContext ctx;
  GradedAdjointTable table;
  int threads;

  Run(const std::string& lie, int max_degree, int threads_)
      : ctx(LieType::parse(lie)), table(ctx, max_degree), threads(threads_) {}
  const RootSystem& rs() const { return ctx.roots(); }
};

class Reporter {
 public:
  explicit Reporter(std::string target) { report_.target = std::move(target); }
  void check(std::string name, bool pass, std::string detail = {}) {
    report_.checks.push_back({std::move(name), pass, std::move(detail)});
  }
  ReproReport done() { return std::move(report_); }

 private:
  ReproReport report_;
};

// Shared structural checks for the hereditary families: Gamma inside Lambda,
// interval-closed, and relation-free.
bool closed_and_hereditary(Reporter& rep, Run& run, const std::string& label, const GammaSet& g) {
  const ClosureReport closure = is_interval_closed(run.rs(), g);
  rep.check(label + ": interval-closed", closure.closed,
            closure.closed ? "" : "missing " + closure.witness->missing.str());
  if (!closure.closed) return false;
  const HereditaryReport h = is_hereditary(run.table, g, run.threads);
  rep.check(label + ": hereditary", h.hereditary, h.hereditary ? "" : "relation at " + pair_str(h.witness->first, h.witness->second));
  return h.hereditary;
}

std::vector<LambdaPoint> leaves(const QuiverData& q) {
  const auto deg = vertex_degrees(q);
  std::vector<LambdaPoint> out;
  for (std::size_t i = 0; i < deg.size(); ++i)
    if (deg[i] == 1) out.push_back(q.vertices[i]);
  return out;
}

// ---------------------------------------------------------------- targets

ReproReport run_kr_d6(int threads) {
  const json& g = golden().at("kr-d6");
  Run run(g.at("lie").get<std::string>(), 4, threads);
  const RootSystem& rs = run.rs();
  Reporter rep("kr-d6");

  const GammaSet gamma = interval(rs, point_of(rs, g["interval"][0]), point_of(rs, g["interval"][1]));
  std::vector<LambdaPoint> want;
  for (const auto& p : g.at("points")) want.push_back(point_of(rs, p));
  std::sort(want.begin(), want.end());
  rep.check("interval points", gamma.points() == want,
            std::to_string(gamma.size()) + " points: " + list(gamma.points()));

  const QuiverData q = build_quiver(run.ctx, gamma, {false, threads});
  std::map<PointPair, int64_t> arrows;
  for (const auto& a : g.at("arrows")) arrows[{point_of(rs, a["src"]), point_of(rs, a["dst"])}] = a["mult"].get<int64_t>();
  rep.check("quiver arrows", q.arrows == arrows,
            std::to_string(q.vertices.size()) + " vertices, " + std::to_string(q.arrow_total()) + " arrows");
  for (const auto& a : g.at("arrows")) {
    const LambdaPoint s = point_of(rs, a["src"]);
    const LambdaPoint d = point_of(rs, a["dst"]);
    const int64_t got = q.arrows_between(s, d);
    rep.check("arrow " + a["name"].get<std::string>(), got == a["mult"].get<int64_t>(),
              pair_str(s, d) + " multiplicity " + std::to_string(got));
  }

  const RelationTable rel = relation_table(run.table, gamma, threads);
  std::set<PointPair> listed;
  for (const auto& r : g.at("relations")) {
    const LambdaPoint s = point_of(rs, r["src"]);
    const LambdaPoint d = point_of(rs, r["dst"]);
    listed.insert({s, d});
    const int64_t got = rel.find(s, d)->relation;
    const int64_t exp = r["dim"].get<int64_t>();
    rep.check("relation " + pair_str(s, d), got == exp, "dim " + std::to_string(got) + ", expected " + std::to_string(exp));
  }
  const int64_t otherwise = g.at("relations_otherwise").get<int64_t>();
  std::string extra;
  for (const auto& row : rel.rows)
    if (!listed.contains({row.src, row.dst}) && row.relation != otherwise)
      extra += (extra.empty() ? "" : "; ") + pair_str(row.src, row.dst) + " has dim " + std::to_string(row.relation) + " (" +
               std::to_string(row.paths) + " paths, hom " + std::to_string(row.hom) + ")";
  rep.check("relations elsewhere are " + std::to_string(otherwise), extra.empty(),
            extra.empty() ? std::to_string(rel.nonzero_count()) + " nonzero entries" : extra);

  for (const auto& p : g.at("paths")) {
    const LambdaPoint s = point_of(rs, p["src"]);
    const LambdaPoint d = point_of(rs, p["dst"]);
    const int64_t dp = path_count_dp(q, s, d);
    const int64_t formula = path_count_formula(run.table, s, d);
    const int64_t exp = p["count"].get<int64_t>();
    rep.check("paths " + pair_str(s, d), dp == exp && formula == exp,
              "dp " + std::to_string(dp) + ", formula " + std::to_string(formula));
  }
  const HereditaryReport h = is_hereditary(run.table, gamma, threads);
  rep.check("hereditary verdict", h.hereditary == g.at("hereditary").get<bool>(), h.hereditary ? "hereditary" : "not hereditary");
  rep.check("opposite quiver under sharp duality", opposite_check(run.ctx, gamma, gamma.max_grade()));
  return rep.done();
}

ReproReport run_appendix_a1(int threads) {
  const json& g = golden().at("appendix-a1");
  Run run(g.at("lie").get<std::string>(), 4, threads);
  const RootSystem& rs = run.rs();
  Reporter rep("appendix-a1");
  const GammaSet gamma = interval(rs, point_of(rs, g["interval"][0]), point_of(rs, g["interval"][1]));
  for (const auto& item : g.at("injectives")) {
    const LambdaPoint socle = point_of(rs, item["socle"]);
    std::vector<std::pair<LambdaPoint, int64_t>> want;
    for (const auto& e : item["entries"]) want.emplace_back(point_of(rs, e[0]), e[1].get<int64_t>());
    std::sort(want.begin(), want.end());
    const auto got = injective_character(run.table, socle, gamma, threads).nonzero();
    std::string detail;
    for (const auto& [p, m] : got) detail += (detail.empty() ? "" : " + ") + (m > 1 ? std::to_string(m) : std::string()) + "V" + p.str();
    rep.check("I" + socle.str(), got == want, detail);
  }
  return rep.done();
}

ReproReport run_kronecker(int threads) {
  const json& g = golden().at("kronecker");
  Reporter rep("kronecker");
  for (const auto& c : g.at("cases")) {
    Run run(c["lie"].get<std::string>(), 2, threads);
    const RootSystem& rs = run.rs();
    const LambdaPoint low = make_point(rs, c["lambda"].get<std::string>(), c["grade"].get<int>());
    const LambdaPoint high{low.weight, low.grade + 1};
    const GammaSet gamma(rs, {low, high});
    const QuiverData q = build_quiver(run.ctx, gamma, {false, threads});
    const int64_t got = q.arrows_between(high, low);
    rep.check(run.ctx.type().name() + " lambda=" + low.weight.str(), got == c["arrows"].get<int64_t>() && q.arrows.size() == 1,
              std::to_string(got) + " parallel arrows " + pair_str(high, low));
    closed_and_hereditary(rep, run, run.ctx.type().name() + " lambda=" + low.weight.str(), gamma);
  }
  const json& sweep = g.at("sweep");
  const int max_label = sweep["max_label"].get<int>();
  for (const auto& lie : sweep.at("types")) {
    Run run(lie.get<std::string>(), 2, threads);
    const RootSystem& rs = run.rs();
    int tested = 0;
    std::string failure;
    Weight w(rs.rank());
    std::function<void(int)> visit = [&](int i) {
      if (i == rs.rank()) {
        if (w.is_zero() || !failure.empty()) return;
        ++tested;
        const int k = w.positive_label_count();
        const LambdaPoint low{w, sweep["grade"].get<int>()};
        const LambdaPoint high{w, low.grade + 1};
        const GammaSet gamma(rs, {low, high});
        const QuiverData q = build_quiver(run.ctx, gamma);
        const int64_t hom = hom_dim(rs, w, run.ctx.adjoint(), w);
        const RelationTable rel = relation_table(run.table, gamma);
        if (hom != k || q.arrows_between(high, low) != k || q.arrows.size() != 1 || rel.nonzero_count() != 0)
          failure = "lambda=" + w.str() + ": k=" + std::to_string(k) + " hom=" + std::to_string(hom) + " arrows=" +
                    std::to_string(q.arrows_between(high, low));
        return;
      }
      for (int v = 0; v <= max_label; ++v) {
        w[i] = v;
        visit(i + 1);
      }
      w[i] = 0;
    };
    visit(0);
    rep.check(lie.get<std::string>() + " sweep, labels <= " + std::to_string(max_label), failure.empty(),
              failure.empty() ? std::to_string(tested) + " weights: k_lambda arrows, no relations" : failure);
  }
  return rep.done();
}

ReproReport run_dtilde4(int threads) {
  const json& g = golden().at("dtilde4");
  Run run(g.at("lie").get<std::string>(), 2, threads);
  const RootSystem& rs = run.rs();
  Reporter rep("dtilde4");
  std::vector<LambdaPoint> pts;
  for (const auto& p : g.at("points")) pts.push_back(point_of(rs, p));
  const GammaSet gamma(rs, pts);
  if (!closed_and_hereditary(rep, run, "Gamma", gamma)) return rep.done();
  const QuiverData q = build_quiver(run.ctx, gamma, {false, threads});
  std::map<PointPair, int64_t> arrows;
  for (const auto& a : g.at("arrows")) arrows[{point_of(rs, a["src"]), point_of(rs, a["dst"])}] = a["mult"].get<int64_t>();
  rep.check("arrows as drawn", q.arrows == arrows, std::to_string(q.arrow_total()) + " arrows");
  const LambdaPoint center = point_of(rs, g.at("center"));
  const auto deg = vertex_degrees(q);
  const auto it = std::find(q.vertices.begin(), q.vertices.end(), center);
  const int64_t center_deg = it == q.vertices.end() ? 0 : deg[static_cast<std::size_t>(it - q.vertices.begin())];
  rep.check("shape D~4 with center " + center.str(), is_tree(q) && center_deg == 4 && leaves(q).size() == 4,
            "center degree " + std::to_string(center_deg));
  return rep.done();
}

ReproReport run_aline(int threads) {
  const json& g = golden().at("aline");
  Reporter rep("aline");
  for (const auto& c : g.at("cases")) {
    Run run(c["lie"].get<std::string>(), 4, threads);
    const RootSystem& rs = run.rs();
    const Weight lambda = make_point(rs, c["lambda"].get<std::string>(), 0).weight;
    const Weight alpha = parse_alpha(rs, c["alpha"].get<std::string>());
    const auto grades = c["grades"].get<std::vector<int>>();
    std::string rs_text;
    for (int r : grades) rs_text += (rs_text.empty() ? "" : ",") + std::to_string(r);
    const std::string label =
        run.ctx.type().name() + " lambda=" + lambda.str() + " alpha=" + c["alpha"].get<std::string>() + " r=" + rs_text;
    std::vector<LambdaPoint> chain;
    std::string bad;
    for (std::size_t j = 0; j < grades.size(); ++j) {
      const Weight w = lambda + static_cast<int>(j) * alpha;
      if (!w.is_dominant()) bad = w.str();
      chain.push_back({w, grades[j]});
    }
    rep.check(label + ": points dominant", bad.empty(), bad.empty() ? "" : bad + " is not dominant");
    if (!bad.empty()) continue;
    const GammaSet gamma(rs, chain);
    if (!closed_and_hereditary(rep, run, label, gamma)) continue;
    const QuiverData q = build_quiver(run.ctx, gamma, {false, threads});
    bool linear = q.arrow_total() == static_cast<int64_t>(chain.size()) - 1;
    for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
      const auto& [hi, lo] = chain[j].grade > chain[j + 1].grade ? std::pair(chain[j], chain[j + 1]) : std::pair(chain[j + 1], chain[j]);
      linear &= q.arrows_between(hi, lo) == 1;
    }
    rep.check(label + ": linear A" + std::to_string(chain.size()), linear, std::to_string(q.arrow_total()) + " arrows");
  }
  return rep.done();
}

ReproReport run_dtilde(int threads) {
  const json& g = golden().at("dtilde");
  Run run(g.at("lie").get<std::string>(), 4, threads);
  const RootSystem& rs = run.rs();
  Reporter rep("dtilde");
  const Weight lambda = make_point(rs, g["lambda"].get<std::string>(), 0).weight;
  const int ell = g["ell"].get<int>();
  const auto nodes = bullet_nodes(rs);
  const Weight theta = rs.highest_root_weight();
  const Weight alpha = theta - rs.simple_root_weight(nodes.front());
  std::map<int, int> r;
  for (const auto& [k, v] : g["grades"].items()) r[std::stoi(k)] = v.get<int>();
  std::vector<LambdaPoint> pts;
  for (int j = 2; j <= ell - 1; ++j) pts.push_back({lambda + j * theta, r.at(j)});
  const std::vector<LambdaPoint> outer = {{lambda + theta, r.at(2) + 1},
                                          {lambda + theta + alpha, r.at(2) + 1},
                                          {lambda + ell * theta, r.at(ell - 1) - 1},
                                          {lambda + (ell - 1) * theta + alpha, r.at(ell - 1) - 1}};
  pts.insert(pts.end(), outer.begin(), outer.end());
  const GammaSet gamma(rs, pts);
  if (!closed_and_hereditary(rep, run, "Gamma", gamma)) return rep.done();
  const QuiverData q = build_quiver(run.ctx, gamma, {false, threads});
  const auto deg = vertex_degrees(q);
  const auto branch = std::count(deg.begin(), deg.end(), 3);
  rep.check("shape D~" + std::to_string(ell + 1), is_tree(q) && q.vertices.size() == static_cast<std::size_t>(ell + 2) && branch == 2,
            std::to_string(q.vertices.size()) + " vertices, " + std::to_string(q.arrow_total()) + " arrows, " +
                std::to_string(branch) + " branch vertices");
  std::vector<LambdaPoint> sorted_outer = outer;
  std::sort(sorted_outer.begin(), sorted_outer.end());
  rep.check("leaves are the four outer points", leaves(q) == sorted_outer, list(leaves(q)));
  return rep.done();
}

ReproReport run_star(int threads) {
  const json& g = golden().at("star");
  Run run(g.at("lie").get<std::string>(), 4, threads);
  const RootSystem& rs = run.rs();
  Reporter rep("star");
  const Weight lambda = make_point(rs, g["lambda"].get<std::string>(), 0).weight;
  const auto ell = g["ell"].get<std::vector<int>>();
  const int offset = g["grade_offset"].get<int>();
  const Weight theta = rs.highest_root_weight();
  const Weight ab = rs.simple_root_weight(bullet_nodes(rs).front());
  std::vector<LambdaPoint> pts;
  for (int j = 0; j <= ell[0]; ++j) pts.push_back({lambda + (ell[0] - j) * theta, offset + j});
  for (int j = 0; j <= ell[1]; ++j) pts.push_back({lambda + (ell[0] + j) * theta, offset + j});
  for (int j = 0; j <= ell[2] - 1; ++j) pts.push_back({lambda + (ell[0] + j) * theta - j * ab, offset + j});
  const GammaSet gamma(rs, pts);
  if (!closed_and_hereditary(rep, run, "Gamma", gamma)) return rep.done();
  const QuiverData q = build_quiver(run.ctx, gamma, {false, threads});
  const LambdaPoint center{lambda + ell[0] * theta, offset};
  const auto deg = vertex_degrees(q);
  const auto it = std::find(q.vertices.begin(), q.vertices.end(), center);
  const int64_t center_deg = it == q.vertices.end() ? 0 : deg[static_cast<std::size_t>(it - q.vertices.begin())];
  const bool star = is_tree(q) && center_deg == 3 && std::count(deg.begin(), deg.end(), 3) == 1 && leaves(q).size() == 3;
  rep.check("star with center " + center.str() + " and arms " + std::to_string(ell[0]) + "," + std::to_string(ell[1]) + "," +
                std::to_string(ell[2] - 1),
            star && q.vertices.size() == static_cast<std::size_t>(ell[0] + ell[1] + ell[2]),
            std::to_string(q.vertices.size()) + " vertices, " + std::to_string(q.arrow_total()) + " arrows");
  return rep.done();
}

}  // namespace

bool ReproReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.pass; });
}

std::string ReproReport::render() const {
  std::ostringstream out;
  std::size_t ok = 0;
  for (const auto& c : checks) {
    ok += c.pass;
    out << (c.pass ? "PASS  " : "FAIL  ") << c.name;
    if (!c.detail.empty()) out << "  [" << c.detail << "]";
    out << '\n';
  }
  out << target << ": " << (passed() ? "PASS" : "FAIL") << " (" << ok << "/" << checks.size() << " checks)\n";
  return out.str();
}

const std::vector<std::string>& reproduce_targets() {
  static const std::vector<std::string> names = {"kronecker", "aline", "dtilde4", "dtilde", "star", "kr-d6", "appendix-a1"};
  return names;
}

ReproReport reproduce(const std::string& target, int threads) {
  if (target == "kr-d6") return run_kr_d6(threads);
  if (target == "appendix-a1") return run_appendix_a1(threads);
  if (target == "kronecker") return run_kronecker(threads);
  if (target == "dtilde4") return run_dtilde4(threads);
  if (target == "aline") return run_aline(threads);
  if (target == "dtilde") return run_dtilde(threads);
  if (target == "star") return run_star(threads);
  throw SpecError("unknown reproduce target '" + target + "'");
}

}  // namespace lieq
