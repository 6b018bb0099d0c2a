#include "lieq/emit.hpp"

#include <sstream>

#include <json.hpp>

namespace lieq {
namespace {

using nlohmann::ordered_json;

ordered_json point_json(const LambdaPoint& p) { return {{"weight", p.weight.str()}, {"grade", p.grade}}; }

// Tabular output shared by every table command. Point-valued columns are
// split into a weight column and a grade column in TSV.
struct Table {
  struct Column {
    std::string name;
    bool point = false;
  };
  std::vector<Column> columns;
  std::vector<std::vector<ordered_json>> rows;
  std::vector<std::pair<std::string, ordered_json>> footer;

  [[nodiscard]] std::string render(OutputFormat f, const std::string& what) const {
    if (f == OutputFormat::kDot) throw SpecError("DOT output is only available for quivers and point sets");
    std::ostringstream out;
    if (f == OutputFormat::kJson) {
      ordered_json doc;
      doc["table"] = what;
      doc["rows"] = ordered_json::array();
      for (const auto& r : rows) {
        ordered_json o;
        for (std::size_t i = 0; i < columns.size(); ++i) o[columns[i].name] = r[i];
        doc["rows"].push_back(std::move(o));
      }
      for (const auto& [k, v] : footer) doc[k] = v;
      out << doc.dump(2) << '\n';
      return out.str();
    }
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) out << '\t';
      if (columns[i].point)
        out << columns[i].name << "_weight\t" << columns[i].name << "_grade";
      else
        out << columns[i].name;
    }
    out << '\n';
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out << '\t';
        if (columns[i].point)
          out << r[i]["weight"].get<std::string>() << '\t' << r[i]["grade"].get<int>();
        else if (r[i].is_string())
          out << r[i].get<std::string>();
        else
          out << r[i].dump();
      }
      out << '\n';
    }
    for (const auto& [k, v] : footer) out << "# " << k << '\t' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    return out.str();
  }
};

}  // namespace

std::string dot_id(const LambdaPoint& p) { return p.weight.str() + ";" + std::to_string(p.grade); }

std::string emit_points(const GammaSet& gamma, OutputFormat f) {
  if (f == OutputFormat::kDot) {
    std::ostringstream out;
    out << "digraph Gamma {\n";
    for (const auto& p : gamma.points()) out << "  \"" << dot_id(p) << "\" [label=\"" << p.str() << "\"];\n";
    out << "}\n";
    return out.str();
  }
  Table t;
  t.columns = {{"point", true}};
  for (const auto& p : gamma.points()) t.rows.push_back({point_json(p)});
  t.footer.emplace_back("count", gamma.size());
  return t.render(f, "points");
}

std::string emit_quiver(const QuiverData& q, OutputFormat f) {
  if (f == OutputFormat::kDot) {
    std::ostringstream out;
    out << "digraph Q {\n";
    for (const auto& v : q.vertices) out << "  \"" << dot_id(v) << "\" [label=\"" << v.str() << "\"];\n";
    for (const auto& [edge, m] : q.arrows) {
      out << "  \"" << dot_id(edge.first) << "\" -> \"" << dot_id(edge.second) << "\"";
      if (m > 1) out << " [label=\"" << m << "\"]";
      out << ";\n";
    }
    out << "}\n";
    return out.str();
  }
  if (f == OutputFormat::kJson) {
    ordered_json doc;
    doc["type"] = q.ambient.name();
    doc["interval_closed"] = q.interval_closed;
    doc["vertex_count"] = q.vertices.size();
    doc["arrow_count"] = q.arrow_total();
    doc["vertices"] = ordered_json::array();
    for (const auto& v : q.vertices) doc["vertices"].push_back(point_json(v));
    doc["arrows"] = ordered_json::array();
    for (const auto& [edge, m] : q.arrows)
      doc["arrows"].push_back({{"src", point_json(edge.first)}, {"dst", point_json(edge.second)}, {"mult", m}});
    return doc.dump(2) + "\n";
  }
  Table t;
  t.columns = {{"src", true}, {"dst", true}, {"mult"}};
  for (const auto& [edge, m] : q.arrows) t.rows.push_back({point_json(edge.first), point_json(edge.second), m});
  t.footer.emplace_back("vertices", q.vertices.size());
  t.footer.emplace_back("arrows", q.arrow_total());
  return t.render(f, "arrows");
}

std::string emit_paths(const std::vector<PathRow>& rows, OutputFormat f) {
  Table t;
  t.columns = {{"src", true}, {"dst", true}, {"paths_dp"}, {"paths_formula"}};
  bool agree = true;
  for (const auto& r : rows) {
    t.rows.push_back({point_json(r.src), point_json(r.dst), r.dp, r.formula});
    agree &= r.dp == r.formula;
  }
  t.footer.emplace_back("dp_equals_formula", agree);
  return t.render(f, "paths");
}

std::string emit_relations(const RelationTable& rel, const HereditaryReport& verdict, OutputFormat f) {
  Table t;
  t.columns = {{"src", true}, {"dst", true}, {"paths"}, {"hom"}, {"relation_dim"}};
  for (const auto& r : rel.rows) t.rows.push_back({point_json(r.src), point_json(r.dst), r.paths, r.hom, r.relation});
  t.footer.emplace_back("nonzero", rel.nonzero_count());
  t.footer.emplace_back("hereditary", verdict.hereditary);
  if (verdict.witness)
    t.footer.emplace_back("witness", verdict.witness->first.str() + " -> " + verdict.witness->second.str());
  return t.render(f, "relations");
}

std::string emit_injectives(const std::vector<InjectiveCharacterTable>& tables, OutputFormat f) {
  Table t;
  t.columns = {{"socle", true}, {"point", true}, {"mult"}};
  for (const auto& inj : tables)
    for (const auto& [p, m] : inj.entries) t.rows.push_back({point_json(inj.socle), point_json(p), m});
  return t.render(f, "inj-char");
}

std::string emit_hom_proj(const std::vector<HomProjRow>& rows, OutputFormat f) {
  Table t;
  t.columns = {{"a", true}, {"b", true}, {"dim"}};
  for (const auto& r : rows) t.rows.push_back({point_json(r.a), point_json(r.b), r.dim});
  return t.render(f, "hom-proj");
}

std::string emit_decomposition(const RootSystem& rs, const Decomposition& d, uint64_t expected_dim, OutputFormat f) {
  Table t;
  t.columns = {{"highest_weight"}, {"mult"}, {"dim"}};
  uint64_t sum = 0;
  for (const auto& [w, m] : d) {
    const uint64_t dim = weyl_dim(rs, w);
    sum += static_cast<uint64_t>(m) * dim;
    t.rows.push_back({w.str(), m, dim});
  }
  t.footer.emplace_back("dim-sum", sum);
  t.footer.emplace_back("expected", expected_dim);
  t.footer.emplace_back("check", sum == expected_dim ? "ok" : "MISMATCH");
  return t.render(f, "decomposition");
}

}  // namespace lieq
