#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lieq/emit.hpp"
#include "lieq/problem.hpp"
#include "lieq/quiverlab.hpp"
#include "lieq/reproduce.hpp"

namespace {

using namespace lieq;

constexpr int kExitSpec = 2;
constexpr int kExitClosure = 3;
constexpr int kExitMismatch = 4;

struct Globals {
  std::string format;
  std::optional<int> max_degree;
  bool allow_non_closed = false;
  int threads = 1;
};

std::string read_spec(const std::string& path) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open spec file '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

OutputFormat pick_format(const Globals& g, const ProblemSpec* spec, OutputFormat fallback) {
  if (!g.format.empty()) return parse_format(g.format);
  if (spec && spec->format) return *spec->format;
  return fallback;
}

struct Loaded {
  ProblemSpec spec;
  std::unique_ptr<CharacterContext> ctx;
  std::unique_ptr<GradedAdjointTable> table;
  GammaSet gamma;
  bool allow_non_closed = false;
};

Loaded load(const Globals& g, const std::string& path) {
  Loaded l;
  l.spec = parse_problem(read_spec(path));
  l.ctx = std::make_unique<CharacterContext>(l.spec.lie);
  l.table = std::make_unique<GradedAdjointTable>(*l.ctx, g.max_degree.value_or(l.spec.max_degree));
  l.gamma = resolve_gamma(l.ctx->roots(), l.spec);
  l.allow_non_closed = g.allow_non_closed || l.spec.override_interval_closed;
  return l;
}

std::string cmd_interval(const Globals& g, const std::string& path) {
  const ProblemSpec spec = parse_problem(read_spec(path));
  if (!spec.interval) throw SpecError("the interval command needs gamma.interval");
  const RootSystem rs(spec.lie);
  return emit_points(resolve_gamma(rs, spec), pick_format(g, &spec, OutputFormat::kTsv));
}

std::string cmd_quiver(const Globals& g, const std::string& path) {
  Loaded l = load(g, path);
  const QuiverData q = build_quiver(*l.ctx, l.gamma, {l.allow_non_closed, g.threads});
  std::string out = emit_quiver(q, pick_format(g, &l.spec, OutputFormat::kDot));
  if (!q.interval_closed) std::cerr << "warning: Gamma is not interval-closed; arrows only\n";
  return out;
}

std::string cmd_tables(const Globals& g, const std::string& path, const std::string& which) {
  Loaded l = load(g, path);
  const OutputFormat f = pick_format(g, &l.spec, OutputFormat::kTsv);
  const auto& pts = l.gamma.points();
  if (which == "paths") {
    const QuiverData q = build_quiver(*l.ctx, l.gamma, {false, g.threads});
    std::vector<PathRow> rows;
    for (const auto& s : pts)
      for (const auto& d : pts) rows.push_back({s, d, path_count_dp(q, s, d), path_count_formula(*l.table, s, d)});
    return emit_paths(rows, f);
  }
  if (which == "relations") {
    const RelationTable rel = relation_table(*l.table, l.gamma, g.threads);
    HereditaryReport verdict;
    for (const auto& row : rel.rows)
      if (row.relation != 0 && verdict.hereditary) verdict = {false, PointPair{row.src, row.dst}};
    return emit_relations(rel, verdict, f);
  }
  if (which == "inj-char") {
    require_interval_closed(l.ctx->roots(), l.gamma);
    std::vector<InjectiveCharacterTable> tables;
    for (const auto& s : pts) tables.push_back(injective_character(*l.table, s, l.gamma, g.threads));
    return emit_injectives(tables, f);
  }
  if (which == "hom-proj") {
    require_interval_closed(l.ctx->roots(), l.gamma);
    std::vector<HomProjRow> rows;
    for (const auto& a : pts)
      for (const auto& b : pts) rows.push_back({a, b, hom_proj_dim(*l.table, a, b)});
    return emit_hom_proj(rows, f);
  }
  throw SpecError("unknown table '" + which + "' (paths, relations, inj-char, hom-proj)");
}

struct DecomposeArgs {
  std::string lie;
  std::vector<std::string> tensor;
  std::optional<int> sym;
  std::optional<int> sym_graded;
  std::optional<int> tensorpow;
};

std::string cmd_decompose(const Globals& g, const DecomposeArgs& a) {
  LieType t;
  try {
    t = LieType::parse(a.lie);
    t.validate();
  } catch (const LieError& e) {
    throw SpecError(e.what());
  }
  const int chosen = (!a.tensor.empty()) + a.sym.has_value() + a.sym_graded.has_value() + a.tensorpow.has_value();
  if (chosen != 1) throw SpecError("decompose needs exactly one of --tensor, --sym, --sym-graded, --tensorpow");
  const CharacterContext ctx(t);
  const RootSystem& rs = ctx.roots();
  const OutputFormat f = pick_format(g, nullptr, OutputFormat::kTsv);
  if (!a.tensor.empty()) {
    const Weight l = make_point(rs, a.tensor[0], 0).weight;
    const Weight m = make_point(rs, a.tensor[1], 0).weight;
    return emit_decomposition(rs, tensor_decompose(rs, *ctx.irreducible(m), l), weyl_dim(rs, l) * weyl_dim(rs, m), f);
  }
  const int k = a.sym ? *a.sym : a.sym_graded ? *a.sym_graded : *a.tensorpow;
  if (k < 0) throw SpecError("degree must be nonnegative");
  const GradedAdjointTable table(ctx, std::max(g.max_degree.value_or(kDefaultMaxDegree), k));
  const Character& x = a.sym ? table.sym_power(k) : a.sym_graded ? table.s_graded(k) : table.tensor_power(k);
  return emit_decomposition(rs, decompose(rs, x), static_cast<uint64_t>(x.dimension(rs)), f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ext quivers, relation dimensions and graded characters for current-algebra categories"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"dot", "tsv", "json"}));
  app.add_option("--max-degree", g.max_degree, "Largest degree of S^(k)(g) and tensor powers to build")
      ->check(CLI::PositiveNumber);
  app.add_flag("--allow-non-interval-closed", g.allow_non_closed, "Build quivers for sets that are not interval-closed");
  app.add_option("--threads", g.threads, "Worker threads for pairwise tables")->check(CLI::PositiveNumber);

  std::string spec_path;
  auto* interval_cmd = app.add_subcommand("interval", "List the points of an interval");
  interval_cmd->add_option("spec", spec_path, "Problem spec (JSON file, '-' or omitted for stdin)");
  auto* quiver_cmd = app.add_subcommand("quiver", "Emit the Ext quiver of Gamma");
  quiver_cmd->add_option("spec", spec_path, "Problem spec (JSON file, '-' or omitted for stdin)");
  std::string which;
  auto* tables_cmd = app.add_subcommand("tables", "Pairwise tables over Gamma");
  tables_cmd->add_option("--which", which, "Table to emit")
      ->required()
      ->check(CLI::IsMember({"paths", "relations", "inj-char", "hom-proj"}));
  tables_cmd->add_option("spec", spec_path, "Problem spec (JSON file, '-' or omitted for stdin)");

  DecomposeArgs dec;
  auto* decompose_cmd = app.add_subcommand("decompose", "Irreducible multiplicities of a module");
  decompose_cmd->add_option("--lie", dec.lie, "Type, e.g. A2 or D6")->required();
  decompose_cmd->add_option("--tensor", dec.tensor, "V(lambda) (x) V(mu)")->expected(2);
  decompose_cmd->add_option("--sym", dec.sym, "S^k(g)");
  decompose_cmd->add_option("--sym-graded", dec.sym_graded, "S^(k)(g)");
  decompose_cmd->add_option("--tensorpow", dec.tensorpow, "g^(x)k");

  std::string target;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "Check a built-in configuration against golden data");
  std::vector<std::string> choices = reproduce_targets();
  choices.push_back("all");
  reproduce_cmd->add_option("target", target, "Configuration")->required()->check(CLI::IsMember(choices));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitSpec;
  }

  try {
    if (*reproduce_cmd) {
      bool ok = true;
      const std::vector<std::string> run = target == "all" ? reproduce_targets() : std::vector<std::string>{target};
      std::string out;
      for (const auto& t : run) {
        const ReproReport r = reproduce(t, g.threads);
        out += r.render();
        ok &= r.passed();
      }
      std::cout << out;
      return ok ? 0 : kExitMismatch;
    }
    std::string out;
    if (*interval_cmd) out = cmd_interval(g, spec_path);
    if (*quiver_cmd) out = cmd_quiver(g, spec_path);
    if (*tables_cmd) out = cmd_tables(g, spec_path, which);
    if (*decompose_cmd) out = cmd_decompose(g, dec);
    std::cout << out;
    return 0;
  } catch (const ClosureError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitClosure;
  } catch (const LieError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSpec;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
