#include "lieq/quiverlab.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace lieq {
namespace {

// Runs fn(i) for i in [0, n); each i writes only its own slot, so the
// result does not depend on scheduling.
template <class Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(threads, 1), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

int64_t lookup(const Decomposition& d, const Weight& w) {
  auto it = d.find(w);
  return it == d.end() ? 0 : it->second;
}

}  // namespace

int64_t QuiverData::arrow_total() const {
  int64_t n = 0;
  for (const auto& [_, m] : arrows) n += m;
  return n;
}

int64_t QuiverData::arrows_between(const LambdaPoint& src, const LambdaPoint& dst) const {
  auto it = arrows.find({src, dst});
  return it == arrows.end() ? 0 : it->second;
}

ClosureError::ClosureError(const ClosureWitness& w)
    : LieError("Gamma is not interval-closed: " + w.missing.str() + " lies between " + w.low.str() + " and " +
               w.high.str() + " but is missing"),
      witness_(w) {}

void require_interval_closed(const RootSystem& rs, const GammaSet& gamma) {
  const ClosureReport report = is_interval_closed(rs, gamma);
  if (!report.closed) throw ClosureError(*report.witness);
}

int64_t arrow_count(const CharacterContext& ctx, const LambdaPoint& src, const LambdaPoint& dst) {
  check_point(ctx.roots(), src);
  check_point(ctx.roots(), dst);
  if (src.grade != dst.grade + 1) return 0;
  return lookup(*ctx.adjoint_tensor(src.weight), dst.weight);
}

QuiverData build_quiver(const CharacterContext& ctx, const GammaSet& gamma, const QuiverOptions& opts) {
  const RootSystem& rs = ctx.roots();
  QuiverData q;
  q.ambient = rs.type();
  q.vertices = gamma.points();
  const ClosureReport report = is_interval_closed(rs, gamma);
  q.interval_closed = report.closed;
  if (!report.closed && !opts.allow_non_interval_closed) throw ClosureError(*report.witness);

  std::vector<PointPair> candidates;
  for (const auto& s : q.vertices)
    for (const auto& d : q.vertices)
      if (s.grade == d.grade + 1) candidates.emplace_back(s, d);
  std::vector<int64_t> counts(candidates.size(), 0);
  parallel_for(candidates.size(), opts.threads,
               [&](std::size_t i) { counts[i] = arrow_count(ctx, candidates[i].first, candidates[i].second); });
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (counts[i] > 0) q.arrows.emplace(candidates[i], counts[i]);
  return q;
}

int64_t path_count_dp(const QuiverData& q, const LambdaPoint& src, const LambdaPoint& dst) {
  const auto& v = q.vertices;
  auto pos = [&](const LambdaPoint& p) -> std::size_t {
    auto it = std::lower_bound(v.begin(), v.end(), p);
    if (it == v.end() || *it != p) throw LieError("path_count_dp: " + p.str() + " is not a vertex");
    return static_cast<std::size_t>(it - v.begin());
  };
  const std::size_t from = pos(src);
  const std::size_t to = pos(dst);
  if (from == to) return 1;
  if (src.grade <= dst.grade) return 0;
  // vertices are sorted by grade descending, which is a topological order
  std::vector<int64_t> ways(v.size(), 0);
  ways[from] = 1;
  std::vector<std::vector<std::pair<std::size_t, int64_t>>> out(v.size());
  for (const auto& [edge, m] : q.arrows) out[pos(edge.first)].emplace_back(pos(edge.second), m);
  for (std::size_t i = from; i < to; ++i) {
    if (ways[i] == 0) continue;
    for (const auto& [j, m] : out[i]) ways[j] += ways[i] * m;
  }
  return ways[to];
}

int64_t path_count_formula(const GradedAdjointTable& table, const LambdaPoint& src, const LambdaPoint& dst) {
  check_point(table.roots(), src);
  check_point(table.roots(), dst);
  if (src.grade < dst.grade) return 0;
  return table.hom_tensor_power(dst.weight, src.grade - dst.grade, src.weight);
}

int64_t hom_proj_dim(const GradedAdjointTable& table, const LambdaPoint& a, const LambdaPoint& b) {
  check_point(table.roots(), a);
  check_point(table.roots(), b);
  if (a.grade < b.grade) return 0;
  return table.hom_s_graded(a.weight, a.grade - b.grade, b.weight);
}

int64_t relation_dim(const GradedAdjointTable& table, const LambdaPoint& src, const LambdaPoint& dst) {
  if (src.grade < dst.grade) return 0;
  const int64_t paths = path_count_formula(table, src, dst);
  const int64_t hom = table.hom_s_graded(dst.weight, src.grade - dst.grade, src.weight);
  if (hom > paths) throw std::logic_error("relation_dim: negative dimension at " + src.str() + " -> " + dst.str());
  return paths - hom;
}

int64_t InjectiveCharacterTable::at(const LambdaPoint& p) const {
  for (const auto& [q, m] : entries)
    if (q == p) return m;
  return 0;
}

std::vector<std::pair<LambdaPoint, int64_t>> InjectiveCharacterTable::nonzero() const {
  std::vector<std::pair<LambdaPoint, int64_t>> out;
  for (const auto& e : entries)
    if (e.second != 0) out.push_back(e);
  return out;
}

InjectiveCharacterTable injective_character(const GradedAdjointTable& table, const LambdaPoint& socle,
                                            const GammaSet& gamma, int threads) {
  if (!gamma.contains(socle)) throw LieError("injective_character: socle " + socle.str() + " is not in Gamma");
  InjectiveCharacterTable out;
  out.socle = socle;
  std::vector<LambdaPoint> below;
  for (const auto& p : gamma.points())
    if (p.grade <= socle.grade) below.push_back(p);
  std::vector<int64_t> mult(below.size(), 0);
  parallel_for(below.size(), threads, [&](std::size_t i) {
    mult[i] = table.hom_s_graded(below[i].weight, socle.grade - below[i].grade, socle.weight);
  });
  for (std::size_t i = 0; i < below.size(); ++i) out.entries.emplace_back(below[i], mult[i]);
  if (out.at(socle) != 1) throw std::logic_error("injective_character: socle multiplicity is not 1");
  return out;
}

const RelationRow* RelationTable::find(const LambdaPoint& src, const LambdaPoint& dst) const {
  auto it = std::lower_bound(rows.begin(), rows.end(), std::pair(src, dst), [](const RelationRow& r, const PointPair& k) {
    return std::tie(r.src, r.dst) < std::tie(k.first, k.second);
  });
  if (it == rows.end() || it->src != src || it->dst != dst) return nullptr;
  return &*it;
}

std::size_t RelationTable::nonzero_count() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const RelationRow& r) { return r.relation != 0; }));
}

RelationTable relation_table(const GradedAdjointTable& table, const GammaSet& gamma, int threads) {
  require_interval_closed(table.roots(), gamma);
  RelationTable out;
  for (const auto& s : gamma.points())
    for (const auto& d : gamma.points()) out.rows.push_back({s, d});
  parallel_for(out.rows.size(), threads, [&](std::size_t i) {
    RelationRow& row = out.rows[i];
    if (row.src.grade < row.dst.grade) return;
    row.paths = path_count_formula(table, row.src, row.dst);
    row.hom = table.hom_s_graded(row.dst.weight, row.src.grade - row.dst.grade, row.src.weight);
    row.relation = row.paths - row.hom;
    if (row.relation < 0)
      throw std::logic_error("relation_dim: negative dimension at " + row.src.str() + " -> " + row.dst.str());
  });
  return out;
}

HereditaryReport is_hereditary(const GradedAdjointTable& table, const GammaSet& gamma, int threads) {
  const RelationTable rel = relation_table(table, gamma, threads);
  for (const auto& row : rel.rows)
    if (row.relation != 0) return {false, PointPair{row.src, row.dst}};
  return {};
}

bool opposite_check(const CharacterContext& ctx, const GammaSet& gamma, int r) {
  const RootSystem& rs = ctx.roots();
  require_interval_closed(rs, gamma);
  const GammaSet dual = sharp_dual(rs, gamma, r);
  const QuiverData q = build_quiver(ctx, gamma);
  const QuiverData qd = build_quiver(ctx, dual);
  auto image = [&](const LambdaPoint& p) { return LambdaPoint{rs.dual_weight(p.weight), r - p.grade}; };
  if (q.arrows.size() != qd.arrows.size()) return false;
  for (const auto& [edge, m] : q.arrows)
    if (qd.arrows_between(image(edge.second), image(edge.first)) != m) return false;
  return true;
}

std::vector<int64_t> vertex_degrees(const QuiverData& q) {
  std::vector<int64_t> deg(q.vertices.size(), 0);
  auto idx = [&](const LambdaPoint& p) {
    return static_cast<std::size_t>(std::lower_bound(q.vertices.begin(), q.vertices.end(), p) - q.vertices.begin());
  };
  for (const auto& [edge, m] : q.arrows) {
    deg[idx(edge.first)] += m;
    deg[idx(edge.second)] += m;
  }
  return deg;
}

bool is_tree(const QuiverData& q) {
  const std::size_t n = q.vertices.size();
  if (n == 0 || q.arrow_total() != static_cast<int64_t>(n) - 1) return false;
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto idx = [&](const LambdaPoint& p) {
    return static_cast<std::size_t>(std::lower_bound(q.vertices.begin(), q.vertices.end(), p) - q.vertices.begin());
  };
  std::size_t components = n;
  for (const auto& [edge, m] : q.arrows) {
    const std::size_t a = find(idx(edge.first));
    const std::size_t b = find(idx(edge.second));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

}  // namespace lieq
