#include "lieq/lambda_poset.hpp"

#include <algorithm>
#include <unordered_set>

namespace lieq {
namespace {

using Layer = std::unordered_set<Weight, WeightHash>;

// Weights reachable from `start` in exactly `steps` moves by +beta (or -beta
// when downward), beta in R u {0}, staying dominant. layers[t] holds step t.
std::vector<Layer> sweep(const RootSystem& rs, const Weight& start, int steps, bool downward) {
  const std::vector<Weight> moves = [&] {
    auto r = rs.all_root_weights();
    r.push_back(rs.zero());
    return r;
  }();
  std::vector<Layer> layers(static_cast<std::size_t>(steps) + 1);
  layers[0].insert(start);
  for (int t = 1; t <= steps; ++t) {
    for (const auto& w : layers[t - 1])
      for (const auto& b : moves) {
        Weight next = downward ? w - b : w + b;
        if (next.is_dominant()) layers[t].insert(next);
      }
  }
  return layers;
}

std::vector<LambdaPoint> neighbours(const RootSystem& rs, const LambdaPoint& p, int direction) {
  check_point(rs, p);
  std::vector<LambdaPoint> out;
  if (direction < 0 && p.grade == 0) return out;
  std::unordered_set<Weight, WeightHash> seen;
  auto consider = [&](const Weight& w) {
    if (w.is_dominant() && seen.insert(w).second) out.push_back({w, p.grade + direction});
  };
  consider(p.weight);
  for (const auto& b : rs.all_root_weights()) consider(p.weight + b);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string LambdaPoint::str() const { return "(" + weight.str() + ", " + std::to_string(grade) + ")"; }

std::string LambdaPoint::id() const { return weight.str() + ";" + std::to_string(grade); }

std::strong_ordering operator<=>(const LambdaPoint& a, const LambdaPoint& b) {
  if (auto c = b.grade <=> a.grade; c != 0) return c;
  return a.weight <=> b.weight;
}

std::size_t LambdaPointHash::operator()(const LambdaPoint& p) const noexcept {
  return WeightHash{}(p.weight) ^ (static_cast<std::size_t>(p.grade) * 0x9e3779b97f4a7c15ULL);
}

void check_point(const RootSystem& rs, const LambdaPoint& p) {
  rs.check_weight(p.weight);
  if (!p.weight.is_dominant()) throw LieError("point " + p.str() + " has a non-dominant weight");
  if (p.grade < 0) throw LieError("point " + p.str() + " has a negative grade");
}

GammaSet::GammaSet(const RootSystem& rs, std::vector<LambdaPoint> points) : ambient_(rs.type()), points_(std::move(points)) {
  for (const auto& p : points_) check_point(rs, p);
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool GammaSet::contains(const LambdaPoint& p) const { return std::binary_search(points_.begin(), points_.end(), p); }

int GammaSet::max_grade() const {
  int g = 0;
  for (const auto& p : points_) g = std::max(g, p.grade);
  return g;
}

std::vector<LambdaPoint> covers(const RootSystem& rs, const LambdaPoint& p) { return neighbours(rs, p, +1); }

std::vector<LambdaPoint> cocovers(const RootSystem& rs, const LambdaPoint& p) { return neighbours(rs, p, -1); }

bool leq(const RootSystem& rs, const LambdaPoint& p, const LambdaPoint& q) {
  check_point(rs, p);
  check_point(rs, q);
  if (q.grade < p.grade) return false;
  const int n = q.grade - p.grade;
  // meet in the middle: forward half from p, backward half from q
  const int fwd = n / 2;
  const auto f = sweep(rs, p.weight, fwd, false);
  const auto b = sweep(rs, q.weight, n - fwd, true);
  const Layer& small = f[fwd].size() <= b[n - fwd].size() ? f[fwd] : b[n - fwd];
  const Layer& large = &small == &f[fwd] ? b[n - fwd] : f[fwd];
  return std::any_of(small.begin(), small.end(), [&](const Weight& w) { return large.contains(w); });
}

GammaSet interval(const RootSystem& rs, const LambdaPoint& p, const LambdaPoint& q) {
  check_point(rs, p);
  check_point(rs, q);
  if (q.grade < p.grade) return GammaSet(rs, {});
  const int n = q.grade - p.grade;
  const auto f = sweep(rs, p.weight, n, false);
  if (!f[n].contains(q.weight)) return GammaSet(rs, {});
  const auto b = sweep(rs, q.weight, n, true);
  std::vector<LambdaPoint> pts;
  for (int t = 0; t <= n; ++t)
    for (const auto& w : f[t])
      if (b[n - t].contains(w)) pts.push_back({w, p.grade + t});
  return GammaSet(rs, std::move(pts));
}

ClosureReport is_interval_closed(const RootSystem& rs, const GammaSet& gamma) {
  if (gamma.ambient() != rs.type() && !gamma.empty()) throw LieError("Gamma and root system disagree on type");
  const auto& pts = gamma.points();
  // points are sorted by grade descending, so lows come after highs
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const LambdaPoint& high = pts[i];
      const LambdaPoint& low = pts[j];
      if (low.grade + 1 >= high.grade) continue;  // intervals of length <= 1 are {low, high}
      const GammaSet between = interval(rs, low, high);
      for (const auto& x : between.points())
        if (!gamma.contains(x)) return {false, ClosureWitness{low, high, x}};
    }
  return {};
}

GammaSet sharp_dual(const RootSystem& rs, const GammaSet& gamma, int r) {
  std::vector<LambdaPoint> out;
  out.reserve(gamma.size());
  for (const auto& p : gamma.points()) {
    if (p.grade > r) throw LieError("sharp_dual: point " + p.str() + " lies above grade " + std::to_string(r));
    out.push_back({rs.dual_weight(p.weight), r - p.grade});
  }
  return GammaSet(rs, std::move(out));
}

}  // namespace lieq
