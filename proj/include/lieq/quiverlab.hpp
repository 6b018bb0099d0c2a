#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lieq/lambda_poset.hpp"
#include "lieq/plethysm.hpp"

namespace lieq {

using PointPair = std::pair<LambdaPoint, LambdaPoint>;

/// Ext quiver of a finite Gamma. Arrows run from (lambda, r) to (mu, r - 1).
struct QuiverData {
  LieType ambient;
  std::vector<LambdaPoint> vertices;        // LambdaPoint order
  std::map<PointPair, int64_t> arrows;      // (src, dst) -> multiplicity >= 1
  bool interval_closed = true;

  [[nodiscard]] int64_t arrow_total() const;
  [[nodiscard]] int64_t arrows_between(const LambdaPoint& src, const LambdaPoint& dst) const;
};

class ClosureError : public LieError {
 public:
  explicit ClosureError(const ClosureWitness& w);
  [[nodiscard]] const ClosureWitness& witness() const { return witness_; }

 private:
  ClosureWitness witness_;
};

struct QuiverOptions {
  bool allow_non_interval_closed = false;
  int threads = 1;
};

/// 0 unless src.grade == dst.grade + 1; else dim Hom(V(mu), g (x) V(lambda)).
int64_t arrow_count(const CharacterContext& ctx, const LambdaPoint& src, const LambdaPoint& dst);

QuiverData build_quiver(const CharacterContext& ctx, const GammaSet& gamma, const QuiverOptions& opts = {});

/// Paths from src to dst weighted by arrow multiplicities.
int64_t path_count_dp(const QuiverData& q, const LambdaPoint& src, const LambdaPoint& dst);

/// dim Hom(V(mu), g^{(x)(r-s)} (x) V(lambda)); 0 when r < s.
int64_t path_count_formula(const GradedAdjointTable& table, const LambdaPoint& src, const LambdaPoint& dst);

/// dim Hom(V(lambda), S^(r-s)(g) (x) V(mu)); 0 when r < s.
int64_t hom_proj_dim(const GradedAdjointTable& table, const LambdaPoint& a, const LambdaPoint& b);

/// path_count_formula - dim Hom(V(mu), S^(r-s)(g) (x) V(lambda)).
int64_t relation_dim(const GradedAdjointTable& table, const LambdaPoint& src, const LambdaPoint& dst);

struct InjectiveCharacterTable {
  LambdaPoint socle;
  std::vector<std::pair<LambdaPoint, int64_t>> entries;  // every point of Gamma at grade <= socle grade

  [[nodiscard]] int64_t at(const LambdaPoint& p) const;
  [[nodiscard]] std::vector<std::pair<LambdaPoint, int64_t>> nonzero() const;
};

InjectiveCharacterTable injective_character(const GradedAdjointTable& table, const LambdaPoint& socle,
                                            const GammaSet& gamma, int threads = 1);

struct RelationRow {
  LambdaPoint src;
  LambdaPoint dst;
  int64_t paths = 0;
  int64_t hom = 0;
  int64_t relation = 0;
};

/// All ordered pairs of Gamma, sorted by (src, dst).
struct RelationTable {
  std::vector<RelationRow> rows;

  [[nodiscard]] const RelationRow* find(const LambdaPoint& src, const LambdaPoint& dst) const;
  [[nodiscard]] std::size_t nonzero_count() const;
};

RelationTable relation_table(const GradedAdjointTable& table, const GammaSet& gamma, int threads = 1);

struct HereditaryReport {
  bool hereditary = true;
  std::optional<PointPair> witness;
};

HereditaryReport is_hereditary(const GradedAdjointTable& table, const GammaSet& gamma, int threads = 1);

/// Q(Gamma^#) equals the reversed Q(Gamma) under (mu, s) -> (dual mu, r - s).
bool opposite_check(const CharacterContext& ctx, const GammaSet& gamma, int r);

/// Undirected degree of every vertex (arrow multiplicities counted), in vertex order.
std::vector<int64_t> vertex_degrees(const QuiverData& q);
/// Connected and with exactly |vertices| - 1 arrows, counted with multiplicity.
bool is_tree(const QuiverData& q);

/// Throws ClosureError when Gamma is not interval-closed.
void require_interval_closed(const RootSystem& rs, const GammaSet& gamma);

}  // namespace lieq
