#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lieq/problem.hpp"
#include "lieq/quiverlab.hpp"

namespace lieq {

struct PathRow {
  LambdaPoint src;
  LambdaPoint dst;
  int64_t dp = 0;
  int64_t formula = 0;
};

struct HomProjRow {
  LambdaPoint a;
  LambdaPoint b;
  int64_t dim = 0;
};

/// Node id used in DOT output: "labels;grade".
std::string dot_id(const LambdaPoint& p);

std::string emit_points(const GammaSet& gamma, OutputFormat f);
std::string emit_quiver(const QuiverData& q, OutputFormat f);
std::string emit_paths(const std::vector<PathRow>& rows, OutputFormat f);
std::string emit_relations(const RelationTable& t, const HereditaryReport& verdict, OutputFormat f);
std::string emit_injectives(const std::vector<InjectiveCharacterTable>& tables, OutputFormat f);
std::string emit_hom_proj(const std::vector<HomProjRow>& rows, OutputFormat f);
/// One row per irreducible, then a dim-sum line comparing against `expected_dim`.
std::string emit_decomposition(const RootSystem& rs, const Decomposition& d, uint64_t expected_dim, OutputFormat f);

}  // namespace lieq
