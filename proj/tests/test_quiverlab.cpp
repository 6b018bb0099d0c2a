#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lieq/quiverlab.hpp"
#include "oracles.hpp"

using namespace lieq;

namespace {

LambdaPoint pt(const char* w, int rank, int g) { return {Weight::parse(w, rank), g}; }

struct D6Fixture {
  CharacterContext ctx{LieType::parse("D6")};
  GradedAdjointTable table{ctx, 4};
  GammaSet gamma = interval(ctx.roots(), pt("0,0,0,2,0,0", 6, 0), pt("0,0,0,0,0,0", 6, 4));
  LambdaPoint top = pt("0,0,0,0,0,0", 6, 4);
  LambdaPoint w2 = pt("0,1,0,0,0,0", 6, 3);
  LambdaPoint w4 = pt("0,0,0,1,0,0", 6, 2);
  LambdaPoint ww2 = pt("0,2,0,0,0,0", 6, 2);
  LambdaPoint w13 = pt("1,0,1,0,0,0", 6, 2);
  LambdaPoint w24 = pt("0,1,0,1,0,0", 6, 1);
  LambdaPoint bottom = pt("0,0,0,2,0,0", 6, 0);
};

}  // namespace

TEST_CASE("arrow counts") {
  const CharacterContext a2(LieType::parse("A2"));
  CHECK(arrow_count(a2, pt("1,0", 2, 1), pt("1,0", 2, 1)) == 0);
  CHECK(arrow_count(a2, pt("1,0", 2, 1), pt("1,0", 2, 0)) == 1);
  CHECK(arrow_count(a2, pt("1,1", 2, 1), pt("1,1", 2, 0)) == 2);
  CHECK(arrow_count(a2, pt("1,0", 2, 2), pt("1,0", 2, 0)) == 0);
  const CharacterContext d6(LieType::parse("D6"));
  CHECK(arrow_count(d6, pt("0,0,0,0,0,0", 6, 4), pt("0,1,0,0,0,0", 6, 3)) == 1);
  for (const char* name : {"A3", "B3", "D4", "G2"}) {
    const CharacterContext ctx(LieType::parse(name));
    const Weight w1 = Weight::fundamental(ctx.roots().rank(), 1);
    CHECK(arrow_count(ctx, {w1, 1}, {w1, 0}) == 1);
  }
}

TEST_CASE_FIXTURE(D6Fixture, "D6 quiver") {
  const QuiverData q = build_quiver(ctx, gamma);
  CHECK(q.vertices.size() == 7);
  CHECK(q.arrows.size() == 8);
  CHECK(q.arrow_total() == 8);
  CHECK(q.arrows_between(top, w2) == 1);
  for (const auto& mid : {w4, ww2, w13}) {
    CHECK(q.arrows_between(w2, mid) == 1);
    CHECK(q.arrows_between(mid, w24) == 1);
  }
  CHECK(q.arrows_between(w24, bottom) == 1);
  CHECK(path_count_dp(q, top, bottom) == 3);
  CHECK(path_count_formula(table, top, bottom) == 3);
  CHECK(path_count_dp(q, top, top) == 1);
  CHECK(path_count_dp(q, bottom, top) == 0);
}

TEST_CASE_FIXTURE(D6Fixture, "D6 relation dimensions") {
  CHECK(relation_dim(table, top, w13) == 1);
  CHECK(relation_dim(table, w2, w24) == 1);
  CHECK(relation_dim(table, w13, bottom) == 1);
  CHECK(relation_dim(table, top, w24) == 2);
  CHECK(relation_dim(table, top, bottom) == 2);
  // three paths w2 -> bottom against a one-dimensional hom space
  CHECK(path_count_formula(table, w2, bottom) == 3);
  CHECK(injective_character(table, w2, gamma).at(bottom) == 1);
  CHECK(relation_dim(table, w2, bottom) == 2);
  const RelationTable rel = relation_table(table, gamma);
  CHECK(rel.rows.size() == 49);
  CHECK(rel.nonzero_count() == 6);
  for (const auto& r : rel.rows) {
    if (r.src == w2 && r.dst == bottom) continue;
    const bool listed = (r.src == top && (r.dst == w13 || r.dst == w24 || r.dst == bottom)) ||
                        (r.src == w2 && r.dst == w24) || (r.src == w13 && r.dst == bottom);
    if (!listed) CHECK(r.relation == 0);
  }
  const HereditaryReport h = is_hereditary(table, gamma);
  CHECK_FALSE(h.hereditary);
  REQUIRE(h.witness.has_value());
  CHECK(relation_dim(table, h.witness->first, h.witness->second) > 0);
}

TEST_CASE_FIXTURE(D6Fixture, "D6 injective characters") {
  const auto i_top = injective_character(table, top, gamma);
  CHECK(i_top.at(top) == 1);
  CHECK(i_top.at(w13) == 0);
  CHECK(i_top.at(w4) == 1);
  CHECK(i_top.at(ww2) == 1);
  CHECK(i_top.at(w24) == 1);
  CHECK(i_top.at(bottom) == 1);
  CHECK(injective_character(table, w2, gamma).at(w24) == 2);
  CHECK(injective_character(table, bottom, gamma).nonzero() == std::vector<std::pair<LambdaPoint, int64_t>>{{bottom, 1}});
  const auto i13 = injective_character(table, w13, gamma).nonzero();
  CHECK(i13 == std::vector<std::pair<LambdaPoint, int64_t>>{{w13, 1}, {w24, 1}});
  CHECK_THROWS_AS(injective_character(table, pt("0,0,0,0,0,0", 6, 5), gamma), LieError);
  CHECK(hom_proj_dim(table, w2, w24) == 2);
  CHECK(hom_proj_dim(table, w13, bottom) == 0);
  CHECK(hom_proj_dim(table, w2, w2) == 1);
  CHECK(hom_proj_dim(table, w24, w2) == 0);
}

TEST_CASE_FIXTURE(D6Fixture, "D6 duality and thread independence") {
  CHECK(opposite_check(ctx, gamma, 4));
  const RelationTable one = relation_table(table, gamma, 1);
  const RelationTable four = relation_table(table, gamma, 4);
  REQUIRE(one.rows.size() == four.rows.size());
  for (std::size_t i = 0; i < one.rows.size(); ++i) {
    CHECK(one.rows[i].src == four.rows[i].src);
    CHECK(one.rows[i].relation == four.rows[i].relation);
    CHECK(one.rows[i].paths == four.rows[i].paths);
  }
  CHECK(build_quiver(ctx, gamma, {false, 3}).arrows == build_quiver(ctx, gamma).arrows);
}

TEST_CASE("Kronecker-type quivers") {
  const CharacterContext ctx(LieType::parse("A2"));
  const GradedAdjointTable table(ctx, 2);
  const GammaSet g(ctx.roots(), {pt("1,1", 2, 0), pt("1,1", 2, 1)});
  const QuiverData q = build_quiver(ctx, g);
  CHECK(q.arrows.size() == 1);
  CHECK(q.arrows_between(pt("1,1", 2, 1), pt("1,1", 2, 0)) == 2);
  CHECK(path_count_dp(q, pt("1,1", 2, 1), pt("1,1", 2, 0)) == 2);
  CHECK(is_hereditary(table, g).hereditary);
  CHECK(opposite_check(ctx, g, 1));
}

TEST_CASE("singletons") {
  const CharacterContext ctx(LieType::parse("B2"));
  const GradedAdjointTable table(ctx, 2);
  const GammaSet g(ctx.roots(), {pt("1,1", 2, 2)});
  const QuiverData q = build_quiver(ctx, g);
  CHECK(q.vertices.size() == 1);
  CHECK(q.arrows.empty());
  CHECK(is_hereditary(table, g).hereditary);
  CHECK(opposite_check(ctx, g, 2));
  CHECK(is_tree(q));
}

TEST_CASE("non-closed sets need the override") {
  const CharacterContext ctx(LieType::parse("A1"));
  const GradedAdjointTable table(ctx, 2);
  const GammaSet g(ctx.roots(), {pt("0", 1, 0), pt("0", 1, 2)});
  CHECK_THROWS_AS(build_quiver(ctx, g), ClosureError);
  try {
    (void)build_quiver(ctx, g);
  } catch (const ClosureError& e) {
    CHECK(e.witness().low == pt("0", 1, 0));
    CHECK(e.witness().high == pt("0", 1, 2));
  }
  const QuiverData q = build_quiver(ctx, g, {true, 1});
  CHECK_FALSE(q.interval_closed);
  CHECK(q.arrows.empty());
  CHECK_THROWS_AS(is_hereditary(table, g), ClosureError);
  CHECK_THROWS_AS(relation_table(table, g), ClosureError);
  CHECK_THROWS_AS(opposite_check(ctx, g, 2), ClosureError);
}

TEST_CASE("structural properties on random interval-closed sets") {
  std::mt19937 rng(2024);
  for (const char* name : {"A2", "A3", "B2", "D4"}) {
    CAPTURE(name);
    const CharacterContext ctx(LieType::parse(name));
    const GradedAdjointTable table(ctx, 4);
    const RootSystem& rs = ctx.roots();
    for (int trial = 0; trial < 6; ++trial) {
      const GammaSet g = oracle::random_closed_gamma(rs, rng, 4);
      REQUIRE(is_interval_closed(rs, g).closed);
      const QuiverData q = build_quiver(ctx, g);
      for (const auto& [e, m] : q.arrows) {
        CHECK(e.first.grade == e.second.grade + 1);
        CHECK(m > 0);
        const Weight diff = e.first.weight - e.second.weight;
        const auto roots = rs.all_root_weights();
        CHECK((diff.is_zero() || std::find(roots.begin(), roots.end(), diff) != roots.end()));
      }
      for (const auto& s : g.points()) {
        const auto inj = injective_character(table, s, g);
        for (const auto& d : g.points()) {
          CHECK(path_count_dp(q, s, d) == path_count_formula(table, s, d));
          CHECK(relation_dim(table, s, d) >= 0);
          CHECK(hom_proj_dim(table, s, d) == inj.at(d));
          if (inj.at(d) != 0) CHECK(leq(rs, d, s));
        }
      }
      CHECK(opposite_check(ctx, g, g.max_grade()));
      CHECK(sharp_dual(rs, sharp_dual(rs, g, 4), 4) == g);
    }
  }
}
