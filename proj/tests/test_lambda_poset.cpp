#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lieq/lambda_poset.hpp"
#include "oracles.hpp"

using namespace lieq;

namespace {

LambdaPoint pt(const char* w, int rank, int g) { return {Weight::parse(w, rank), g}; }

}  // namespace

TEST_CASE("point order: grade descending, then labels") {
  const LambdaPoint a = pt("0,1", 2, 3), b = pt("1,0", 2, 3), c = pt("5,5", 2, 1);
  CHECK(a < b);
  CHECK(b < c);
  CHECK(a.id() == "0,1;3");
  CHECK(a.str() == "(0,1, 3)");
}

TEST_CASE("covers") {
  const RootSystem rs(LieType::parse("A1"));
  const auto up = covers(rs, pt("0", 1, 0));
  CHECK(up == std::vector<LambdaPoint>{pt("0", 1, 1), pt("2", 1, 1)});
  const auto up1 = covers(rs, pt("1", 1, 2));
  CHECK(up1 == std::vector<LambdaPoint>{pt("1", 1, 3), pt("3", 1, 3)});
  CHECK(cocovers(rs, pt("0", 1, 0)).empty());
  CHECK(cocovers(rs, pt("2", 1, 1)) == std::vector<LambdaPoint>{pt("0", 1, 0), pt("2", 1, 0), pt("4", 1, 0)});
  CHECK_THROWS_AS(covers(rs, pt("-1", 1, 0)), LieError);
}

TEST_CASE("leq agrees with an explicit search") {
  for (const char* name : {"A2", "B2", "G2"}) {
    CAPTURE(name);
    const RootSystem rs(LieType::parse(name));
    const auto ws = oracle::small_dominant(rs.rank(), 3);
    for (const auto& a : ws)
      for (const auto& b : ws)
        for (int dg = 0; dg <= 3; ++dg) {
          const LambdaPoint p{a, 1}, q{b, 1 + dg};
          CHECK(leq(rs, p, q) == oracle::leq_by_search(rs, p, q));
          CHECK_FALSE(leq(rs, q, p) != (dg == 0 && a == b));
        }
  }
}

TEST_CASE("intervals") {
  const RootSystem d6(LieType::parse("D6"));
  const GammaSet g = interval(d6, pt("0,0,0,2,0,0", 6, 0), pt("0,0,0,0,0,0", 6, 4));
  const std::vector<LambdaPoint> want = {pt("0,0,0,0,0,0", 6, 4), pt("0,1,0,0,0,0", 6, 3), pt("0,0,0,1,0,0", 6, 2),
                                         pt("0,2,0,0,0,0", 6, 2), pt("1,0,1,0,0,0", 6, 2), pt("0,1,0,1,0,0", 6, 1),
                                         pt("0,0,0,2,0,0", 6, 0)};
  CHECK(g.points() == want);

  const RootSystem a2(LieType::parse("A2"));
  const LambdaPoint p = pt("1,1", 2, 2);
  CHECK(interval(a2, p, p).points() == std::vector<LambdaPoint>{p});
  CHECK(interval(a2, pt("3,0", 2, 0), pt("0,0", 2, 1)).empty());
  CHECK(interval(a2, p, pt("1,1", 2, 1)).empty());
}

TEST_CASE("interval members are exactly the points between the ends") {
  std::mt19937 rng(5);
  for (const char* name : {"A2", "B2", "A3"}) {
    const RootSystem rs(LieType::parse(name));
    const auto ws = oracle::small_dominant(rs.rank(), 2);
    std::uniform_int_distribution<std::size_t> pick(0, ws.size() - 1);
    for (int trial = 0; trial < 20; ++trial) {
      const LambdaPoint lo{ws[pick(rng)], 0}, hi{ws[pick(rng)], 3};
      const GammaSet iv = interval(rs, lo, hi);
      CHECK(iv.empty() == !leq(rs, lo, hi));
      for (const auto& x : iv.points()) {
        CHECK(leq(rs, lo, x));
        CHECK(leq(rs, x, hi));
      }
      // every cover of lo that is below hi is present
      for (const auto& c : covers(rs, lo))
        if (leq(rs, c, hi)) CHECK(iv.contains(c));
    }
  }
}

TEST_CASE("interval-closedness and witnesses") {
  const RootSystem d6(LieType::parse("D6"));
  const GammaSet full = interval(d6, pt("0,0,0,2,0,0", 6, 0), pt("0,0,0,0,0,0", 6, 4));
  CHECK(is_interval_closed(d6, full).closed);
  std::vector<LambdaPoint> holes;
  for (const auto& p : full.points())
    if (p != pt("0,0,0,1,0,0", 6, 2)) holes.push_back(p);
  const ClosureReport r = is_interval_closed(d6, GammaSet(d6, holes));
  REQUIRE_FALSE(r.closed);
  CHECK(r.witness->missing == pt("0,0,0,1,0,0", 6, 2));
  CHECK(leq(d6, r.witness->low, r.witness->missing));
  CHECK(leq(d6, r.witness->missing, r.witness->high));

  const RootSystem a2(LieType::parse("A2"));
  CHECK(is_interval_closed(a2, GammaSet(a2, {pt("1,1", 2, 0)})).closed);
  CHECK(is_interval_closed(a2, GammaSet(a2, {})).closed);
  // endpoints two grades apart with nothing in between
  CHECK_FALSE(is_interval_closed(a2, GammaSet(a2, {pt("0,0", 2, 0), pt("0,0", 2, 2)})).closed);
}

TEST_CASE("sharp duality") {
  const RootSystem a2(LieType::parse("A2"));
  const GammaSet g(a2, {pt("1,0", 2, 0), pt("2,0", 2, 1), pt("0,1", 2, 3)});
  const GammaSet d = sharp_dual(a2, g, 3);
  CHECK(d.points() == GammaSet(a2, {pt("0,1", 2, 3), pt("0,2", 2, 2), pt("1,0", 2, 0)}).points());
  CHECK(sharp_dual(a2, d, 3) == g);
  CHECK_THROWS_AS(sharp_dual(a2, g, 2), LieError);

  const RootSystem d6(LieType::parse("D6"));
  const GammaSet full = interval(d6, pt("0,0,0,2,0,0", 6, 0), pt("0,0,0,0,0,0", 6, 4));
  const GammaSet fd = sharp_dual(d6, full, 4);
  CHECK(is_interval_closed(d6, fd).closed);
  CHECK(sharp_dual(d6, fd, 4) == full);
}

TEST_CASE("gamma sets sort and deduplicate") {
  const RootSystem a2(LieType::parse("A2"));
  const GammaSet g(a2, {pt("0,0", 2, 0), pt("1,1", 2, 1), pt("0,0", 2, 0)});
  CHECK(g.size() == 2);
  CHECK(g.points().front() == pt("1,1", 2, 1));
  CHECK(g.max_grade() == 1);
  CHECK_THROWS_AS(GammaSet(a2, {pt("1,-1", 2, 0)}), LieError);
  CHECK_THROWS_AS(GammaSet(a2, {pt("1,0", 2, -1)}), LieError);
}
