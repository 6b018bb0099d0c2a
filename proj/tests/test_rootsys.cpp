#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "lieq/rootsys.hpp"
#include "oracles.hpp"

using namespace lieq;

namespace {

const char* kAllTypes[] = {"A1", "A2", "A3", "A5", "A8", "B2", "B3", "B5", "C3", "C4", "D4", "D5", "D6", "D8",
                           "E6", "E7", "E8", "F4", "G2"};

}  // namespace

TEST_CASE("type parsing and validation") {
  CHECK(LieType::parse("d6").name() == "D6");
  CHECK(LieType::parse("E8").rank == 8);
  CHECK_THROWS_AS(LieType::parse("D2").validate(), LieError);
  CHECK_THROWS_AS(LieType::parse("E5").validate(), LieError);
  CHECK_THROWS_AS(LieType::parse("A9").validate(), LieError);
  CHECK_THROWS_AS(LieType::parse("Q3").validate(), LieError);
  CHECK_THROWS_AS(LieType::parse("").validate(), LieError);
}

TEST_CASE("weight parsing") {
  CHECK(Weight::parse("0,0,0,2,0,0", 6) == Weight{0, 0, 0, 2, 0, 0});
  CHECK(Weight::parse(" 1, -2 ,3", 3) == Weight{1, -2, 3});
  CHECK_THROWS_AS(Weight::parse("1,0", 3), LieError);
  CHECK_THROWS_AS(Weight::parse("1,0,0,0", 3), LieError);
  CHECK_THROWS_AS(Weight::parse("1,x,0", 3), LieError);
  CHECK(Weight::fundamental(6, 4) == Weight{0, 0, 0, 1, 0, 0});
}

TEST_CASE("Cartan matrices in Bourbaki numbering") {
  const RootSystem b3(LieType::parse("B3"));
  CHECK(b3.cartan(1, 2) == -1);
  CHECK(b3.cartan(2, 1) == -2);
  const RootSystem c3(LieType::parse("C3"));
  CHECK(c3.cartan(1, 2) == -2);
  CHECK(c3.cartan(2, 1) == -1);
  const RootSystem g2(LieType::parse("G2"));
  CHECK(g2.cartan(0, 1) == -3);
  CHECK(g2.cartan(1, 0) == -1);
  const RootSystem d6(LieType::parse("D6"));
  CHECK(d6.cartan(3, 4) == -1);
  CHECK(d6.cartan(3, 5) == -1);
  CHECK(d6.cartan(4, 5) == 0);
  const RootSystem e6(LieType::parse("E6"));
  CHECK(e6.cartan(0, 2) == -1);
  CHECK(e6.cartan(1, 3) == -1);
  CHECK(e6.cartan(0, 1) == 0);
}

TEST_CASE("root counts, highest root and the invariant form") {
  for (const char* name : kAllTypes) {
    CAPTURE(name);
    const RootSystem rs(LieType::parse(name));
    const int n = rs.rank();
    CHECK(rs.form(rs.highest_root_weight(), rs.highest_root_weight()) == Rational(2));
    // theta, plus the highest short root when not simply laced
    int dominant_roots = 0;
    for (const auto& w : rs.positive_root_weights()) dominant_roots += w.is_dominant();
    const bool simply_laced = std::string("ADE").find(rs.type().family) != std::string::npos;
    CHECK(dominant_roots == (simply_laced ? 1 : 2));
    // symmetric form, (omega_i, alpha_j) = d_j delta_ij
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        const Weight wi = Weight::fundamental(n, i);
        const Weight aj = rs.simple_root_weight(j);
        CHECK(rs.form(wi, aj) == (i == j ? rs.half_length(j - 1) : Rational(0)));
        CHECK(rs.form(wi, Weight::fundamental(n, j)) == rs.form(Weight::fundamental(n, j), wi));
      }
    // every root round-trips through root coordinates; pairing with its own coroot is 2
    for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
      const auto back = rs.weight_to_root(rs.positive_root_weights()[k]);
      REQUIRE(back.has_value());
      CHECK(*back == rs.positive_roots()[k]);
      CHECK(rs.coroot_pairing(rs.positive_root_weights()[k], k) == 2);
    }
    CHECK(Rational(rs.form_scaled(rs.rho(), rs.rho())) == rs.form(rs.rho(), rs.rho()) * Rational(rs.form_scale()));
  }
}

TEST_CASE("Weyl group orders agree with the size of the orbit of rho") {
  for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4"}) {
    CAPTURE(name);
    const RootSystem rs(LieType::parse(name));
    CHECK(rs.weyl_orbit(rs.rho()).size() == rs.weyl_order());
    CHECK(oracle::weyl_words(rs).size() == rs.weyl_order());
  }
  CHECK(RootSystem(LieType::parse("E6")).weyl_order() == 51840);
  CHECK(RootSystem(LieType::parse("E8")).weyl_order() == 696729600ULL);
}

TEST_CASE("orbit sizes from stabilisers match explicit orbits") {
  for (const char* name : {"A2", "A3", "B3", "C3", "D4", "D5", "G2", "F4"}) {
    CAPTURE(name);
    const RootSystem rs(LieType::parse(name));
    for (const auto& w : oracle::small_dominant(rs.rank(), 1)) {
      CAPTURE(w.str());
      const auto orbit = rs.weyl_orbit(w);
      CHECK(orbit.size() == rs.orbit_size(w));
      std::set<Weight> distinct(orbit.begin(), orbit.end());
      CHECK(distinct.size() == orbit.size());
    }
  }
}

TEST_CASE("dominant representative and sign") {
  const RootSystem rs(LieType::parse("B3"));
  const auto words = oracle::weyl_words(rs);
  const Weight lam{2, 1, 1};
  for (const auto& word : words) {
    const Weight w = oracle::apply_word(rs, word, lam);
    const DominantRep rep = rs.dominant_representative(w);
    CHECK(rep.weight == lam);
    CHECK(rep.sign == ((word.size() % 2 == 0) ? 1 : -1));
  }
  // A singular weight: its representative has a zero label
  const DominantRep z = rs.dominant_representative(Weight{-1, 1, 0});
  CHECK(z.weight.is_dominant());
}

TEST_CASE("duals") {
  const RootSystem a2(LieType::parse("A2"));
  CHECK(a2.dual_weight(Weight{1, 0}) == Weight{0, 1});
  const RootSystem d4(LieType::parse("D4"));
  CHECK(d4.dual_weight(Weight{0, 0, 1, 0}) == Weight{0, 0, 1, 0});
  const RootSystem d5(LieType::parse("D5"));
  CHECK(d5.dual_weight(Weight{0, 0, 0, 1, 0}) == Weight{0, 0, 0, 0, 1});
  const RootSystem d6(LieType::parse("D6"));
  CHECK(d6.dual_weight(Weight{0, 0, 0, 0, 1, 0}) == Weight{0, 0, 0, 0, 1, 0});
  const RootSystem e6(LieType::parse("E6"));
  CHECK(e6.dual_weight(Weight{1, 0, 0, 0, 0, 0}) == Weight{0, 0, 0, 0, 0, 1});
  CHECK(e6.dual_weight(Weight{0, 1, 0, 0, 0, 0}) == Weight{0, 1, 0, 0, 0, 0});
  for (const char* name : kAllTypes) {
    const RootSystem rs(LieType::parse(name));
    CHECK(rs.dual_weight(rs.highest_root_weight()) == rs.highest_root_weight());
    for (int i = 1; i <= rs.rank(); ++i) {
      const Weight w = Weight::fundamental(rs.rank(), i);
      CHECK(rs.dual_weight(rs.dual_weight(w)) == w);
    }
  }
}

TEST_CASE("rank mismatch is rejected") {
  const RootSystem rs(LieType::parse("A2"));
  CHECK_THROWS_AS(rs.check_weight(Weight{1, 0, 0}), LieError);
}
