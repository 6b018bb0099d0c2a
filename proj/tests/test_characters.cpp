#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "lieq/characters.hpp"
#include "oracles.hpp"

using namespace lieq;

TEST_CASE("Weyl dimensions") {
  auto dim = [](const char* t, Weight w) { return weyl_dim(RootSystem(LieType::parse(t)), w); };
  CHECK(dim("A1", Weight{4}) == 5);
  CHECK(dim("A2", Weight{1, 1}) == 8);
  CHECK(dim("A2", Weight{2, 1}) == 15);
  CHECK(dim("B3", Weight{0, 0, 1}) == 8);
  CHECK(dim("C3", Weight{1, 0, 0}) == 6);
  CHECK(dim("G2", Weight{1, 0}) == 7);
  CHECK(dim("G2", Weight{0, 1}) == 14);
  CHECK(dim("F4", Weight{0, 0, 0, 1}) == 26);
  CHECK(dim("F4", Weight{1, 0, 0, 0}) == 52);
  CHECK(dim("D6", Weight{0, 1, 0, 0, 0, 0}) == 66);
  CHECK(dim("D6", Weight{0, 0, 0, 0, 0, 1}) == 32);
  CHECK(dim("E6", Weight{1, 0, 0, 0, 0, 0}) == 27);
  CHECK(dim("E7", Weight{0, 0, 0, 0, 0, 0, 1}) == 56);
  CHECK(dim("E8", Weight{0, 0, 0, 0, 0, 0, 0, 1}) == 248);
  CHECK_THROWS(dim("A2", Weight{-1, 0}));
}

TEST_CASE("Freudenthal multiplicities match the alternating-sum formula") {
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}) {
    CAPTURE(name);
    const RootSystem rs(LieType::parse(name));
    const auto words = oracle::weyl_words(rs);
    oracle::Kostant p(rs);
    for (const auto& lam : oracle::small_dominant(rs.rank(), 2)) {
      CAPTURE(lam.str());
      const Character ch = irreducible_character(rs, lam);
      CHECK(static_cast<uint64_t>(ch.dimension(rs)) == weyl_dim(rs, lam));
      CHECK(ch.dominant_mult(lam) == 1);
      for (const auto& e : ch.entries()) CHECK(e.mult == oracle::alternating_mult(rs, words, p, lam, e.weight));
      // dominant weights just outside the support have multiplicity zero
      for (const auto& b : rs.positive_root_weights()) {
        const Weight above = lam + b;
        if (above.is_dominant()) CHECK(oracle::alternating_mult(rs, words, p, lam, above) == 0);
      }
    }
  }
}

TEST_CASE("adjoint character") {
  for (const char* name : {"A2", "B3", "D4", "G2", "E6"}) {
    const RootSystem rs(LieType::parse(name));
    const Character g = adjoint_character(rs);
    CHECK(g.dominant_mult(rs.zero()) == rs.rank());
    CHECK(g.dimension(rs) == static_cast<int64_t>(2 * rs.positive_roots().size()) + rs.rank());
  }
}

TEST_CASE("tensor products: small cases") {
  const RootSystem a1(LieType::parse("A1"));
  const Decomposition d = tensor_decompose(a1, irreducible_character(a1, Weight{1}), Weight{1});
  CHECK(d == Decomposition{{Weight{0}, 1}, {Weight{2}, 1}});
  const RootSystem a2(LieType::parse("A2"));
  const Decomposition gg = decompose(a2, product(a2, adjoint_character(a2), adjoint_character(a2)));
  CHECK(gg == Decomposition{{Weight{0, 0}, 1}, {Weight{1, 1}, 2}, {Weight{3, 0}, 1}, {Weight{0, 3}, 1}, {Weight{2, 2}, 1}});
  CHECK(decomposition_dimension(a2, gg) == 64);
}

TEST_CASE("Klimyk agrees with the brute-force oracle on ranks 1 to 3") {
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}) {
    CAPTURE(name);
    const RootSystem rs(LieType::parse(name));
    const auto ws = oracle::small_dominant(rs.rank(), name[1] == '3' ? 1 : 2);
    for (const auto& l : ws)
      for (const auto& m : ws) {
        CAPTURE(l.str());
        CAPTURE(m.str());
        const Decomposition k = tensor_decompose(rs, irreducible_character(rs, m), l);
        CHECK(k == brute_force_tensor_oracle(rs, l, m));
        CHECK(decomposition_dimension(rs, k) == weyl_dim(rs, l) * weyl_dim(rs, m));
      }
  }
}

TEST_CASE("products are commutative and match direct sums") {
  const RootSystem rs(LieType::parse("C3"));
  const Character a = irreducible_character(rs, Weight{1, 0, 1});
  const Character b = irreducible_character(rs, Weight{0, 1, 0});
  const Character ab = product(rs, a, b);
  CHECK(ab == product(rs, b, a));
  CHECK(ab == character_of(rs, tensor_decompose(rs, a, Weight{0, 1, 0})));
  CHECK(ab.dimension(rs) == a.dimension(rs) * b.dimension(rs));
}

TEST_CASE("hom dimensions under duality") {
  for (const char* name : {"A2", "A3", "D5", "E6"}) {
    CAPTURE(name);
    const RootSystem rs(LieType::parse(name));
    const auto ws = oracle::small_dominant(rs.rank(), 1);
    const Character x = irreducible_character(rs, Weight::fundamental(rs.rank(), 1));
    const Character xd = dual_character(rs, x);
    for (std::size_t i = 0; i < std::min<std::size_t>(ws.size(), 12); ++i)
      for (std::size_t j = 0; j < std::min<std::size_t>(ws.size(), 12); ++j) {
        const Weight& l = ws[i];
        const Weight& m = ws[j];
        const int64_t h = hom_dim(rs, m, x, l);
        CHECK(h == hom_dim(rs, rs.dual_weight(m), xd, rs.dual_weight(l)));
        CHECK(h == hom_dim(rs, l, xd, m));
      }
  }
}

TEST_CASE("hom(lambda, g (x) lambda) counts the nonzero labels") {
  for (const char* name : {"A2", "A3", "B3", "D4", "G2"}) {
    const RootSystem rs(LieType::parse(name));
    const Character g = adjoint_character(rs);
    for (const auto& l : oracle::small_dominant(rs.rank(), 2)) {
      if (l.is_zero()) continue;
      CAPTURE(name);
      CAPTURE(l.str());
      CHECK(hom_dim(rs, l, g, l) == l.positive_label_count());
    }
  }
}

TEST_CASE("compress rejects virtual or non-invariant input") {
  const RootSystem rs(LieType::parse("A2"));
  SignedCharacter bad(2);
  bad.add(Weight{1, 0}, 1);
  CHECK_THROWS_AS(compress(rs, bad), std::logic_error);
  SignedCharacter neg = to_signed(rs, irreducible_character(rs, Weight{1, 0}));
  neg *= -1;
  CHECK_THROWS_AS(compress(rs, neg), std::logic_error);
  CHECK(compress(rs, to_signed(rs, irreducible_character(rs, Weight{2, 1}))) == irreducible_character(rs, Weight{2, 1}));
}

TEST_CASE("character cache is consistent under concurrent use") {
  const CharacterContext ctx(LieType::parse("B3"));
  const auto ws = oracle::small_dominant(3, 2);
  std::vector<std::vector<Decomposition>> seen(4);
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&, t] {
      for (const auto& w : ws) seen[t].push_back(*ctx.adjoint_tensor(w));
    });
  for (auto& th : pool) th.join();
  for (int t = 1; t < 4; ++t) CHECK(seen[t] == seen[0]);
  CHECK(*ctx.irreducible(Weight{1, 0, 0}) == irreducible_character(ctx.roots(), Weight{1, 0, 0}));
}
