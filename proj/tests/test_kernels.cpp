#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "lieq/kernels.hpp"
#include "lieq/rootsys.hpp"

using namespace lieq;

namespace {

std::vector<Weight> random_weights(int rank, std::size_t n, int spread, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-spread, spread);
  std::vector<Weight> out(n, Weight(rank));
  for (auto& w : out)
    for (int i = 0; i < rank; ++i) w[static_cast<std::size_t>(i)] = d(rng);
  return out;
}

}  // namespace

TEST_CASE("scalar reduction lands on the dominant chamber") {
  std::mt19937 rng(7);
  for (const char* name : {"A3", "B4", "C3", "D6", "E6", "E8", "F4", "G2"}) {
    const RootSystem rs(LieType::parse(name));
    auto ws = random_weights(rs.rank(), 300, 6, rng);
    std::vector<int32_t> steps(ws.size());
    kernels::scalar().reduce_batch(ws, steps, rs.reflections());
    for (const auto& w : ws) CHECK(w.is_dominant());
  }
}

TEST_CASE("AVX2 kernels agree with the scalar reference") {
  const kernels::KernelSet* simd = kernels::avx2();
  if (simd == nullptr) {
    MESSAGE("AVX2 not available on this machine; skipping");
    return;
  }
  std::mt19937 rng(11);
  for (const char* name : {"A1", "A4", "B3", "C4", "D4", "D6", "E7", "E8", "F4", "G2"}) {
    CAPTURE(name);
    const RootSystem rs(LieType::parse(name));
    for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 1000u}) {
      auto a = random_weights(rs.rank(), n, 9, rng);
      auto b = a;
      std::vector<int32_t> sa(n), sb(n);
      kernels::scalar().reduce_batch(a, sa, rs.reflections());
      simd->reduce_batch(b, sb, rs.reflections());
      CHECK(a == b);
      CHECK(sa == sb);

      const auto block = random_weights(rs.rank(), n, 4, rng);
      const Weight shift = random_weights(rs.rank(), 1, 3, rng)[0];
      std::vector<uint32_t> ha(n), hb(n);
      const std::size_t ca = kernels::scalar().dominant_hits(shift, block, ha);
      const std::size_t cb = simd->dominant_hits(shift, block, hb);
      CHECK(ca == cb);
      ha.resize(ca);
      hb.resize(cb);
      CHECK(ha == hb);
      for (uint32_t i : ha) CHECK((shift + block[i]).is_dominant());
    }
  }
}

TEST_CASE("dominant_hits finds exactly the dominant sums") {
  const RootSystem rs(LieType::parse("D4"));
  std::mt19937 rng(3);
  const auto block = random_weights(4, 257, 3, rng);
  const Weight shift{1, 0, 2, 1};
  std::vector<uint32_t> hits(block.size());
  const std::size_t n = kernels::scalar().dominant_hits(shift, block, hits);
  std::vector<uint32_t> expect;
  for (uint32_t i = 0; i < block.size(); ++i)
    if ((shift + block[i]).is_dominant()) expect.push_back(i);
  hits.resize(n);
  CHECK(hits == expect);
}
