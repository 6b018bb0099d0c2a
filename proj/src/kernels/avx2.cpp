#include "lieq/kernels.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define LIEQ_HAVE_AVX2_KERNELS 1
#include <immintrin.h>
#endif

namespace lieq::kernels {

#ifdef LIEQ_HAVE_AVX2_KERNELS
namespace {

static_assert(sizeof(std::array<int32_t, kMaxRank>) == 32, "weight lanes must pack into one ymm register");

__attribute__((target("avx2"))) inline __m256i load(const std::array<int32_t, kMaxRank>& a) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data()));
}

__attribute__((target("avx2"))) inline void store(std::array<int32_t, kMaxRank>& a, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(a.data()), v);
}

__attribute__((target("avx2"))) void reduce_batch_avx2(std::span<Weight> weights, std::span<int32_t> steps,
                                                       const ReflectionTable& table) {
  __m256i cols[kMaxRank];
  for (int i = 0; i < kMaxRank; ++i) cols[i] = load(table.columns[i]);
  const __m256i zero = _mm256_setzero_si256();
  const int lane_mask = (1 << table.rank) - 1;

  for (std::size_t k = 0; k < weights.size(); ++k) {
    __m256i w = load(weights[k].labels);
    int32_t count = 0;
    for (;;) {
      const __m256i neg = _mm256_cmpgt_epi32(zero, w);
      const int mask = _mm256_movemask_ps(_mm256_castsi256_ps(neg)) & lane_mask;
      if (mask == 0) break;
      const int i = __builtin_ctz(static_cast<unsigned>(mask));
      const __m256i lane = _mm256_permutevar8x32_epi32(w, _mm256_set1_epi32(i));
      w = _mm256_sub_epi32(w, _mm256_mullo_epi32(lane, cols[i]));
      ++count;
    }
    store(weights[k].labels, w);
    steps[k] = count;
  }
}

__attribute__((target("avx2"))) std::size_t dominant_hits_avx2(const Weight& shift, std::span<const Weight> block,
                                                               std::span<uint32_t> hits) {
  const __m256i s = load(shift.labels);
  const __m256i zero = _mm256_setzero_si256();
  std::size_t out = 0;
  const std::size_t n = block.size();
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256i a = _mm256_add_epi32(s, load(block[k].labels));
    const __m256i b = _mm256_add_epi32(s, load(block[k + 1].labels));
    const int ma = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpgt_epi32(zero, a)));
    const int mb = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpgt_epi32(zero, b)));
    hits[out] = static_cast<uint32_t>(k);
    out += (ma == 0);
    hits[out] = static_cast<uint32_t>(k + 1);
    out += (mb == 0);
  }
  for (; k < n; ++k) {
    const __m256i a = _mm256_add_epi32(s, load(block[k].labels));
    const int ma = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpgt_epi32(zero, a)));
    hits[out] = static_cast<uint32_t>(k);
    out += (ma == 0);
  }
  return out;
}

constexpr KernelSet kAvx2{"avx2", &reduce_batch_avx2, &dominant_hits_avx2};

}  // namespace

const KernelSet* avx2() {
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &kAvx2 : nullptr;
}

#else

const KernelSet* avx2() { return nullptr; }

#endif

}  // namespace lieq::kernels
