#include <cstdlib>
#include <string_view>

#include "lieq/kernels.hpp"

namespace lieq::kernels {
namespace {

void reduce_batch_scalar(std::span<Weight> weights, std::span<int32_t> steps, const ReflectionTable& table) {
  const int n = table.rank;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    auto& lab = weights[k].labels;
    int32_t count = 0;
    for (;;) {
      int i = 0;
      while (i < n && lab[i] >= 0) ++i;
      if (i == n) break;
      const int32_t c = lab[i];
      const auto& col = table.columns[i];
      for (int j = 0; j < kMaxRank; ++j) lab[j] -= c * col[j];
      ++count;
    }
    steps[k] = count;
  }
}

std::size_t dominant_hits_scalar(const Weight& shift, std::span<const Weight> block, std::span<uint32_t> hits) {
  std::size_t out = 0;
  for (std::size_t k = 0; k < block.size(); ++k) {
    bool dominant = true;
    for (int j = 0; j < kMaxRank; ++j) dominant &= (shift.labels[j] + block[k].labels[j]) >= 0;
    if (dominant) hits[out++] = static_cast<uint32_t>(k);
  }
  return out;
}

constexpr KernelSet kScalar{"scalar", &reduce_batch_scalar, &dominant_hits_scalar};

}  // namespace

const KernelSet& scalar() { return kScalar; }

const KernelSet& active() {
  static const KernelSet* chosen = [] {
    const char* env = std::getenv("LIEQ_KERNELS");
    if (env != nullptr && std::string_view(env) == "scalar") return &kScalar;
    if (const KernelSet* v = avx2()) return v;
    return &kScalar;
  }();
  return *chosen;
}

int reduce_to_dominant(Weight& w, const ReflectionTable& table) {
  int32_t steps = 0;
  active().reduce_batch(std::span<Weight>(&w, 1), std::span<int32_t>(&steps, 1), table);
  return steps;
}

}  // namespace lieq::kernels
