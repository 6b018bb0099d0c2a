#pragma once

// Data-parallel inner loops over packed 8-lane weights. Every kernel has a
// scalar reference implementation and, on x86-64, an AVX2 variant chosen at
// runtime. Both produce identical results; tests/test_kernels.cpp holds them
// to that.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "lieq/weight.hpp"

namespace lieq::kernels {

/// Dynkin-label columns of the simple roots: column i is alpha_i.
struct ReflectionTable {
  int rank = 0;
  std::array<std::array<int32_t, kMaxRank>, kMaxRank> columns{};
};

struct KernelSet {
  std::string_view name;

  /// Moves every weight into the dominant chamber in place by repeatedly
  /// reflecting in the first negative label. steps[i] receives the number of
  /// reflections used (its parity is the sign of the Weyl element).
  void (*reduce_batch)(std::span<Weight> weights, std::span<int32_t> steps, const ReflectionTable& table);

  /// Writes into `hits` the indices i with shift + block[i] dominant and
  /// returns how many were written. `hits` must be at least block.size().
  std::size_t (*dominant_hits)(const Weight& shift, std::span<const Weight> block, std::span<uint32_t> hits);
};

const KernelSet& scalar();

/// nullptr when the binary or the CPU lacks AVX2.
const KernelSet* avx2();

/// The best available set, unless LIEQ_KERNELS=scalar is set in the
/// environment. Resolved once per process.
const KernelSet& active();

/// Single-weight convenience over the active kernel set.
int reduce_to_dominant(Weight& w, const ReflectionTable& table);

}  // namespace lieq::kernels
