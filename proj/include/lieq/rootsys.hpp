#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "lieq/kernels.hpp"
#include "lieq/weight.hpp"

namespace lieq {

using Rational = boost::rational<int64_t>;

struct DominantRep {
  Weight weight;
  int sign = 1;    // determinant of the reflecting word
  int steps = 0;   // simple reflections applied
};

/// Cartan data for one simple type, Bourbaki numbering. Immutable after
/// construction.
class RootSystem {
 public:
  explicit RootSystem(LieType t);

  [[nodiscard]] const LieType& type() const { return type_; }
  [[nodiscard]] int rank() const { return type_.rank; }

  /// A(i,j) = alpha_j(h_i).
  [[nodiscard]] int cartan(int i, int j) const { return cartan_[i][j]; }

  /// Positive roots, ordered by height then lexicographically.
  [[nodiscard]] const std::vector<RootVec>& positive_roots() const { return pos_roots_; }
  /// The same roots in Dynkin labels, index-aligned with positive_roots().
  [[nodiscard]] const std::vector<Weight>& positive_root_weights() const { return pos_root_weights_; }
  /// Coroot alpha^vee in simple-coroot coordinates, index-aligned.
  [[nodiscard]] const std::vector<RootVec>& positive_coroots() const { return pos_coroots_; }
  /// All roots (both signs) in Dynkin labels.
  [[nodiscard]] std::vector<Weight> all_root_weights() const;

  [[nodiscard]] const RootVec& highest_root() const { return pos_roots_.back(); }
  [[nodiscard]] Weight highest_root_weight() const { return pos_root_weights_.back(); }
  [[nodiscard]] Weight rho() const;
  [[nodiscard]] Weight zero() const { return Weight(rank()); }
  [[nodiscard]] Weight simple_root_weight(int i) const;  // 1-based

  [[nodiscard]] uint64_t weyl_order() const { return weyl_order_; }
  /// |W . w| for dominant w, from the order of its parabolic stabiliser.
  [[nodiscard]] uint64_t orbit_size(const Weight& dominant) const;

  [[nodiscard]] Weight root_to_weight(const RootVec& r) const;
  /// Exact inverse on the root lattice; nullopt when w is not in it.
  [[nodiscard]] std::optional<RootVec> weight_to_root(const Weight& w) const;

  /// Invariant form normalised so that (theta, theta) = 2.
  [[nodiscard]] Rational form(const Weight& a, const Weight& b) const;
  /// form(a, b) * form_scale(), always an exact integer.
  [[nodiscard]] int64_t form_scaled(const Weight& a, const Weight& b) const;
  [[nodiscard]] int64_t form_scale() const { return scale_; }
  /// (alpha_i, alpha_i) / 2.
  [[nodiscard]] Rational half_length(int i) const { return half_len_[i]; }

  /// <w, alpha^vee> for the k-th positive root.
  [[nodiscard]] int64_t coroot_pairing(const Weight& w, std::size_t k) const;

  [[nodiscard]] DominantRep dominant_representative(const Weight& w) const;
  /// Full W-orbit of a dominant weight, without duplicates, in generation order.
  [[nodiscard]] std::vector<Weight> weyl_orbit(const Weight& dominant) const;
  /// -w0(lambda).
  [[nodiscard]] Weight dual_weight(const Weight& dominant) const;

  [[nodiscard]] const kernels::ReflectionTable& reflections() const { return reflections_; }

  void check_weight(const Weight& w) const;

 private:
  LieType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Rational> half_len_;
  std::vector<std::vector<Rational>> inverse_cartan_;
  std::vector<std::vector<Rational>> gram_;      // (omega_i, omega_j)
  std::vector<std::vector<int64_t>> gram_scaled_;
  int64_t scale_ = 1;
  std::vector<RootVec> pos_roots_;
  std::vector<Weight> pos_root_weights_;
  std::vector<RootVec> pos_coroots_;
  uint64_t weyl_order_ = 0;
  kernels::ReflectionTable reflections_;
};

RootSystem build_root_system(LieType t);

}  // namespace lieq
