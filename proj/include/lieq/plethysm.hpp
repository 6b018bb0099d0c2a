#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <vector>

#include "lieq/characters.hpp"

namespace lieq {

inline constexpr int kDefaultMaxDegree = 6;

/// Adams operation: every support weight scaled by k.
SignedCharacter adams(int k, const SignedCharacter& x);

/// ch S^p(X) by the Newton recursion p S^p = sum_k psi^k(X) S^{p-k}, carried
/// out on full support.
Character sym_power(const RootSystem& rs, int p, const Character& x);

/// Number of PBW monomials of degree k in a graded Lie algebra with dim_g
/// generators in every positive degree, i.e. dim S^(k)(g).
uint64_t pbw_dimension(uint64_t dim_g, int k);

/// Per-type table of S^(k)(g) and g^{(x)k}, built lazily up to a degree cap,
/// with memoised tensor decompositions against V(lambda). Safe to share
/// between threads.
class GradedAdjointTable {
 public:
  explicit GradedAdjointTable(const CharacterContext& ctx, int max_degree = kDefaultMaxDegree);

  [[nodiscard]] const CharacterContext& context() const { return ctx_; }
  [[nodiscard]] const RootSystem& roots() const { return ctx_.roots(); }
  [[nodiscard]] int max_degree() const { return max_degree_; }

  /// S^p(g), the p-th symmetric power of the adjoint representation.
  [[nodiscard]] const Character& sym_power(int p) const;
  /// S^(k)(g) = sum over (r_1..r_k), sum j r_j = k, of S^{r_1}(g) (x) ... (x) S^{r_k}(g).
  [[nodiscard]] const Character& s_graded(int k) const;
  [[nodiscard]] const Character& tensor_power(int k) const;

  /// Decomposition of S^(k)(g) (x) V(lambda).
  [[nodiscard]] std::shared_ptr<const Decomposition> s_graded_tensor(int k, const Weight& lambda) const;
  /// Decomposition of g^{(x)k} (x) V(lambda).
  [[nodiscard]] std::shared_ptr<const Decomposition> tensor_power_tensor(int k, const Weight& lambda) const;

  /// dim Hom_g(V(mu), S^(k)(g) (x) V(lambda)).
  [[nodiscard]] int64_t hom_s_graded(const Weight& mu, int k, const Weight& lambda) const;
  /// dim Hom_g(V(mu), g^{(x)k} (x) V(lambda)).
  [[nodiscard]] int64_t hom_tensor_power(const Weight& mu, int k, const Weight& lambda) const;

 private:
  enum class Kind { kSym, kGraded, kTensor };
  void check_degree(int k) const;
  const Character& get(Kind kind, int k) const;
  const FlatCharacter& flat(Kind kind, int k) const;
  std::shared_ptr<const Decomposition> decomposition(Kind kind, int k, const Weight& lambda) const;
  Character build(Kind kind, int k) const;

  const CharacterContext& ctx_;
  int max_degree_;
  mutable std::shared_mutex mutex_;
  mutable std::recursive_mutex build_mutex_;  // serialises table construction
  mutable std::map<std::pair<Kind, int>, std::shared_ptr<const Character>> chars_;
  mutable std::map<std::pair<Kind, int>, std::shared_ptr<const FlatCharacter>> flats_;
  mutable std::map<std::tuple<Kind, int, Weight>, std::shared_ptr<const Decomposition>> decomps_;
};

}  // namespace lieq
