#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lieq/rootsys.hpp"

namespace lieq {

using MultMap = std::unordered_map<Weight, int64_t, WeightHash>;

/// Irreducible multiplicities: highest weight -> multiplicity, sorted.
using Decomposition = std::map<Weight, int64_t>;

/// Full-support weight list, the form the inner loops consume.
struct FlatCharacter {
  std::vector<Weight> weights;
  std::vector<int64_t> mults;

  [[nodiscard]] std::size_t size() const { return weights.size(); }
  [[nodiscard]] int64_t dimension() const;
};

/// Character of a genuine module, stored by its multiplicities at dominant
/// weights only. The multiplicity at any weight w is the entry at the
/// dominant representative of w.
class Character {
 public:
  struct Entry {
    Weight weight;
    int64_t mult;
  };

  Character() = default;
  explicit Character(LieType ambient) : ambient_(ambient) {}
  /// Drops zero entries; throws std::logic_error on a negative multiplicity
  /// or a non-dominant key.
  Character(LieType ambient, const MultMap& dominant_mults);

  static Character trivial(const RootSystem& rs);

  [[nodiscard]] const LieType& ambient() const { return ambient_; }
  [[nodiscard]] const std::vector<Entry>& entries() const { return entries_; }  // sorted by weight
  [[nodiscard]] int64_t dominant_mult(const Weight& dominant) const;
  [[nodiscard]] int64_t mult_at(const RootSystem& rs, const Weight& any) const;
  [[nodiscard]] int64_t dimension(const RootSystem& rs) const;

  friend bool operator==(const Character& a, const Character& b);

 private:
  LieType ambient_;
  std::vector<Entry> entries_;
};

/// Virtual character with full (not orbit-compressed) support.
class SignedCharacter {
 public:
  SignedCharacter() = default;
  explicit SignedCharacter(int rank) : rank_(rank) {}
  static SignedCharacter from_flat(int rank, const FlatCharacter& flat);

  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] const MultMap& mults() const { return mults_; }
  [[nodiscard]] int64_t at(const Weight& w) const;
  void add(const Weight& w, int64_t m);
  [[nodiscard]] int64_t dimension() const;  // signed sum
  void prune();                              // drop zero entries

  SignedCharacter& operator+=(const SignedCharacter& o);
  SignedCharacter& operator*=(int64_t k);
  friend SignedCharacter operator*(const SignedCharacter& a, const SignedCharacter& b);  // convolution
  friend bool operator==(const SignedCharacter& a, const SignedCharacter& b);

  [[nodiscard]] FlatCharacter flat() const;  // sorted by weight

 private:
  int rank_ = 0;
  MultMap mults_;
};

/// prod_{alpha>0} (lambda+rho, alpha)/(rho, alpha). Throws on overflow of
/// 64 bits or on a non-dominant argument.
uint64_t weyl_dim(const RootSystem& rs, const Weight& lambda);

/// Dominant multiplicities of V(lambda) by Freudenthal's recursion.
Character irreducible_character(const RootSystem& rs, const Weight& lambda);

/// Character of the adjoint representation, i.e. of V(theta).
Character adjoint_character(const RootSystem& rs);

FlatCharacter expand(const RootSystem& rs, const Character& x);
SignedCharacter to_signed(const RootSystem& rs, const Character& x);
/// Keeps the dominant part; throws std::logic_error if a multiplicity is
/// negative or the result is not W-invariant in dimension.
Character compress(const RootSystem& rs, const SignedCharacter& x);

/// Dominant part of the product of two characters.
Character product(const RootSystem& rs, const Character& a, const Character& b);

/// Character of a direct sum of irreducibles.
Character character_of(const RootSystem& rs, const Decomposition& d);

/// X with every weight negated, i.e. the character of the dual module.
Character dual_character(const RootSystem& rs, const Character& x);

/// Multiplicities of the irreducibles in X (x) V(lambda), by Klimyk's formula
/// over the weights of X. Always checks dimension conservation.
Decomposition tensor_decompose(const RootSystem& rs, const Character& x, const Weight& lambda);
Decomposition tensor_decompose(const RootSystem& rs, const FlatCharacter& x, const Weight& lambda);

/// Irreducible decomposition of X itself.
Decomposition decompose(const RootSystem& rs, const Character& x);

/// dim Hom_g(V(mu), X (x) V(lambda)).
int64_t hom_dim(const RootSystem& rs, const Weight& mu, const Character& x, const Weight& lambda);

/// Independent route for tests: explicit pointwise convolution of the two
/// full characters followed by greedy highest-weight peeling. Ranks <= 3 only.
Decomposition brute_force_tensor_oracle(const RootSystem& rs, const Weight& lambda, const Weight& mu);

uint64_t decomposition_dimension(const RootSystem& rs, const Decomposition& d);

/// Shared per-type state: the root system plus memoised irreducible
/// characters and adjoint tensor decompositions. Readers never block each
/// other; insertions are serialised.
class CharacterContext {
 public:
  explicit CharacterContext(LieType t);

  [[nodiscard]] const RootSystem& roots() const { return rs_; }
  [[nodiscard]] const LieType& type() const { return rs_.type(); }

  [[nodiscard]] std::shared_ptr<const Character> irreducible(const Weight& lambda) const;
  [[nodiscard]] const Character& adjoint() const { return *adjoint_; }
  [[nodiscard]] const FlatCharacter& adjoint_flat() const { return adjoint_flat_; }

  /// Decomposition of g (x) V(lambda), memoised.
  [[nodiscard]] std::shared_ptr<const Decomposition> adjoint_tensor(const Weight& lambda) const;

 private:
  RootSystem rs_;
  std::shared_ptr<const Character> adjoint_;
  FlatCharacter adjoint_flat_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<Weight, std::shared_ptr<const Character>, WeightHash> irreducibles_;
  mutable std::unordered_map<Weight, std::shared_ptr<const Decomposition>, WeightHash> adjoint_tensors_;
};

}  // namespace lieq
