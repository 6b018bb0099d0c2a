#include "lieq/characters.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

namespace lieq {
namespace {

using boost::multiprecision::cpp_int;

void require_same_type(const RootSystem& rs, const LieType& t) {
  if (t != rs.type())
    throw LieError("character over " + t.name() + " used with root system " + rs.type().name());
}

void require_dominant(const RootSystem& rs, const Weight& w, const char* what) {
  rs.check_weight(w);
  if (!w.is_dominant()) throw LieError(std::string(what) + " needs a dominant weight, got " + w.str());
}

// Klimyk chunk size: bounds the scratch buffers for very large characters.
constexpr std::size_t kChunk = 4096;

}  // namespace

int64_t FlatCharacter::dimension() const { return std::accumulate(mults.begin(), mults.end(), int64_t{0}); }

// ---------------------------------------------------------------------------
// Character

Character::Character(LieType ambient, const MultMap& dominant_mults) : ambient_(ambient) {
  entries_.reserve(dominant_mults.size());
  for (const auto& [w, m] : dominant_mults) {
    if (m == 0) continue;
    if (m < 0) throw std::logic_error("negative multiplicity " + std::to_string(m) + " at " + w.str());
    if (!w.is_dominant()) throw std::logic_error("non-dominant key " + w.str() + " in a compressed character");
    entries_.push_back({w, m});
  }
  std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) { return a.weight < b.weight; });
}

Character Character::trivial(const RootSystem& rs) {
  MultMap m;
  m[rs.zero()] = 1;
  return Character(rs.type(), m);
}

int64_t Character::dominant_mult(const Weight& dominant) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), dominant,
                             [](const Entry& e, const Weight& w) { return e.weight < w; });
  return (it != entries_.end() && it->weight == dominant) ? it->mult : 0;
}

int64_t Character::mult_at(const RootSystem& rs, const Weight& any) const {
  return dominant_mult(rs.dominant_representative(any).weight);
}

int64_t Character::dimension(const RootSystem& rs) const {
  require_same_type(rs, ambient_);
  int64_t d = 0;
  for (const auto& e : entries_) d += e.mult * static_cast<int64_t>(rs.orbit_size(e.weight));
  return d;
}

bool operator==(const Character& a, const Character& b) {
  if (a.ambient_ != b.ambient_ || a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i)
    if (a.entries_[i].weight != b.entries_[i].weight || a.entries_[i].mult != b.entries_[i].mult) return false;
  return true;
}

// ---------------------------------------------------------------------------
// SignedCharacter

SignedCharacter SignedCharacter::from_flat(int rank, const FlatCharacter& flat) {
  SignedCharacter s(rank);
  for (std::size_t i = 0; i < flat.size(); ++i) s.add(flat.weights[i], flat.mults[i]);
  return s;
}

int64_t SignedCharacter::at(const Weight& w) const {
  auto it = mults_.find(w);
  return it == mults_.end() ? 0 : it->second;
}

void SignedCharacter::add(const Weight& w, int64_t m) {
  if (m != 0) mults_[w] += m;
}

int64_t SignedCharacter::dimension() const {
  int64_t d = 0;
  for (const auto& [w, m] : mults_) d += m;
  return d;
}

void SignedCharacter::prune() { std::erase_if(mults_, [](const auto& kv) { return kv.second == 0; }); }

SignedCharacter& SignedCharacter::operator+=(const SignedCharacter& o) {
  for (const auto& [w, m] : o.mults_) mults_[w] += m;
  prune();
  return *this;
}

SignedCharacter& SignedCharacter::operator*=(int64_t k) {
  if (k == 0) {
    mults_.clear();
    return *this;
  }
  for (auto& [w, m] : mults_) m *= k;
  return *this;
}

SignedCharacter operator*(const SignedCharacter& a, const SignedCharacter& b) {
  const SignedCharacter& outer = a.mults_.size() <= b.mults_.size() ? a : b;
  const SignedCharacter& inner = &outer == &a ? b : a;
  SignedCharacter out(a.rank_);
  out.mults_.reserve(inner.mults_.size() * 2);
  for (const auto& [wa, ma] : outer.mults_)
    for (const auto& [wb, mb] : inner.mults_) out.mults_[wa + wb] += ma * mb;
  out.prune();
  return out;
}

bool operator==(const SignedCharacter& a, const SignedCharacter& b) {
  auto nz = [](const MultMap& m) {
    return std::count_if(m.begin(), m.end(), [](const auto& kv) { return kv.second != 0; });
  };
  if (nz(a.mults_) != nz(b.mults_)) return false;
  return std::all_of(a.mults_.begin(), a.mults_.end(), [&](const auto& kv) { return kv.second == b.at(kv.first); });
}

FlatCharacter SignedCharacter::flat() const {
  std::vector<std::pair<Weight, int64_t>> items(mults_.begin(), mults_.end());
  std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  FlatCharacter f;
  for (const auto& [w, m] : items) {
    if (m == 0) continue;
    f.weights.push_back(w);
    f.mults.push_back(m);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Dimensions and irreducible characters

uint64_t weyl_dim(const RootSystem& rs, const Weight& lambda) {
  require_dominant(rs, lambda, "weyl_dim");
  const Weight shifted = lambda + rs.rho();
  const Weight rho = rs.rho();
  cpp_int num = 1;
  cpp_int den = 1;
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
    num *= rs.coroot_pairing(shifted, k);
    den *= rs.coroot_pairing(rho, k);
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension formula gave a non-integer");
  const cpp_int q = num / den;
  if (q > cpp_int(std::numeric_limits<uint64_t>::max())) throw LieError("dimension of V(" + lambda.str() + ") overflows 64 bits");
  return q.convert_to<uint64_t>();
}

Character irreducible_character(const RootSystem& rs, const Weight& lambda) {
  require_dominant(rs, lambda, "irreducible_character");
  const auto& roots = rs.positive_root_weights();

  // Dominant weights of V(lambda): closure of {lambda} under subtracting
  // positive roots while staying dominant.
  std::vector<Weight> dominant{lambda};
  std::unordered_set<Weight, WeightHash> seen{lambda};
  for (std::size_t k = 0; k < dominant.size(); ++k)
    for (const auto& a : roots) {
      Weight mu = dominant[k] - a;
      if (mu.is_dominant() && seen.insert(mu).second) dominant.push_back(mu);
    }
  auto depth = [&](const Weight& mu) { return rs.weight_to_root(lambda - mu)->height(); };
  std::vector<std::pair<int, Weight>> order;
  order.reserve(dominant.size());
  for (const auto& mu : dominant) order.emplace_back(depth(mu), mu);
  std::sort(order.begin(), order.end());

  MultMap mult;
  mult[lambda] = 1;
  const Weight rho = rs.rho();
  const int64_t top = rs.form_scaled(lambda + rho, lambda + rho);
  for (std::size_t idx = 1; idx < order.size(); ++idx) {
    const Weight& mu = order[idx].second;
    int64_t num = 0;
    for (const auto& a : roots) {
      Weight x = mu + a;
      for (;;) {
        const Weight rep = rs.dominant_representative(x).weight;
        if (!seen.contains(rep)) break;
        auto it = mult.find(rep);
        if (it == mult.end()) throw std::logic_error("Freudenthal order violated at " + rep.str());
        num += it->second * rs.form_scaled(x, a);
        x += a;
      }
    }
    num *= 2;
    const int64_t den = top - rs.form_scaled(mu + rho, mu + rho);
    if (den <= 0 || num % den != 0) throw std::logic_error("Freudenthal recursion failed at " + mu.str());
    mult[mu] = num / den;
  }
  return Character(rs.type(), mult);
}

Character adjoint_character(const RootSystem& rs) { return irreducible_character(rs, rs.highest_root_weight()); }

FlatCharacter expand(const RootSystem& rs, const Character& x) {
  require_same_type(rs, x.ambient());
  FlatCharacter f;
  for (const auto& e : x.entries()) {
    for (const auto& w : rs.weyl_orbit(e.weight)) {
      f.weights.push_back(w);
      f.mults.push_back(e.mult);
    }
  }
  return f;
}

SignedCharacter to_signed(const RootSystem& rs, const Character& x) {
  return SignedCharacter::from_flat(rs.rank(), expand(rs, x));
}

Character compress(const RootSystem& rs, const SignedCharacter& x) {
  MultMap dom;
  int64_t orbit_total = 0;
  for (const auto& [w, m] : x.mults()) {
    if (m == 0 || !w.is_dominant()) continue;
    if (m < 0) throw std::logic_error("virtual character has negative multiplicity " + std::to_string(m) + " at " + w.str());
    dom[w] = m;
    orbit_total += m * static_cast<int64_t>(rs.orbit_size(w));
  }
  if (orbit_total != x.dimension())
    throw std::logic_error("character is not W-invariant: orbit sum " + std::to_string(orbit_total) + " vs dimension " +
                           std::to_string(x.dimension()));
  return Character(rs.type(), dom);
}

Character product(const RootSystem& rs, const Character& a, const Character& b) {
  require_same_type(rs, a.ambient());
  require_same_type(rs, b.ambient());
  const FlatCharacter fa = expand(rs, a);
  const FlatCharacter fb = expand(rs, b);
  const FlatCharacter& outer = fa.size() <= fb.size() ? fa : fb;
  const FlatCharacter& inner = &outer == &fa ? fb : fa;
  const auto& k = kernels::active();
  std::vector<uint32_t> hits(inner.size());
  MultMap acc;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    const std::size_t n = k.dominant_hits(outer.weights[i], inner.weights, hits);
    for (std::size_t h = 0; h < n; ++h)
      acc[outer.weights[i] + inner.weights[hits[h]]] += outer.mults[i] * inner.mults[hits[h]];
  }
  return Character(rs.type(), acc);
}

Character character_of(const RootSystem& rs, const Decomposition& d) {
  MultMap acc;
  for (const auto& [hw, m] : d) {
    if (m < 0) throw LieError("negative multiplicity in a decomposition");
    const Character irr = irreducible_character(rs, hw);
    for (const auto& e : irr.entries()) acc[e.weight] += m * e.mult;
  }
  return Character(rs.type(), acc);
}

Character dual_character(const RootSystem& rs, const Character& x) {
  require_same_type(rs, x.ambient());
  MultMap acc;
  for (const auto& e : x.entries()) acc[rs.dual_weight(e.weight)] += e.mult;
  return Character(rs.type(), acc);
}

// ---------------------------------------------------------------------------
// Tensor products

uint64_t decomposition_dimension(const RootSystem& rs, const Decomposition& d) {
  uint64_t total = 0;
  for (const auto& [hw, m] : d) total += static_cast<uint64_t>(m) * weyl_dim(rs, hw);
  return total;
}

Decomposition tensor_decompose(const RootSystem& rs, const FlatCharacter& x, const Weight& lambda) {
  require_dominant(rs, lambda, "tensor_decompose");
  const Weight shift = lambda + rs.rho();
  const Weight rho = rs.rho();
  const auto& k = kernels::active();
  std::vector<Weight> batch;
  std::vector<int32_t> steps;
  MultMap acc;
  for (std::size_t start = 0; start < x.size(); start += kChunk) {
    const std::size_t n = std::min(kChunk, x.size() - start);
    batch.resize(n);
    steps.resize(n);
    for (std::size_t i = 0; i < n; ++i) batch[i] = x.weights[start + i] + shift;
    k.reduce_batch(batch, steps, rs.reflections());
    for (std::size_t i = 0; i < n; ++i) {
      const Weight& v = batch[i];
      bool regular = true;
      for (int j = 0; j < rs.rank(); ++j) regular &= v.labels[j] != 0;
      if (!regular) continue;
      const int64_t m = x.mults[start + i];
      acc[v - rho] += (steps[i] % 2 == 0) ? m : -m;
    }
  }
  Decomposition out;
  for (const auto& [w, m] : acc) {
    if (m < 0) throw std::logic_error("Klimyk produced negative multiplicity at " + w.str());
    if (m > 0) out[w] = m;
  }
  const auto lhs = static_cast<unsigned __int128>(decomposition_dimension(rs, out));
  const auto rhs = static_cast<unsigned __int128>(x.dimension()) * weyl_dim(rs, lambda);
  if (lhs != rhs) throw std::logic_error("tensor_decompose violated dimension conservation");
  return out;
}

Decomposition tensor_decompose(const RootSystem& rs, const Character& x, const Weight& lambda) {
  require_same_type(rs, x.ambient());
  return tensor_decompose(rs, expand(rs, x), lambda);
}

Decomposition decompose(const RootSystem& rs, const Character& x) { return tensor_decompose(rs, x, rs.zero()); }

int64_t hom_dim(const RootSystem& rs, const Weight& mu, const Character& x, const Weight& lambda) {
  require_dominant(rs, mu, "hom_dim");
  const Decomposition d = tensor_decompose(rs, x, lambda);
  auto it = d.find(mu);
  return it == d.end() ? 0 : it->second;
}

Decomposition brute_force_tensor_oracle(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  if (rs.rank() > 3) throw LieError("brute_force_tensor_oracle is limited to rank <= 3");
  require_dominant(rs, lambda, "brute_force_tensor_oracle");
  require_dominant(rs, mu, "brute_force_tensor_oracle");
  const FlatCharacter a = expand(rs, irreducible_character(rs, lambda));
  const FlatCharacter b = expand(rs, irreducible_character(rs, mu));
  std::map<Weight, int64_t> remaining;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Weight w = a.weights[i] + b.weights[j];
      if (w.is_dominant()) remaining[w] += a.mults[i] * b.mults[j];
    }
  const Weight rho = rs.rho();
  Decomposition out;
  for (;;) {
    std::erase_if(remaining, [](const auto& kv) { return kv.second == 0; });
    if (remaining.empty()) break;
    auto top = std::max_element(remaining.begin(), remaining.end(), [&](const auto& x, const auto& y) {
      return rs.form_scaled(x.first, rho) < rs.form_scaled(y.first, rho);
    });
    const Weight hw = top->first;
    const int64_t m = top->second;
    if (m < 0) throw std::logic_error("peeling went negative at " + hw.str());
    out[hw] += m;
    const Character irr = irreducible_character(rs, hw);
    for (const auto& e : irr.entries()) remaining[e.weight] -= m * e.mult;
  }
  return out;
}

// ---------------------------------------------------------------------------
// CharacterContext

CharacterContext::CharacterContext(LieType t) : rs_(t) {
  adjoint_ = std::make_shared<const Character>(adjoint_character(rs_));
  adjoint_flat_ = expand(rs_, *adjoint_);
}

std::shared_ptr<const Character> CharacterContext::irreducible(const Weight& lambda) const {
  {
    std::shared_lock lock(mutex_);
    if (auto it = irreducibles_.find(lambda); it != irreducibles_.end()) return it->second;
  }
  auto value = std::make_shared<const Character>(irreducible_character(rs_, lambda));
  std::unique_lock lock(mutex_);
  return irreducibles_.try_emplace(lambda, std::move(value)).first->second;
}

std::shared_ptr<const Decomposition> CharacterContext::adjoint_tensor(const Weight& lambda) const {
  {
    std::shared_lock lock(mutex_);
    if (auto it = adjoint_tensors_.find(lambda); it != adjoint_tensors_.end()) return it->second;
  }
  auto value = std::make_shared<const Decomposition>(tensor_decompose(rs_, adjoint_flat_, lambda));
  std::unique_lock lock(mutex_);
  return adjoint_tensors_.try_emplace(lambda, std::move(value)).first->second;
}

}  // namespace lieq
