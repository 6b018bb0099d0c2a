#include "lieq/plethysm.hpp"

#include <optional>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace lieq {
namespace {

using boost::multiprecision::cpp_int;

cpp_int binomial(cpp_int n, int k) {
  cpp_int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// sum over (r_j, ..., r_k) with sum_{i>=j} i r_i = remaining
cpp_int pbw_partitions(uint64_t dim_g, int j, int remaining) {
  if (remaining == 0) return 1;
  if (j > remaining) return 0;
  cpp_int total = 0;
  for (int r = 0; j * r <= remaining; ++r)
    total += binomial(cpp_int(dim_g) + r - 1, r) * pbw_partitions(dim_g, j + 1, remaining - j * r);
  return total;
}

void accumulate(MultMap& acc, const Character& c) {
  for (const auto& e : c.entries()) acc[e.weight] += e.mult;
}

}  // namespace

SignedCharacter adams(int k, const SignedCharacter& x) {
  if (k < 1) throw LieError("Adams operation needs k >= 1");
  SignedCharacter out(x.rank());
  for (const auto& [w, m] : x.mults()) out.add(k * w, m);
  return out;
}

Character sym_power(const RootSystem& rs, int p, const Character& x) {
  if (p < 0) throw LieError("symmetric power needs p >= 0");
  const SignedCharacter base = to_signed(rs, x);
  std::vector<SignedCharacter> h;
  h.reserve(p + 1);
  SignedCharacter one(rs.rank());
  one.add(rs.zero(), 1);
  h.push_back(one);
  std::vector<SignedCharacter> psi;  // psi[k-1] = psi^k(X)
  for (int q = 1; q <= p; ++q) {
    psi.push_back(adams(q, base));
    SignedCharacter acc(rs.rank());
    for (int k = 1; k <= q; ++k) acc += psi[k - 1] * h[q - k];
    SignedCharacter scaled(rs.rank());
    for (const auto& [w, m] : acc.mults()) {
      if (m % q != 0) throw std::logic_error("Newton recursion: multiplicity not divisible by " + std::to_string(q));
      scaled.add(w, m / q);
    }
    h.push_back(std::move(scaled));
  }
  Character result = compress(rs, h[p]);
  const cpp_int expected = binomial(cpp_int(x.dimension(rs)) + p - 1, p);
  if (cpp_int(result.dimension(rs)) != expected)
    throw std::logic_error("symmetric power has the wrong dimension");
  return result;
}

uint64_t pbw_dimension(uint64_t dim_g, int k) {
  if (k < 0) throw LieError("degree must be nonnegative");
  const cpp_int d = pbw_partitions(dim_g, 1, k);
  if (d > cpp_int(std::numeric_limits<uint64_t>::max())) throw LieError("PBW dimension overflows 64 bits");
  return d.convert_to<uint64_t>();
}

// ---------------------------------------------------------------------------

GradedAdjointTable::GradedAdjointTable(const CharacterContext& ctx, int max_degree)
    : ctx_(ctx), max_degree_(max_degree) {
  if (max_degree < 0) throw LieError("max degree must be nonnegative");
}

void GradedAdjointTable::check_degree(int k) const {
  if (k < 0) throw LieError("degree must be nonnegative");
  if (k > max_degree_)
    throw LieError("degree " + std::to_string(k) + " exceeds the configured maximum " + std::to_string(max_degree_) +
                   " (raise --max-degree)");
}

const Character& GradedAdjointTable::sym_power(int p) const { return get(Kind::kSym, p); }
const Character& GradedAdjointTable::s_graded(int k) const { return get(Kind::kGraded, k); }
const Character& GradedAdjointTable::tensor_power(int k) const { return get(Kind::kTensor, k); }

const Character& GradedAdjointTable::get(Kind kind, int k) const {
  check_degree(k);
  const auto key = std::make_pair(kind, k);
  {
    std::shared_lock lock(mutex_);
    if (auto it = chars_.find(key); it != chars_.end()) return *it->second;
  }
  std::lock_guard build_lock(build_mutex_);
  {
    std::shared_lock lock(mutex_);
    if (auto it = chars_.find(key); it != chars_.end()) return *it->second;
  }
  auto value = std::make_shared<const Character>(build(kind, k));
  std::unique_lock lock(mutex_);
  return *chars_.try_emplace(key, std::move(value)).first->second;
}

const FlatCharacter& GradedAdjointTable::flat(Kind kind, int k) const {
  const auto key = std::make_pair(kind, k);
  {
    std::shared_lock lock(mutex_);
    if (auto it = flats_.find(key); it != flats_.end()) return *it->second;
  }
  const Character& c = get(kind, k);
  std::lock_guard build_lock(build_mutex_);
  {
    std::shared_lock lock(mutex_);
    if (auto it = flats_.find(key); it != flats_.end()) return *it->second;
  }
  auto value = std::make_shared<const FlatCharacter>(expand(roots(), c));
  std::unique_lock lock(mutex_);
  return *flats_.try_emplace(key, std::move(value)).first->second;
}

Character GradedAdjointTable::build(Kind kind, int k) const {
  const RootSystem& rs = roots();
  const uint64_t dim_g = static_cast<uint64_t>(ctx_.adjoint().dimension(rs));
  if (k == 0) return Character::trivial(rs);
  switch (kind) {
    case Kind::kSym:
      if (k == 1) return ctx_.adjoint();
      return lieq::sym_power(rs, k, ctx_.adjoint());

    case Kind::kTensor: {
      Character c = product(rs, get(Kind::kTensor, k - 1), ctx_.adjoint());
      cpp_int expected = 1;
      for (int i = 0; i < k; ++i) expected *= dim_g;
      if (cpp_int(c.dimension(rs)) != expected) throw std::logic_error("tensor power has the wrong dimension");
      return c;
    }

    case Kind::kGraded: {
      // layer[d] after step j: sum over (r_1..r_j) with sum i r_i = d
      std::vector<std::optional<Character>> layer(k + 1);
      layer[0] = Character::trivial(rs);
      for (int j = 1; j <= k; ++j) {
        std::vector<std::optional<Character>> next(k + 1);
        for (int d = 0; d <= k; ++d) {
          MultMap acc;
          bool any = false;
          for (int m = 0; j * m <= d; ++m) {
            const auto& prev = layer[d - j * m];
            if (!prev) continue;
            any = true;
            if (m == 0)
              accumulate(acc, *prev);
            else
              accumulate(acc, product(rs, *prev, get(Kind::kSym, m)));
          }
          if (any) next[d] = Character(rs.type(), acc);
        }
        layer = std::move(next);
      }
      Character c = std::move(*layer[k]);
      if (static_cast<uint64_t>(c.dimension(rs)) != pbw_dimension(dim_g, k))
        throw std::logic_error("S^(k)(g) disagrees with the PBW count");
      return c;
    }
  }
  throw std::logic_error("unreachable");
}

std::shared_ptr<const Decomposition> GradedAdjointTable::decomposition(Kind kind, int k, const Weight& lambda) const {
  check_degree(k);
  const auto key = std::make_tuple(kind, k, lambda);
  {
    std::shared_lock lock(mutex_);
    if (auto it = decomps_.find(key); it != decomps_.end()) return it->second;
  }
  auto value = std::make_shared<const Decomposition>(tensor_decompose(roots(), flat(kind, k), lambda));
  std::unique_lock lock(mutex_);
  return decomps_.try_emplace(key, std::move(value)).first->second;
}

std::shared_ptr<const Decomposition> GradedAdjointTable::s_graded_tensor(int k, const Weight& lambda) const {
  return decomposition(Kind::kGraded, k, lambda);
}

std::shared_ptr<const Decomposition> GradedAdjointTable::tensor_power_tensor(int k, const Weight& lambda) const {
  return decomposition(Kind::kTensor, k, lambda);
}

int64_t GradedAdjointTable::hom_s_graded(const Weight& mu, int k, const Weight& lambda) const {
  roots().check_weight(mu);
  const auto d = s_graded_tensor(k, lambda);
  auto it = d->find(mu);
  return it == d->end() ? 0 : it->second;
}

int64_t GradedAdjointTable::hom_tensor_power(const Weight& mu, int k, const Weight& lambda) const {
  roots().check_weight(mu);
  const auto d = tensor_power_tensor(k, lambda);
  auto it = d->find(mu);
  return it == d->end() ? 0 : it->second;
}

}  // namespace lieq
