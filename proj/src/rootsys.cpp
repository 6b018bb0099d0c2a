#include "lieq/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace lieq {
namespace {

std::vector<std::vector<int>> cartan_matrix(const LieType& t) {
  const int n = t.rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) {  // 1-based, simply laced edge
    a[i - 1][j - 1] = -1;
    a[j - 1][i - 1] = -1;
  };
  switch (t.family) {
    case 'A':
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -1;  // alpha_n short
      a[n - 1][n - 2] = -2;
      break;
    case 'C':
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      a[n - 1][n - 2] = -1;
      break;
    case 'D':
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case 'E':
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(1, 2);
      a[1][2] = -1;  // alpha_2 long, alpha_3 short
      a[2][1] = -2;
      link(3, 4);
      break;
    case 'G':
      a[0][1] = -3;  // alpha_1 short
      a[1][0] = -1;
      break;
    default:
      throw LieError("unknown family");
  }
  return a;
}

uint64_t weyl_group_order(const LieType& t) {
  auto fact = [](int n) {
    uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<uint64_t>(i);
    return f;
  };
  const int n = t.rank;
  switch (t.family) {
    case 'A': return fact(n + 1);
    case 'B':
    case 'C': return (uint64_t{1} << n) * fact(n);
    case 'D': return (uint64_t{1} << (n - 1)) * fact(n);
    case 'E': return n == 6 ? 51840ULL : n == 7 ? 2903040ULL : 696729600ULL;
    case 'F': return 1152;
    case 'G': return 12;
  }
  throw LieError("unknown family");
}

std::size_t expected_positive_roots(const LieType& t) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  return 0;
}

std::vector<std::vector<Rational>> invert(const std::vector<std::vector<int>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c] == Rational(0)) ++p;
    if (p == n) throw std::logic_error("singular Cartan matrix");
    std::swap(a[p], a[c]);
    const Rational piv = a[c][c];
    for (auto& x : a[c]) x /= piv;
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == Rational(0)) continue;
      const Rational f = a[r][c];
      for (int k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

std::vector<RootVec> closure_positive_roots(const std::vector<std::vector<int>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<RootVec> roots;
  std::deque<RootVec> queue;
  for (int i = 0; i < n; ++i) {
    RootVec r;
    r.rank = n;
    r.coeffs[i] = 1;
    roots.push_back(r);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    const RootVec beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      int32_t pairing = 0;
      for (int j = 0; j < n; ++j) pairing += a[i][j] * beta.coeffs[j];
      if (pairing == 0) continue;
      RootVec img = beta;
      img.coeffs[i] -= pairing;
      if (!img.is_positive()) continue;
      if (std::any_of(roots.begin(), roots.end(), [&](const RootVec& r) { return r.coeffs == img.coeffs; })) continue;
      roots.push_back(img);
      queue.push_back(img);
    }
  }
  return roots;
}

// Weyl group order of a connected Cartan matrix, identified by rank, lacing
// and root count.
uint64_t connected_weyl_order(const std::vector<std::vector<int>>& a) {
  const int m = static_cast<int>(a.size());
  int lacing = 1;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) lacing = std::max(lacing, a[i][j] * a[j][i]);
  const std::size_t roots = closure_positive_roots(a).size();
  const auto mm = static_cast<std::size_t>(m);
  LieType t{'A', m};
  if (lacing == 3) {
    t = {'G', 2};
  } else if (lacing == 2) {
    t = (m == 4 && roots == 24) ? LieType{'F', 4} : LieType{'B', m};
  } else if (roots == mm * (mm + 1) / 2) {
    t = {'A', m};
  } else if (roots == mm * (mm - 1)) {
    t = {'D', m};
  } else {
    t = {'E', m};
  }
  return weyl_group_order(t);
}

}  // namespace

RootSystem::RootSystem(LieType t) : type_(t) {
  type_.validate();
  const int n = type_.rank;
  cartan_ = cartan_matrix(type_);

  // symmetrizer d_i = (alpha_i, alpha_i)/2 with d_i A_ij = d_j A_ji
  half_len_.assign(n, Rational(0));
  half_len_[0] = 1;
  std::deque<int> todo{0};
  while (!todo.empty()) {
    const int i = todo.front();
    todo.pop_front();
    for (int j = 0; j < n; ++j) {
      if (j == i || cartan_[i][j] == 0 || half_len_[j] != Rational(0)) continue;
      half_len_[j] = half_len_[i] * Rational(cartan_[i][j], cartan_[j][i]);
      todo.push_back(j);
    }
  }
  const Rational longest = *std::max_element(half_len_.begin(), half_len_.end());
  for (auto& d : half_len_) d /= longest;

  inverse_cartan_ = invert(cartan_);
  gram_.assign(n, std::vector<Rational>(n));
  scale_ = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      gram_[i][j] = inverse_cartan_[i][j] * half_len_[i];
      scale_ = std::lcm(scale_, gram_[i][j].denominator());
    }
  gram_scaled_.assign(n, std::vector<int64_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational s = gram_[i][j] * scale_;
      if (s.denominator() != 1) throw std::logic_error("form scale does not clear denominators");
      gram_scaled_[i][j] = s.numerator();
    }

  reflections_.rank = n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) reflections_.columns[i][j] = cartan_[j][i];

  std::vector<RootVec> roots = closure_positive_roots(cartan_);
  std::sort(roots.begin(), roots.end(), [](const RootVec& a, const RootVec& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coeffs < b.coeffs;
  });
  if (roots.size() != expected_positive_roots(type_))
    throw std::logic_error("positive root count mismatch for " + type_.name());
  pos_roots_ = std::move(roots);

  for (const auto& r : pos_roots_) {
    pos_root_weights_.push_back(root_to_weight(r));
    // (alpha, alpha)/2 = 1/2 sum c_i c_j d_i A_ij
    Rational len(0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) len += Rational(r.coeffs[i] * r.coeffs[j] * cartan_[i][j]) * half_len_[i];
    len /= 2;
    RootVec co;
    co.rank = n;
    for (int j = 0; j < n; ++j) {
      const Rational c = Rational(r.coeffs[j]) * half_len_[j] / len;
      if (c.denominator() != 1) throw std::logic_error("non-integral coroot");
      co.coeffs[j] = static_cast<int32_t>(c.numerator());
    }
    pos_coroots_.push_back(co);
  }

  if (pos_roots_.size() > 1 && pos_roots_[pos_roots_.size() - 2].height() == highest_root().height())
    throw std::logic_error("highest root not unique");
  if (form(highest_root_weight(), highest_root_weight()) != Rational(2)) throw std::logic_error("(theta, theta) != 2");

  weyl_order_ = weyl_group_order(type_);
}

std::vector<Weight> RootSystem::all_root_weights() const {
  std::vector<Weight> out;
  out.reserve(2 * pos_root_weights_.size());
  for (const auto& w : pos_root_weights_) {
    out.push_back(w);
    out.push_back(-w);
  }
  return out;
}

Weight RootSystem::rho() const {
  Weight w(rank());
  for (int i = 0; i < rank(); ++i) w.labels[i] = 1;
  return w;
}

Weight RootSystem::simple_root_weight(int i) const {
  if (i < 1 || i > rank()) throw LieError("simple root index out of range");
  Weight w(rank());
  for (int j = 0; j < rank(); ++j) w.labels[j] = cartan_[j][i - 1];
  return w;
}

Weight RootSystem::root_to_weight(const RootVec& r) const {
  Weight w(rank());
  for (int i = 0; i < rank(); ++i) {
    int32_t s = 0;
    for (int j = 0; j < rank(); ++j) s += cartan_[i][j] * r.coeffs[j];
    w.labels[i] = s;
  }
  return w;
}

std::optional<RootVec> RootSystem::weight_to_root(const Weight& w) const {
  check_weight(w);
  RootVec r;
  r.rank = rank();
  for (int i = 0; i < rank(); ++i) {
    Rational s(0);
    for (int j = 0; j < rank(); ++j) s += inverse_cartan_[i][j] * w.labels[j];
    if (s.denominator() != 1) return std::nullopt;
    r.coeffs[i] = static_cast<int32_t>(s.numerator());
  }
  return r;
}

Rational RootSystem::form(const Weight& a, const Weight& b) const { return Rational(form_scaled(a, b), scale_); }

int64_t RootSystem::form_scaled(const Weight& a, const Weight& b) const {
  int64_t s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a.labels[i] == 0) continue;
    int64_t row = 0;
    for (int j = 0; j < rank(); ++j) row += gram_scaled_[i][j] * b.labels[j];
    s += a.labels[i] * row;
  }
  return s;
}

int64_t RootSystem::coroot_pairing(const Weight& w, std::size_t k) const {
  const auto& co = pos_coroots_[k];
  int64_t s = 0;
  for (int j = 0; j < rank(); ++j) s += static_cast<int64_t>(co.coeffs[j]) * w.labels[j];
  return s;
}

DominantRep RootSystem::dominant_representative(const Weight& w) const {
  check_weight(w);
  DominantRep rep{w, 1, 0};
  rep.steps = kernels::reduce_to_dominant(rep.weight, reflections_);
  rep.sign = (rep.steps % 2 == 0) ? 1 : -1;
  return rep;
}

std::vector<Weight> RootSystem::weyl_orbit(const Weight& dominant) const {
  check_weight(dominant);
  if (!dominant.is_dominant()) throw LieError("weyl_orbit needs a dominant weight, got " + dominant.str());
  std::vector<Weight> orbit{dominant};
  std::unordered_set<Weight, WeightHash> seen{dominant};
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    for (int i = 0; i < rank(); ++i) {
      const int32_t c = orbit[k].labels[i];
      if (c <= 0) continue;
      Weight y = orbit[k];
      for (int j = 0; j < rank(); ++j) y.labels[j] -= c * cartan_[j][i];
      if (seen.insert(y).second) orbit.push_back(y);
    }
  }
  return orbit;
}

Weight RootSystem::dual_weight(const Weight& dominant) const {
  check_weight(dominant);
  if (!dominant.is_dominant()) throw LieError("dual_weight needs a dominant weight, got " + dominant.str());
  return dominant_representative(-dominant).weight;
}

void RootSystem::check_weight(const Weight& w) const {
  if (w.rank != rank())
    throw LieError("weight " + w.str() + " has " + std::to_string(w.rank) + " labels, " + type_.name() + " needs " +
                   std::to_string(rank()));
}

uint64_t RootSystem::orbit_size(const Weight& dominant) const {
  check_weight(dominant);
  if (!dominant.is_dominant()) throw LieError("orbit_size needs a dominant weight, got " + dominant.str());
  const int n = rank();
  std::vector<int> component(n, -1);
  uint64_t stabiliser = 1;
  for (int start = 0; start < n; ++start) {
    if (dominant.labels[start] != 0 || component[start] >= 0) continue;
    std::vector<int> nodes{start};
    component[start] = start;
    for (std::size_t k = 0; k < nodes.size(); ++k)
      for (int j = 0; j < n; ++j)
        if (dominant.labels[j] == 0 && component[j] < 0 && cartan_[nodes[k]][j] != 0) {
          component[j] = start;
          nodes.push_back(j);
        }
    std::sort(nodes.begin(), nodes.end());
    std::vector<std::vector<int>> sub(nodes.size(), std::vector<int>(nodes.size()));
    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (std::size_t j = 0; j < nodes.size(); ++j) sub[i][j] = cartan_[nodes[i]][nodes[j]];
    stabiliser *= connected_weyl_order(sub);
  }
  return weyl_order_ / stabiliser;
}

RootSystem build_root_system(LieType t) { return RootSystem(t); }

}  // namespace lieq
