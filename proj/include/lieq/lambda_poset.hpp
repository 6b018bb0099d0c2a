#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "lieq/rootsys.hpp"

namespace lieq {

/// (lambda, r) in P+ x Z+. Ordered by grade descending, then by labels.
struct LambdaPoint {
  Weight weight;
  int grade = 0;

  [[nodiscard]] std::string str() const;  // "(0,1,0,0, 3)"
  [[nodiscard]] std::string id() const;   // "0,1,0,0;3"

  friend bool operator==(const LambdaPoint&, const LambdaPoint&) = default;
  friend std::strong_ordering operator<=>(const LambdaPoint& a, const LambdaPoint& b);
};

struct LambdaPointHash {
  std::size_t operator()(const LambdaPoint& p) const noexcept;
};

/// Finite subset of Lambda, kept sorted and duplicate-free.
class GammaSet {
 public:
  GammaSet() = default;
  GammaSet(const RootSystem& rs, std::vector<LambdaPoint> points);

  [[nodiscard]] const LieType& ambient() const { return ambient_; }
  [[nodiscard]] const std::vector<LambdaPoint>& points() const { return points_; }
  [[nodiscard]] std::size_t size() const { return points_.size(); }
  [[nodiscard]] bool empty() const { return points_.empty(); }
  [[nodiscard]] bool contains(const LambdaPoint& p) const;
  [[nodiscard]] int max_grade() const;

  friend bool operator==(const GammaSet&, const GammaSet&) = default;

 private:
  LieType ambient_;
  std::vector<LambdaPoint> points_;
};

/// Every (lambda + beta, r + 1) with beta in R u {0} and lambda + beta dominant.
std::vector<LambdaPoint> covers(const RootSystem& rs, const LambdaPoint& p);
/// Every (lambda - beta, r - 1) with beta in R u {0}, dominant; empty at grade 0.
std::vector<LambdaPoint> cocovers(const RootSystem& rs, const LambdaPoint& p);

/// p <= q in the order generated by the cover relation.
bool leq(const RootSystem& rs, const LambdaPoint& p, const LambdaPoint& q);

/// {x : p <= x <= q}; empty when p and q are not comparable.
GammaSet interval(const RootSystem& rs, const LambdaPoint& p, const LambdaPoint& q);

struct ClosureWitness {
  LambdaPoint low;
  LambdaPoint high;
  LambdaPoint missing;
};

struct ClosureReport {
  bool closed = true;
  std::optional<ClosureWitness> witness;
};

ClosureReport is_interval_closed(const RootSystem& rs, const GammaSet& gamma);

/// {(-w0 mu, r - s)}; rejects points above grade r.
GammaSet sharp_dual(const RootSystem& rs, const GammaSet& gamma, int r);

void check_point(const RootSystem& rs, const LambdaPoint& p);

}  // namespace lieq
