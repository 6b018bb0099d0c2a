#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lieq {

inline constexpr int kMaxRank = 8;

/// Thrown for malformed input: bad types, wrong label lengths, violated
/// preconditions. Internal consistency failures use std::logic_error.
class LieError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A simple type X_n.
struct LieType {
  char family = 'A';
  int rank = 1;

  static LieType parse(std::string_view text);  // "D6", "a2", "E8"
  void validate() const;
  [[nodiscard]] std::string name() const;

  auto operator<=>(const LieType&) const = default;
};

/// Integer vector of Dynkin labels. Lanes past `rank` are always zero, so the
/// whole 8-lane block can be compared, hashed and loaded as one 256-bit word.
struct Weight {
  std::array<int32_t, kMaxRank> labels{};
  int32_t rank = 0;

  Weight() = default;
  explicit Weight(int r) : rank(r) {}
  Weight(std::initializer_list<int32_t> l);
  static Weight from_span(std::span<const int32_t> l);
  static Weight fundamental(int r, int i);  // omega_i, 1-based as in Bourbaki
  static Weight parse(std::string_view text, int rank);  // "0,0,0,2,0,0"

  int32_t operator[](std::size_t i) const { return labels[i]; }
  int32_t& operator[](std::size_t i) { return labels[i]; }

  [[nodiscard]] bool is_dominant() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] int positive_label_count() const;
  [[nodiscard]] std::string str() const;  // comma-separated labels

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int32_t k, Weight a);
  Weight operator-() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

/// Integer vector in simple-root coordinates.
struct RootVec {
  std::array<int32_t, kMaxRank> coeffs{};
  int32_t rank = 0;

  [[nodiscard]] int height() const;
  [[nodiscard]] bool is_positive() const;
  friend bool operator==(const RootVec&, const RootVec&) = default;
};

}  // namespace lieq
