#include "lieq/weight.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>

namespace lieq {

LieType LieType::parse(std::string_view text) {
  if (text.size() < 2) throw LieError("malformed Lie type '" + std::string(text) + "'");
  LieType t;
  t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), t.rank);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    throw LieError("malformed Lie type '" + std::string(text) + "'");
  t.validate();
  return t;
}

void LieType::validate() const {
  bool ok = false;
  switch (family) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 3; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: ok = false;
  }
  if (ok && rank > kMaxRank) ok = false;
  if (!ok) throw LieError("invalid simple type " + name() + " (rank out of range for family, max rank " +
                          std::to_string(kMaxRank) + ")");
}

std::string LieType::name() const { return std::string(1, family) + std::to_string(rank); }

Weight::Weight(std::initializer_list<int32_t> l) : rank(static_cast<int32_t>(l.size())) {
  if (l.size() > kMaxRank) throw LieError("weight longer than maximum rank");
  std::copy(l.begin(), l.end(), labels.begin());
}

Weight Weight::from_span(std::span<const int32_t> l) {
  if (l.size() > kMaxRank) throw LieError("weight longer than maximum rank");
  Weight w(static_cast<int>(l.size()));
  std::copy(l.begin(), l.end(), w.labels.begin());
  return w;
}

Weight Weight::fundamental(int r, int i) {
  if (i < 1 || i > r) throw LieError("fundamental weight index out of range");
  Weight w(r);
  w.labels[i - 1] = 1;
  return w;
}

Weight Weight::parse(std::string_view text, int rank) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  for (;;) {
    auto comma = text.find(',', pos);
    fields.push_back(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (static_cast<int>(fields.size()) != rank)
    throw LieError("weight '" + std::string(text) + "' must have exactly " + std::to_string(rank) + " labels");
  Weight w(rank);
  for (int i = 0; i < rank; ++i) {
    auto field = fields[i];
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front()))) field.remove_prefix(1);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back()))) field.remove_suffix(1);
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), w.labels[i]);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
      throw LieError("malformed weight '" + std::string(text) + "'");
  }
  return w;
}

bool Weight::is_dominant() const {
  return std::all_of(labels.begin(), labels.begin() + rank, [](int32_t x) { return x >= 0; });
}

bool Weight::is_zero() const {
  return std::all_of(labels.begin(), labels.end(), [](int32_t x) { return x == 0; });
}

int Weight::positive_label_count() const {
  return static_cast<int>(std::count_if(labels.begin(), labels.begin() + rank, [](int32_t x) { return x > 0; }));
}

std::string Weight::str() const {
  std::string out;
  for (int i = 0; i < rank; ++i) {
    if (i) out += ',';
    out += std::to_string(labels[i]);
  }
  return out;
}

Weight& Weight::operator+=(const Weight& o) {
  for (int i = 0; i < kMaxRank; ++i) labels[i] += o.labels[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (int i = 0; i < kMaxRank; ++i) labels[i] -= o.labels[i];
  return *this;
}

Weight operator*(int32_t k, Weight a) {
  for (auto& x : a.labels) x *= k;
  return a;
}

Weight Weight::operator-() const {
  Weight w = *this;
  for (auto& x : w.labels) x = -x;
  return w;
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
  if (auto c = a.rank <=> b.rank; c != 0) return c;
  for (int i = 0; i < kMaxRank; ++i)
    if (auto c = a.labels[i] <=> b.labels[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  // splitmix-style mixing over the packed lanes
  uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<uint64_t>(w.rank);
  for (int i = 0; i < kMaxRank; i += 2) {
    uint64_t x = (static_cast<uint64_t>(static_cast<uint32_t>(w.labels[i])) << 32) |
                 static_cast<uint32_t>(w.labels[i + 1]);
    x += h;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    h = x ^ (x >> 31);
  }
  return static_cast<std::size_t>(h);
}

int RootVec::height() const {
  int h = 0;
  for (int i = 0; i < rank; ++i) h += coeffs[i];
  return h;
}

bool RootVec::is_positive() const {
  return std::all_of(coeffs.begin(), coeffs.begin() + rank, [](int32_t x) { return x >= 0; }) && height() > 0;
}

}  // namespace lieq
