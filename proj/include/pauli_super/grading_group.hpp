#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "pauli_super/errors.hpp"

namespace pauli_super {

/// Element of G = <a0> x G_1 x ... x G_q, G_j = <a_j> x <b_j>, i.e. (Z_2)^(2q+1).
///
/// Bit layout (part of the on-disk format): bit 0 = a0, bit 2j-1 = a_j,
/// bit 2j = b_j. The group law is XOR and every element is its own inverse.
class GradingGroupElement {
 public:
  static constexpr unsigned kMaxRank = 31;

  GradingGroupElement() = default;
  GradingGroupElement(unsigned q, std::uint64_t bits) : q_(q), bits_(bits) {
    if (q > kMaxRank) throw ConfigurationError("GradingGroupElement: rank too large");
    if (bits >> length() != 0) throw DimensionError("GradingGroupElement: bits exceed 2q+1");
  }

  static GradingGroupElement identity(unsigned q) { return {q, 0}; }
  static GradingGroupElement a0(unsigned q) { return {q, 1}; }
  static GradingGroupElement a(unsigned q, unsigned j) { return {q, std::uint64_t{1} << (2 * j - 1)}; }
  static GradingGroupElement b(unsigned q, unsigned j) { return {q, std::uint64_t{1} << (2 * j)}; }

  unsigned rank() const noexcept { return q_; }
  unsigned length() const noexcept { return 2 * q_ + 1; }
  std::uint64_t bits() const noexcept { return bits_; }

  bool is_identity() const noexcept { return bits_ == 0; }
  /// The a0 component; set exactly on the odd part of P(t).
  bool has_a0() const noexcept { return (bits_ & 1u) != 0; }
  /// Projection onto G_0 (clears a0).
  GradingGroupElement g0_part() const { return {q_, bits_ & ~std::uint64_t{1}}; }

  /// Lowercase hex, zero-padded to ceil((2q+1)/4) digits.
  std::string to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    const unsigned width = (length() + 3) / 4;
    std::string s(width, '0');
    for (unsigned i = 0; i < width; ++i) s[width - 1 - i] = kDigits[(bits_ >> (4 * i)) & 0xf];
    return s;
  }

  static GradingGroupElement from_hex(unsigned q, std::string_view hex) {
    if (hex.empty()) throw std::invalid_argument("GradingGroupElement: empty hex string");
    std::uint64_t v = 0;
    for (char c : hex) {
      unsigned d;
      if (c >= '0' && c <= '9') d = c - '0';
      else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
      else throw std::invalid_argument("GradingGroupElement: bad hex digit");
      if (v >> 60) throw DimensionError("GradingGroupElement: hex too long");
      v = (v << 4) | d;
    }
    return {q, v};
  }

  friend bool operator==(const GradingGroupElement&, const GradingGroupElement&) = default;
  friend auto operator<=>(const GradingGroupElement&, const GradingGroupElement&) = default;

 private:
  unsigned q_ = 0;
  std::uint64_t bits_ = 0;
};

inline GradingGroupElement gg_mul(const GradingGroupElement& g, const GradingGroupElement& h) {
  if (g.rank() != h.rank()) throw DimensionError("gg_mul: group elements of different length");
  return {g.rank(), g.bits() ^ h.bits()};
}

inline GradingGroupElement operator*(const GradingGroupElement& g, const GradingGroupElement& h) {
  return gg_mul(g, h);
}

}  // namespace pauli_super

template <>
struct std::hash<pauli_super::GradingGroupElement> {
  std::size_t operator()(const pauli_super::GradingGroupElement& g) const noexcept {
    return std::hash<std::uint64_t>{}(g.bits() * 0x9e3779b97f4a7c15ull ^ g.rank());
  }
};
