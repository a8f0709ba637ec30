#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pauli_super/errors.hpp"
#include "pauli_super/grading_group.hpp"
#include "pauli_super/int_matrix.hpp"

namespace pauli_super {

/// One tensor factor. The 2-bit code is (x-bit, z-bit) and the matrix is
/// Z^z X^x with Z = diag(1,-1), X = [[0,1],[1,0]]:
///   s0 = I, s1 = Z, s2 = X, s3 = ZX = [[0,1],[-1,0]].
enum class PauliSymbol : std::uint8_t { s0 = 0b00, s1 = 0b01, s2 = 0b10, s3 = 0b11 };

/// Signed tensor word sign * x_1 (x) ... (x) x_q with x_i in {s0, s1, s2, s3}.
///
/// Stored as two q-bit masks (bit i-1 <-> factor i), so multiplication is
/// XOR on the masks plus one popcount for the sign.
class PauliWord {
 public:
  PauliWord() = default;
  PauliWord(unsigned q, std::uint64_t x_mask, std::uint64_t z_mask, int sign = 1) : q_(q), x_(x_mask), z_(z_mask), sign_(sign) {
    if (q > GradingGroupElement::kMaxRank) throw ConfigurationError("PauliWord: length too large");
    const std::uint64_t limit = q == 64 ? ~0ull : (std::uint64_t{1} << q) - 1;
    if ((x_mask & ~limit) || (z_mask & ~limit)) throw DimensionError("PauliWord: mask exceeds length");
    if (sign != 1 && sign != -1) throw std::invalid_argument("PauliWord: sign must be +1 or -1");
  }

  PauliWord(const std::vector<PauliSymbol>& symbols, int sign = 1) : PauliWord(static_cast<unsigned>(symbols.size()), 0, 0, sign) {
    for (unsigned i = 0; i < q_; ++i) {
      const auto code = static_cast<std::uint8_t>(symbols[i]);
      if (code & 0b10) x_ |= std::uint64_t{1} << i;
      if (code & 0b01) z_ |= std::uint64_t{1} << i;
    }
  }

  static PauliWord identity(unsigned q) { return {q, 0, 0, 1}; }

  unsigned length() const noexcept { return q_; }
  std::uint64_t x_mask() const noexcept { return x_; }
  std::uint64_t z_mask() const noexcept { return z_; }
  int sign() const noexcept { return sign_; }

  /// Symbol at 1-based position i.
  PauliSymbol symbol(unsigned i) const {
    const unsigned x = (x_ >> (i - 1)) & 1u, z = (z_ >> (i - 1)) & 1u;
    return static_cast<PauliSymbol>((x << 1) | z);
  }

  unsigned count_s3() const noexcept { return static_cast<unsigned>(std::popcount(x_ & z_)); }

  PauliWord negated() const { return {q_, x_, z_, -sign_}; }
  PauliWord unsigned_word() const { return {q_, x_, z_, 1}; }

  /// "+s1s2", "-s3s0"; the empty word is "+".
  std::string to_string() const {
    std::string s(1, sign_ > 0 ? '+' : '-');
    for (unsigned i = 1; i <= q_; ++i) {
      s += 's';
      s += static_cast<char>('0' + static_cast<int>(symbol(i)));
    }
    return s;
  }

  static PauliWord parse(std::string_view text) {
    if (text.empty() || (text[0] != '+' && text[0] != '-')) throw std::invalid_argument("PauliWord: missing sign");
    if ((text.size() - 1) % 2 != 0) throw std::invalid_argument("PauliWord: malformed symbol list");
    std::vector<PauliSymbol> symbols;
    for (std::size_t i = 1; i < text.size(); i += 2) {
      if (text[i] != 's' || text[i + 1] < '0' || text[i + 1] > '3') throw std::invalid_argument("PauliWord: bad symbol");
      symbols.push_back(static_cast<PauliSymbol>(text[i + 1] - '0'));
    }
    return PauliWord(symbols, text[0] == '+' ? 1 : -1);
  }

  friend bool operator==(const PauliWord&, const PauliWord&) = default;

 private:
  unsigned q_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  int sign_ = 1;
};

/// (Z^z1 X^x1)(Z^z2 X^x2) = (-1)^(x1 z2) Z^(z1+z2) X^(x1+x2), factorwise.
inline PauliWord pauli_mul(const PauliWord& u, const PauliWord& v) {
  if (u.length() != v.length()) throw DimensionError("pauli_mul: words of different length");
  const int flip = std::popcount(u.x_mask() & v.z_mask()) & 1;
  const int sign = u.sign() * v.sign() * (flip ? -1 : 1);
  return {u.length(), u.x_mask() ^ v.x_mask(), u.z_mask() ^ v.z_mask(), sign};
}

/// s1 -> a_i, s2 -> b_i, s3 -> a_i b_i; the a0 bit is never set.
inline GradingGroupElement pauli_degree(const PauliWord& w) {
  std::uint64_t bits = 0;
  for (unsigned i = 1; i <= w.length(); ++i) {
    if ((w.z_mask() >> (i - 1)) & 1u) bits |= std::uint64_t{1} << (2 * i - 1);
    if ((w.x_mask() >> (i - 1)) & 1u) bits |= std::uint64_t{1} << (2 * i);
  }
  return {w.length(), bits};
}

/// Inverse of pauli_degree on sign +1 words; g must lie in G_0.
inline PauliWord pauli_word_of_degree(const GradingGroupElement& g) {
  if (g.has_a0()) throw std::invalid_argument("pauli_word_of_degree: degree has an a0 component");
  std::uint64_t x = 0, z = 0;
  for (unsigned i = 1; i <= g.rank(); ++i) {
    if ((g.bits() >> (2 * i - 1)) & 1u) z |= std::uint64_t{1} << (i - 1);
    if ((g.bits() >> (2 * i)) & 1u) x |= std::uint64_t{1} << (i - 1);
  }
  return {g.rank(), x, z, 1};
}

/// Factorwise transpose: only s3 is skew, so the sign flips iff #s3 is odd.
inline PauliWord pauli_transpose(const PauliWord& w) { return w.count_s3() % 2 ? w.negated() : w; }

inline bool is_symmetric(const PauliWord& w) { return w.count_s3() % 2 == 0; }

inline IntMatrix symbol_matrix(PauliSymbol s) {
  switch (s) {
    case PauliSymbol::s0: return IntMatrix{{1, 0}, {0, 1}};
    case PauliSymbol::s1: return IntMatrix{{1, 0}, {0, -1}};
    case PauliSymbol::s2: return IntMatrix{{0, 1}, {1, 0}};
    case PauliSymbol::s3: return IntMatrix{{0, 1}, {-1, 0}};
  }
  return {};
}

/// Kronecker realization, factor 1 outermost: sign * x_1 (x) ... (x) x_q.
inline IntMatrix pauli_to_matrix(const PauliWord& w) {
  IntMatrix m = IntMatrix::identity(1);
  for (unsigned i = 1; i <= w.length(); ++i) m = mat_kron(m, symbol_matrix(w.symbol(i)));
  return w.sign() > 0 ? m : mat_scale(m, -1);
}

/// All 4^q sign +1 words, ordered by their degree bits.
inline std::vector<PauliWord> all_pauli_words(unsigned q) {
  std::vector<PauliWord> words;
  words.reserve(std::size_t{1} << (2 * q));
  for (std::uint64_t g = 0; g < (std::uint64_t{1} << (2 * q)); ++g)
    words.push_back(pauli_word_of_degree(GradingGroupElement(q, g << 1)));
  return words;
}

}  // namespace pauli_super
