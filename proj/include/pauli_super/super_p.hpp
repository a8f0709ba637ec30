#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pauli_super/errors.hpp"
#include "pauli_super/grading_group.hpp"
#include "pauli_super/int_matrix.hpp"
#include "pauli_super/pauli_word.hpp"

namespace pauli_super {

/// Which block of P(t) a basis element occupies.
///   even:          diag(X, -X^T), X a traceless Pauli word       (Z-degree  0)
///   odd_symmetric: upper-right block X, X^T = X                  (Z-degree +1)
///   odd_skew:      lower-left block X, X^T = -X                  (Z-degree -1)
enum class BasisKind : std::uint8_t { even, odd_symmetric, odd_skew };

inline const char* to_string(BasisKind k) {
  switch (k) {
    case BasisKind::even: return "even";
    case BasisKind::odd_symmetric: return "odd_symmetric";
    case BasisKind::odd_skew: return "odd_skew";
  }
  return "?";
}

struct HomogeneousBasisElement {
  GradingGroupElement g;
  int parity = 0;
  int z_deg = 0;
  BasisKind kind = BasisKind::even;
  PauliWord word;  // sign +1 word the element is built from
  IntMatrix mat;   // 2t x 2t
};

/// P(t), t = 2^q, with its Pauli G-grading. Every support element indexes
/// exactly one basis element.
///
/// Basis order is the letter order used by multidegrees: the a odd_symmetric
/// elements, then the b odd_skew elements, then the c even elements; each
/// group sorted by degree bits.
class GradedSuperalgebra {
 public:
  static constexpr unsigned kMinQ = 1;
  static constexpr unsigned kMaxQ = 4;

  unsigned q() const noexcept { return q_; }
  std::size_t t() const noexcept { return std::size_t{1} << q_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  std::size_t count_symmetric() const noexcept { return a_; }
  std::size_t count_skew() const noexcept { return b_; }
  std::size_t count_even() const noexcept { return c_; }

  const std::vector<HomogeneousBasisElement>& basis() const noexcept { return basis_; }
  const HomogeneousBasisElement& element(std::size_t i) const { return basis_.at(i); }
  const std::vector<GradingGroupElement>& support() const noexcept { return support_; }

  /// Basis position of the element of degree g, or -1 if g is not in the support.
  int index_of_bits(std::uint64_t bits) const noexcept {
    return bits < index_.size() ? index_[bits] : -1;
  }
  std::optional<std::size_t> index_of(const GradingGroupElement& g) const {
    if (g.rank() != q_) throw DimensionError("GradedSuperalgebra::index_of: wrong group rank");
    const int i = index_of_bits(g.bits());
    if (i < 0) return std::nullopt;
    return static_cast<std::size_t>(i);
  }
  bool in_support(const GradingGroupElement& g) const { return index_of(g).has_value(); }

  friend GradedSuperalgebra build_p_algebra(unsigned q);

 private:
  unsigned q_ = 0;
  std::size_t a_ = 0, b_ = 0, c_ = 0;
  std::vector<HomogeneousBasisElement> basis_;
  std::vector<GradingGroupElement> support_;
  std::vector<int> index_;  // degree bits -> basis position, -1 outside the support
};

inline GradedSuperalgebra build_p_algebra(unsigned q) {
  if (q < GradedSuperalgebra::kMinQ || q > GradedSuperalgebra::kMaxQ)
    throw ConfigurationError("build_p_algebra: q must lie in [1, 4], got " + std::to_string(q));
  const std::size_t t = std::size_t{1} << q;
  const auto a0 = GradingGroupElement::a0(q);

  std::vector<HomogeneousBasisElement> sym, skew, even;
  for (const PauliWord& w : all_pauli_words(q)) {
    const IntMatrix x = pauli_to_matrix(w);
    const GradingGroupElement g = pauli_degree(w);
    if (!g.is_identity()) {
      IntMatrix m(2 * t, 2 * t);
      m.set_block(0, 0, x);
      m.set_block(t, t, mat_scale(mat_transpose(x), -1));
      even.push_back({g, 0, 0, BasisKind::even, w, std::move(m)});
    }
    IntMatrix m(2 * t, 2 * t);
    if (is_symmetric(w)) {
      m.set_block(0, t, x);
      sym.push_back({a0 * g, 1, +1, BasisKind::odd_symmetric, w, std::move(m)});
    } else {
      m.set_block(t, 0, x);
      skew.push_back({a0 * g, 1, -1, BasisKind::odd_skew, w, std::move(m)});
    }
  }

  GradedSuperalgebra alg;
  alg.q_ = q;
  alg.a_ = sym.size();
  alg.b_ = skew.size();
  alg.c_ = even.size();
  for (auto* group : {&sym, &skew, &even})
    for (auto& e : *group) alg.basis_.push_back(std::move(e));
  alg.index_.assign(std::size_t{1} << (2 * q + 1), -1);
  for (std::size_t i = 0; i < alg.basis_.size(); ++i) {
    const auto& g = alg.basis_[i].g;
    if (alg.index_[g.bits()] != -1) throw ConsistencyError("build_p_algebra: degree repeated in basis");
    alg.index_[g.bits()] = static_cast<int>(i);
    alg.support_.push_back(g);
  }
  if (alg.dim() != 2 * t * t - 1 || alg.a_ != t * (t + 1) / 2 || alg.b_ != t * (t - 1) / 2 || alg.c_ != t * t - 1)
    throw ConsistencyError("build_p_algebra: basis counts do not match a, b, c");
  return alg;
}

/// [x, y] = xy - (-1)^(px py) yx.
inline IntMatrix supercommutator(const IntMatrix& x, const IntMatrix& y, int px, int py) {
  if (!x.is_square() || x.rows() != y.rows() || x.cols() != y.cols())
    throw DimensionError("supercommutator: operands must be square of equal size");
  const IntMatrix xy = mat_mul(x, y);
  const IntMatrix yx = mat_mul(y, x);
  return (px & py & 1) ? mat_add(xy, yx) : mat_sub(xy, yx);
}

inline IntMatrix supercommutator(const HomogeneousBasisElement& x, const HomogeneousBasisElement& y) {
  return supercommutator(x.mat, y.mat, x.parity, y.parity);
}

/// Structure constants: [e_i, e_j] = lambda(i, j) e_{product(i, j)}.
/// product(i, j) is -1 when g_i g_j is outside the support; lambda is then 0.
class StructureTable {
 public:
  StructureTable() = default;
  StructureTable(std::size_t d, std::vector<std::int64_t> lambda, std::vector<int> product)
      : d_(d), lambda_(std::move(lambda)), product_(std::move(product)) {}

  std::size_t dim() const noexcept { return d_; }
  std::int64_t lambda(std::size_t i, std::size_t j) const { return lambda_[i * d_ + j]; }
  int product(std::size_t i, std::size_t j) const { return product_[i * d_ + j]; }
  bool nonzero(std::size_t i, std::size_t j) const { return lambda_[i * d_ + j] != 0; }

  friend bool operator==(const StructureTable&, const StructureTable&) = default;

 private:
  std::size_t d_ = 0;
  std::vector<std::int64_t> lambda_;
  std::vector<int> product_;
};

inline StructureTable build_structure_table(const GradedSuperalgebra& alg) {
  const std::size_t d = alg.dim();
  std::vector<std::int64_t> lambda(d * d, 0);
  std::vector<int> product(d * d, -1);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto& ei = alg.element(i);
      const auto& ej = alg.element(j);
      const IntMatrix br = supercommutator(ei, ej);
      const int k = alg.index_of_bits((ei.g * ej.g).bits());
      product[i * d + j] = k;
      if (k < 0) {
        if (!br.is_zero())
          throw ConsistencyError("build_structure_table: nonzero bracket outside the support for " + ei.g.to_hex() + "," +
                                 ej.g.to_hex());
        continue;
      }
      const auto ratio = integer_ratio(br, alg.element(static_cast<std::size_t>(k)).mat);
      if (!ratio)
        throw ConsistencyError("build_structure_table: bracket not proportional to e_gh for " + ei.g.to_hex() + "," +
                               ej.g.to_hex());
      if (*ratio > INT64_MAX || *ratio < INT64_MIN) throw ConsistencyError("build_structure_table: lambda overflow");
      lambda[i * d + j] = static_cast<std::int64_t>(*ratio);
    }
  return {d, std::move(lambda), std::move(product)};
}

}  // namespace pauli_super
