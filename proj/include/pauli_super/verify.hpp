#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pauli_super/grading_group.hpp"
#include "pauli_super/int_matrix.hpp"
#include "pauli_super/pauli_word.hpp"
#include "pauli_super/report.hpp"
#include "pauli_super/super_p.hpp"

namespace pauli_super {

/// Checks the Pauli G_0-grading of M_{2^q} item by item:
///   grading, one_dimensional, symmetric_or_skew, invertible, sl_homogeneous.
inline Report verify_prop1(unsigned q) {
  if (q < 1 || q > 4) throw ConfigurationError("verify_prop1: q must lie in [1, 4]");
  const std::vector<PauliWord> words = all_pauli_words(q);
  std::vector<IntMatrix> mats;
  mats.reserve(words.size());
  for (const auto& w : words) mats.push_back(pauli_to_matrix(w));
  const std::size_t n = std::size_t{1} << q;

  Report r{"pauli_grading q=" + std::to_string(q), {}};

  // R_g R_h is spanned by the signed word of degree gh.
  ReportItem grading{"grading"};
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j) {
      ++grading.checked;
      const PauliWord uv = pauli_mul(words[i], words[j]);
      if (pauli_degree(uv) != pauli_degree(words[i]) * pauli_degree(words[j]) ||
          mat_mul(mats[i], mats[j]) != pauli_to_matrix(uv))
        grading.fail(words[i].to_string() + "*" + words[j].to_string());
    }
  r.items.push_back(std::move(grading));

  // Degree map is a bijection onto G_0 and the words are orthogonal under
  // tr(A^T B), so the 4^q words form a basis with one word per component.
  ReportItem one_dim{"one_dimensional"};
  std::vector<int> seen(std::size_t{1} << (2 * q + 1), 0);
  for (const auto& w : words) ++seen[pauli_degree(w).bits()];
  for (std::uint64_t g = 0; g < seen.size(); ++g) {
    ++one_dim.checked;
    const bool in_g0 = (g & 1u) == 0;
    if (seen[g] != (in_g0 ? 1 : 0)) one_dim.fail("degree " + GradingGroupElement(q, g).to_hex());
  }
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i; j < words.size(); ++j) {
      ++one_dim.checked;
      const BigInt ip = mat_trace(mat_mul(mat_transpose(mats[i]), mats[j]));
      if (ip != (i == j ? BigInt(n) : BigInt(0))) one_dim.fail("<" + words[i].to_string() + "," + words[j].to_string() + ">");
    }
  r.items.push_back(std::move(one_dim));

  ReportItem sym{"symmetric_or_skew"};
  for (std::size_t i = 0; i < words.size(); ++i) {
    ++sym.checked;
    const IntMatrix tr = mat_transpose(mats[i]);
    const bool symmetric = tr == mats[i];
    const bool skew = tr == mat_scale(mats[i], -1);
    if (!(symmetric || skew) || symmetric != is_symmetric(words[i]) ||
        pauli_to_matrix(pauli_transpose(words[i])) != tr)
      sym.fail(words[i].to_string());
  }
  r.items.push_back(std::move(sym));

  ReportItem inv{"invertible"};
  for (std::size_t i = 0; i < words.size(); ++i) {
    ++inv.checked;
    if (mat_det(mats[i]).is_zero()) inv.fail(words[i].to_string());
  }
  r.items.push_back(std::move(inv));

  // sl is spanned by the non-identity components exactly when each of them is traceless.
  ReportItem sl{"sl_homogeneous"};
  for (std::size_t i = 0; i < words.size(); ++i) {
    ++sl.checked;
    const BigInt tr = mat_trace(mats[i]);
    const bool id = pauli_degree(words[i]).is_identity();
    if (id ? tr != BigInt(n) : !tr.is_zero()) sl.fail(words[i].to_string());
  }
  r.items.push_back(std::move(sl));
  return r;
}

namespace detail {
inline std::string pair_label(const GradedSuperalgebra& alg, std::size_t i, std::size_t j) {
  return alg.element(i).g.to_hex() + "," + alg.element(j).g.to_hex();
}

inline bool both_odd_same_kind(const HomogeneousBasisElement& x, const HomogeneousBasisElement& y) {
  return x.kind != BasisKind::even && x.kind == y.kind;
}
}  // namespace detail

/// Checks the G-grading of P(2^q) over all ordered support pairs.
///
/// Items: compatible, one_dimensional, grading, same_kind_odd_vanish,
/// nonzero_brackets_invertible. The last one reads invertibility blockwise:
/// every nonzero t x t block of a nonzero bracket has nonzero determinant.
/// Zero brackets between non-same-kind pairs (commuting words) are counted in
/// the detail line, they are not failures.
inline Report verify_prop2(const GradedSuperalgebra& alg) {
  const std::size_t d = alg.dim(), t = alg.t();
  Report r{"p_grading q=" + std::to_string(alg.q()), {}};

  ReportItem compat{"compatible"};
  for (const auto& e : alg.basis()) {
    ++compat.checked;
    const bool even = e.kind == BasisKind::even;
    if (e.g.has_a0() == even || e.parity != (even ? 0 : 1) || e.z_deg != (even ? 0 : e.kind == BasisKind::odd_symmetric ? 1 : -1))
      compat.fail(e.g.to_hex());
  }
  r.items.push_back(std::move(compat));

  ReportItem one_dim{"one_dimensional"};
  one_dim.checked = alg.support().size();
  if (alg.support().size() != d || d != 2 * t * t - 1) one_dim.fail("support size " + std::to_string(alg.support().size()));
  if (alg.in_support(GradingGroupElement::identity(alg.q()))) one_dim.fail("identity in support");
  for (std::size_t i = 0; i < d; ++i)
    if (alg.index_of(alg.element(i).g) != i) one_dim.fail(alg.element(i).g.to_hex());
  r.items.push_back(std::move(one_dim));

  ReportItem grading{"grading"};
  ReportItem vanish{"same_kind_odd_vanish"};
  ReportItem invertible{"nonzero_brackets_invertible"};
  std::size_t zero_other = 0, nonzero = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto& x = alg.element(i);
      const auto& y = alg.element(j);
      const IntMatrix br = supercommutator(x, y);
      ++grading.checked;
      const auto k = alg.index_of(x.g * y.g);
      const bool homogeneous = k ? integer_ratio(br, alg.element(*k).mat).has_value() : br.is_zero();
      if (!homogeneous) grading.fail(detail::pair_label(alg, i, j));

      if (detail::both_odd_same_kind(x, y)) {
        ++vanish.checked;
        if (!br.is_zero()) vanish.fail(detail::pair_label(alg, i, j));
        continue;
      }
      ++invertible.checked;
      if (br.is_zero()) {
        ++zero_other;
        continue;
      }
      ++nonzero;
      for (std::size_t bi = 0; bi < 2; ++bi)
        for (std::size_t bj = 0; bj < 2; ++bj) {
          const IntMatrix blk = br.block(bi * t, bj * t, t, t);
          if (!blk.is_zero() && mat_det(blk).is_zero()) invertible.fail(detail::pair_label(alg, i, j));
        }
    }
  invertible.detail = std::to_string(nonzero) + " invertible, " + std::to_string(zero_other) + " zero";
  r.items.push_back(std::move(grading));
  r.items.push_back(std::move(vanish));
  r.items.push_back(std::move(invertible));
  return r;
}

namespace detail {
inline void check_triple(const GradedSuperalgebra& alg, std::size_t i, std::size_t j, std::size_t k, ReportItem& anti,
                         ReportItem& jacobi) {
  const auto& x = alg.element(i);
  const auto& y = alg.element(j);
  const auto& z = alg.element(k);
  const int px = x.parity, py = y.parity, pz = z.parity;

  ++anti.checked;
  const IntMatrix xy = supercommutator(x.mat, y.mat, px, py);
  const IntMatrix yx = supercommutator(y.mat, x.mat, py, px);
  const IntMatrix sum = (px & py) ? mat_sub(xy, yx) : mat_add(xy, yx);
  if (!sum.is_zero()) anti.fail(pair_label(alg, i, j));

  // [x,[y,z]] = [[x,y],z] + (-1)^(|x||y|) [y,[x,z]]
  ++jacobi.checked;
  const IntMatrix lhs = supercommutator(x.mat, supercommutator(y.mat, z.mat, py, pz), px, py ^ pz);
  const IntMatrix t1 = supercommutator(xy, z.mat, px ^ py, pz);
  const IntMatrix t2 = supercommutator(y.mat, supercommutator(x.mat, z.mat, px, pz), py, px ^ pz);
  const IntMatrix rhs = (px & py) ? mat_sub(t1, t2) : mat_add(t1, t2);
  if (lhs != rhs) jacobi.fail(pair_label(alg, i, j) + "," + z.g.to_hex());
}
}  // namespace detail

/// Super-anticommutativity and the super Jacobi identity on every basis triple.
inline Report verify_super_axioms(const GradedSuperalgebra& alg) {
  Report r{"super_axioms q=" + std::to_string(alg.q()), {}};
  ReportItem anti{"super_anticommutativity"}, jacobi{"super_jacobi"};
  const std::size_t d = alg.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) detail::check_triple(alg, i, j, k, anti, jacobi);
  r.items.push_back(std::move(anti));
  r.items.push_back(std::move(jacobi));
  return r;
}

/// Same checks on `samples` basis triples drawn uniformly with a fixed seed.
inline Report verify_super_axioms_sampled(const GradedSuperalgebra& alg, std::size_t samples, std::uint64_t seed) {
  Report r{"super_axioms_sampled q=" + std::to_string(alg.q()), {}};
  ReportItem anti{"super_anticommutativity"}, jacobi{"super_jacobi"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, alg.dim() - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
    detail::check_triple(alg, i, j, k, anti, jacobi);
  }
  r.items.push_back(std::move(anti));
  r.items.push_back(std::move(jacobi));
  return r;
}

}  // namespace pauli_super
