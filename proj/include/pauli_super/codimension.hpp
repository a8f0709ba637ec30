#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pauli_super/errors.hpp"
#include "pauli_super/grading_group.hpp"
#include "pauli_super/int_matrix.hpp"
#include "pauli_super/super_p.hpp"

namespace pauli_super {

/// Multiplicity of each letter, in the algebra's basis order
/// (odd_symmetric, odd_skew, even).
struct MultiDegree {
  std::vector<unsigned> counts;

  MultiDegree() = default;
  explicit MultiDegree(std::vector<unsigned> c) : counts(std::move(c)) {}
  static MultiDegree zero(std::size_t d) { return MultiDegree(std::vector<unsigned>(d, 0)); }
  static MultiDegree unit(std::size_t d, std::size_t i) {
    MultiDegree v = zero(d);
    v.counts.at(i) = 1;
    return v;
  }

  std::size_t size() const noexcept { return counts.size(); }
  unsigned total() const noexcept { return std::accumulate(counts.begin(), counts.end(), 0u); }
  unsigned operator[](std::size_t i) const { return counts[i]; }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < counts.size(); ++i) s += (i ? "," : "") + std::to_string(counts[i]);
    return s + ")";
  }

  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
  friend auto operator<=>(const MultiDegree&, const MultiDegree&) = default;
};

/// Up to 32 byte-sized counts packed into four words; the memo key.
struct PackedKey {
  std::array<std::uint64_t, 4> w{};

  static constexpr std::size_t kMaxLetters = 32;
  static constexpr unsigned kMaxCount = 255;

  template <class Counts>
  static PackedKey pack(const Counts& c, std::size_t d) {
    PackedKey k;
    for (std::size_t i = 0; i < d; ++i) k.w[i / 8] |= static_cast<std::uint64_t>(c[i]) << (8 * (i % 8));
    return k;
  }
  unsigned get(std::size_t i) const { return static_cast<unsigned>((w[i / 8] >> (8 * (i % 8))) & 0xff); }

  friend bool operator==(const PackedKey&, const PackedKey&) = default;
};

struct PackedKeyHash {
  std::size_t operator()(const PackedKey& k) const noexcept {
    std::uint64_t h = 0x243f6a8885a308d3ull;
    for (std::uint64_t x : k.w) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

namespace detail {
inline void require_letters(const MultiDegree& v, const GradedSuperalgebra& alg, const char* op) {
  if (v.size() != alg.dim()) throw DimensionError(std::string(op) + ": multidegree length differs from dim L");
}
}  // namespace detail

/// Product of the letter degrees; only letters with odd multiplicity matter.
inline GradingGroupElement degree_of(const MultiDegree& v, const GradedSuperalgebra& alg) {
  detail::require_letters(v, alg, "degree_of");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] & 1u) bits ^= alg.element(i).g.bits();
  return {alg.q(), bits};
}

/// Z-degree: #(odd_symmetric letters) - #(odd_skew letters).
inline long z_degree_of(const MultiDegree& v, const GradedSuperalgebra& alg) {
  detail::require_letters(v, alg, "z_degree_of");
  long z = 0;
  for (std::size_t i = 0; i < alg.count_symmetric() + alg.count_skew(); ++i)
    z += i < alg.count_symmetric() ? static_cast<long>(v[i]) : -static_cast<long>(v[i]);
  return z;
}

/// n! / (n_1! ... n_d!), exact.
inline BigInt multinomial(const MultiDegree& v) {
  BigInt r = 1;
  unsigned running = 0;
  // Product of binomials C(n_1 + ... + n_k, n_k); each partial product is integral.
  for (unsigned c : v.counts) {
    for (unsigned j = 1; j <= c; ++j) {
      ++running;
      r *= running;
      r /= j;
    }
  }
  return r;
}

/// Full binary bracketing of letters; leaves carry 0-based letter indices.
struct BracketTree {
  struct Node {
    int letter = -1;  // >= 0 for leaves
    int left = -1;
    int right = -1;
  };
  std::vector<Node> nodes;
  int root = -1;

  bool is_leaf(int n) const { return nodes[n].letter >= 0; }

  /// e.g. "[[x1,x4],x7]" with 1-based letter numbers.
  std::string to_string() const { return root < 0 ? std::string() : render(root); }

  MultiDegree multidegree(std::size_t d) const {
    MultiDegree v = MultiDegree::zero(d);
    for (const auto& n : nodes)
      if (n.letter >= 0) ++v.counts.at(static_cast<std::size_t>(n.letter));
    return v;
  }

 private:
  std::string render(int n) const {
    const Node& x = nodes[n];
    if (x.letter >= 0) return "x" + std::to_string(x.letter + 1);
    return "[" + render(x.left) + "," + render(x.right) + "]";
  }
};

/// Exact matrix value of a bracketing; letters are the basis elements of alg.
inline IntMatrix evaluate_tree(const BracketTree& tree, const GradedSuperalgebra& alg) {
  struct Value {
    IntMatrix m;
    int parity;
  };
  auto eval = [&](auto&& self, int n) -> Value {
    const auto& node = tree.nodes.at(n);
    if (node.letter >= 0) {
      const auto& e = alg.element(static_cast<std::size_t>(node.letter));
      return {e.mat, e.parity};
    }
    Value l = self(self, node.left);
    Value r = self(self, node.right);
    return {supercommutator(l.m, r.m, l.parity, r.parity), l.parity ^ r.parity};
  };
  if (tree.root < 0) throw std::invalid_argument("evaluate_tree: empty tree");
  return eval(eval, tree.root).m;
}

/// Memoized 0/1 partial codimensions, computed one total degree at a time.
///
/// feasible(v) holds iff some bracket monomial of multidegree v is nonzero on
/// the basis. Since every component of L is one-dimensional, a monomial
/// [m', m''] is nonzero iff both halves are nonzero and
/// lambda(deg m', deg m'') != 0, so only the structure table is consulted.
///
/// Level k is filled from levels < k only. Within a level the candidates are
/// split across threads, each writing its own slot; a level becomes visible
/// after all workers join. Results do not depend on the thread count.
class FeasibilityTable {
 public:
  struct Entry {
    int degree_index;   // basis position of degree_of(v)
    PackedKey left;     // witness split v = left + (v - left); zero key for letters
  };

  /// Hard caps on the total degree; the state space grows like C(n+d-1, d-1).
  static constexpr unsigned kMaxTotalSmall = 40;  // d = 7
  static constexpr unsigned kMaxTotalLarge = 6;   // d = 31

  FeasibilityTable(const GradedSuperalgebra& alg, const StructureTable& table)
      : d_(alg.dim()), a_(alg.count_symmetric()), b_(alg.count_skew()), q_(alg.q()), table_(table) {
    if (d_ > PackedKey::kMaxLetters)
      throw ResourceError("FeasibilityTable: dim L = " + std::to_string(d_) + " exceeds the 32-letter memo key");
    if (table.dim() != d_) throw DimensionError("FeasibilityTable: structure table does not match algebra");
    for (const auto& e : alg.basis()) letter_bits_.push_back(e.g.bits());
    index_.assign(std::size_t{1} << (2 * alg.q() + 1), -1);
    for (std::size_t i = 0; i < d_; ++i) index_[letter_bits_[i]] = static_cast<int>(i);
    levels_.emplace_back();  // level 0 is empty: no nonzero monomial of degree 0
    feasible_lists_.emplace_back();
  }

  std::size_t letters() const noexcept { return d_; }
  unsigned computed_level() const noexcept { return static_cast<unsigned>(levels_.size() - 1); }
  unsigned max_total() const noexcept { return d_ <= 7 ? kMaxTotalSmall : kMaxTotalLarge; }

  /// Computes every level up to n.
  void extend_to(unsigned n, unsigned threads = 1) {
    if (n > max_total())
      throw ResourceError("FeasibilityTable: total degree " + std::to_string(n) + " exceeds cap " +
                          std::to_string(max_total()) + " for d = " + std::to_string(d_));
    while (computed_level() < n) compute_level(computed_level() + 1, std::max(1u, threads));
  }

  bool feasible(const MultiDegree& v) {
    check(v);
    const unsigned n = v.total();
    if (n == 0) return false;
    extend_to(n);
    return levels_[n].count(PackedKey::pack(v.counts, d_)) != 0;
  }

  /// Feasible multidegrees of total n, in lexicographic order.
  const std::vector<MultiDegree>& feasible_at(unsigned n) {
    extend_to(n);
    return feasible_lists_[n];
  }

  /// Recorded split (v', v - v') with lambda(deg v', deg(v - v')) != 0.
  std::optional<std::pair<MultiDegree, MultiDegree>> split(const MultiDegree& v) {
    if (!feasible(v) || v.total() < 2) return std::nullopt;
    const Entry& e = levels_[v.total()].at(PackedKey::pack(v.counts, d_));
    MultiDegree l = MultiDegree::zero(d_), r = MultiDegree::zero(d_);
    for (std::size_t i = 0; i < d_; ++i) {
      l.counts[i] = e.left.get(i);
      r.counts[i] = v[i] - l.counts[i];
    }
    return std::make_pair(std::move(l), std::move(r));
  }

  /// Basis position of degree_of(v) for feasible v.
  std::optional<std::size_t> degree_index(const MultiDegree& v) {
    if (!feasible(v)) return std::nullopt;
    return static_cast<std::size_t>(levels_[v.total()].at(PackedKey::pack(v.counts, d_)).degree_index);
  }

 private:
  using Level = std::unordered_map<PackedKey, Entry, PackedKeyHash>;

  void check(const MultiDegree& v) const {
    if (v.size() != d_) throw DimensionError("FeasibilityTable: multidegree length differs from dim L");
    for (unsigned c : v.counts)
      if (c > PackedKey::kMaxCount) throw ResourceError("FeasibilityTable: count exceeds 255");
  }

  long z_of(const unsigned* c) const {
    long z = 0;
    for (std::size_t i = 0; i < a_; ++i) z += c[i];
    for (std::size_t i = a_; i < a_ + b_; ++i) z -= c[i];
    return z;
  }
  std::uint64_t bits_of(const unsigned* c) const {
    std::uint64_t g = 0;
    for (std::size_t i = 0; i < d_; ++i)
      if (c[i] & 1u) g ^= letter_bits_[i];
    return g;
  }

  /// Pruning: a nonzero value lies in a single L_g with Z-degree in {-1, 0, 1}.
  bool admissible(const unsigned* c) const {
    const long z = z_of(c);
    return z >= -1 && z <= 1 && index_[bits_of(c)] >= 0;
  }

  /// All compositions of n into d parts, lexicographically increasing.
  std::vector<MultiDegree> compositions(unsigned n) const {
    std::vector<MultiDegree> out;
    std::vector<unsigned> c(d_, 0);
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
      if (i + 1 == d_) {
        c[i] = left;
        if (admissible(c.data())) out.emplace_back(c);
        return;
      }
      for (unsigned x = 0; x <= left; ++x) {
        c[i] = x;
        self(self, i + 1, left - x);
      }
    };
    rec(rec, 0, n);
    return out;
  }

  std::optional<Entry> evaluate(const MultiDegree& v, unsigned n) const {
    const int self_index = index_[bits_of(v.counts.data())];
    if (n == 1) return Entry{self_index, PackedKey{}};

    // Mixed-radix walk over 0 <= v' <= v; keep the canonical half v' <=lex v - v'.
    std::vector<unsigned> lo(d_, 0), hi(d_);
    for (;;) {
      std::size_t i = 0;
      while (i < d_ && lo[i] == v[i]) lo[i++] = 0;
      if (i == d_) break;
      ++lo[i];

      unsigned lt = 0;
      for (std::size_t k = 0; k < d_; ++k) {
        hi[k] = v[k] - lo[k];
        lt += lo[k];
      }
      if (lt == n) continue;
      if (std::lexicographical_compare(hi.begin(), hi.end(), lo.begin(), lo.end())) continue;
      if (!admissible(lo.data()) || !admissible(hi.data())) continue;

      const Level& ll = levels_[lt];
      const Level& hl = levels_[n - lt];
      const auto li = ll.find(PackedKey::pack(lo, d_));
      if (li == ll.end()) continue;
      const auto hi_it = hl.find(PackedKey::pack(hi, d_));
      if (hi_it == hl.end()) continue;
      const auto gl = static_cast<std::size_t>(li->second.degree_index);
      const auto gh = static_cast<std::size_t>(hi_it->second.degree_index);
      if (table_.nonzero(gl, gh)) return Entry{self_index, li->first};
      if (table_.nonzero(gh, gl)) return Entry{self_index, hi_it->first};
    }
    return std::nullopt;
  }

  void compute_level(unsigned n, unsigned threads) {
    const std::vector<MultiDegree> cand = compositions(n);
    std::vector<std::optional<Entry>> result(cand.size());
    auto work = [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) result[i] = evaluate(cand[i], n);
    };
    const std::size_t nthreads = std::min<std::size_t>(threads, std::max<std::size_t>(1, cand.size() / 64));
    if (nthreads <= 1) {
      work(0, cand.size());
    } else {
      std::vector<std::jthread> pool;
      const std::size_t chunk = (cand.size() + nthreads - 1) / nthreads;
      for (std::size_t t = 0; t < nthreads; ++t) {
        const std::size_t b = t * chunk, e = std::min(cand.size(), b + chunk);
        if (b < e) pool.emplace_back(work, b, e);
      }
    }

    Level level;
    std::vector<MultiDegree> list;
    for (std::size_t i = 0; i < cand.size(); ++i)
      if (result[i]) {
        level.emplace(PackedKey::pack(cand[i].counts, d_), *result[i]);
        list.push_back(cand[i]);
      }
    levels_.push_back(std::move(level));
    feasible_lists_.push_back(std::move(list));
  }

  std::size_t d_, a_, b_;
  unsigned q_;
  StructureTable table_;
  std::vector<std::uint64_t> letter_bits_;
  std::vector<int> index_;
  std::vector<Level> levels_;
  std::vector<std::vector<MultiDegree>> feasible_lists_;
};

/// One row of the c_n^G table.
struct CodimensionRow {
  unsigned n = 0;
  BigInt codimension;
  std::size_t feasible_count = 0;
};

/// c_n^G = sum of multinomial(v) over feasible v of total n.
inline CodimensionRow graded_codimension(unsigned n, FeasibilityTable& table, unsigned threads = 1) {
  if (n < 1) throw std::invalid_argument("graded_codimension: n must be >= 1");
  table.extend_to(n, threads);
  CodimensionRow row{n, 0, 0};
  for (const MultiDegree& v : table.feasible_at(n)) {
    row.codimension += multinomial(v);
    ++row.feasible_count;
  }
  return row;
}

inline BigInt graded_codimension(unsigned n, const GradedSuperalgebra& alg) {
  FeasibilityTable table(alg, build_structure_table(alg));
  return graded_codimension(n, table).codimension;
}

/// Explicit nonzero bracket monomial of multidegree v, rebuilt from the
/// recorded splits. Absent when v is infeasible.
inline std::optional<BracketTree> witness_monomial(const MultiDegree& v, FeasibilityTable& table) {
  if (v.total() == 0 || !table.feasible(v)) return std::nullopt;
  BracketTree tree;
  auto build = [&](auto&& self, const MultiDegree& u) -> int {
    if (u.total() == 1) {
      const auto it = std::find(u.counts.begin(), u.counts.end(), 1u);
      tree.nodes.push_back({static_cast<int>(it - u.counts.begin()), -1, -1});
      return static_cast<int>(tree.nodes.size() - 1);
    }
    const auto parts = table.split(u);
    if (!parts) throw ConsistencyError("witness_monomial: feasible multidegree without a split");
    const int l = self(self, parts->first);
    const int r = self(self, parts->second);
    tree.nodes.push_back({-1, l, r});
    return static_cast<int>(tree.nodes.size() - 1);
  };
  tree.root = build(build, v);
  return tree;
}

/// Largest total accepted by the brute-force oracle.
inline constexpr unsigned kBruteForceMaxTotal = 7;

/// Distinct nonzero values of all bracketings of the letter multiset v,
/// computed from exact matrices and the supercommutator only.
///
/// Every bracketing over every ordering of v is [A, B] with A a bracketing of
/// a sub-multiset u and B one of v - u, so the value sets are built bottom-up
/// over sub-multisets and deduplicated. Zero values are dropped since they
/// only produce zeros further up.
inline std::vector<IntMatrix> brute_force_values(const MultiDegree& v, const GradedSuperalgebra& alg) {
  detail::require_letters(v, alg, "brute_force_values");
  const unsigned n = v.total();
  if (n > kBruteForceMaxTotal)
    throw ResourceError("brute_force_values: total " + std::to_string(n) + " exceeds " + std::to_string(kBruteForceMaxTotal));
  if (n == 0) return {};
  const std::size_t d = v.size();

  // Index every sub-multiset 0 <= u <= v in mixed radix (n_i + 1).
  std::vector<std::size_t> radix(d, 1);
  std::size_t count = 1;
  for (std::size_t i = 0; i < d; ++i) {
    radix[i] = count;
    count *= v[i] + 1;
  }
  auto decode = [&](std::size_t code) {
    std::vector<unsigned> u(d);
    for (std::size_t i = 0; i < d; ++i) u[i] = static_cast<unsigned>((code / radix[i]) % (v[i] + 1));
    return u;
  };
  struct Cell {
    std::vector<IntMatrix> values;
    int parity = 0;
  };
  std::vector<Cell> cells(count);
  std::vector<std::vector<std::size_t>> by_total(n + 1);
  for (std::size_t code = 0; code < count; ++code) {
    const auto u = decode(code);
    const unsigned tot = std::accumulate(u.begin(), u.end(), 0u);
    int parity = 0;
    for (std::size_t i = 0; i < d; ++i) parity ^= static_cast<int>(u[i] & 1u) & alg.element(i).parity;
    cells[code].parity = parity;
    by_total[tot].push_back(code);
    if (tot == 1)
      for (std::size_t i = 0; i < d; ++i)
        if (u[i] == 1) cells[code].values.push_back(alg.element(i).mat);
  }

  for (unsigned tot = 2; tot <= n; ++tot)
    for (std::size_t code : by_total[tot]) {
      const auto u = decode(code);
      auto& out = cells[code].values;
      for (std::size_t left = 1; left < count; ++left) {
        const auto w = decode(left);
        bool sub = true;
        unsigned lt = 0;
        for (std::size_t i = 0; i < d; ++i) {
          sub = sub && w[i] <= u[i];
          lt += w[i];
        }
        if (!sub || lt == 0 || lt == tot) continue;
        const std::size_t right = code - left;  // mixed radix subtraction is digitwise here
        for (const IntMatrix& x : cells[left].values)
          for (const IntMatrix& y : cells[right].values) {
            IntMatrix br = supercommutator(x, y, cells[left].parity, cells[right].parity);
            if (br.is_zero()) continue;
            if (std::find(out.begin(), out.end(), br) == out.end()) out.push_back(std::move(br));
          }
      }
    }
  return cells[count - 1].values;
}

/// True iff some bracketing of v evaluates to a nonzero matrix.
inline bool brute_force_feasible(const MultiDegree& v, const GradedSuperalgebra& alg) {
  return !brute_force_values(v, alg).empty();
}

}  // namespace pauli_super
