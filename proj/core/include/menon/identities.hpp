#pragma once

// Evaluators for the gcd-weighted character sums: Menon, Sury, Zhao-Cao,
// the generalized-gcd sum, the shifted prime-power sums, and the Cohen
// partition of the s-reduced residues.

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "menon/arith.hpp"
#include "menon/characters.hpp"

namespace menon {

/// Largest modulus for the per-character sums.
inline constexpr u64 kSumBound = 100'000;
/// Largest tuple count n^s for sury_sum.
inline constexpr u64 kTupleBound = 10'000'000;
/// Largest n for cohen_partition_check.
inline constexpr u64 kPartitionBound = 10'000;
/// Largest term count accepted by round_exact.
inline constexpr u64 kTermBound = 1'000'000;

/// A complex sum together with its nearest integer.
struct SumResult {
  std::complex<double> value;
  i64 rounded = 0;
  /// |value - rounded|, so it includes any imaginary part.
  double residual = 0.0;
};

/// Rounds a complex sum to the nearest integer. Throws IntegrityError when
/// the residual reaches 0.5.
SumResult round_to_integer(std::complex<double> value);

/// Sums unit-magnitude character values in double precision and rounds.
SumResult round_exact(std::span<const CharValue> terms);

/// exp(2 pi i e / denominator) for every e, computed once in long double.
class RootTable {
 public:
  explicit RootTable(u64 denominator);

  u64 denominator() const { return re_.size(); }
  long double real(u64 e) const { return re_[e]; }
  long double imag(u64 e) const { return im_[e]; }

 private:
  std::vector<long double> re_;
  std::vector<long double> im_;
};

/// Accumulates integer-weighted powers of exp(2 pi i / denominator). Weights
/// are summed exactly per exponent; only the final combination is floating.
class RootSum {
 public:
  explicit RootSum(std::shared_ptr<const RootTable> roots);
  /// Uses a process-wide table shared by every sum with this denominator.
  explicit RootSum(u64 denominator);

  void add(i64 weight, u64 exponent) { buckets_[exponent % buckets_.size()] += weight; }
  /// Same as add, for an exponent already below the denominator.
  void add_reduced(i64 weight, u64 exponent) { buckets_[exponent] += weight; }
  /// Adds weight * v; v must be zero or have a denominator dividing ours.
  void add(i64 weight, const CharValue& v);

  SumResult result() const;

 private:
  std::shared_ptr<const RootTable> roots_;
  std::vector<i64> buckets_;
};

/// sum over gcd(m,n) = 1 of gcd(m-1, n).
i64 menon_sum(u64 n);

/// sum over (m_1..m_s) in [1,n]^s with gcd(m_1,n) = 1 of
/// gcd(m_1 - 1, m_2, ..., m_s, n). Requires n^s <= kTupleBound.
i64 sury_sum(u64 n, unsigned s_vars);

/// sum over k in [1,n] of gcd(k-1, n) chi(k).
SumResult zhao_cao_sum(u64 n, const DirichletCharacter& chi);

/// sum over k in [1,n] with (k,n)_s = 1 of (k-1,n)_s chi(k). Terms with
/// gcd(k,n) > 1 vanish through chi(k) = 0.
SumResult generalized_sum(u64 n, unsigned s, const DirichletCharacter& chi);

/// Precomputed per-modulus data for evaluating the sums over many
/// characters of one modulus. The units are stored in discrete-log order, so
/// a character's exponent advances by one modular addition per term. Weight
/// tables are cached on first use; one instance must not be shared between
/// threads.
class SumContext {
 public:
  explicit SumContext(u64 n);

  u64 modulus() const { return group_.modulus(); }
  const DirichletGroup& group() const { return group_; }

  SumResult zhao_cao_sum(const DirichletCharacter& chi) const;
  SumResult generalized_sum(unsigned s, const DirichletCharacter& chi) const;

 private:
  // (k-1, n)_s for the unit k at each log rank.
  const std::vector<i64>& weights(unsigned s) const;

  DirichletGroup group_;
  std::shared_ptr<const RootTable> roots_;
  std::vector<u64> units_;  // units_[log rank] = k in [1, n]
  mutable std::vector<std::vector<i64>> weights_;  // by s
};

/// sum over k in [1, p^(e-m)] with (k, p^(e-m))_s = 1 of chi(k p^m + 1),
/// for chi mod p^e. Requires s | e, s | m, s <= m < e.
SumResult char_shift_sum(u64 p, unsigned n_exp, unsigned s, unsigned m,
                         const DirichletCharacter& chi);

struct CohenPartition {
  bool holds = false;
  /// Phi_s(n) / Phi_s(d).
  u64 expected_classes = 0;
  /// Number of disjoint complete s-reduced systems mod d assembled from A.
  u64 classes = 0;
  /// Size of each class, Phi_s(d) when the partition holds.
  u64 class_size = 0;
};

/// Splits A = {m <= n : (m,n)_s = 1} by residue mod d and checks that it is
/// a disjoint union of Phi_s(n)/Phi_s(d) s-reduced residue systems mod d.
/// d must be an s-th power dividing n; n <= kPartitionBound.
CohenPartition cohen_partition_check(u64 n, unsigned s, u64 d);

}  // namespace menon
