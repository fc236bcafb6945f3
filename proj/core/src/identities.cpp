#include "menon/identities.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

#include "menon/errors.hpp"

namespace menon {
namespace {

void require_sum_modulus(u64 n, const DirichletCharacter& chi, const char* what) {
  if (n == 0) throw DomainError(std::string(what) + ": n must be positive");
  if (chi.modulus() != n)
    throw DomainError(std::string(what) + ": character modulus " + std::to_string(chi.modulus()) +
                      " does not match n = " + std::to_string(n));
  if (n > kSumBound) throw ResourceError(std::string(what) + ": n exceeds " + std::to_string(kSumBound));
}

DirichletGroup bounded_group(u64 n) {
  if (n > kSumBound) throw ResourceError("SumContext: n exceeds " + std::to_string(kSumBound));
  return DirichletGroup(n);
}

// Largest s-th power dividing g, for g | n with n's factorization known.
u64 power_part_of_divisor(u64 g, const Factorization& n, unsigned s) {
  u64 r = 1;
  for (const auto& [p, a] : n.factors) {
    unsigned v = 0;
    while (v < a && g % p == 0) {
      g /= p;
      ++v;
    }
    for (unsigned i = 0; i < (v / s) * s; ++i) r *= p;
  }
  return r;
}

// RootTables are immutable, so one per denominator is shared process-wide.
std::shared_ptr<const RootTable> shared_root_table(u64 denominator) {
  static std::mutex mutex;
  static std::map<u64, std::shared_ptr<const RootTable>> cache;
  const std::lock_guard lock(mutex);
  auto& slot = cache[denominator];
  if (!slot) slot = std::make_shared<const RootTable>(denominator);
  return slot;
}

}  // namespace

SumResult round_to_integer(std::complex<double> value) {
  SumResult out;
  out.value = value;
  out.rounded = static_cast<i64>(std::llround(value.real()));
  out.residual = std::abs(value - std::complex<double>(static_cast<double>(out.rounded), 0.0));
  if (!(out.residual < 0.5))
    throw IntegrityError("sum " + std::to_string(value.real()) + "+" + std::to_string(value.imag()) +
                         "i is not within 0.5 of an integer");
  return out;
}

SumResult round_exact(std::span<const CharValue> terms) {
  if (terms.size() > kTermBound) throw ResourceError("round_exact: too many terms");
  std::complex<double> acc{};
  for (const auto& t : terms) acc += t.to_complex();
  return round_to_integer(acc);
}

RootTable::RootTable(u64 denominator) : re_(denominator), im_(denominator) {
  if (denominator == 0) throw DomainError("RootTable: zero denominator");
  for (u64 e = 0; e < denominator; ++e) {
    const CharValue z = CharValue::root(e, denominator);
    if (z.den() <= 4) {
      // Exact on the axes.
      const auto c = z.to_complex();
      re_[e] = c.real();
      im_[e] = c.imag();
      continue;
    }
    const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(e) /
                              static_cast<long double>(denominator);
    re_[e] = std::cos(angle);
    im_[e] = std::sin(angle);
  }
}

RootSum::RootSum(std::shared_ptr<const RootTable> roots)
    : roots_(std::move(roots)), buckets_(roots_->denominator(), 0) {}

RootSum::RootSum(u64 denominator) : RootSum(shared_root_table(denominator)) {}

void RootSum::add(i64 weight, const CharValue& v) {
  if (v.is_zero()) return;
  if (buckets_.size() % v.den() != 0)
    throw DomainError("RootSum: value denominator " + std::to_string(v.den()) +
                      " does not divide " + std::to_string(buckets_.size()));
  add(weight, v.num() * (buckets_.size() / v.den()));
}

SumResult RootSum::result() const {
  long double re = 0.0L, im = 0.0L;
  for (u64 e = 0; e < buckets_.size(); ++e) {
    const i64 w = buckets_[e];
    if (w == 0) continue;
    re += static_cast<long double>(w) * roots_->real(e);
    im += static_cast<long double>(w) * roots_->imag(e);
  }
  return round_to_integer({static_cast<double>(re), static_cast<double>(im)});
}

i64 menon_sum(u64 n) {
  if (n == 0) throw DomainError("menon_sum: n must be positive");
  if (n > kSumBound) throw ResourceError("menon_sum: n exceeds " + std::to_string(kSumBound));
  i64 total = 0;
  for (u64 m = 1; m <= n; ++m)
    if (std::gcd(m, n) == 1) total += static_cast<i64>(std::gcd(m - 1, n));
  return total;
}

i64 sury_sum(u64 n, unsigned s_vars) {
  if (n == 0) throw DomainError("sury_sum: n must be positive");
  if (s_vars == 0) throw DomainError("sury_sum: s must be positive");
  u64 tuples = 1;
  for (unsigned i = 0; i < s_vars; ++i) {
    if (__builtin_mul_overflow(tuples, n, &tuples) || tuples > kTupleBound)
      throw ResourceError("sury_sum: n^s exceeds " + std::to_string(kTupleBound));
  }
  // tail(g, r) = sum over (m_1..m_r) in [1,n]^r of gcd(g, m_1, ..., m_r).
  // Every g seen divides n, so memoizing by (g, r) collapses the tuple loop.
  std::map<std::pair<u64, unsigned>, i64> memo;
  auto tail = [&](auto&& self, u64 g, unsigned r) -> i64 {
    if (r == 0 || g == 1) {
      i64 count = 1;
      for (unsigned i = 0; i < r; ++i) count *= static_cast<i64>(n);
      return static_cast<i64>(g) * count;
    }
    if (auto it = memo.find({g, r}); it != memo.end()) return it->second;
    i64 total = 0;
    for (u64 m = 1; m <= n; ++m) total += self(self, std::gcd(g, m), r - 1);
    memo.emplace(std::pair{g, r}, total);
    return total;
  };
  i64 total = 0;
  for (u64 m1 = 1; m1 <= n; ++m1)
    if (std::gcd(m1, n) == 1) total += tail(tail, std::gcd(m1 - 1, n), s_vars - 1);
  return total;
}

SumContext::SumContext(u64 n)
    : group_(bounded_group(n)),
      roots_(shared_root_table(group_.lambda())),
      units_(group_.size(), 0) {
  for (u64 k = 1; k <= n; ++k)
    if (const auto r = group_.log_rank(k % n)) units_[*r] = k;
}

const std::vector<i64>& SumContext::weights(unsigned s) const {
  if (s == 0) throw DomainError("generalized_sum: s must be positive");
  if (weights_.size() <= s) weights_.resize(s + 1);
  auto& w = weights_[s];
  if (w.empty()) {
    const u64 n = modulus();
    w.reserve(units_.size());
    for (u64 k : units_)
      w.push_back(static_cast<i64>(power_part_of_divisor(std::gcd(k - 1, n), group_.factorization(), s)));
  }
  return w;
}

SumResult SumContext::generalized_sum(unsigned s, const DirichletCharacter& chi) const {
  require_sum_modulus(modulus(), chi, "generalized_sum");
  // Only units carry chi(k) != 0, and a unit k has (k,n)_s = 1, so walking
  // the units covers exactly the nonzero terms of the sum.
  const auto& w = weights(s);
  const auto radices = group_.radices();
  const u64 lambda = group_.lambda();
  const std::size_t width = radices.size();

  // chi(unit with log digits d) = exp(2 pi i sum_j step_j d_j / lambda).
  std::vector<u64> step;
  step.reserve(width);
  std::size_t j = 0;
  for (const auto& c : chi.components())
    for (auto idx : c.indices) {
      step.push_back(u64{idx} * (lambda / radices[j]) % lambda);
      ++j;
    }

  RootSum acc(roots_);
  if (width == 0) {
    acc.add(w[0], u64{0});
    return acc.result();
  }
  // Odometer over the outer digits; the last digit runs in the inner loop.
  // A full cycle of digit j adds step_j * radix_j = idx * lambda = 0, so
  // the base exponent needs no correction when a digit wraps.
  const u64 inner = radices[width - 1];
  const u64 inner_step = step[width - 1];
  std::vector<u64> digits(width - 1, 0);
  u64 base = 0;
  std::size_t i = 0;
  for (;;) {
    u64 e = base;
    for (u64 t = 0; t < inner; ++t) {
      acc.add_reduced(w[i++], e);
      e += inner_step;
      if (e >= lambda) e -= lambda;
    }
    std::size_t d = width - 1;
    for (; d > 0; --d) {
      base += step[d - 1];
      if (base >= lambda) base -= lambda;
      if (++digits[d - 1] < radices[d - 1]) break;
      digits[d - 1] = 0;
    }
    if (d == 0) break;
  }
  return acc.result();
}

SumResult SumContext::zhao_cao_sum(const DirichletCharacter& chi) const {
  require_sum_modulus(modulus(), chi, "zhao_cao_sum");
  return generalized_sum(1, chi);
}

SumResult zhao_cao_sum(u64 n, const DirichletCharacter& chi) {
  require_sum_modulus(n, chi, "zhao_cao_sum");
  return SumContext(n).zhao_cao_sum(chi);
}

SumResult generalized_sum(u64 n, unsigned s, const DirichletCharacter& chi) {
  require_sum_modulus(n, chi, "generalized_sum");
  return SumContext(n).generalized_sum(s, chi);
}

SumResult char_shift_sum(u64 p, unsigned n_exp, unsigned s, unsigned m, const DirichletCharacter& chi) {
  if (!is_prime(p)) throw DomainError("char_shift_sum: p is not prime");
  if (s == 0 || n_exp % s != 0 || m % s != 0 || m < s || m >= n_exp)
    throw DomainError("char_shift_sum: need s | n_exp, s | m and s <= m < n_exp");
  const u64 modulus = checked_pow(p, n_exp);
  if (modulus > kUnitGroupBound) throw ResourceError("char_shift_sum: p^n_exp exceeds 2^20");
  if (chi.modulus() != modulus) throw DomainError("char_shift_sum: character modulus is not p^n_exp");

  const u64 pm = checked_pow(p, m);
  const u64 range = checked_pow(p, n_exp - m);
  const u64 ps = checked_pow(p, s);
  const u64 lambda = chi.components().front().group->lambda();
  RootSum acc(lambda);
  for (u64 k = 1; k <= range; ++k) {
    // range is a power of p at least p^s, so (k, range)_s = 1 iff p^s does not divide k.
    if (k % ps == 0) continue;
    acc.add(1, eval_character(chi, static_cast<i64>(k * pm + 1)));
  }
  return acc.result();
}

CohenPartition cohen_partition_check(u64 n, unsigned s, u64 d) {
  if (n == 0 || s == 0 || d == 0) throw DomainError("cohen_partition_check: arguments must be positive");
  if (n > kPartitionBound)
    throw ResourceError("cohen_partition_check: n exceeds " + std::to_string(kPartitionBound));
  if (n % d != 0 || !exact_root(d, s))
    throw DomainError("cohen_partition_check: " + std::to_string(d) + " is not an s-th power divisor of " +
                      std::to_string(n));

  const u64 phi_n = klee_phi(n, s);
  const u64 phi_d = klee_phi(d, s);
  CohenPartition out;
  out.expected_classes = phi_n / phi_d;

  // Group A by residue mod d; members of each bucket are increasing.
  std::vector<std::vector<u64>> buckets(d);
  for (u64 m = 1; m <= n; ++m)
    if (gen_gcd(m, n, s) == 1) buckets[m % d].push_back(m);

  std::vector<u64> reduced;  // the minimal s-reduced system mod d
  for (u64 r = 0; r < d; ++r)
    if (gen_gcd(r, d, s) == 1) reduced.push_back(r);

  bool holds = phi_n % phi_d == 0 && reduced.size() == phi_d;
  for (u64 r = 0; r < d && holds; ++r) {
    const bool is_reduced = gen_gcd(r, d, s) == 1;
    if (is_reduced ? buckets[r].size() != out.expected_classes : !buckets[r].empty()) holds = false;
  }
  if (!holds) return out;

  // Class i takes the i-th member of every residue's bucket: a complete
  // s-reduced system mod d, disjoint from every other class.
  out.classes = out.expected_classes;
  out.class_size = reduced.size();
  out.holds = true;
  return out;
}

}  // namespace menon
