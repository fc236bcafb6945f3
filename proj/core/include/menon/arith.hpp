#pragma once

// Factorization and the multiplicative-function layer: the generalized gcd
// (a,b)_s, Klee's function Phi_s, the s-th power divisor count tau_s and the
// classical phi / tau / sigma.

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace menon {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Largest argument accepted by factorize() and the multiplicative functions.
inline constexpr u64 kDeskBound = 10'000'000;

/// Largest argument accepted by klee_phi_bruteforce().
inline constexpr u64 kOracleBound = 100'000;

struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;

  u64 value() const;

  friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

/// Canonical decomposition value = prod p^e, primes strictly increasing,
/// every exponent >= 1; value 1 has no factors.
struct Factorization {
  u64 value = 1;
  std::vector<PrimePower> factors;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Throws DomainError for n = 0 and ResourceError for n > kDeskBound.
Factorization factorize(u64 n);

bool is_prime(u64 n);

/// base^exp, throwing ResourceError on 64-bit overflow.
u64 checked_pow(u64 base, unsigned exp);

/// The exact s-th root of n if n is a perfect s-th power.
std::optional<u64> exact_root(u64 n, unsigned s);

/// All positive divisors of n in increasing order.
std::vector<u64> divisors(u64 n);

/// Divisors of n that are s-th powers, increasing.
std::vector<u64> power_divisors(u64 n, unsigned s);

/// Largest s-th power dividing n (n >= 1).
u64 largest_power_divisor(u64 n, unsigned s);

/// (a,b)_s: the largest l^s dividing both a and b. gcd(0,b) = b, so
/// (0,b)_s is the largest s-th power dividing b. Requires b >= 1, s >= 1.
u64 gen_gcd(u64 a, u64 b, unsigned s);

/// Phi_s(n) = #{1 <= m <= n : (m,n)_s = 1}, via the prime-power closed form
/// Phi_s(p^a) = p^a - p^(a-s) for a >= s and p^a otherwise.
u64 klee_phi(u64 n, unsigned s);

/// Phi_s(n) by direct count; n <= kOracleBound.
u64 klee_phi_bruteforce(u64 n, unsigned s);

/// Number of s-th powers dividing n: prod (floor(a/s) + 1).
u64 tau_s(u64 n, unsigned s);

u64 euler_phi(u64 n);
u64 divisor_tau(u64 n);

/// sigma_k(n) = sum over d | n of d^k. ResourceError on overflow.
u64 sigma(u64 n, unsigned k);

}  // namespace menon
