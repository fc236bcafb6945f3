#include "menon/arith.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "menon/errors.hpp"

namespace menon {
namespace {

// Offsets between consecutive integers coprime to 30, starting at 7.
constexpr std::array<u64, 8> kWheel30 = {4, 2, 4, 2, 4, 6, 2, 6};

void push_factor(std::vector<PrimePower>& out, u64 p, u64& n) {
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (e > 0) out.push_back({p, e});
}

// Trial division without the desk bound; callers guarantee n >= 1.
std::vector<PrimePower> trial_divide(u64 n) {
  std::vector<PrimePower> out;
  for (u64 p : {2u, 3u, 5u}) push_factor(out, p, n);
  u64 p = 7;
  std::size_t w = 0;
  while (p <= n / p) {
    push_factor(out, p, n);
    p += kWheel30[w];
    w = (w + 1) % kWheel30.size();
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

void require_positive(u64 n, const char* what) {
  if (n == 0) throw DomainError(std::string(what) + ": argument must be positive");
}

void require_desk(u64 n, const char* what) {
  require_positive(n, what);
  if (n > kDeskBound)
    throw ResourceError(std::string(what) + ": " + std::to_string(n) +
                        " exceeds desk bound " + std::to_string(kDeskBound));
}

void require_s(unsigned s, const char* what) {
  if (s == 0) throw DomainError(std::string(what) + ": s must be positive");
}

u64 mul_checked(u64 a, u64 b) {
  u64 r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("64-bit overflow");
  return r;
}

u64 add_checked(u64 a, u64 b) {
  u64 r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceError("64-bit overflow");
  return r;
}

}  // namespace

u64 PrimePower::value() const { return checked_pow(prime, exponent); }

Factorization factorize(u64 n) {
  require_desk(n, "factorize");
  return {n, trial_divide(n)};
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2u, 3u, 5u})
    if (n % p == 0) return n == p;
  u64 p = 7;
  std::size_t w = 0;
  while (p <= n / p) {
    if (n % p == 0) return false;
    p += kWheel30[w];
    w = (w + 1) % kWheel30.size();
  }
  return true;
}

u64 checked_pow(u64 base, unsigned exp) {
  u64 r = 1;
  for (unsigned i = 0; i < exp; ++i) r = mul_checked(r, base);
  return r;
}

std::optional<u64> exact_root(u64 n, unsigned s) {
  require_s(s, "exact_root");
  if (n <= 1 || s == 1) return n;
  u64 lo = 1, hi = 1;
  // Grow hi until hi^s >= n.
  for (;;) {
    u64 p = 1;
    bool over = false;
    for (unsigned i = 0; i < s && !over; ++i) over = __builtin_mul_overflow(p, hi, &p);
    if (over || p >= n) break;
    lo = hi;
    hi *= 2;
  }
  while (lo <= hi) {
    u64 mid = lo + (hi - lo) / 2;
    u64 p = 1;
    bool over = false;
    for (unsigned i = 0; i < s && !over; ++i) over = __builtin_mul_overflow(p, mid, &p);
    if (!over && p == n) return mid;
    if (over || p > n)
      hi = mid - 1;
    else
      lo = mid + 1;
  }
  return std::nullopt;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (const auto& [p, e] : factorize(n).factors) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> power_divisors(u64 n, unsigned s) {
  require_s(s, "power_divisors");
  std::vector<u64> out{1};
  for (const auto& [p, e] : factorize(n).factors) {
    const std::size_t base = out.size();
    const u64 ps = checked_pow(p, s);
    u64 pk = 1;
    for (unsigned k = s; k <= e; k += s) {
      pk *= ps;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 largest_power_divisor(u64 n, unsigned s) {
  require_positive(n, "largest_power_divisor");
  require_s(s, "largest_power_divisor");
  if (s == 1) return n;
  u64 r = 1;
  for (const auto& [p, e] : trial_divide(n)) r *= checked_pow(p, (e / s) * s);
  return r;
}

u64 gen_gcd(u64 a, u64 b, unsigned s) {
  if (b == 0) throw DomainError("gen_gcd: b must be positive");
  require_s(s, "gen_gcd");
  return largest_power_divisor(std::gcd(a, b), s);
}

u64 klee_phi(u64 n, unsigned s) {
  require_desk(n, "klee_phi");
  require_s(s, "klee_phi");
  u64 r = 1;
  for (const auto& [p, e] : factorize(n).factors) {
    const u64 pa = checked_pow(p, e);
    r *= e >= s ? pa - checked_pow(p, e - s) : pa;
  }
  return r;
}

u64 klee_phi_bruteforce(u64 n, unsigned s) {
  require_positive(n, "klee_phi_bruteforce");
  require_s(s, "klee_phi_bruteforce");
  if (n > kOracleBound)
    throw ResourceError("klee_phi_bruteforce: n exceeds oracle bound");
  u64 count = 0;
  for (u64 m = 1; m <= n; ++m)
    if (gen_gcd(m, n, s) == 1) ++count;
  return count;
}

u64 tau_s(u64 n, unsigned s) {
  require_desk(n, "tau_s");
  require_s(s, "tau_s");
  u64 r = 1;
  for (const auto& f : factorize(n).factors) r *= f.exponent / s + 1;
  return r;
}

u64 euler_phi(u64 n) { return klee_phi(n, 1); }

u64 divisor_tau(u64 n) { return tau_s(n, 1); }

u64 sigma(u64 n, unsigned k) {
  require_desk(n, "sigma");
  u64 r = 1;
  for (const auto& [p, e] : factorize(n).factors) {
    const u64 pk = checked_pow(p, k);
    u64 term = 1, acc = 1;
    for (unsigned i = 1; i <= e; ++i) {
      term = mul_checked(term, pk);
      acc = add_checked(acc, term);
    }
    r = mul_checked(r, acc);
  }
  return r;
}

}  // namespace menon
