#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "menon/arith.hpp"
#include "menon/errors.hpp"
#include "oracles.hpp"

using namespace menon;

TEST_CASE("factorize") {
  CHECK(factorize(1).factors.empty());
  const auto f = factorize(360);
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0] == PrimePower{2, 3});
  CHECK(f.factors[1] == PrimePower{3, 2});
  CHECK(f.factors[2] == PrimePower{5, 1});
  CHECK(factorize(9'999'991).factors == std::vector<PrimePower>{{9'999'991, 1}});
  CHECK_THROWS_AS(factorize(0), DomainError);
  CHECK_THROWS_AS(factorize(kDeskBound + 1), ResourceError);

  for (u64 n = 1; n <= 5000; ++n) {
    u64 prod = 1, prev = 1;
    for (const auto& pp : factorize(n).factors) {
      CHECK(pp.prime > prev);
      CHECK(is_prime(pp.prime));
      prev = pp.prime;
      prod *= pp.value();
    }
    CHECK(prod == n);
  }
}

TEST_CASE("exact_root and power divisors") {
  CHECK(exact_root(64, 3) == 4u);
  CHECK(exact_root(64, 6) == 2u);
  CHECK_FALSE(exact_root(63, 2).has_value());
  CHECK(exact_root(1, 5) == 1u);
  CHECK(power_divisors(64, 3) == std::vector<u64>{1, 8, 64});
  CHECK(divisors(12) == std::vector<u64>{1, 2, 3, 4, 6, 12});
  CHECK(largest_power_divisor(72, 2) == 36);
  CHECK_THROWS_AS(checked_pow(10, 20), ResourceError);
}

TEST_CASE("gen_gcd examples") {
  CHECK(gen_gcd(72, 48, 2) == 4);
  CHECK(gen_gcd(0, 4, 2) == 4);
  CHECK(gen_gcd(2, 4, 2) == 1);
  CHECK(gen_gcd(7, 5, 1) == 1);
  CHECK_THROWS_AS(gen_gcd(3, 4, 0), DomainError);
  CHECK_THROWS_AS(gen_gcd(3, 0, 1), DomainError);
}

TEST_CASE("gen_gcd properties") {
  for (unsigned s = 1; s <= 3; ++s)
    for (u64 a = 0; a <= 120; ++a)
      for (u64 b = 1; b <= 120; ++b) {
        const u64 g = gen_gcd(a, b, s);
        if (a > 0) CHECK(g == gen_gcd(b, a, s));
        if (s == 1) CHECK(g == std::gcd(a, b));
        CHECK(exact_root(g, s).has_value());
        CHECK(std::gcd(a, b) % g == 0);
      }
  // Multiplicative in the first argument for coprime factors.
  for (unsigned s = 1; s <= 3; ++s)
    for (u64 a1 = 1; a1 <= 40; ++a1)
      for (u64 a2 = 1; a2 <= 40; ++a2) {
        if (std::gcd(a1, a2) != 1) continue;
        for (u64 b : {1u, 16u, 72u, 144u, 360u, 1728u})
          CHECK(gen_gcd(a1 * a2, b, s) == gen_gcd(a1, b, s) * gen_gcd(a2, b, s));
      }
}

TEST_CASE("klee_phi and tau_s examples") {
  CHECK(klee_phi(4, 2) == 3);
  CHECK(klee_phi(16, 2) == 12);
  CHECK(klee_phi(1, 3) == 1);
  CHECK(klee_phi_bruteforce(4, 2) == 3);
  CHECK(klee_phi_bruteforce(16, 2) == 12);
  CHECK(tau_s(4, 2) == 2);
  CHECK(tau_s(64, 3) == 3);
  CHECK(tau_s(1, 2) == 1);
  CHECK(sigma(4, 1) == 7);
  CHECK(sigma(4, 0) == 3);
  CHECK(euler_phi(10) == 4);
  CHECK(divisor_tau(10) == 4);
  CHECK_THROWS_AS(klee_phi(0, 1), DomainError);
  CHECK_THROWS_AS(tau_s(0, 1), DomainError);
  CHECK_THROWS_AS(klee_phi(8, 0), DomainError);
}

TEST_CASE("multiplicative functions agree with brute force") {
  for (unsigned s = 1; s <= 4; ++s)
    for (u64 n = 1; n <= 400; ++n) {
      CHECK(klee_phi(n, s) == oracle::klee_phi(n, s));
      CHECK(tau_s(n, s) == oracle::tau_s(n, s));
    }
  for (u64 n = 1; n <= 400; ++n) {
    CHECK(euler_phi(n) == oracle::phi(n));
    CHECK(sigma(n, 1) == oracle::sigma(n, 1));
    CHECK(sigma(n, 2) == oracle::sigma(n, 2));
  }
}

TEST_CASE("Phi_s and tau_s are multiplicative") {
  for (unsigned s = 1; s <= 3; ++s)
    for (u64 r = 1; r <= 300; ++r)
      for (u64 t = 1; r * t <= 300; ++t) {
        if (std::gcd(r, t) != 1) continue;
        CHECK(klee_phi(r * t, s) == klee_phi(r, s) * klee_phi(t, s));
        CHECK(tau_s(r * t, s) == tau_s(r, s) * tau_s(t, s));
      }
}

TEST_CASE("s = 1 reduces to the classical functions") {
  for (u64 n = 1; n <= 1000; ++n) {
    CHECK(klee_phi(n, 1) == euler_phi(n));
    CHECK(tau_s(n, 1) == divisor_tau(n));
  }
}

TEST_CASE("sigma overflow is reported") {
  CHECK_THROWS_AS(sigma(9'699'690, 5), ResourceError);
}
