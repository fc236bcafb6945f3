#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "menon/errors.hpp"
#include "menon/identities.hpp"
#include "oracles.hpp"

using namespace menon;

namespace {

// sum over gcd(m,n)=1 of gcd(m-1,n) by direct loop.
i64 menon_oracle(u64 n) {
  i64 t = 0;
  for (u64 m = 1; m <= n; ++m)
    if (std::gcd(m, n) == 1) t += static_cast<i64>(std::gcd(m - 1, n));
  return t;
}

// Sury's sum over every tuple, no memoization.
i64 sury_oracle(u64 n, unsigned s) {
  std::vector<u64> m(s, 1);
  i64 t = 0;
  for (;;) {
    if (std::gcd(m[0], n) == 1) {
      u64 g = std::gcd(m[0] - 1, n);
      for (unsigned i = 1; i < s; ++i) g = std::gcd(g, m[i]);
      t += static_cast<i64>(g);
    }
    unsigned i = 0;
    while (i < s && ++m[i] > n) m[i++] = 1;
    if (i == s) break;
  }
  return t;
}

DirichletCharacter first_with_conductor(u64 n, u64 d) {
  for (const auto& chi : enumerate_characters(n))
    if (conductor(chi) == d) return chi;
  FAIL("no character with that conductor");
  return principal_character(n);
}

}  // namespace

TEST_CASE("menon_sum") {
  CHECK(menon_sum(1) == 1);
  CHECK(menon_sum(4) == 6);
  CHECK(menon_sum(10) == 16);
  for (u64 n = 1; n <= 1000; ++n) {
    CHECK(menon_sum(n) == menon_oracle(n));
    CHECK(menon_sum(n) == static_cast<i64>(euler_phi(n) * divisor_tau(n)));
  }
  CHECK_THROWS_AS(menon_sum(0), DomainError);
  CHECK_THROWS_AS(menon_sum(kSumBound + 1), ResourceError);
}

TEST_CASE("sury_sum") {
  CHECK(sury_sum(3, 1) == 4);
  CHECK(sury_sum(4, 2) == 14);
  CHECK(sury_sum(1, 5) == 1);
  for (u64 n = 1; n <= 30; ++n) {
    CHECK(sury_sum(n, 1) == menon_sum(n));
    CHECK(sury_sum(n, 2) == sury_oracle(n, 2));
    if (n <= 12) CHECK(sury_sum(n, 3) == sury_oracle(n, 3));
  }
  CHECK_THROWS_AS(sury_sum(3163, 2), ResourceError);
  CHECK_THROWS_AS(sury_sum(5, 0), DomainError);
}

TEST_CASE("zhao_cao_sum") {
  CHECK(zhao_cao_sum(4, principal_character(4)).rounded == 6);
  for (const auto& chi : enumerate_characters(9))
    if (is_primitive(chi)) CHECK(zhao_cao_sum(9, chi).rounded == 6);
  const auto r = zhao_cao_sum(12, first_with_conductor(12, 3));
  CHECK(r.rounded == 12);
  CHECK(r.residual < 1e-9);
  CHECK_THROWS_AS(zhao_cao_sum(5, principal_character(4)), DomainError);
}

TEST_CASE("generalized_sum examples") {
  const auto r = generalized_sum(4, 2, principal_character(4));
  CHECK(r.rounded == 5);
  CHECK(r.residual < 1e-9);
  int primitive = 0;
  for (const auto& chi : enumerate_characters(16))
    if (is_primitive(chi)) {
      CHECK(generalized_sum(16, 2, chi).rounded == 12);
      ++primitive;
    }
  CHECK(primitive == 4);
  for (const auto& chi : enumerate_characters(9))
    if (is_primitive(chi)) CHECK(generalized_sum(9, 1, chi).rounded == 6);
  CHECK_THROWS_AS(generalized_sum(4, 0, principal_character(4)), DomainError);
  CHECK_THROWS_AS(generalized_sum(8, 1, principal_character(4)), DomainError);
}

TEST_CASE("generalized_sum matches the term-by-term oracle") {
  for (unsigned s = 1; s <= 3; ++s)
    for (u64 n = 1; n <= 72; ++n) {
      const SumContext ctx(n);
      for (const auto& chi : enumerate_characters(n)) {
        const auto z = oracle::gen_sum(n, s, chi);
        const auto r = ctx.generalized_sum(s, chi);
        CHECK(std::abs(r.value - z) < 1e-9);
        CHECK(r.rounded == oracle::nearest(z));
        CHECK(r.residual < 1e-9);
      }
    }
}

TEST_CASE("reduction chain") {
  for (u64 n = 1; n <= 150; ++n) {
    const SumContext ctx(n);
    for (const auto& chi : enumerate_characters(n)) {
      const auto zc = ctx.zhao_cao_sum(chi);
      CHECK(ctx.generalized_sum(1, chi).rounded == zc.rounded);
      CHECK(zc.rounded == static_cast<i64>(euler_phi(n) * divisor_tau(n / conductor(chi))));
    }
  }
  for (u64 n = 1; n <= 1000; ++n) CHECK(zhao_cao_sum(n, principal_character(n)).rounded == menon_sum(n));
}

TEST_CASE("falsity witness") {
  const auto lhs = generalized_sum(4, 2, principal_character(4)).rounded;
  const auto rhs = static_cast<i64>(klee_phi(4, 2) * tau_s(4, 2));
  CHECK(lhs == 5);
  CHECK(rhs == 6);
  CHECK(lhs != rhs);
}

TEST_CASE("char_shift_sum examples") {
  for (const auto& chi : enumerate_characters(9))
    if (is_primitive(chi)) CHECK(char_shift_sum(3, 2, 1, 1, chi).rounded == -1);
  for (const auto& chi : enumerate_characters(16))
    if (is_primitive(chi)) CHECK(char_shift_sum(2, 4, 2, 2, chi).rounded == -1);
  CHECK(char_shift_sum(3, 2, 1, 1, first_with_conductor(9, 3)).rounded == 2);

  CHECK_THROWS_AS(char_shift_sum(4, 2, 1, 1, principal_character(16)), DomainError);
  CHECK_THROWS_AS(char_shift_sum(2, 4, 2, 1, principal_character(16)), DomainError);
  CHECK_THROWS_AS(char_shift_sum(2, 4, 2, 4, principal_character(16)), DomainError);
  CHECK_THROWS_AS(char_shift_sum(2, 4, 3, 3, principal_character(16)), DomainError);
  CHECK_THROWS_AS(char_shift_sum(3, 2, 1, 1, principal_character(27)), DomainError);
}

TEST_CASE("char_shift_sum matches direct summation") {
  for (auto [p, e] : std::vector<std::pair<u64, unsigned>>{{2, 6}, {3, 4}, {5, 3}, {7, 2}}) {
    const u64 q = checked_pow(p, e);
    for (unsigned s = 1; s <= 3; ++s) {
      if (e % s) continue;
      for (unsigned m = s; m < e; m += s) {
        const u64 pm = checked_pow(p, m);
        const u64 range = q / pm;
        for (const auto& chi : enumerate_characters(q)) {
          std::complex<double> z{};
          for (u64 k = 1; k <= range; ++k)
            if (oracle::gen_gcd(k, range, s) == 1) z += oracle::value(chi, k * pm + 1);
          const auto r = char_shift_sum(p, e, s, m, chi);
          CHECK(r.rounded == oracle::nearest(z));
          CHECK(r.residual < 1e-9);
        }
      }
    }
  }
}

TEST_CASE("cohen partition") {
  const auto a = cohen_partition_check(16, 2, 4);
  CHECK(a.holds);
  CHECK(a.classes == 4);
  CHECK(a.class_size == 3);
  CHECK(cohen_partition_check(36, 2, 9).holds);
  const auto t = cohen_partition_check(360, 2, 1);
  CHECK(t.holds);
  CHECK(t.classes == klee_phi(360, 2));
  CHECK_THROWS_AS(cohen_partition_check(16, 2, 8), DomainError);
  CHECK_THROWS_AS(cohen_partition_check(16, 2, 3), DomainError);
  CHECK_THROWS_AS(cohen_partition_check(kPartitionBound + 1, 1, 1), ResourceError);
}

TEST_CASE("round_exact") {
  const auto e = round_exact({});
  CHECK(e.rounded == 0);
  CHECK(e.residual == 0.0);
  const std::vector<CharValue> pm = {CharValue::root(0, 1), CharValue::root(1, 2)};
  CHECK(round_exact(pm).rounded == 0);
  const std::vector<CharValue> third = {CharValue::root(0, 3), CharValue::root(1, 3), CharValue::root(2, 3)};
  CHECK(round_exact(third).residual < 1e-9);
  const std::vector<CharValue> half = {CharValue::root(1, 4)};
  CHECK_THROWS_AS(round_exact(half), IntegrityError);
  CHECK_THROWS_AS(round_to_integer({0.5, 0.0}), IntegrityError);
}

TEST_CASE("RootSum accumulates exact weights") {
  RootSum acc(12);
  acc.add(5, CharValue::root(1, 3));
  acc.add(5, CharValue::root(2, 3));
  acc.add(5, CharValue::one());
  acc.add(7, CharValue::zero());
  CHECK(acc.result().rounded == 0);
  CHECK_THROWS_AS(acc.add(1, CharValue::root(1, 5)), DomainError);
}
