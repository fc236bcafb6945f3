#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>

#include "menon/characters.hpp"
#include "menon/errors.hpp"

namespace menon {
namespace {

constexpr std::uint32_t kNonUnit = std::numeric_limits<std::uint32_t>::max();

u64 pow_mod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

u64 smallest_primitive_root(u64 p, u64 modulus, u64 phi) {
  const auto phi_primes = factorize(phi).factors;
  for (u64 g = 2; g < modulus; ++g) {
    if (g % p == 0) continue;
    bool primitive = true;
    for (const auto& f : phi_primes) {
      if (pow_mod(g, phi / f.prime, modulus) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  throw IntegrityError("no primitive root mod " + std::to_string(modulus));
}

}  // namespace

UnitGroupStructure::UnitGroupStructure(u64 p, unsigned a) : prime_(p), exponent_(a) {
  if (a == 0) throw DomainError("unit_group_structure: exponent must be positive");
  if (!is_prime(p)) throw DomainError("unit_group_structure: " + std::to_string(p) + " is not prime");
  modulus_ = 1;
  for (unsigned i = 0; i < a; ++i) {
    if (modulus_ > kUnitGroupBound / p)
      throw ResourceError("unit_group_structure: p^a exceeds 2^20");
    modulus_ *= p;
  }
  order_ = modulus_ / p * (p - 1);

  if (p == 2) {
    if (a == 2) {
      generators_.push_back({3, 2});
    } else if (a >= 3) {
      generators_.push_back({modulus_ - 1, 2});
      generators_.push_back({5, modulus_ / 4});
    }
  } else {
    generators_.push_back({smallest_primitive_root(p, modulus_, order_), order_});
  }
  for (const auto& g : generators_) lambda_ = std::lcm(lambda_, g.order);

  const std::size_t width = generators_.size();
  table_.assign(modulus_ * width, kNonUnit);
  if (width == 0) return;  // modulus 2: only the residue 1, empty vector.

  // Walk every exponent vector in mixed radix, tracking the residue.
  std::vector<std::uint32_t> digits(width, 0);
  u64 seen = 0;
  for (bool done = false; !done;) {
    u64 r = 1;
    for (std::size_t j = 0; j < width; ++j)
      r = r * pow_mod(generators_[j].residue, digits[j], modulus_) % modulus_;
    auto slot = table_.begin() + static_cast<std::ptrdiff_t>(r * width);
    if (*slot != kNonUnit)
      throw IntegrityError("unit_group_structure: generators are not independent");
    std::copy(digits.begin(), digits.end(), slot);
    ++seen;
    for (std::size_t j = width;;) {
      if (j == 0) {
        done = true;
        break;
      }
      --j;
      if (++digits[j] < generators_[j].order) break;
      digits[j] = 0;
    }
  }
  if (seen != order_) throw IntegrityError("unit_group_structure: table incomplete");
}

std::optional<std::span<const std::uint32_t>> UnitGroupStructure::dlog(u64 residue) const {
  residue %= modulus_;
  if (residue % prime_ == 0) return std::nullopt;
  const std::size_t width = generators_.size();
  return std::span<const std::uint32_t>(table_.data() + residue * width, width);
}

std::shared_ptr<const UnitGroupStructure> unit_group_structure(u64 p, unsigned a) {
  static std::mutex mutex;
  static std::map<std::pair<u64, unsigned>, std::shared_ptr<const UnitGroupStructure>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({p, a}); it != cache.end()) return it->second;
  }
  // Build outside the lock; if two threads race, the first insert wins and
  // both get equal structures.
  auto built = std::make_shared<const UnitGroupStructure>(p, a);
  std::lock_guard lock(mutex);
  return cache.try_emplace({p, a}, std::move(built)).first->second;
}

}  // namespace menon
