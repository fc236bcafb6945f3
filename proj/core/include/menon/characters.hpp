#pragma once

// Dirichlet characters mod n, stored as one index vector per prime-power
// component of n, indexed against fixed generators of each (Z/p^a)^*.
//
// Generators are canonical: the smallest primitive root mod p^a for odd p,
// 3 for modulus 4, and (-1, 5) in that order for 2^a with a >= 3. This fixes
// a deterministic labeling
//
//   n:p1^a1=[i,...];p2^a2=[i,...]
//
// e.g. "4:2^2=[1]" is the nonprincipal character mod 4 and "1:" the trivial
// character mod 1.

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "menon/arith.hpp"

namespace menon {

/// Largest prime power accepted as a unit-group component.
inline constexpr u64 kUnitGroupBound = u64{1} << 20;

struct Generator {
  u64 residue = 0;
  u64 order = 0;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Structure of (Z/p^a)^* with a complete discrete-log table.
class UnitGroupStructure {
 public:
  /// Builds the structure; prefer unit_group_structure(), which caches.
  UnitGroupStructure(u64 p, unsigned a);

  u64 prime() const { return prime_; }
  unsigned exponent() const { return exponent_; }
  u64 modulus() const { return modulus_; }
  /// |(Z/p^a)^*| = phi(p^a).
  u64 order() const { return order_; }
  /// lcm of the generator orders (the group exponent).
  u64 lambda() const { return lambda_; }
  std::span<const Generator> generators() const { return generators_; }

  /// Exponent vector of `residue` against generators(), or nullopt when
  /// p divides residue. `residue` is reduced mod p^a first.
  std::optional<std::span<const std::uint32_t>> dlog(u64 residue) const;

 private:
  u64 prime_;
  unsigned exponent_;
  u64 modulus_;
  u64 order_;
  u64 lambda_ = 1;
  std::vector<Generator> generators_;
  // modulus_ * generators_.size() entries; non-units hold kNonUnit.
  std::vector<std::uint32_t> table_;
};

/// Cached, thread-safe access. Throws DomainError if p is not prime or
/// a == 0, ResourceError if p^a > kUnitGroupBound.
std::shared_ptr<const UnitGroupStructure> unit_group_structure(u64 p, unsigned a);

/// An exact character value: zero, or exp(2 pi i num/den) with the fraction
/// in lowest terms and 0 <= num < den.
class CharValue {
 public:
  enum class Kind { Zero, RootOfUnity };

  static CharValue zero() { return CharValue(); }
  static CharValue root(u64 num, u64 den);
  static CharValue one() { return root(0, 1); }

  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::Zero; }
  bool is_one() const { return kind_ == Kind::RootOfUnity && num_ == 0; }
  u64 num() const { return num_; }
  u64 den() const { return den_; }

  std::complex<double> to_complex() const;
  std::string to_string() const;  // "0" or "num/den"

  friend CharValue operator*(const CharValue& a, const CharValue& b);
  friend bool operator==(const CharValue&, const CharValue&) = default;

 private:
  CharValue() = default;
  Kind kind_ = Kind::Zero;
  u64 num_ = 0;
  u64 den_ = 1;
};

struct CharacterComponent {
  std::shared_ptr<const UnitGroupStructure> group;
  /// One entry per generator, each in [0, order).
  std::vector<std::uint32_t> indices;

  u64 prime_power() const { return group->modulus(); }
};

class DirichletCharacter {
 public:
  /// Validates that the component prime powers are those of `modulus`, in
  /// increasing prime order, and that every index is in range.
  DirichletCharacter(u64 modulus, std::vector<CharacterComponent> components);

  u64 modulus() const { return modulus_; }
  std::span<const CharacterComponent> components() const { return components_; }

  bool is_principal() const;
  /// Multiplicative order of the character.
  u64 order() const;
  std::string label() const;

  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b);

 private:
  friend class DirichletGroup;
  struct Unchecked {};
  DirichletCharacter(Unchecked, u64 modulus, std::vector<CharacterComponent> components)
      : modulus_(modulus), components_(std::move(components)) {}

  u64 modulus_;
  std::vector<CharacterComponent> components_;
};

/// The character group mod n: component structures and the canonical
/// mixed-radix ranking of characters (last generator fastest).
class DirichletGroup {
 public:
  explicit DirichletGroup(u64 n);

  u64 modulus() const { return modulus_; }
  const Factorization& factorization() const { return factorization_; }
  std::span<const std::shared_ptr<const UnitGroupStructure>> components() const {
    return components_;
  }
  /// Number of characters, phi(n).
  u64 size() const { return size_; }
  /// Group exponent: lcm of every generator order.
  u64 lambda() const { return lambda_; }
  /// Generator orders across all components, in label order.
  std::span<const u64> radices() const { return radices_; }

  DirichletCharacter character(u64 rank) const;
  u64 rank(const DirichletCharacter& chi) const;
  /// Mixed-radix rank of the discrete-log vector of residue k (same radices
  /// as character ranks), or nullopt when gcd(k, n) > 1.
  std::optional<u64> log_rank(u64 k) const;
  std::vector<DirichletCharacter> characters() const;

 private:
  u64 modulus_;
  Factorization factorization_;
  std::vector<std::shared_ptr<const UnitGroupStructure>> components_;
  std::vector<u64> radices_;
  u64 size_ = 1;
  u64 lambda_ = 1;
};

std::vector<DirichletCharacter> enumerate_characters(u64 n);

DirichletCharacter principal_character(u64 n);

/// Throws DomainError on modulus mismatch.
DirichletCharacter multiply_characters(const DirichletCharacter& a, const DirichletCharacter& b);

CharValue eval_character(const DirichletCharacter& chi, i64 k);

/// Smallest induced modulus, computed per component from the nested
/// subgroups {k = 1 mod p^c}.
u64 conductor(const DirichletCharacter& chi);

/// Smallest induced modulus by scanning every divisor d of n and checking
/// chi(k) = 1 for all k = 1 (mod d) coprime to n.
u64 conductor_by_scan(const DirichletCharacter& chi);

bool is_primitive(const DirichletCharacter& chi);

/// The primitive character mod conductor(chi) inducing chi.
DirichletCharacter primitive_part(const DirichletCharacter& chi);

/// Lifts chi mod d to the character mod n (d | n) agreeing with it on every
/// k coprime to n.
DirichletCharacter induce_character(const DirichletCharacter& chi, u64 n);

/// One character mod p^a per prime power of the modulus.
std::vector<DirichletCharacter> factor_character(const DirichletCharacter& chi);

}  // namespace menon
