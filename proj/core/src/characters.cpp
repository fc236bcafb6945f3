#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

#include "menon/characters.hpp"
#include "menon/errors.hpp"

namespace menon {
namespace {

u64 reduce_residue(i64 k, u64 n) {
  const i64 m = static_cast<i64>(n);
  i64 r = k % m;
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

// chi_comp(residue) for a single component.
CharValue component_value(const CharacterComponent& comp, u64 residue) {
  const auto logs = comp.group->dlog(residue);
  if (!logs) return CharValue::zero();
  const u64 den = comp.group->lambda();
  const auto gens = comp.group->generators();
  u64 num = 0;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const u64 step = den / gens[j].order;
    num = (num + (u64{comp.indices[j]} * (*logs)[j] % gens[j].order) * step) % den;
  }
  return CharValue::root(num, den);
}

// The component on `target` whose value at each generator is value_at(g).
template <typename ValueAt>
CharacterComponent component_from_values(std::shared_ptr<const UnitGroupStructure> target,
                                         ValueAt value_at) {
  CharacterComponent out{std::move(target), {}};
  for (const auto& g : out.group->generators()) {
    const CharValue v = value_at(g.residue);
    if (v.is_zero() || g.order % v.den() != 0)
      throw IntegrityError("character value incompatible with generator order");
    out.indices.push_back(static_cast<std::uint32_t>(v.num() * (g.order / v.den())));
  }
  return out;
}

u64 component_conductor(const CharacterComponent& comp) {
  if (std::all_of(comp.indices.begin(), comp.indices.end(), [](auto i) { return i == 0; }))
    return 1;
  const u64 p = comp.group->prime();
  const unsigned a = comp.group->exponent();
  // {k = 1 mod p^c} is cyclic, generated by 1 + p^c, for c >= 1 (odd p) or
  // c >= 2 (p = 2); for p = 2, c = 1 it is the whole group.
  u64 pc = p;
  for (unsigned c = 1; c <= a; ++c, pc *= p) {
    if (p == 2 && c == 1) continue;
    if (component_value(comp, 1 + pc).is_one()) return pc;
  }
  throw IntegrityError("component conductor not found");
}

}  // namespace

// ---------------------------------------------------------------------------
// CharValue

CharValue CharValue::root(u64 num, u64 den) {
  if (den == 0) throw DomainError("CharValue: zero denominator");
  num %= den;
  const u64 g = std::gcd(num, den);
  CharValue v;
  v.kind_ = Kind::RootOfUnity;
  v.num_ = num / g;
  v.den_ = den / g;
  return v;
}

std::complex<double> CharValue::to_complex() const {
  if (is_zero()) return {0.0, 0.0};
  // Exact values on the axes keep common sums free of trig noise.
  if (num_ == 0) return {1.0, 0.0};
  if (2 * num_ == den_) return {-1.0, 0.0};
  if (4 * num_ == den_) return {0.0, 1.0};
  if (4 * num_ == 3 * den_) return {0.0, -1.0};
  const long double angle =
      2.0L * std::numbers::pi_v<long double> * static_cast<long double>(num_) /
      static_cast<long double>(den_);
  return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
}

std::string CharValue::to_string() const {
  if (is_zero()) return "0";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

CharValue operator*(const CharValue& a, const CharValue& b) {
  if (a.is_zero() || b.is_zero()) return CharValue::zero();
  const u64 den = std::lcm(a.den_, b.den_);
  return CharValue::root(a.num_ * (den / a.den_) + b.num_ * (den / b.den_), den);
}

// ---------------------------------------------------------------------------
// DirichletCharacter

DirichletCharacter::DirichletCharacter(u64 modulus, std::vector<CharacterComponent> components)
    : modulus_(modulus), components_(std::move(components)) {
  const Factorization f = factorize(modulus);
  if (f.factors.size() != components_.size())
    throw DomainError("DirichletCharacter: component count does not match modulus " +
                      std::to_string(modulus));
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto& c = components_[i];
    if (!c.group || c.group->prime() != f.factors[i].prime ||
        c.group->exponent() != f.factors[i].exponent)
      throw DomainError("DirichletCharacter: component " + std::to_string(i) +
                        " does not match modulus " + std::to_string(modulus));
    const auto gens = c.group->generators();
    if (c.indices.size() != gens.size())
      throw DomainError("DirichletCharacter: index vector has wrong length");
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (c.indices[j] >= gens[j].order)
        throw DomainError("DirichletCharacter: index out of range");
  }
}

bool DirichletCharacter::is_principal() const {
  return std::all_of(components_.begin(), components_.end(), [](const auto& c) {
    return std::all_of(c.indices.begin(), c.indices.end(), [](auto i) { return i == 0; });
  });
}

u64 DirichletCharacter::order() const {
  u64 ord = 1;
  for (const auto& c : components_) {
    const auto gens = c.group->generators();
    for (std::size_t j = 0; j < gens.size(); ++j)
      ord = std::lcm(ord, gens[j].order / std::gcd(gens[j].order, u64{c.indices[j]}));
  }
  return ord;
}

std::string DirichletCharacter::label() const {
  std::string out = std::to_string(modulus_) + ":";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto& c = components_[i];
    if (i > 0) out += ';';
    out += std::to_string(c.group->prime()) + "^" + std::to_string(c.group->exponent()) + "=[";
    for (std::size_t j = 0; j < c.indices.size(); ++j) {
      if (j > 0) out += ',';
      out += std::to_string(c.indices[j]);
    }
    out += ']';
  }
  return out;
}

bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
  if (a.modulus_ != b.modulus_ || a.components_.size() != b.components_.size()) return false;
  for (std::size_t i = 0; i < a.components_.size(); ++i)
    if (a.components_[i].indices != b.components_[i].indices) return false;
  return true;
}

// ---------------------------------------------------------------------------
// DirichletGroup

DirichletGroup::DirichletGroup(u64 n) : modulus_(n), factorization_(factorize(n)) {
  for (const auto& [p, e] : factorization_.factors) {
    components_.push_back(unit_group_structure(p, e));
    for (const auto& g : components_.back()->generators()) {
      radices_.push_back(g.order);
      size_ *= g.order;
      lambda_ = std::lcm(lambda_, g.order);
    }
  }
}

DirichletCharacter DirichletGroup::character(u64 rank) const {
  if (rank >= size_) throw DomainError("DirichletGroup: rank out of range");
  std::vector<std::uint32_t> digits(radices_.size());
  for (std::size_t j = radices_.size(); j-- > 0;) {
    digits[j] = static_cast<std::uint32_t>(rank % radices_[j]);
    rank /= radices_[j];
  }
  std::vector<CharacterComponent> comps;
  comps.reserve(components_.size());
  std::size_t pos = 0;
  for (const auto& g : components_) {
    const std::size_t w = g->generators().size();
    comps.push_back({g, std::vector<std::uint32_t>(digits.begin() + static_cast<std::ptrdiff_t>(pos),
                                                   digits.begin() + static_cast<std::ptrdiff_t>(pos + w))});
    pos += w;
  }
  return DirichletCharacter(DirichletCharacter::Unchecked{}, modulus_, std::move(comps));
}

u64 DirichletGroup::rank(const DirichletCharacter& chi) const {
  if (chi.modulus() != modulus_) throw DomainError("DirichletGroup::rank: modulus mismatch");
  u64 r = 0;
  std::size_t j = 0;
  for (const auto& c : chi.components())
    for (auto idx : c.indices) r = r * radices_[j++] + idx;
  return r;
}

std::optional<u64> DirichletGroup::log_rank(u64 k) const {
  u64 r = 0;
  std::size_t j = 0;
  for (const auto& g : components_) {
    const auto logs = g->dlog(k);
    if (!logs) return std::nullopt;
    for (auto e : *logs) r = r * radices_[j++] + e;
  }
  return r;
}

std::vector<DirichletCharacter> DirichletGroup::characters() const {
  std::vector<DirichletCharacter> out;
  out.reserve(size_);
  for (u64 r = 0; r < size_; ++r) out.push_back(character(r));
  return out;
}

// ---------------------------------------------------------------------------
// Operations

std::vector<DirichletCharacter> enumerate_characters(u64 n) { return DirichletGroup(n).characters(); }

DirichletCharacter principal_character(u64 n) { return DirichletGroup(n).character(0); }

DirichletCharacter multiply_characters(const DirichletCharacter& a, const DirichletCharacter& b) {
  if (a.modulus() != b.modulus())
    throw DomainError("multiply_characters: moduli " + std::to_string(a.modulus()) + " and " +
                      std::to_string(b.modulus()) + " differ");
  std::vector<CharacterComponent> comps;
  for (std::size_t i = 0; i < a.components().size(); ++i) {
    const auto& ca = a.components()[i];
    const auto& cb = b.components()[i];
    CharacterComponent c{ca.group, ca.indices};
    const auto gens = ca.group->generators();
    for (std::size_t j = 0; j < gens.size(); ++j)
      c.indices[j] = static_cast<std::uint32_t>((u64{ca.indices[j]} + cb.indices[j]) % gens[j].order);
    comps.push_back(std::move(c));
  }
  return DirichletCharacter(a.modulus(), std::move(comps));
}

CharValue eval_character(const DirichletCharacter& chi, i64 k) {
  const u64 r = reduce_residue(k, chi.modulus());
  CharValue v = CharValue::one();
  for (const auto& c : chi.components()) {
    v = v * component_value(c, r);
    if (v.is_zero()) break;
  }
  // Modulus 1: every integer is a unit.
  return v;
}

u64 conductor(const DirichletCharacter& chi) {
  u64 d = 1;
  for (const auto& c : chi.components()) d *= component_conductor(c);
  return d;
}

u64 conductor_by_scan(const DirichletCharacter& chi) {
  const u64 n = chi.modulus();
  for (u64 d : divisors(n)) {
    bool induced = true;
    for (u64 k = 1; k <= n && induced; k += d)
      if (std::gcd(k, n) == 1 && !eval_character(chi, static_cast<i64>(k)).is_one()) induced = false;
    if (induced) return d;
  }
  throw IntegrityError("conductor_by_scan: n is always an induced modulus");
}

bool is_primitive(const DirichletCharacter& chi) { return conductor(chi) == chi.modulus(); }

DirichletCharacter primitive_part(const DirichletCharacter& chi) {
  u64 d = 1;
  std::vector<CharacterComponent> comps;
  for (const auto& c : chi.components()) {
    const u64 pc = component_conductor(c);
    if (pc == 1) continue;
    d *= pc;
    unsigned e = 0;
    for (u64 x = pc; x > 1; x /= c.group->prime()) ++e;
    comps.push_back(component_from_values(unit_group_structure(c.group->prime(), e),
                                          [&](u64 g) { return component_value(c, g); }));
  }
  return DirichletCharacter(d, std::move(comps));
}

DirichletCharacter induce_character(const DirichletCharacter& chi, u64 n) {
  if (n == 0 || n % chi.modulus() != 0)
    throw DomainError("induce_character: " + std::to_string(chi.modulus()) + " does not divide " +
                      std::to_string(n));
  std::vector<CharacterComponent> comps;
  for (const auto& [p, e] : factorize(n).factors) {
    auto target = unit_group_structure(p, e);
    const auto src = std::find_if(chi.components().begin(), chi.components().end(),
                                  [p = p](const auto& c) { return c.group->prime() == p; });
    if (src == chi.components().end()) {
      comps.push_back({target, std::vector<std::uint32_t>(target->generators().size(), 0)});
    } else {
      comps.push_back(component_from_values(target, [&](u64 g) { return component_value(*src, g); }));
    }
  }
  return DirichletCharacter(n, std::move(comps));
}

std::vector<DirichletCharacter> factor_character(const DirichletCharacter& chi) {
  std::vector<DirichletCharacter> out;
  for (const auto& c : chi.components()) out.emplace_back(c.prime_power(), std::vector{c});
  return out;
}

}  // namespace menon
