#pragma once

// Exhaustive verification sweeps over the identities, the reproduction of the
// known counterexample to the unrestricted generalization, and report
// serialization (text, csv, json).

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "menon/arith.hpp"

namespace menon {

enum class Identity : std::uint8_t {
  menon,
  sury,
  zhao_cao,
  theorem1,
  theorem2,
  lemma31,
  lemma33,
  lemma34,
  cohen_partition,
  // sum (k-1,n)_s chi(k) = Phi_s(n) tau_s(n/d) with no restriction on n or d;
  // false in general, used by reproduce_remark() and search_counterexamples().
  strict_gen,
};

enum class OutputFormat : std::uint8_t { text, csv, json };

enum class Status : std::uint8_t { pass, fail, skipped };

std::string_view to_string(Identity id);
std::string_view to_string(OutputFormat f);
std::string_view to_string(Status s);
std::optional<Identity> parse_identity(std::string_view name);
std::optional<OutputFormat> parse_format(std::string_view name);

struct SweepConfig {
  Identity identity = Identity::menon;
  u64 n_max = 1;
  std::vector<unsigned> s_values = {1};
  double tolerance = 1e-6;
  OutputFormat output = OutputFormat::text;
  unsigned parallelism = 1;
};

/// Largest n_max accepted for each identity. For sury the tuple bound
/// n_max^s <= 10^7 applies as well.
u64 sweep_bound(Identity id);

/// Throws DomainError for malformed configs (empty or zero s, tolerance
/// outside (0, 0.5), zero parallelism) and ResourceError when n_max exceeds
/// the identity's bound.
void validate(const SweepConfig& config);

inline constexpr u64 kNoCharacter = std::numeric_limits<u64>::max();

/// One verified instance. The character is stored by its canonical rank mod
/// n (see DirichletGroup) and rendered as a label only when formatting.
struct IdentityRecord {
  Identity identity = Identity::menon;
  Status status = Status::skipped;
  unsigned s = 1;
  u64 n = 0;
  /// m for lemma31 / lemma33, d for cohen_partition, otherwise 0.
  u64 aux = 0;
  u64 chi_rank = kNoCharacter;
  i64 lhs = 0;
  i64 rhs = 0;
  double residual = 0.0;
};

/// Canonical label of a record's character, or "" when it has none.
std::string character_label(const IdentityRecord& r);

struct Summary {
  u64 pass = 0;
  u64 fail = 0;
  u64 skipped = 0;

  u64 total() const { return pass + fail + skipped; }
};

struct IdentityReport {
  SweepConfig config;
  std::vector<IdentityRecord> records;
  Summary summary;
  /// Largest residual over evaluated (non-skipped) records.
  double worst_residual = 0.0;
  /// Set for reports whose failures document a false statement, so that
  /// failures there are the expected outcome.
  bool failures_expected = false;
};

/// Enumerates the full parameter grid of config.identity: every qualifying
/// n, s, and character. Records are ordered deterministically, independent
/// of config.parallelism.
IdentityReport run_sweep(const SweepConfig& config);

/// n = 4, s = 2, principal character against Phi_2(4) tau_2(4) = 6. Throws
/// IntegrityError unless the sum is 5 and the right side 6.
IdentityReport reproduce_remark();

/// Every (n, s, chi) with n <= n_max violating the unrestricted strict_gen
/// statement.
IdentityReport search_counterexamples(u64 n_max, const std::vector<unsigned>& s_values,
                                      unsigned parallelism = 1, double tolerance = 1e-6);

/// True when the report meets its expectation: no failures for a verified
/// identity; for expected-failure reports, always.
bool expectations_met(const IdentityReport& report);

/// Byte-stable rendering. csv header: identity,n,s,chi,lhs,residual,rhs,status.
std::string format_report(const IdentityReport& report, OutputFormat format);

/// Largest modulus accepted by format_char_table.
inline constexpr u64 kCharTableBound = 1024;

/// Values of every character mod n at k = 0..n-1 as csv or json ("0" or
/// "num/den" turns).
std::string format_char_table(u64 n, OutputFormat format);

}  // namespace menon
