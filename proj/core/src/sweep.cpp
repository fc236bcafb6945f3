#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>

#include "menon/characters.hpp"
#include "menon/errors.hpp"
#include "menon/harness.hpp"
#include "menon/identities.hpp"

namespace menon {
namespace {

constexpr std::array<std::pair<Identity, std::string_view>, 10> kIdentityNames = {{
    {Identity::menon, "menon"},
    {Identity::sury, "sury"},
    {Identity::zhao_cao, "zhao_cao"},
    {Identity::theorem1, "theorem1"},
    {Identity::theorem2, "theorem2"},
    {Identity::lemma31, "lemma31"},
    {Identity::lemma33, "lemma33"},
    {Identity::lemma34, "lemma34"},
    {Identity::cohen_partition, "cohen_partition"},
    {Identity::strict_gen, "strict_gen"},
}};

// One independent slice of a sweep: a modulus and an s value.
struct WorkUnit {
  u64 n;
  unsigned s;
};

i64 as_signed(u64 v) { return static_cast<i64>(v); }

IdentityRecord make_record(const SweepConfig& cfg, const WorkUnit& u, i64 lhs, double residual, i64 rhs,
                           u64 chi_rank = kNoCharacter, u64 aux = 0) {
  IdentityRecord r;
  r.identity = cfg.identity;
  r.n = u.n;
  r.s = u.s;
  r.aux = aux;
  r.chi_rank = chi_rank;
  r.lhs = lhs;
  r.rhs = rhs;
  r.residual = residual;
  r.status = (lhs == rhs && residual < cfg.tolerance) ? Status::pass : Status::fail;
  return r;
}

IdentityRecord skipped_record(const SweepConfig& cfg, const WorkUnit& u, u64 chi_rank, u64 aux = 0) {
  IdentityRecord r;
  r.identity = cfg.identity;
  r.n = u.n;
  r.s = u.s;
  r.aux = aux;
  r.chi_rank = chi_rank;
  r.status = Status::skipped;
  return r;
}

// Prime p and exponent e with n = p^e, if n is a prime power.
std::optional<PrimePower> as_prime_power(u64 n) {
  if (n < 2) return std::nullopt;
  const auto f = factorize(n);
  if (f.factors.size() != 1) return std::nullopt;
  return f.factors.front();
}

// Exponent l with d = p^l; d is a divisor of a power of p.
unsigned log_p(u64 d, u64 p) {
  unsigned l = 0;
  for (; d > 1; d /= p) ++l;
  return l;
}

// Conductors m^(ts), 1 <= t <= q, over every way of writing n = m^(qs)
// with m >= 2, q >= 1.
std::set<u64> theorem2_conductors(u64 n, unsigned s) {
  std::set<u64> out;
  for (unsigned q = 1;; ++q) {
    const u64 qs = u64{q} * s;
    if (qs >= 64 || (u64{1} << qs) > n) break;
    const auto m = exact_root(n, static_cast<unsigned>(qs));
    if (!m || *m < 2) continue;
    const u64 ms = checked_pow(*m, s);
    u64 d = 1;
    for (unsigned t = 1; t <= q; ++t) {
      d *= ms;
      out.insert(d);
    }
  }
  return out;
}

std::vector<WorkUnit> plan(const SweepConfig& cfg) {
  std::vector<WorkUnit> units;
  const auto per_s = [&](auto&& accept) {
    for (unsigned s : cfg.s_values)
      for (u64 n = 1; n <= cfg.n_max; ++n)
        if (accept(n, s)) units.push_back({n, s});
  };
  switch (cfg.identity) {
    case Identity::menon:
    case Identity::zhao_cao:
      for (u64 n = 1; n <= cfg.n_max; ++n) units.push_back({n, 1});
      break;
    case Identity::sury:
    case Identity::cohen_partition:
    case Identity::strict_gen:
      per_s([](u64, unsigned) { return true; });
      break;
    case Identity::theorem1:
      per_s([](u64 n, unsigned s) { return exact_root(n, s).has_value(); });
      break;
    case Identity::theorem2:
      per_s([](u64 n, unsigned s) { return !theorem2_conductors(n, s).empty(); });
      break;
    case Identity::lemma31:
    case Identity::lemma33:
    case Identity::lemma34: {
      // Prime powers p^e with s | e; the shift lemmas also need s < e.
      const bool shift = cfg.identity != Identity::lemma34;
      per_s([shift](u64 n, unsigned s) {
        const auto pp = as_prime_power(n);
        return pp && pp->exponent % s == 0 && (!shift || pp->exponent > s);
      });
      break;
    }
  }
  return units;
}

std::vector<IdentityRecord> run_unit(const SweepConfig& cfg, const WorkUnit& u) {
  std::vector<IdentityRecord> out;
  const u64 n = u.n;
  const unsigned s = u.s;

  switch (cfg.identity) {
    case Identity::menon:
      out.push_back(make_record(cfg, u, menon_sum(n), 0.0, as_signed(euler_phi(n) * divisor_tau(n))));
      break;

    case Identity::sury:
      out.push_back(make_record(cfg, u, sury_sum(n, s), 0.0, as_signed(euler_phi(n) * sigma(n, s - 1))));
      break;

    case Identity::cohen_partition:
      for (u64 d : power_divisors(n, s)) {
        const auto part = cohen_partition_check(n, s, d);
        auto r = make_record(cfg, u, as_signed(part.classes), 0.0, as_signed(part.expected_classes),
                             kNoCharacter, d);
        if (!part.holds) r.status = Status::fail;
        out.push_back(r);
      }
      break;

    case Identity::zhao_cao:
    case Identity::theorem1:
    case Identity::theorem2:
    case Identity::strict_gen:
    case Identity::lemma34: {
      const DirichletGroup group(n);
      std::optional<SumContext> ctx;
      std::set<u64> allowed;
      unsigned q = 0;
      u64 p = 0;
      if (cfg.identity == Identity::theorem2) allowed = theorem2_conductors(n, s);
      if (cfg.identity == Identity::lemma34) {
        const auto pp = as_prime_power(n);
        p = pp->prime;
        q = pp->exponent / s;
      }
      const u64 phi_s = klee_phi(n, s);
      for (u64 rank = 0; rank < group.size(); ++rank) {
        const auto chi = group.character(rank);
        const u64 d = conductor(chi);
        std::optional<i64> rhs;
        switch (cfg.identity) {
          case Identity::zhao_cao:
            rhs = as_signed(euler_phi(n) * divisor_tau(n / d));
            break;
          case Identity::theorem1:
            if (d == n) rhs = as_signed(phi_s);
            break;
          case Identity::theorem2:
            if (allowed.contains(d)) rhs = as_signed(phi_s * tau_s(n / d, s));
            break;
          case Identity::strict_gen:
            rhs = as_signed(phi_s * tau_s(n / d, s));
            break;
          case Identity::lemma34: {
            const unsigned l = log_p(d, p);
            if (l >= s && l % s == 0) rhs = as_signed((q - l / s + 1) * phi_s);
            break;
          }
          default:
            break;
        }
        if (!rhs) {
          out.push_back(skipped_record(cfg, u, rank));
          continue;
        }
        if (!ctx) ctx.emplace(n);
        const auto sum = ctx->generalized_sum(cfg.identity == Identity::zhao_cao ? 1 : s, chi);
        out.push_back(make_record(cfg, u, sum.rounded, sum.residual, *rhs, rank));
      }
      break;
    }

    case Identity::lemma31:
    case Identity::lemma33: {
      const auto pp = as_prime_power(n);
      const u64 p = pp->prime;
      const unsigned e = pp->exponent;
      const DirichletGroup group(n);
      const auto chars = group.characters();
      std::vector<unsigned> cond_exp;
      cond_exp.reserve(chars.size());
      for (const auto& chi : chars) cond_exp.push_back(log_p(conductor(chi), p));
      for (unsigned m = s; m < e; m += s) {
        for (u64 rank = 0; rank < chars.size(); ++rank) {
          const unsigned l = cond_exp[rank];
          std::optional<i64> rhs;
          if (cfg.identity == Identity::lemma31) {
            if (l == e) rhs = (m == e - s) ? -1 : 0;
          } else if (l >= s && l % s == 0) {
            if (l <= m)
              rhs = as_signed(klee_phi(checked_pow(p, e - m), s));
            else if (m == l - s)
              rhs = -as_signed(checked_pow(p, e - l));
            else
              rhs = 0;
          }
          if (!rhs) {
            out.push_back(skipped_record(cfg, u, rank, m));
            continue;
          }
          const auto sum = char_shift_sum(p, e, s, m, chars[rank]);
          out.push_back(make_record(cfg, u, sum.rounded, sum.residual, *rhs, rank, m));
        }
      }
      break;
    }
  }
  return out;
}

void finalize(IdentityReport& report) {
  report.summary = {};
  report.worst_residual = 0.0;
  for (const auto& r : report.records) {
    switch (r.status) {
      case Status::pass: ++report.summary.pass; break;
      case Status::fail: ++report.summary.fail; break;
      case Status::skipped: ++report.summary.skipped; break;
    }
    if (r.status != Status::skipped) report.worst_residual = std::max(report.worst_residual, r.residual);
  }
}

}  // namespace

std::string_view to_string(Identity id) {
  for (const auto& [k, v] : kIdentityNames)
    if (k == id) return v;
  return "unknown";
}

std::string_view to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::text: return "text";
    case OutputFormat::csv: return "csv";
    case OutputFormat::json: return "json";
  }
  return "unknown";
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "unknown";
}

std::optional<Identity> parse_identity(std::string_view name) {
  for (const auto& [k, v] : kIdentityNames)
    if (v == name) return k;
  return std::nullopt;
}

std::optional<OutputFormat> parse_format(std::string_view name) {
  for (auto f : {OutputFormat::text, OutputFormat::csv, OutputFormat::json})
    if (to_string(f) == name) return f;
  return std::nullopt;
}

u64 sweep_bound(Identity id) {
  switch (id) {
    case Identity::menon: return kSumBound;
    case Identity::sury: return 3162;  // floor(sqrt(10^7)); n^s <= 10^7 is checked per s
    case Identity::zhao_cao: return 2048;
    case Identity::theorem1: return 8192;
    case Identity::theorem2: return 8192;
    case Identity::lemma31:
    case Identity::lemma33:
    case Identity::lemma34: return 65536;
    case Identity::cohen_partition: return kPartitionBound;
    case Identity::strict_gen: return 2048;
  }
  return 0;
}

void validate(const SweepConfig& cfg) {
  if (cfg.n_max == 0) throw DomainError("n_max must be positive");
  if (cfg.s_values.empty()) throw DomainError("at least one s value is required");
  for (unsigned s : cfg.s_values)
    if (s == 0) throw DomainError("s values must be positive");
  if (!(cfg.tolerance > 0.0 && cfg.tolerance < 0.5)) throw DomainError("tolerance must lie in (0, 0.5)");
  if (cfg.parallelism == 0) throw DomainError("parallelism must be positive");
  const u64 bound = sweep_bound(cfg.identity);
  if (cfg.n_max > bound)
    throw ResourceError(std::string(to_string(cfg.identity)) + ": n_max " + std::to_string(cfg.n_max) +
                        " exceeds bound " + std::to_string(bound));
  if (cfg.identity == Identity::sury) {
    for (unsigned s : cfg.s_values) {
      u64 tuples = 1;
      for (unsigned i = 0; i < s; ++i)
        if (__builtin_mul_overflow(tuples, cfg.n_max, &tuples) || tuples > kTupleBound)
          throw ResourceError("sury: n_max^" + std::to_string(s) + " exceeds " + std::to_string(kTupleBound));
    }
  }
}

IdentityReport run_sweep(const SweepConfig& config) {
  validate(config);
  const auto units = plan(config);
  std::vector<std::vector<IdentityRecord>> slots(units.size());

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= units.size()) return;
      try {
        slots[i] = run_unit(config, units[i]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(units.size());
      }
    }
  };
  const unsigned threads = std::min<std::size_t>(config.parallelism, std::max<std::size_t>(units.size(), 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  // No truncated reports: any failure aborts the whole sweep.
  if (error) std::rethrow_exception(error);

  IdentityReport report;
  report.config = config;
  std::size_t total = 0;
  for (const auto& s : slots) total += s.size();
  report.records.reserve(total);
  for (auto& s : slots) {
    report.records.insert(report.records.end(), s.begin(), s.end());
    std::vector<IdentityRecord>().swap(s);
  }
  finalize(report);
  return report;
}

IdentityReport reproduce_remark() {
  SweepConfig cfg;
  cfg.identity = Identity::strict_gen;
  cfg.n_max = 4;
  cfg.s_values = {2};
  const WorkUnit unit{4, 2};
  const auto chi = principal_character(4);
  const auto sum = generalized_sum(4, 2, chi);
  const i64 rhs = as_signed(klee_phi(4, 2) * tau_s(4 / conductor(chi), 2));
  if (sum.rounded != 5 || rhs != 6)
    throw IntegrityError("remark reproduction: expected lhs 5 and rhs 6, got " + std::to_string(sum.rounded) +
                         " and " + std::to_string(rhs));
  IdentityReport report;
  report.config = cfg;
  report.failures_expected = true;
  report.records.push_back(make_record(cfg, unit, sum.rounded, sum.residual, rhs, DirichletGroup(4).rank(chi)));
  finalize(report);
  return report;
}

IdentityReport search_counterexamples(u64 n_max, const std::vector<unsigned>& s_values, unsigned parallelism,
                                      double tolerance) {
  SweepConfig cfg;
  cfg.identity = Identity::strict_gen;
  cfg.n_max = n_max;
  cfg.s_values = s_values;
  cfg.parallelism = parallelism;
  cfg.tolerance = tolerance;
  IdentityReport report = run_sweep(cfg);
  std::erase_if(report.records, [](const IdentityRecord& r) { return r.status != Status::fail; });
  report.failures_expected = true;
  finalize(report);
  return report;
}

bool expectations_met(const IdentityReport& report) {
  return report.failures_expected || report.summary.fail == 0;
}

}  // namespace menon
