#include <algorithm>
#include <array>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "menon/characters.hpp"
#include "menon/errors.hpp"
#include "menon/harness.hpp"

namespace menon {
namespace {

using ordered_json = nlohmann::ordered_json;

// Labels need the character group of each record's modulus; records arrive
// grouped by n, so one cached group is enough.
class LabelCache {
 public:
  std::string label(const IdentityRecord& r) {
    if (r.chi_rank == kNoCharacter) return "";
    if (!group_ || group_->modulus() != r.n) group_.emplace(r.n);
    return group_->character(r.chi_rank).label();
  }

 private:
  std::optional<DirichletGroup> group_;
};

bool has_values(const IdentityRecord& r) { return r.status != Status::skipped; }

std::string identity_field(const IdentityRecord& r) {
  std::string out(to_string(r.identity));
  switch (r.identity) {
    case Identity::lemma31:
    case Identity::lemma33: return out + "(m=" + std::to_string(r.aux) + ")";
    case Identity::cohen_partition: return out + "(d=" + std::to_string(r.aux) + ")";
    default: return out;
  }
}

std::string residual_field(double residual) {
  if (residual < 1e-9) return "<1e-9";
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.3e", residual);
  return buf.data();
}

std::array<std::string, 8> row(const IdentityRecord& r, LabelCache& labels) {
  const bool v = has_values(r);
  return {identity_field(r),
          std::to_string(r.n),
          std::to_string(r.s),
          labels.label(r),
          v ? std::to_string(r.lhs) : "",
          v ? residual_field(r.residual) : "",
          v ? std::to_string(r.rhs) : "",
          std::string(to_string(r.status))};
}

constexpr std::array<const char*, 8> kColumns = {"identity", "n", "s", "chi", "lhs", "residual", "rhs", "status"};

std::string summary_line(const IdentityReport& report) {
  const auto& s = report.summary;
  return "pass=" + std::to_string(s.pass) + " fail=" + std::to_string(s.fail) +
         " skipped=" + std::to_string(s.skipped) + " total=" + std::to_string(s.total()) +
         " worst_residual=" + residual_field(report.worst_residual) +
         (report.failures_expected ? " (failures expected)" : "");
}

std::string format_text(const IdentityReport& report) {
  LabelCache labels;
  std::vector<std::array<std::string, 8>> rows;
  rows.reserve(report.records.size());
  std::array<std::size_t, 8> width{};
  for (std::size_t c = 0; c < kColumns.size(); ++c) width[c] = std::string_view(kColumns[c]).size();
  for (const auto& r : report.records) {
    rows.push_back(row(r, labels));
    for (std::size_t c = 0; c < width.size(); ++c) width[c] = std::max(width[c], rows.back()[c].size());
  }
  std::ostringstream out;
  auto emit = [&](const auto& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const std::string cell = cells[c];
      const bool left = c == 0 || c == 3 || c == 7;
      const std::string pad(width[c] - cell.size(), ' ');
      if (c > 0) out << "  ";
      if (left)
        out << cell << (c + 1 < cells.size() ? pad : "");
      else
        out << pad << cell;
    }
    out << '\n';
  };
  emit(kColumns);
  for (const auto& r : rows) emit(r);
  out << summary_line(report) << '\n';
  return out.str();
}

std::string format_csv(const IdentityReport& report) {
  LabelCache labels;
  std::string out = "identity,n,s,chi,lhs,residual,rhs,status\n";
  for (const auto& r : report.records) {
    const auto cells = row(r, labels);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) out += ',';
      // Labels contain ',' and ';'; always quote them.
      out += c == 3 ? "\"" + cells[c] + "\"" : cells[c];
    }
    out += '\n';
  }
  return out;
}

ordered_json config_json(const SweepConfig& cfg) {
  ordered_json j;
  j["identity"] = to_string(cfg.identity);
  j["n_max"] = cfg.n_max;
  j["s_values"] = cfg.s_values;
  j["tolerance"] = cfg.tolerance;
  j["output"] = to_string(cfg.output);
  j["parallelism"] = cfg.parallelism;
  return j;
}

std::string format_json(const IdentityReport& report) {
  LabelCache labels;
  std::string out = "{\n\"config\": " + config_json(report.config).dump() + ",\n\"records\": [";
  bool first = true;
  for (const auto& r : report.records) {
    ordered_json j;
    j["identity"] = to_string(r.identity);
    j["n"] = r.n;
    j["s"] = r.s;
    if (r.identity == Identity::lemma31 || r.identity == Identity::lemma33) j["m"] = r.aux;
    if (r.identity == Identity::cohen_partition) j["d"] = r.aux;
    j["chi"] = r.chi_rank == kNoCharacter ? ordered_json(nullptr) : ordered_json(labels.label(r));
    if (has_values(r)) {
      j["lhs"] = r.lhs;
      j["residual"] = r.residual;
      j["rhs"] = r.rhs;
    } else {
      j["lhs"] = nullptr;
      j["residual"] = nullptr;
      j["rhs"] = nullptr;
    }
    j["status"] = to_string(r.status);
    out += first ? "\n" : ",\n";
    out += j.dump();
    first = false;
  }
  out += first ? "],\n" : "\n],\n";
  ordered_json summary;
  summary["pass"] = report.summary.pass;
  summary["fail"] = report.summary.fail;
  summary["skipped"] = report.summary.skipped;
  summary["total"] = report.summary.total();
  summary["worst_residual"] = report.worst_residual;
  summary["failures_expected"] = report.failures_expected;
  out += "\"summary\": " + summary.dump() + "\n}\n";
  return out;
}

}  // namespace

std::string character_label(const IdentityRecord& r) {
  LabelCache labels;
  return labels.label(r);
}

std::string format_report(const IdentityReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::text: return format_text(report);
    case OutputFormat::csv: return format_csv(report);
    case OutputFormat::json: return format_json(report);
  }
  throw DomainError("unknown output format");
}

std::string format_char_table(u64 n, OutputFormat format) {
  if (n == 0) throw DomainError("char-table: modulus must be positive");
  if (n > kCharTableBound) throw ResourceError("char-table: modulus exceeds " + std::to_string(kCharTableBound));
  if (format == OutputFormat::text) throw DomainError("char-table: supported formats are csv and json");

  const DirichletGroup group(n);
  if (format == OutputFormat::csv) {
    std::string out = "chi,order,conductor,primitive";
    for (u64 k = 0; k < n; ++k) out += "," + std::to_string(k);
    out += '\n';
    for (u64 rank = 0; rank < group.size(); ++rank) {
      const auto chi = group.character(rank);
      const u64 d = conductor(chi);
      out += "\"" + chi.label() + "\"," + std::to_string(chi.order()) + "," + std::to_string(d) + "," +
             (d == n ? "true" : "false");
      for (u64 k = 0; k < n; ++k) out += "," + eval_character(chi, static_cast<i64>(k)).to_string();
      out += '\n';
    }
    return out;
  }

  ordered_json j;
  j["modulus"] = n;
  j["characters"] = ordered_json::array();
  for (u64 rank = 0; rank < group.size(); ++rank) {
    const auto chi = group.character(rank);
    const u64 d = conductor(chi);
    ordered_json c;
    c["chi"] = chi.label();
    c["order"] = chi.order();
    c["conductor"] = d;
    c["primitive"] = d == n;
    auto values = ordered_json::array();
    for (u64 k = 0; k < n; ++k) values.push_back(eval_character(chi, static_cast<i64>(k)).to_string());
    c["values"] = std::move(values);
    j["characters"].push_back(std::move(c));
  }
  return j.dump(2) + "\n";
}

}  // namespace menon
