#pragma once

// Formula audit: every canonical identity and every literal-vs-canonical
// comparison, grouped by property, with exact or decimal residuals.

#include <string>
#include <vector>

#include "dkap/config.hpp"
#include "dkap/table.hpp"

namespace dkap {

enum class EntryKind { canonical, literal };
enum class Status { exact_match, match_within_tol, mismatch };

std::string kind_name(EntryKind kind);
std::string status_name(Status status);

struct AuditEntry {
  std::string formula_id;  // unique within a report
  std::string anchor;      // what the formula is, in words
  std::string variant;
  EntryKind kind = EntryKind::canonical;
  Status status = Status::mismatch;
  std::string residual;    // exact fraction or decimal
  std::string notes;
};

struct AuditReport {
  std::vector<AuditEntry> entries;

  /// True when no canonical entry is a mismatch. Literal mismatches are expected.
  bool canonical_ok() const;
  /// Ordered by formula_id.
  void sort();
  Table to_table() const;
};

/// p1 p2 p3 p4 cross normalization limit scaling translation
const std::vector<std::string>& property_names();

/// Entries for one property; ConfigError for an unknown name.
AuditReport verify_property(const Config& config, const std::string& property);

/// All properties plus the literal-formula comparisons, sorted.
AuditReport run_audit(const Config& config);

}  // namespace dkap
