#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace oscspec {

enum class EntryKind { Check, Discrepancy, Info };

/// One verified fact, one recorded mismatch, or one informational note.
/// `anchor` is the wire-format identifier the entry is keyed by in JSON
/// output (e.g. "H2", "rk:eta", "thm:isom-ell1").
struct ReportEntry {
  std::string id;
  std::string anchor;
  EntryKind kind = EntryKind::Check;
  bool ok = true;  // meaningful for Check entries only
  std::string measured;
  std::string expected;
  std::string note;
};

class VerificationReport {
public:
  void add_check(std::string id, std::string anchor, bool ok, std::string measured = "",
                 std::string expected = "", std::string note = "");
  void add_discrepancy(std::string id, std::string anchor, std::string measured,
                       std::string expected, std::string note = "");
  void add_info(std::string id, std::string anchor, std::string note);

  void merge(VerificationReport other);

  const std::vector<ReportEntry>& entries() const { return entries_; }
  /// True when every Check entry passed; Discrepancy and Info entries do
  /// not affect the outcome.
  bool passed() const;
  std::size_t check_count() const;
  std::size_t failure_count() const;
  std::size_t discrepancy_count() const;

  std::vector<const ReportEntry*> failures() const;
  std::vector<const ReportEntry*> discrepancies() const;

  void print(std::ostream& os, bool verbose = false) const;

private:
  std::vector<ReportEntry> entries_;
};

}  // namespace oscspec
