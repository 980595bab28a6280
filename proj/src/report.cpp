#include "oscspec/report.hpp"

#include <ostream>

namespace oscspec {

void VerificationReport::add_check(std::string id, std::string anchor, bool ok,
                                   std::string measured, std::string expected, std::string note) {
  entries_.push_back({std::move(id), std::move(anchor), EntryKind::Check, ok, std::move(measured),
                      std::move(expected), std::move(note)});
}

void VerificationReport::add_discrepancy(std::string id, std::string anchor, std::string measured,
                                         std::string expected, std::string note) {
  entries_.push_back({std::move(id), std::move(anchor), EntryKind::Discrepancy, true,
                      std::move(measured), std::move(expected), std::move(note)});
}

void VerificationReport::add_info(std::string id, std::string anchor, std::string note) {
  entries_.push_back(
      {std::move(id), std::move(anchor), EntryKind::Info, true, "", "", std::move(note)});
}

void VerificationReport::merge(VerificationReport other) {
  entries_.insert(entries_.end(), std::make_move_iterator(other.entries_.begin()),
                  std::make_move_iterator(other.entries_.end()));
}

bool VerificationReport::passed() const {
  for (const auto& e : entries_)
    if (e.kind == EntryKind::Check && !e.ok) return false;
  return true;
}

std::size_t VerificationReport::check_count() const {
  std::size_t n = 0;
  for (const auto& e : entries_)
    if (e.kind == EntryKind::Check) ++n;
  return n;
}

std::size_t VerificationReport::failure_count() const {
  std::size_t n = 0;
  for (const auto& e : entries_)
    if (e.kind == EntryKind::Check && !e.ok) ++n;
  return n;
}

std::size_t VerificationReport::discrepancy_count() const {
  std::size_t n = 0;
  for (const auto& e : entries_)
    if (e.kind == EntryKind::Discrepancy) ++n;
  return n;
}

std::vector<const ReportEntry*> VerificationReport::failures() const {
  std::vector<const ReportEntry*> out;
  for (const auto& e : entries_)
    if (e.kind == EntryKind::Check && !e.ok) out.push_back(&e);
  return out;
}

std::vector<const ReportEntry*> VerificationReport::discrepancies() const {
  std::vector<const ReportEntry*> out;
  for (const auto& e : entries_)
    if (e.kind == EntryKind::Discrepancy) out.push_back(&e);
  return out;
}

void VerificationReport::print(std::ostream& os, bool verbose) const {
  for (const auto& e : entries_) {
    if (e.kind == EntryKind::Check) {
      if (!verbose && e.ok) continue;
      os << (e.ok ? "  ok    " : "  FAIL  ") << e.id << " [" << e.anchor << "]";
      if (!e.ok || verbose) {
        if (!e.measured.empty()) os << " measured=" << e.measured;
        if (!e.expected.empty()) os << " expected=" << e.expected;
      }
      if (!e.note.empty() && (verbose || !e.ok)) os << "  // " << e.note;
      os << '\n';
    } else if (e.kind == EntryKind::Discrepancy) {
      os << "  DISCREPANCY  " << e.id << " [" << e.anchor << "] measured=" << e.measured
         << " published=" << e.expected;
      if (!e.note.empty()) os << "  // " << e.note;
      os << '\n';
    } else if (verbose) {
      os << "  info  " << e.id << " [" << e.anchor << "] " << e.note << '\n';
    }
  }
}

}  // namespace oscspec
