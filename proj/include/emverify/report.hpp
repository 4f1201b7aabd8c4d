#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "emverify/min_height.hpp"

namespace emverify {

enum class Status { match, mismatch, skipped };

struct VerificationRecord {
  std::string target;  // "S12 p=2", "C3(4)", "Y(q=3)"
  std::string block;   // "core=(1) w=3", "principal", "sylow"
  MinHeight mhB;
  MinHeight mhD;
  Status status = Status::match;
  std::string reason;      // set for skipped records
  std::string provenance;  // modules behind mhB / mhD
  std::string detail;      // free-form extra facts, may be empty

  /// match or mismatch from mhB == mhD.
  static VerificationRecord compare(std::string target, std::string block, MinHeight mhB, MinHeight mhD,
                                    std::string provenance);
  static VerificationRecord skip(std::string target, std::string block, std::string reason,
                                 std::string provenance);
};

struct Report {
  std::vector<VerificationRecord> records;
  std::vector<std::string> violations;  // failed invariants, independent of records

  void append(Report other);
  /// Stable order: target, then block id, digit runs compared as numbers.
  void sort();
  std::size_t count(Status status) const;
  bool ok() const { return violations.empty() && count(Status::mismatch) == 0; }
};

/// Compares strings with runs of digits ordered numerically ("S9" < "S10").
bool natural_less(const std::string& a, const std::string& b);

std::string status_string(const VerificationRecord& record);

enum class Format { text, json, csv };
Format parse_format(const std::string& name);

/// text: aligned table, then violations; json: one object per line, records
/// first, then {"violation": ...} lines; csv: header target,block,mhB,mhD,status.
void write_report(std::ostream& out, const Report& report, Format format);

}  // namespace emverify
