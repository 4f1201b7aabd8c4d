#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "emverify/lie_heights.hpp"

namespace emverify {

/// One record per line:
///   name=phi{2,1} family=G2 rank=2 sign=+1 qpower=1 c=1 d=6 cyclo=2:2,3:1
/// Keys may appear in any order on input; serialization uses the order above.
/// Names carry no whitespace. `cyclo=` with an empty value is a pure q-power.
DegreeRecord parse_degree_record(const std::string& line);
std::string serialize_degree_record(const DegreeRecord& record);

/// Blank lines and lines starting with '#' are skipped. Errors name the file and line.
std::vector<DegreeRecord> load_degree_file(const std::filesystem::path& path);

/// EMVERIFY_DATA when set, otherwise the directory baked in at build time.
std::filesystem::path data_directory();

/// Every *.txt file of data_directory(), loaded once and cached.
const std::vector<DegreeRecord>& static_degree_records();

struct DataValidationReport {
  std::size_t records_checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Shape checks on a list of records of one family and rank: positive integral
/// values at q in {2,3,4,5,7,8,9}, prime factors of d among the bad primes,
/// c dividing |Z|, and (when `complete`) sum of squared values at q = 1 equal to
/// the order of the (relative) Weyl group.
DataValidationReport validate_records(const std::vector<DegreeRecord>& records, bool complete);

/// Validates the shipped static data plus the generated classical families up to rank 5.
DataValidationReport validate_degree_data();

}  // namespace emverify
