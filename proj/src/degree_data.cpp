#include "emverify/degree_data.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#ifndef EMVERIFY_DEFAULT_DATA_DIR
#define EMVERIFY_DEFAULT_DATA_DIR "data"
#endif

namespace emverify {

namespace {

constexpr const char* kKeys[] = {"name", "family", "rank", "sign", "qpower", "c", "d", "cyclo"};

int parse_int(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw std::invalid_argument("bad integer for " + key + ": '" + text + "'");
  return value;
}

std::map<int, int> parse_cyclo(const std::string& text) {
  std::map<int, int> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("cyclotomic factor '" + item + "' lacks ':'");
    const int e = parse_int("cyclo index", item.substr(0, colon));
    const int m = parse_int("cyclo multiplicity", item.substr(colon + 1));
    if (e < 1 || m < 1) throw std::invalid_argument("cyclotomic factor '" + item + "' out of range");
    if (!out.emplace(e, m).second) throw std::invalid_argument("repeated cyclotomic index " + std::to_string(e));
  }
  return out;
}

}  // namespace

DegreeRecord parse_degree_record(const std::string& line) {
  std::map<std::string, std::string> fields;
  std::istringstream in(line);
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("token '" + token + "' is not key=value");
    const std::string key = token.substr(0, eq);
    if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys))
      throw std::invalid_argument("unknown key '" + key + "'");
    if (!fields.emplace(key, token.substr(eq + 1)).second) throw std::invalid_argument("repeated key '" + key + "'");
  }
  for (const char* key : kKeys)
    if (!fields.count(key)) throw std::invalid_argument(std::string("missing key '") + key + "'");

  DegreeRecord rec;
  rec.name = fields["name"];
  if (rec.name.empty()) throw std::invalid_argument("empty record name");
  rec.family = parse_lie_family(fields["family"]);
  rec.rank = parse_int("rank", fields["rank"]);
  const std::string& sign = fields["sign"];
  if (sign != "+1" && sign != "-1") throw std::invalid_argument("sign must be +1 or -1");
  rec.degree.sign = sign == "+1" ? 1 : -1;
  rec.degree.q_power = parse_int("qpower", fields["qpower"]);
  rec.degree.c = parse_int("c", fields["c"]);
  rec.degree.d = parse_int("d", fields["d"]);
  if (rec.degree.q_power < 0 || rec.degree.c < 1 || rec.degree.d < 1)
    throw std::invalid_argument("qpower must be >= 0 and c, d positive");
  rec.degree.factors = parse_cyclo(fields["cyclo"]);
  return rec;
}

std::string serialize_degree_record(const DegreeRecord& r) {
  std::string cyclo;
  for (const auto& [e, m] : r.degree.factors) {
    if (!cyclo.empty()) cyclo += ',';
    cyclo += std::to_string(e) + ':' + std::to_string(m);
  }
  return "name=" + r.name + " family=" + to_string(r.family) + " rank=" + std::to_string(r.rank) +
         " sign=" + (r.degree.sign > 0 ? "+1" : "-1") + " qpower=" + std::to_string(r.degree.q_power) +
         " c=" + std::to_string(r.degree.c) + " d=" + std::to_string(r.degree.d) + " cyclo=" + cyclo;
}

std::vector<DegreeRecord> load_degree_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read degree data file " + path.string());
  std::vector<DegreeRecord> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    try {
      out.push_back(parse_degree_record(line));
    } catch (const std::exception& e) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::filesystem::path data_directory() {
  if (const char* env = std::getenv("EMVERIFY_DATA"); env && *env) return env;
  return EMVERIFY_DEFAULT_DATA_DIR;
}

const std::vector<DegreeRecord>& static_degree_records() {
  static std::once_flag once;
  static std::vector<DegreeRecord> records;
  std::call_once(once, [] {
    const auto dir = data_directory();
    if (!std::filesystem::is_directory(dir))
      throw std::runtime_error("degree data directory " + dir.string() + " does not exist");
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
      if (entry.path().extension() == ".txt") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
      auto part = load_degree_file(file);
      records.insert(records.end(), part.begin(), part.end());
    }
  });
  return records;
}

DataValidationReport validate_records(const std::vector<DegreeRecord>& records, bool complete) {
  DataValidationReport report;
  if (records.empty()) return report;
  const LieFamily family = records.front().family;
  const int rank = records.front().rank;
  const auto bad = bad_primes(family);
  const std::int64_t z = center_order(family, rank);
  BigInt mass = 0;
  int steinberg = 0;
  const int n_pos = positive_roots(family, rank);
  for (const auto& rec : records) {
    ++report.records_checked;
    const std::string tag = to_string(family) + std::to_string(rank) + " " + rec.name + ": ";
    if (rec.family != family || rec.rank != rank) report.violations.push_back(tag + "mixed family or rank");
    for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
      try {
        rec.degree.specialize(q);
      } catch (const std::exception& e) {
        report.violations.push_back(tag + e.what());
      }
    }
    std::int64_t d = rec.degree.d;
    for (auto p : bad)
      while (d % p == 0) d /= p;
    if (d != 1) report.violations.push_back(tag + "denominator d has a good prime factor");
    if (z % rec.degree.c != 0) report.violations.push_back(tag + "c does not divide |Z|");
    if (rec.degree.is_pure_q_power() && rec.degree.q_power == n_pos) ++steinberg;
    if (complete) {
      try {
        const BigInt at_one = rec.degree.evaluate(1);
        mass += at_one * at_one;
      } catch (const std::exception& e) {
        report.violations.push_back(tag + "value at q = 1: " + e.what());
      }
    }
  }
  if (complete) {
    const BigInt w = weyl_group_order(family, rank);
    if (mass != w)
      report.violations.push_back(to_string(family) + std::to_string(rank) + ": sum of squares at q = 1 is " +
                                  mass.str() + ", Weyl group order " + w.str());
    if (steinberg != 1)
      report.violations.push_back(to_string(family) + std::to_string(rank) + ": " + std::to_string(steinberg) +
                                  " degrees equal q^" + std::to_string(n_pos));
  }
  return report;
}

DataValidationReport validate_degree_data() {
  DataValidationReport total;
  auto merge = [&total](const DataValidationReport& r) {
    total.records_checked += r.records_checked;
    total.violations.insert(total.violations.end(), r.violations.begin(), r.violations.end());
  };
  for (LieFamily family : {LieFamily::G2, LieFamily::D4_3}) merge(validate_records(unipotent_degrees(family, fixed_rank(family)), true));
  for (int rank = 2; rank <= 5; ++rank) {
    merge(validate_records(unipotent_degrees(LieFamily::A, rank), true));
    merge(validate_records(unipotent_degrees(LieFamily::A2, rank), true));
    merge(validate_records(unipotent_degrees(LieFamily::B, rank), true));
    merge(validate_records(unipotent_degrees(LieFamily::C, rank), true));
  }
  for (int rank = 4; rank <= 5; ++rank) {
    merge(validate_records(unipotent_degrees(LieFamily::D, rank), true));
    merge(validate_records(unipotent_degrees(LieFamily::D2, rank), true));
  }
  return total;
}

}  // namespace emverify
