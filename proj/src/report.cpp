#include "emverify/report.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

namespace emverify {

VerificationRecord VerificationRecord::compare(std::string target, std::string block, MinHeight mhB, MinHeight mhD,
                                               std::string provenance) {
  VerificationRecord r;
  r.target = std::move(target);
  r.block = std::move(block);
  r.status = mhB == mhD ? Status::match : Status::mismatch;
  r.mhB = mhB;
  r.mhD = mhD;
  r.provenance = std::move(provenance);
  return r;
}

VerificationRecord VerificationRecord::skip(std::string target, std::string block, std::string reason,
                                            std::string provenance) {
  VerificationRecord r;
  r.target = std::move(target);
  r.block = std::move(block);
  r.status = Status::skipped;
  r.reason = std::move(reason);
  r.provenance = std::move(provenance);
  return r;
}

void Report::append(Report other) {
  records.insert(records.end(), std::make_move_iterator(other.records.begin()),
                 std::make_move_iterator(other.records.end()));
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      std::size_t ei = i, ej = j;
      while (ei < a.size() && std::isdigit(static_cast<unsigned char>(a[ei]))) ++ei;
      while (ej < b.size() && std::isdigit(static_cast<unsigned char>(b[ej]))) ++ej;
      std::string na = a.substr(i, ei - i), nb = b.substr(j, ej - j);
      na.erase(0, std::min(na.find_first_not_of('0'), na.size()));
      nb.erase(0, std::min(nb.find_first_not_of('0'), nb.size()));
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      if (ei - i != ej - j) return ei - i < ej - j;
      i = ei;
      j = ej;
    } else {
      if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]);
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

void Report::sort() {
  std::stable_sort(records.begin(), records.end(), [](const VerificationRecord& x, const VerificationRecord& y) {
    if (x.target != y.target) return natural_less(x.target, y.target);
    return natural_less(x.block, y.block);
  });
}

std::size_t Report::count(Status status) const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [status](const auto& r) { return r.status == status; }));
}

std::string status_string(const VerificationRecord& r) {
  switch (r.status) {
    case Status::match: return "match";
    case Status::mismatch: return "mismatch";
    case Status::skipped: return "skipped(" + r.reason + ")";
  }
  return {};
}

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw std::invalid_argument("unknown format '" + name + "'");
}

namespace {

std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::ordered_json height_json(const VerificationRecord& r, const MinHeight& h) {
  if (r.status == Status::skipped) return nullptr;
  if (h.is_infinite()) return "infinity";
  return h.value();
}

void write_text(std::ostream& out, const Report& report) {
  const std::vector<std::string> header = {"target", "block", "mhB", "mhD", "status", "provenance"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : report.records) {
    const bool skipped = r.status == Status::skipped;
    rows.push_back({r.target, r.block, skipped ? "-" : r.mhB.to_display(), skipped ? "-" : r.mhD.to_display(),
                    status_string(r), r.provenance + (r.detail.empty() ? "" : "  [" + r.detail + "]")});
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = display_width(header[c]);
    for (const auto& row : rows) width[c] = std::max(width[c], display_width(row[c]));
  }
  auto emit = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - display_width(row[c]) + 2, ' ');
    }
    out << line << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  out << report.records.size() << " records: " << report.count(Status::match) << " match, "
      << report.count(Status::mismatch) << " mismatch, " << report.count(Status::skipped) << " skipped\n";
  for (const auto& v : report.violations) out << "violation: " << v << '\n';
}

}  // namespace

void write_report(std::ostream& out, const Report& report, Format format) {
  switch (format) {
    case Format::text:
      write_text(out, report);
      break;
    case Format::json:
      for (const auto& r : report.records) {
        nlohmann::ordered_json j;
        j["target"] = r.target;
        j["block"] = r.block;
        j["mhB"] = height_json(r, r.mhB);
        j["mhD"] = height_json(r, r.mhD);
        j["status"] = r.status == Status::match ? "match" : r.status == Status::mismatch ? "mismatch" : "skipped";
        if (!r.reason.empty()) j["reason"] = r.reason;
        j["provenance"] = r.provenance;
        if (!r.detail.empty()) j["detail"] = r.detail;
        out << j.dump() << '\n';
      }
      for (const auto& v : report.violations) out << nlohmann::ordered_json{{"violation", v}}.dump() << '\n';
      break;
    case Format::csv:
      out << "target,block,mhB,mhD,status\n";
      for (const auto& r : report.records) {
        const bool skipped = r.status == Status::skipped;
        out << csv_field(r.target) << ',' << csv_field(r.block) << ',' << (skipped ? "" : r.mhB.to_string()) << ','
            << (skipped ? "" : r.mhD.to_string()) << ',' << csv_field(status_string(r)) << '\n';
      }
      break;
  }
}

}  // namespace emverify
