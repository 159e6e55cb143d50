#include "stbcsm/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "stbcsm/error.hpp"

namespace stbcsm {

std::string csv_row(const BerRecord& r) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%s,%s,%d,%d,%s,%d,%.6f,%g,%llu,%llu,%.5e,%llu", to_string(r.scheme).c_str(),
                to_string(r.variant).c_str(), r.n_t, r.n_r, r.modulation.c_str(), r.elements, r.theta, r.snr_db,
                static_cast<unsigned long long>(r.bits), static_cast<unsigned long long>(r.errors), r.ber,
                static_cast<unsigned long long>(r.seed));
  return buf;
}

void write_csv(std::ostream& out, std::span<const BerRecord> records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) out << csv_row(r) << '\n';
}

void write_csv_file(const std::string& path, std::span<const BerRecord> records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  write_csv(out, records);
  if (!out) throw Error("failed writing '" + path + "'");
}

std::vector<BerRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw Error("line 1: missing or wrong CSV header");
  std::vector<BerRecord> out;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) f.push_back(item);
    if (f.size() != 12) throw Error("line " + std::to_string(line_no) + ": expected 12 fields");
    try {
      BerRecord r;
      r.scheme = parse_scheme(f[0]);
      r.variant = parse_variant(f[1]);
      r.n_t = std::stoi(f[2]);
      r.n_r = std::stoi(f[3]);
      r.modulation = f[4];
      r.elements = std::stoi(f[5]);
      r.theta = std::stod(f[6]);
      r.snr_db = std::stod(f[7]);
      r.bits = std::stoull(f[8]);
      r.errors = std::stoull(f[9]);
      r.ber = std::stod(f[10]);
      r.seed = std::stoull(f[11]);
      out.push_back(r);
    } catch (const std::exception& e) {
      throw Error("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace stbcsm
