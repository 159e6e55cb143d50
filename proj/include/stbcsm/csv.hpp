#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "stbcsm/engine.hpp"

namespace stbcsm {

inline constexpr const char* kCsvHeader = "scheme,variant,n_t,n_r,mod,L,theta,snr_db,bits,errors,ber,seed";

/// One row: ber in scientific notation with 6 significant digits, LF line
/// endings, no trailing whitespace.
std::string csv_row(const BerRecord& r);

void write_csv(std::ostream& out, std::span<const BerRecord> records);
void write_csv_file(const std::string& path, std::span<const BerRecord> records);

/// Parses engine CSV. Throws Error naming the offending line on malformed
/// input. wall_seconds and channel_redraws are not persisted.
std::vector<BerRecord> read_csv(std::istream& in);

}  // namespace stbcsm
