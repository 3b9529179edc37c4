#pragma once

#include <string>
#include <vector>

namespace equiscore {

// Shortest round-trip decimal form of a double ("%.17g" trimmed). All CSV and
// SVG output goes through this so identical values serialize identically.
std::string fmt_double(double v);

std::string join_csv(const std::vector<std::string>& fields);

void write_text_file(const std::string& path, const std::string& contents);
std::string read_text_file(const std::string& path);

}  // namespace equiscore
