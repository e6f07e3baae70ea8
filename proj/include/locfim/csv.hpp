#pragma once

#include <charconv>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace locfim {

// Shortest round-trip decimal representation. All file output goes through
// this so repeated runs with identical inputs are byte-identical.
inline std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

inline std::string format_int(long long v) {
  char buf[24];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

inline void append_csv_field(std::string& row, std::string_view field) {
  if (!row.empty() && row.back() != '\n') row += ',';
  row += field;
}

// Writes `content` to `path` through a temporary file in the same directory;
// an unwritable path or a failed write leaves no partial file behind.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace locfim
