#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace sopra {

/// Shortest decimal text that reads back to the same double; locale free.
inline std::string format_double(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

}  // namespace sopra
