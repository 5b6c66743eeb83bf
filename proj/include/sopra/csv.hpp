#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "contagion.hpp"
#include "error.hpp"
#include "experiment.hpp"
#include "format.hpp"

namespace sopra {

inline constexpr const char* kTraceHeader = "tick,informed_count,rumour_acts,fact_acts";
inline constexpr const char* kTableHeader = "variant,level,replication,final_informed_fraction,t50,t90,t100";

/// One row per tick, LF line endings.
inline void write_csv(std::ostream& out, const MetricsTrace& trace) {
  out << kTraceHeader << '\n';
  for (const auto& r : trace.ticks)
    out << r.tick << ',' << r.informed_count << ',' << r.rumour_acts << ',' << r.fact_acts << '\n';
}

/// Data rows, then two rows per level summary with replication "mean" and
/// "sd". Unreached watermarks are empty fields.
inline void write_csv(std::ostream& out, const ExperimentTable& table) {
  auto opt = [](const std::optional<int>& t) { return t ? std::to_string(*t) : std::string(); };
  out << kTableHeader << '\n';
  for (const auto& r : table.rows) {
    out << to_string(r.variant) << ',' << r.level << ',' << r.replication << ','
        << format_double(r.final_informed_fraction);
    for (const auto& t : r.time_to_fraction) out << ',' << opt(t);
    out << '\n';
  }
  for (const auto& s : table.summaries) {
    for (const bool mean : {true, false}) {
      out << to_string(s.variant) << ',' << s.level << ',' << (mean ? "mean" : "sd") << ','
          << format_double(mean ? s.final_informed_fraction.mean : s.final_informed_fraction.sd);
      for (const auto& t : s.time_to_fraction) {
        out << ',';
        if (t) out << format_double(mean ? t->mean : t->sd);
      }
      out << '\n';
    }
  }
}

template <class T>
std::string to_csv(const T& data) {
  std::ostringstream os;
  write_csv(os, data);
  return os.str();
}

/// Writes the CSV to `path`, throwing IoError on any failure.
template <class T>
void export_csv(const T& data, const std::filesystem::path& path) {
  const std::string text = to_csv(data);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  f.close();
  if (!f) throw IoError("failed writing " + path.string());
}

}  // namespace sopra
