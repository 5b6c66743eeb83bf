#pragma once

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "error.hpp"
#include "format.hpp"
#include "practice_model.hpp"
#include "scenario.hpp"

namespace sopra {

// Scenario files are INI documents: [scenario], [schedule], [frequencies],
// [values], [habits] and [layout] sections of `key = value` lines. Lists are
// comma separated. Lines starting with ';' or '#' are comments. Absent keys
// keep their defaults; unknown sections or keys are rejected.

namespace config_detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  if (trim(s).empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = s.find(',', start);
    out.push_back(trim(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <class T>
T parse_number(const std::string& key, std::string_view text) {
  const std::string t = trim(text);
  T v{};
  const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc{} || end != t.data() + t.size())
    throw ParseError(key + ": cannot parse '" + t + "' as a number");
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(v)) throw ParseError(key + ": value must be finite");
  }
  return v;
}

inline int parse_int(const std::string& key, std::string_view text) {
  const auto v = parse_number<long long>(key, text);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw ConstraintError(key + ": value out of range");
  return static_cast<int>(v);
}

inline bool parse_bool(const std::string& key, std::string_view text) {
  const std::string t = trim(text);
  if (t == "true" || t == "1") return true;
  if (t == "false" || t == "0") return false;
  throw ParseError(key + ": expected true or false, got '" + t + "'");
}

inline std::vector<double> parse_doubles(const std::string& key, std::string_view text) {
  std::vector<double> out;
  for (const auto& item : split_list(text)) out.push_back(parse_number<double>(key, item));
  return out;
}

template <class T>
std::string join(const T& items, auto&& fmt) {
  std::string out;
  for (const auto& it : items) {
    if (!out.empty()) out += ',';
    out += fmt(it);
  }
  return out;
}

using Setter = std::function<void(ScenarioConfig&, const std::string& key, std::string_view value)>;

inline const std::map<std::string, Setter, std::less<>>& fixed_keys() {
  static const std::map<std::string, Setter, std::less<>> keys = [] {
    std::map<std::string, Setter, std::less<>> k;
    auto as_int = [](int ScenarioConfig::*f) {
      return [f](ScenarioConfig& c, const std::string& key, std::string_view v) { c.*f = parse_int(key, v); };
    };
    auto as_double = [](double ScenarioConfig::*f) {
      return [f](ScenarioConfig& c, const std::string& key, std::string_view v) {
        c.*f = parse_number<double>(key, v);
      };
    };
    k["scenario.agent_count"] = as_int(&ScenarioConfig::agent_count);
    k["scenario.seed_informed"] = as_int(&ScenarioConfig::seed_informed);
    k["scenario.p_transmit"] = as_double(&ScenarioConfig::p_transmit);
    k["scenario.habit_threshold"] = as_double(&ScenarioConfig::habit_threshold);
    k["scenario.conversation_radius"] = as_double(&ScenarioConfig::conversation_radius);
    k["scenario.days"] = as_int(&ScenarioConfig::days);
    k["scenario.mutual_talk_required"] = [](ScenarioConfig& c, const std::string& key, std::string_view v) {
      c.mutual_talk_required = parse_bool(key, v);
    };
    k["scenario.seed"] = [](ScenarioConfig& c, const std::string& key, std::string_view v) {
      c.seed = parse_number<std::uint64_t>(key, v);
    };

    k["schedule.day_length"] = [](ScenarioConfig& c, const std::string& key, std::string_view v) {
      c.schedule.day_length = parse_int(key, v);
    };
    k["schedule.lunch_mean"] = [](ScenarioConfig& c, const std::string& key, std::string_view v) {
      c.schedule.lunch_mean = parse_number<double>(key, v);
    };
    k["schedule.lunch_sd"] = [](ScenarioConfig& c, const std::string& key, std::string_view v) {
      c.schedule.lunch_sd = parse_number<double>(key, v);
    };
    k["schedule.lunch_dwell"] = [](ScenarioConfig& c, const std::string& key, std::string_view v) {
      c.schedule.lunch_dwell = parse_int(key, v);
    };
    k["schedule.coffee_means"] = [](ScenarioConfig& c, const std::string& key, std::string_view v) {
      c.schedule.coffee_means = parse_doubles(key, v);
    };
    k["schedule.coffee_sd"] = [](ScenarioConfig& c, const std::string& key, std::string_view v) {
      c.schedule.coffee_sd = parse_number<double>(key, v);
    };
    k["schedule.coffee_dwell"] = [](ScenarioConfig& c, const std::string& key, std::string_view v) {
      c.schedule.coffee_dwell = parse_int(key, v);
    };
    k["schedule.hallway_transit"] = [](ScenarioConfig& c, const std::string& key, std::string_view v) {
      c.schedule.hallway_transit = parse_int(key, v);
    };

    k["frequencies.agent_competence_prob"] = [](ScenarioConfig& c, const std::string& key, std::string_view v) {
      c.frequencies.agent_competence_prob = parse_number<double>(key, v);
    };

    k["values.mean"] = as_double(&ScenarioConfig::value_mean);
    k["values.sd"] = as_double(&ScenarioConfig::value_sd);
    k["values.related_mean"] = as_double(&ScenarioConfig::related_value_mean);
    k["values.related_sd"] = as_double(&ScenarioConfig::related_value_sd);
    k["values.correlation"] = [](ScenarioConfig& c, const std::string& key, std::string_view v) {
      auto entries = parse_doubles(key, v);
      const auto dim = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(entries.size()))));
      if (dim * dim != entries.size() || dim == 0)
        throw ConstraintError(key + ": expected a square number of entries, got " + std::to_string(entries.size()));
      try {
        c.value_correlation = ValueCorrelationMatrix::from_entries(dim, std::move(entries));
      } catch (const ConstraintError& e) {
        throw ConstraintError(key + ": " + e.what());
      }
    };

    k["habits.log_mean"] = as_double(&ScenarioConfig::habit_log_mean);
    k["habits.log_sd"] = as_double(&ScenarioConfig::habit_log_sd);

    k["layout.office_capacity"] = [](ScenarioConfig& c, const std::string& key, std::string_view v) {
      c.layout.office_capacity = parse_int(key, v);
    };
    k["layout.coffee_places"] = [](ScenarioConfig& c, const std::string& key, std::string_view v) {
      c.layout.coffee_places = parse_int(key, v);
    };
    k["layout.grid_spacing"] = [](ScenarioConfig& c, const std::string& key, std::string_view v) {
      c.layout.grid_spacing = parse_number<double>(key, v);
    };
    return k;
  }();
  return keys;
}

inline bool is_section(std::string_view s) {
  for (std::string_view known : {"scenario", "schedule", "frequencies", "values", "habits", "layout"})
    if (s == known) return true;
  return false;
}

/// Keys of the form competence.<activity>.<competence>, triggers.<activity>
/// and values.<activity> in [frequencies].
inline bool apply_frequency_key(ScenarioConfig& c, const Catalogue& cat, const std::string& full_key,
                                std::string_view key, std::string_view value) {
  auto activity = [&](std::string_view name) {
    auto a = cat.find_activity(name);
    if (!a) throw UnknownKeyError("unknown key " + full_key + ": no activity named '" + std::string(name) + "'");
    return *a;
  };
  if (key.starts_with("competence.")) {
    const auto rest = key.substr(11);
    const auto dot = rest.find('.');
    if (dot == std::string_view::npos) throw UnknownKeyError("unknown key " + full_key);
    const ActivityId a = activity(rest.substr(0, dot));
    const auto comp = cat.find_competence(rest.substr(dot + 1));
    if (!comp) throw UnknownKeyError("unknown key " + full_key + ": no such competence");
    c.frequencies.competence_belief[{a, *comp}] = parse_number<double>(full_key, value);
    return true;
  }
  if (key.starts_with("triggers.")) {
    const ActivityId a = activity(key.substr(9));
    std::set<ElementCategory> cats;
    for (const auto& name : split_list(value)) {
      auto ec = parse_element_category(name);
      if (!ec) throw ConstraintError(full_key + ": unknown context element category '" + name + "'");
      cats.insert(*ec);
    }
    c.frequencies.trigger_categories[a] = std::move(cats);
    return true;
  }
  if (key.starts_with("values.")) {
    const ActivityId a = activity(key.substr(7));
    std::set<ValueId> vals;
    for (const auto& name : split_list(value)) {
      auto v = cat.find_value(name);
      if (!v) throw ConstraintError(full_key + ": unknown value '" + name + "'");
      vals.insert(*v);
    }
    c.frequencies.value_links[a] = std::move(vals);
    return true;
  }
  return false;
}

}  // namespace config_detail

/// Parses and validates a scenario document. Throws ParseError,
/// UnknownKeyError or ConstraintError.
inline ScenarioConfig parse_config(std::istream& in, const Catalogue& cat = Catalogue::standard()) {
  namespace pt = boost::property_tree;
  using namespace config_detail;

  // The INI reader only knows ';' comments; blank out '#' lines in place so
  // reported line numbers stay right.
  std::ostringstream filtered;
  for (std::string line; std::getline(in, line);) {
    const auto first = line.find_first_not_of(" \t");
    filtered << (first != std::string::npos && line[first] == '#' ? "" : line) << '\n';
  }
  std::istringstream text(filtered.str());
  pt::ptree tree;
  try {
    pt::read_ini(text, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ParseError("line " + std::to_string(e.line()) + ": " + e.message());
  }

  ScenarioConfig c;
  for (const auto& [section, body] : tree) {
    if (!is_section(section)) {
      if (body.empty() && !body.data().empty()) throw UnknownKeyError("unknown key '" + section + "' outside a section");
      throw UnknownKeyError("unknown section [" + section + "]");
    }
    for (const auto& [key, node] : body) {
      const std::string full = section + "." + key;
      const std::string& value = node.data();
      if (auto it = fixed_keys().find(full); it != fixed_keys().end()) {
        it->second(c, full, value);
      } else if (section == "frequencies" && apply_frequency_key(c, cat, full, key, value)) {
      } else {
        throw UnknownKeyError("unknown key " + full);
      }
    }
  }
  c.validate(cat);
  return c;
}

inline ScenarioConfig parse_config(const std::string& text, const Catalogue& cat = Catalogue::standard()) {
  std::istringstream in(text);
  return parse_config(in, cat);
}

inline ScenarioConfig load_config(const std::filesystem::path& path, const Catalogue& cat = Catalogue::standard()) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file " + path.string());
  return parse_config(in, cat);
}

/// Every key with its resolved value, in a form parse_config reads back to
/// an equal config.
inline std::string serialize_config(const ScenarioConfig& c, const Catalogue& cat = Catalogue::standard()) {
  using config_detail::join;
  std::ostringstream o;
  auto d = [](double v) { return format_double(v); };
  o << "[scenario]\n"
    << "agent_count = " << c.agent_count << '\n'
    << "seed_informed = " << c.seed_informed << '\n'
    << "p_transmit = " << d(c.p_transmit) << '\n'
    << "habit_threshold = " << d(c.habit_threshold) << '\n'
    << "conversation_radius = " << d(c.conversation_radius) << '\n'
    << "days = " << c.days << '\n'
    << "mutual_talk_required = " << (c.mutual_talk_required ? "true" : "false") << '\n'
    << "seed = " << c.seed << '\n';

  const auto& s = c.schedule;
  o << "\n[schedule]\n"
    << "day_length = " << s.day_length << '\n'
    << "lunch_mean = " << d(s.lunch_mean) << '\n'
    << "lunch_sd = " << d(s.lunch_sd) << '\n'
    << "lunch_dwell = " << s.lunch_dwell << '\n'
    << "coffee_means = " << join(s.coffee_means, d) << '\n'
    << "coffee_sd = " << d(s.coffee_sd) << '\n'
    << "coffee_dwell = " << s.coffee_dwell << '\n'
    << "hallway_transit = " << s.hallway_transit << '\n';

  const auto& f = c.frequencies;
  o << "\n[frequencies]\n"
    << "agent_competence_prob = " << d(f.agent_competence_prob) << '\n';
  for (const auto& [key, p] : f.competence_belief)
    o << "competence." << cat.activity(key.first).name << '.' << cat.competences()[key.second.index()].name << " = "
      << d(p) << '\n';
  for (const auto& [a, cats] : f.trigger_categories)
    o << "triggers." << cat.activity(a).name << " = "
      << join(cats, [](ElementCategory e) { return std::string(to_string(e)); }) << '\n';
  for (const auto& [a, vals] : f.value_links)
    o << "values." << cat.activity(a).name << " = "
      << join(vals, [&](ValueId v) { return cat.values()[v.index()].name; }) << '\n';

  o << "\n[values]\n"
    << "mean = " << d(c.value_mean) << '\n'
    << "sd = " << d(c.value_sd) << '\n'
    << "related_mean = " << d(c.related_value_mean) << '\n'
    << "related_sd = " << d(c.related_value_sd) << '\n'
    << "correlation = " << join(c.value_correlation.entries(), d) << '\n';

  o << "\n[habits]\n"
    << "log_mean = " << d(c.habit_log_mean) << '\n'
    << "log_sd = " << d(c.habit_log_sd) << '\n';

  o << "\n[layout]\n"
    << "office_capacity = " << c.layout.office_capacity << '\n'
    << "coffee_places = " << c.layout.coffee_places << '\n'
    << "grid_spacing = " << d(c.layout.grid_spacing) << '\n';
  return o.str();
}

}  // namespace sopra
