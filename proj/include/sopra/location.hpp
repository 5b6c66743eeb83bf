#pragma once

#include <cstdint>
#include <string>

namespace sopra {

enum class LocationKind : std::uint8_t { Office, Hallway, Restaurant, CoffeePlace };

inline constexpr std::size_t kLocationKindCount = 4;

/// Where an agent is this tick. `place` indexes the office or coffee place
/// for those kinds and is 0 otherwise; `remaining` counts the ticks left in
/// the current stay (0 while at the office with no trip pending).
struct LocationState {
  LocationKind kind = LocationKind::Office;
  std::uint32_t place = 0;
  int remaining = 0;

  /// Same physical node, ignoring the dwell counter.
  bool same_node(const LocationState& o) const noexcept { return kind == o.kind && place == o.place; }
  bool operator==(const LocationState&) const = default;
};

inline LocationState office_at(std::uint32_t office) { return {LocationKind::Office, office, 0}; }

/// Edges of the movement graph: Office<->Hallway, Hallway<->Restaurant,
/// Hallway<->CoffeePlace. Staying on the same node is not a transition and
/// is always allowed.
inline bool is_valid_transition(const LocationState& from, const LocationState& to) noexcept {
  if (from.same_node(to)) return true;
  const bool from_hall = from.kind == LocationKind::Hallway;
  const bool to_hall = to.kind == LocationKind::Hallway;
  // Every edge has the hallway at exactly one end.
  return from_hall != to_hall;
}

inline std::string to_string(LocationKind k) {
  switch (k) {
    case LocationKind::Office: return "office";
    case LocationKind::Hallway: return "hallway";
    case LocationKind::Restaurant: return "restaurant";
    case LocationKind::CoffeePlace: return "coffee_place";
  }
  return "?";
}

inline std::string to_string(const LocationState& s) {
  std::string out = to_string(s.kind);
  if (s.kind == LocationKind::Office || s.kind == LocationKind::CoffeePlace) out += "#" + std::to_string(s.place);
  return out;
}

}  // namespace sopra
