#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace sopra {

/// Typed integer identifier; the tag keeps activity, value, competence,
/// element and agent ids from being mixed up.
template <class Tag>
struct Id {
  std::uint32_t value = 0;

  constexpr Id() = default;
  constexpr explicit Id(std::uint32_t v) : value(v) {}
  constexpr std::size_t index() const noexcept { return value; }
  constexpr auto operator<=>(const Id&) const = default;
};

using ActivityId = Id<struct ActivityTag>;
using ValueId = Id<struct ValueTag>;
using CompetenceId = Id<struct CompetenceTag>;
using ElementId = Id<struct ElementTag>;
using AgentId = Id<struct AgentTag>;

}  // namespace sopra

template <class Tag>
struct std::hash<sopra::Id<Tag>> {
  std::size_t operator()(const sopra::Id<Tag>& id) const noexcept { return std::hash<std::uint32_t>{}(id.value); }
};
