#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"
#include "practice_model.hpp"

namespace sopra {

struct OfficeSpec {
  int capacity = 1;
  Point position;
  bool operator==(const OfficeSpec&) const = default;
};

/// Physical layout of one organization: room centroids plus the office
/// each agent works in.
struct LayoutConfig {
  std::vector<OfficeSpec> offices;
  std::vector<Point> coffee_places;
  Point restaurant;
  Point hallway;
  std::vector<std::uint32_t> assignment;  // agent id -> office index

  void validate(std::size_t population) const {
    auto finite = [](Point p) { return std::isfinite(p.x) && std::isfinite(p.y); };
    if (offices.empty()) throw ConstraintError("layout needs at least one office");
    if (coffee_places.empty()) throw ConstraintError("layout needs at least one coffee place");
    if (!finite(restaurant) || !finite(hallway)) throw ConstraintError("layout coordinates must be finite");
    std::size_t capacity = 0;
    for (const auto& o : offices) {
      if (o.capacity < 1) throw ConstraintError("office capacity must be >= 1");
      if (!finite(o.position)) throw ConstraintError("layout coordinates must be finite");
      capacity += static_cast<std::size_t>(o.capacity);
    }
    for (const auto& c : coffee_places)
      if (!finite(c)) throw ConstraintError("layout coordinates must be finite");
    if (capacity < population) throw ConstraintError("office capacity is smaller than the population");
    if (assignment.size() != population) throw ConstraintError("every agent needs exactly one office");
    std::vector<int> load(offices.size(), 0);
    for (auto office : assignment) {
      if (office >= offices.size()) throw ConstraintError("agent assigned to an unknown office");
      if (++load[office] > offices[office].capacity) throw ConstraintError("office over capacity");
    }
  }

  bool operator==(const LayoutConfig&) const = default;
};

/// Knobs for the generated layouts.
struct LayoutParams {
  int office_capacity = 5;
  int coffee_places = 1;
  double grid_spacing = 10.0;  // metres between neighbouring office centroids

  void validate() const {
    if (office_capacity < 1) throw ConstraintError("layout.office_capacity must be >= 1");
    if (coffee_places < 1) throw ConstraintError("layout.coffee_places must be >= 1");
    if (!(grid_spacing > 0.0) || !std::isfinite(grid_spacing)) throw ConstraintError("layout.grid_spacing must be > 0");
  }

  bool operator==(const LayoutParams&) const = default;
};

/// ceil(population / capacity) offices on a near-square grid, filled in
/// agent-id order. The hallway sits one spacing below the grid, the
/// restaurant three below, and coffee places are spread evenly along a row
/// one spacing above it.
inline LayoutConfig make_layout(std::size_t population, int office_capacity, int coffee_places, double spacing) {
  LayoutParams{office_capacity, coffee_places, spacing}.validate();
  if (population < 1) throw ConstraintError("population must be >= 1");
  const std::size_t cap = static_cast<std::size_t>(office_capacity);
  const std::size_t n_offices = (population + cap - 1) / cap;
  const auto cols = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n_offices))));
  const std::size_t rows = (n_offices + cols - 1) / cols;
  const double width = static_cast<double>(cols - 1) * spacing;
  const double height = static_cast<double>(rows - 1) * spacing;

  LayoutConfig l;
  for (std::size_t k = 0; k < n_offices; ++k)
    l.offices.push_back({office_capacity, {static_cast<double>(k % cols) * spacing, static_cast<double>(k / cols) * spacing}});
  for (int j = 0; j < coffee_places; ++j)
    l.coffee_places.push_back({width * (j + 0.5) / coffee_places, height + spacing});
  l.hallway = {width / 2.0, -spacing};
  l.restaurant = {width / 2.0, -3.0 * spacing};
  for (std::size_t a = 0; a < population; ++a) l.assignment.push_back(static_cast<std::uint32_t>(a / cap));
  return l;
}

/// Nearest coffee place to a point; ties go to the lowest index.
inline std::uint32_t nearest_coffee_place(const LayoutConfig& l, Point from) {
  std::uint32_t best = 0;
  for (std::uint32_t j = 1; j < l.coffee_places.size(); ++j)
    if (squared_distance(from, l.coffee_places[j]) < squared_distance(from, l.coffee_places[best])) best = j;
  return best;
}

}  // namespace sopra
