#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "error.hpp"
#include "layout.hpp"
#include "location.hpp"
#include "practice_model.hpp"

namespace sopra {

/// Context elements of a layout plus the agents moving through it.
///
/// Element ids are laid out as: one place element per location node
/// (offices, hallway, restaurant, coffee places, in that order so element id
/// == node index), then resources (phone, computer and pen in every office,
/// coffee at every coffee place), then one AgentRef per agent in agent-id
/// order. Agents stand on their node's centroid, so proximity between nodes
/// and from nodes to static elements is precomputed once.
class World {
 public:
  World(LayoutConfig layout, std::size_t population, double radius)
      : layout_(std::move(layout)), population_(population), radius_(radius) {
    layout_.validate(population_);
    if (!(radius_ >= 0.0)) throw ConstraintError("conversation radius must be >= 0");
    const auto n_offices = layout_.offices.size();
    for (const auto& o : layout_.offices) add(ElementKind::Place, ElementCategory::Office, o.position);
    add(ElementKind::Place, ElementCategory::Hallway, layout_.hallway);
    add(ElementKind::Place, ElementCategory::Restaurant, layout_.restaurant);
    for (const auto& c : layout_.coffee_places) add(ElementKind::Place, ElementCategory::CoffeePlace, c);
    node_count_ = elements_.size();
    for (std::size_t o = 0; o < n_offices; ++o)
      for (auto cat : {ElementCategory::Phone, ElementCategory::Computer, ElementCategory::Pen})
        add(ElementKind::Resource, cat, layout_.offices[o].position);
    for (const auto& c : layout_.coffee_places) add(ElementKind::Resource, ElementCategory::Coffee, c);
    first_agent_element_ = elements_.size();
    for (std::size_t a = 0; a < population_; ++a) {
      const auto office = layout_.assignment[a];
      add(ElementKind::AgentRef, ElementCategory::Agent, layout_.offices[office].position);
      coffee_of_agent_.push_back(nearest_coffee_place(layout_, layout_.offices[office].position));
    }

    const double r2 = radius_ * radius_;
    static_near_.resize(node_count_);
    nodes_near_.resize(node_count_);
    for (std::size_t n = 0; n < node_count_; ++n) {
      const Point c = elements_[n].position;
      for (std::size_t e = 0; e < first_agent_element_; ++e)
        if (squared_distance(c, elements_[e].position) <= r2) static_near_[n].push_back(ElementId{static_cast<std::uint32_t>(e)});
      for (std::size_t m = 0; m < node_count_; ++m)
        if (m == n || squared_distance(c, elements_[m].position) <= r2) nodes_near_[n].push_back(static_cast<std::uint32_t>(m));
    }
    occupants_.resize(node_count_);
  }

  const LayoutConfig& layout() const noexcept { return layout_; }
  std::size_t population() const noexcept { return population_; }
  double radius() const noexcept { return radius_; }
  std::span<const ContextElement> elements() const noexcept { return elements_; }
  std::size_t node_count() const noexcept { return node_count_; }

  ElementId agent_element(AgentId a) const { return ElementId{static_cast<std::uint32_t>(first_agent_element_ + a.index())}; }

  std::optional<AgentId> agent_of(ElementId e) const {
    if (e.index() < first_agent_element_ || e.index() >= elements_.size()) return std::nullopt;
    return AgentId{static_cast<std::uint32_t>(e.index() - first_agent_element_)};
  }

  std::uint32_t office_of(AgentId a) const { return layout_.assignment.at(a.index()); }
  std::uint32_t coffee_place_of(AgentId a) const { return coffee_of_agent_.at(a.index()); }

  std::size_t node_of(const LocationState& s) const {
    const auto n_offices = layout_.offices.size();
    switch (s.kind) {
      case LocationKind::Office: return s.place;
      case LocationKind::Hallway: return n_offices;
      case LocationKind::Restaurant: return n_offices + 1;
      case LocationKind::CoffeePlace: return n_offices + 2 + s.place;
    }
    return 0;
  }

  Point centroid(const LocationState& s) const { return elements_.at(node_of(s)).position; }

  // -- agents ---------------------------------------------------------------

  std::span<Agent> agents() noexcept { return agents_; }
  std::span<const Agent> agents() const noexcept { return agents_; }
  const Agent& agent(AgentId a) const { return agents_.at(a.index()); }

  void set_agents(std::vector<Agent> agents) {
    if (agents.size() != population_) throw ConstraintError("population does not match the layout");
    agents_ = std::move(agents);
    for (const auto& a : agents_) place(a.id, a.location);
    settle();
  }

  /// Moves an agent and its AgentRef element. Call settle() once every
  /// agent has moved this tick.
  void place(AgentId id, const LocationState& s) {
    Agent& a = agents_.at(id.index());
    a.location = s;
    a.position = centroid(s);
    elements_[agent_element(id).index()].position = a.position;
  }

  /// Rebuilds node occupancy from agent locations.
  void settle() {
    for (auto& o : occupants_) o.clear();
    for (const auto& a : agents_) occupants_[node_of(a.location)].push_back(a.id);
  }

  std::span<const AgentId> occupants(std::size_t node) const { return occupants_.at(node); }

  /// Elements within the conversation radius of the agent, plus every agent
  /// on the same node, excluding the agent itself. Sorted by element id.
  void nearby(AgentId self, std::vector<ElementId>& out) const {
    out.clear();
    const std::size_t node = node_of(agents_.at(self.index()).location);
    const auto& statics = static_near_[node];
    out.insert(out.end(), statics.begin(), statics.end());
    const std::size_t agents_from = out.size();
    for (auto m : nodes_near_[node])
      for (AgentId other : occupants_[m])
        if (other != self) out.push_back(agent_element(other));
    if (nodes_near_[node].size() > 1) std::sort(out.begin() + static_cast<std::ptrdiff_t>(agents_from), out.end());
  }

  std::vector<ElementId> nearby(AgentId self) const {
    std::vector<ElementId> out;
    nearby(self, out);
    return out;
  }

  bool is_agent_element(ElementId e) const noexcept {
    return e.index() >= first_agent_element_ && e.index() < elements_.size();
  }

 private:
  void add(ElementKind kind, ElementCategory cat, Point p) {
    elements_.push_back({ElementId{static_cast<std::uint32_t>(elements_.size())}, kind, cat, p});
  }

  LayoutConfig layout_;
  std::size_t population_;
  double radius_;
  std::vector<ContextElement> elements_;
  std::size_t node_count_ = 0;
  std::size_t first_agent_element_ = 0;
  std::vector<std::uint32_t> coffee_of_agent_;
  std::vector<std::vector<ElementId>> static_near_;
  std::vector<std::vector<std::uint32_t>> nodes_near_;
  std::vector<std::vector<AgentId>> occupants_;
  std::vector<Agent> agents_;
};

}  // namespace sopra
