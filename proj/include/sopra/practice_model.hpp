#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "ids.hpp"
#include "location.hpp"

namespace sopra {

// ---------------------------------------------------------------------------
// Static entities
// ---------------------------------------------------------------------------

struct Activity {
  ActivityId id;
  std::string name;
  std::optional<ActivityId> parent;  // the activity this one implements
};

struct Value {
  ValueId id;
  std::string name;
};

struct Competence {
  CompetenceId id;
  std::string name;
};

/// The activity forest plus the value and competence vocabularies shared by
/// every agent in a scenario.
class Catalogue {
 public:
  Catalogue(std::vector<Activity> activities, std::vector<Value> values, std::vector<Competence> competences,
            ActivityId practice_root)
      : activities_(std::move(activities)),
        values_(std::move(values)),
        competences_(std::move(competences)),
        root_(practice_root) {
    validate();
  }

  /// The talking practice: talking <- {fact_talk, rumourmongering}, seven
  /// second-level human values and eight competences.
  static const Catalogue& standard() {
    static const Catalogue cat = [] {
      std::vector<Activity> acts{
          {ActivityId{0}, "fact_talk", ActivityId{2}},
          {ActivityId{1}, "rumourmongering", ActivityId{2}},
          {ActivityId{2}, "talking", std::nullopt},
      };
      std::vector<Value> vals;
      for (std::string_view n : {"self_direction", "power", "hedonism", "achievement", "benevolence", "universalism",
                                 "tradition"})
        vals.push_back({ValueId{static_cast<std::uint32_t>(vals.size())}, std::string(n)});
      std::vector<Competence> comps;
      for (std::string_view n : {"sneaky_skills", "network_skills", "talking_skills", "observing_skills",
                                 "being_knowledgeable", "listening_skills", "critical_thinking_skills",
                                 "communication_skills"})
        comps.push_back({CompetenceId{static_cast<std::uint32_t>(comps.size())}, std::string(n)});
      return Catalogue(std::move(acts), std::move(vals), std::move(comps), ActivityId{2});
    }();
    return cat;
  }

  std::span<const Activity> activities() const noexcept { return activities_; }
  std::span<const Value> values() const noexcept { return values_; }
  std::span<const Competence> competences() const noexcept { return competences_; }
  ActivityId practice_root() const noexcept { return root_; }

  const Activity& activity(ActivityId id) const {
    if (id.index() >= activities_.size()) throw ConstraintError("unknown activity id " + std::to_string(id.value));
    return activities_[id.index()];
  }

  std::optional<ActivityId> find_activity(std::string_view name) const { return find_by_name(activities_, name); }
  std::optional<ValueId> find_value(std::string_view name) const { return find_by_name(values_, name); }
  std::optional<CompetenceId> find_competence(std::string_view name) const {
    return find_by_name(competences_, name);
  }

  bool has_children(ActivityId id) const {
    return std::any_of(activities_.begin(), activities_.end(),
                       [&](const Activity& a) { return a.parent && *a.parent == id; });
  }

 private:
  template <class T>
  static auto find_by_name(const std::vector<T>& items, std::string_view name) -> std::optional<decltype(T::id)> {
    for (const auto& it : items)
      if (it.name == name) return it.id;
    return std::nullopt;
  }

  // Ids must equal their position; the implementation relation must be a
  // forest. Both are checked once here so lookups can index directly.
  void validate() const {
    auto check_dense = [](const auto& items, const char* what) {
      for (std::size_t i = 0; i < items.size(); ++i)
        if (items[i].id.index() != i) throw ConstraintError(std::string(what) + " ids must be dense and ordered");
    };
    check_dense(activities_, "activity");
    check_dense(values_, "value");
    check_dense(competences_, "competence");
    if (competences_.size() > 32) throw ConstraintError("at most 32 competences are supported");
    if (activities_.size() > 32) throw ConstraintError("at most 32 activities are supported");
    if (root_.index() >= activities_.size()) throw ConstraintError("practice root is not an activity");
    for (const auto& a : activities_) {
      std::size_t steps = 0;
      for (auto cur = a.parent; cur; cur = activities_.at(cur->index()).parent) {
        if (cur->index() >= activities_.size())
          throw ConstraintError("activity " + a.name + " implements an unknown activity");
        if (++steps > activities_.size()) throw ConstraintError("implementation cycle through activity " + a.name);
      }
    }
  }

  std::vector<Activity> activities_;
  std::vector<Value> values_;
  std::vector<Competence> competences_;
  ActivityId root_;
};

/// True when `child` is a way of (or part of) doing `parent`, transitively.
/// Reflexive.
inline bool implements(const Catalogue& cat, ActivityId child, ActivityId parent) {
  cat.activity(parent);
  for (std::optional<ActivityId> cur = child; cur; cur = cat.activity(*cur).parent)
    if (*cur == parent) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Small sets
// ---------------------------------------------------------------------------

/// Bit set over ids < 32.
template <class IdT>
class SmallSet {
 public:
  constexpr SmallSet() = default;
  SmallSet(std::initializer_list<IdT> ids) {
    for (auto id : ids) insert(id);
  }

  void insert(IdT id) { bits_ |= bit(id); }
  void erase(IdT id) { bits_ &= ~bit(id); }
  bool contains(IdT id) const { return (bits_ & bit(id)) != 0; }
  bool subset_of(const SmallSet& o) const { return (bits_ & ~o.bits_) == 0; }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  std::uint32_t bits() const { return bits_; }

  std::vector<IdT> to_vector() const {
    std::vector<IdT> out;
    for (std::uint32_t i = 0; i < 32; ++i)
      if (bits_ & (1u << i)) out.push_back(IdT{i});
    return out;
  }

  bool operator==(const SmallSet&) const = default;

 private:
  static std::uint32_t bit(IdT id) { return 1u << id.value; }
  std::uint32_t bits_ = 0;
};

using CompetenceSet = SmallSet<CompetenceId>;
using ActivitySet = SmallSet<ActivityId>;

/// Dense rows x cols table of optional weights in [0, 1]. Backs both the
/// (activity, value) and (element, activity) associations.
class AssociationTable {
 public:
  AssociationTable() = default;
  AssociationTable(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), weights_(rows * cols, kAbsent) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return count_; }

  void set(std::size_t row, std::size_t col, double w) {
    if (!(w >= 0.0 && w <= 1.0)) throw ConstraintError("association weight outside [0,1]");
    double& slot = weights_.at(row * cols_ + col);
    if (slot == kAbsent) ++count_;
    slot = w;
  }

  std::optional<double> find(std::size_t row, std::size_t col) const {
    if (row >= rows_ || col >= cols_) return std::nullopt;
    const double w = weights_[row * cols_ + col];
    return w == kAbsent ? std::nullopt : std::optional<double>(w);
  }

  /// Missing entries read as 0. Unchecked on the hot path.
  double get_or_zero(std::size_t row, std::size_t col) const noexcept {
    const double w = weights_[row * cols_ + col];
    return w == kAbsent ? 0.0 : w;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (const double w = weights_[r * cols_ + c]; w != kAbsent) f(r, c, w);
  }

  bool operator==(const AssociationTable&) const = default;

 private:
  static constexpr double kAbsent = -1.0;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t count_ = 0;
  std::vector<double> weights_;
};

// ---------------------------------------------------------------------------
// Context elements
// ---------------------------------------------------------------------------

enum class ElementKind : std::uint8_t { Place, Resource, AgentRef };

/// What a context element is, at the granularity of the trigger tables.
/// Several categories (conference, classroom, ...) have no instances in the
/// office layouts but stay valid trigger targets.
enum class ElementCategory : std::uint8_t {
  Office,
  Hallway,
  Restaurant,
  CoffeePlace,
  Agent,
  Phone,
  Computer,
  Pen,
  Coffee,
  Conference,
  MeetingRoom,
  Classroom,
  AcademicStaff,
};

inline constexpr std::array<std::pair<ElementCategory, std::string_view>, 13> kElementCategoryNames{{
    {ElementCategory::Office, "office"},
    {ElementCategory::Hallway, "hallway"},
    {ElementCategory::Restaurant, "restaurant"},
    {ElementCategory::CoffeePlace, "coffee_place"},
    {ElementCategory::Agent, "agent"},
    {ElementCategory::Phone, "phone"},
    {ElementCategory::Computer, "computer"},
    {ElementCategory::Pen, "pen"},
    {ElementCategory::Coffee, "coffee"},
    {ElementCategory::Conference, "conference"},
    {ElementCategory::MeetingRoom, "meeting_room"},
    {ElementCategory::Classroom, "classroom"},
    {ElementCategory::AcademicStaff, "academic_staff"},
}};

inline std::string_view to_string(ElementCategory c) {
  for (const auto& [cat, name] : kElementCategoryNames)
    if (cat == c) return name;
  return "?";
}

inline std::optional<ElementCategory> parse_element_category(std::string_view s) {
  for (const auto& [cat, name] : kElementCategoryNames)
    if (name == s) return cat;
  return std::nullopt;
}

struct Point {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point&) const = default;
};

inline double squared_distance(Point a, Point b) noexcept {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

struct ContextElement {
  ElementId id;
  ElementKind kind = ElementKind::Place;
  ElementCategory category = ElementCategory::Office;
  Point position;
};

// ---------------------------------------------------------------------------
// Per-agent practice and the agent itself
// ---------------------------------------------------------------------------

/// One agent's copy of the talking practice: its beliefs about what each
/// activity needs, which values it serves and what triggers it.
struct PracticeGraph {
  std::vector<CompetenceSet> required_competence;  // indexed by activity
  AssociationTable related_value;                  // activity x value
  AssociationTable habitual_trigger;               // element x activity
  ActivitySet knowledge;
  std::map<ActivityId, ActivityId> strategy;  // stored only

  bool operator==(const PracticeGraph&) const = default;
};

struct Agent {
  AgentId id;
  CompetenceSet competences;
  std::vector<double> value_adherence;  // indexed by value
  PracticeGraph practice;
  LocationState location;
  bool informed = false;
  Point position;
  std::uint32_t office = 0;
  std::uint32_t coffee_place = 0;

  bool operator==(const Agent&) const = default;
};

/// Leaf implementations of the practice root that the agent knows about, in
/// ascending id order.
inline std::vector<ActivityId> candidate_activities(const Catalogue& cat, const Agent& agent) {
  std::vector<ActivityId> out;
  for (const auto& a : cat.activities()) {
    if (a.id == cat.practice_root() || !agent.practice.knowledge.contains(a.id)) continue;
    if (cat.has_children(a.id) || !implements(cat, a.id, cat.practice_root())) continue;
    out.push_back(a.id);
  }
  return out;
}

}  // namespace sopra
