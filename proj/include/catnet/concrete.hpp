#pragma once

// Sets- and Rel-valued functors on finite categories, group actions, and
// Lewin's interval systems.
//
// Group actions are left actions: the functor on the one-object category of
// a group sends a*b to S(a)∘S(b). The interval function is therefore checked
// in the form int(y,z)*int(x,y) = int(x,z); opposite_group() converts a table
// written for the right-action form.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catnet/fincat.hpp"
#include "catnet/report.hpp"

namespace catnet {

/// Finite set with stable element order and name lookup.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& operator[](std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index(std::string_view name) const;

  bool operator==(const ElementSet& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

class SetValuedFunctor {
 public:
  /// maps[f][i] is the index in sets[cod f] of the image of sets[dom f][i].
  /// Throws Error when a map is not a total function between the right sets.
  SetValuedFunctor(CategoryPtr source, std::vector<ElementSet> sets,
                   std::vector<std::vector<std::size_t>> maps);

  static SetValuedFunctor from_names(
      CategoryPtr source, const std::map<std::string, std::vector<std::string>>& sets,
      const std::map<std::string, std::map<std::string, std::string>>& maps);

  /// Every object sent to the same set, every morphism to the identity.
  static SetValuedFunctor constant(CategoryPtr source, std::vector<std::string> elements);

  const FiniteCategory& source() const { return *source_; }
  const CategoryPtr& source_ptr() const { return source_; }
  const ElementSet& set(std::size_t x) const { return sets_[x]; }
  const std::vector<std::size_t>& map(std::size_t f) const { return maps_[f]; }
  std::size_t apply(std::size_t f, std::size_t i) const { return maps_[f][i]; }

  bool operator==(const SetValuedFunctor& o) const;

 private:
  CategoryPtr source_;
  std::vector<ElementSet> sets_;
  std::vector<std::vector<std::size_t>> maps_;
};

class RelValuedFunctor {
 public:
  using Pair = std::pair<std::size_t, std::size_t>;

  /// rels[f] holds index pairs (a, b) with a in sets[dom f], b in sets[cod f].
  /// Pairs are sorted and deduplicated on construction.
  RelValuedFunctor(CategoryPtr source, std::vector<ElementSet> sets,
                   std::vector<std::vector<Pair>> rels);

  /// Functions viewed as relations.
  static RelValuedFunctor from_set_functor(const SetValuedFunctor& s);

  const FiniteCategory& source() const { return *source_; }
  const CategoryPtr& source_ptr() const { return source_; }
  const ElementSet& set(std::size_t x) const { return sets_[x]; }
  const std::vector<Pair>& rel(std::size_t f) const { return rels_[f]; }
  bool related(std::size_t f, std::size_t a, std::size_t b) const;

  bool operator==(const RelValuedFunctor& o) const;

 private:
  CategoryPtr source_;
  std::vector<ElementSet> sets_;
  std::vector<std::vector<Pair>> rels_;
};

/// Relational composition "second after first".
std::vector<RelValuedFunctor::Pair> compose_relations(
    const std::vector<RelValuedFunctor::Pair>& second,
    const std::vector<RelValuedFunctor::Pair>& first);

ValidationReport validate_set_functor(const SetValuedFunctor& s);
ValidationReport validate_rel_functor(const RelValuedFunctor& s);

/// S∘F as a functor on F's source category.
SetValuedFunctor precompose(const SetValuedFunctor& s, const Functor& f);

/// Component-wise functions between two Sets-valued functors on one category.
class SetNatTrans {
 public:
  /// Throws Error when the functors live on different categories or a
  /// component is not a total function source(X) -> target(X).
  SetNatTrans(SetValuedFunctor source, SetValuedFunctor target,
              std::vector<std::vector<std::size_t>> components);

  static SetNatTrans from_names(
      SetValuedFunctor source, SetValuedFunctor target,
      const std::map<std::string, std::map<std::string, std::string>>& components);
  static SetNatTrans identity(const SetValuedFunctor& s);

  const SetValuedFunctor& source() const { return source_; }
  const SetValuedFunctor& target() const { return target_; }
  const std::vector<std::size_t>& component(std::size_t x) const { return components_[x]; }
  std::size_t apply(std::size_t x, std::size_t i) const { return components_[x][i]; }

  bool operator==(const SetNatTrans&) const = default;

 private:
  SetValuedFunctor source_, target_;
  std::vector<std::vector<std::size_t>> components_;
};

/// target(f)∘c_X = c_Y∘source(f) for every f: X -> Y.
ValidationReport validate_set_natural(const SetNatTrans& n);

// --- interval systems ------------------------------------------------------

struct GisData {
  ElementSet x;
  GroupTable group;
  /// interval[i][j] = int(x_i, x_j), an element index of `group`.
  std::vector<std::vector<std::size_t>> interval;

  GisData(ElementSet x, GroupTable group, std::vector<std::vector<std::size_t>> interval);

  template <class Int>
  static GisData from_function(std::vector<std::string> x, GroupTable g, Int&& int_fn) {
    const std::size_t n = x.size();
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t[i][j] = int_fn(i, j);
    return GisData(ElementSet(std::move(x)), std::move(g), std::move(t));
  }

  bool operator==(const GisData&) const = default;
};

/// int(y,z)*int(x,y) = int(x,z) for all triples.
ValidationReport check_gis_condition1(const GisData& g);
/// Every fiber {y : int(x,y) = k} has exactly one element. Empty fibers are
/// reported as "condition 2: existence", larger ones as "condition 2: uniqueness".
ValidationReport check_gis_condition2(const GisData& g);

/// Reinterpret a table written for int(x,y)*int(y,z) = int(x,z) in the
/// left-action form by passing to the opposite group.
GisData to_left_orientation(const GisData& g);

struct LewinCategory {
  CategoryPtr category;  // objects x, morphisms "(x,y)"
  Functor to_group;      // (x,y) -> int(x,y) in group_as_category(group)
};

/// Throws ValidationError unless condition 1 holds.
LewinCategory lewin_category(const GisData& g);

/// g·x = the unique y with int(x,y) = g. Needs both conditions.
SetValuedFunctor derived_action(const GisData& g);

/// int(x,y) = the unique g with g·x = y, for a simply transitive action on a
/// one-object category built by group_as_category.
GisData interval_from_action(const SetValuedFunctor& s, const GroupTable& g);

struct TransitivityVerdict {
  bool holds = true;
  std::string from, to;   // first failing pair when !holds
  std::size_t count = 0;  // elements sending `from` to `to`
};

/// Exactly one morphism of the one-object source sends x to y, for all x, y.
TransitivityVerdict simply_transitive(const SetValuedFunctor& s);

}  // namespace catnet
