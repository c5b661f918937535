#pragma once

// Finite categories stored as fully enumerated composition tables, with
// functors and natural transformations between them.
//
// compose(g, f) always means "g after f".

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "catnet/report.hpp"

namespace catnet {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

class FiniteCategory {
 public:
  struct Morphism {
    std::string id;
    std::size_t dom;
    std::size_t cod;

    bool operator==(const Morphism&) const = default;
  };

  /// A composition entry recorded on a pair that is not composable, or a
  /// second, different value for a pair that already had one. Kept only so
  /// validate_category can report it.
  struct StrayEntry {
    std::size_t g, f, gf;

    bool operator==(const StrayEntry&) const = default;
  };

  class Builder {
   public:
    std::size_t add_object(std::string id);
    std::size_t add_morphism(std::string id, std::size_t dom, std::size_t cod);
    std::size_t add_morphism(std::string id, std::string_view dom,
                             std::string_view cod);
    void set_identity(std::size_t obj, std::size_t mor);
    void set_compose(std::size_t g, std::size_t f, std::size_t gf);

    std::size_t object_index(std::string_view id) const;
    std::size_t morphism_index(std::string_view id) const;
    std::size_t object_count() const { return objects_.size(); }
    std::size_t morphism_count() const { return morphisms_.size(); }

    /// Throws Error on a missing identity.
    FiniteCategory build() &&;

   private:
    std::vector<std::string> objects_;
    std::vector<Morphism> morphisms_;
    std::vector<std::size_t> identity_;
    std::vector<StrayEntry> entries_;
    std::map<std::string, std::size_t, std::less<>> obj_index_;
    std::map<std::string, std::size_t, std::less<>> mor_index_;
  };

  FiniteCategory() = default;

  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }
  const std::string& object(std::size_t i) const { return objects_[i]; }
  const Morphism& morphism(std::size_t i) const { return morphisms_[i]; }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Morphism>& morphisms() const { return morphisms_; }

  std::optional<std::size_t> find_object(std::string_view id) const;
  std::optional<std::size_t> find_morphism(std::string_view id) const;
  /// Throw Error when the id is unknown.
  std::size_t object_index(std::string_view id) const;
  std::size_t morphism_index(std::string_view id) const;

  std::size_t identity(std::size_t obj) const { return identity_[obj]; }
  bool is_identity(std::size_t mor) const;

  /// Morphisms with the given domain / codomain, in declaration order.
  std::span<const std::size_t> out(std::size_t obj) const {
    return {out_.data() + out_begin_[obj], out_begin_[obj + 1] - out_begin_[obj]};
  }
  std::span<const std::size_t> in(std::size_t obj) const {
    return {in_.data() + in_begin_[obj], in_begin_[obj + 1] - in_begin_[obj]};
  }

  /// g∘f when the table defines it on a composable pair.
  std::optional<std::size_t> compose(std::size_t g, std::size_t f) const;
  /// g∘f for a pair the caller knows is composable and defined.
  std::size_t compose_unchecked(std::size_t g, std::size_t f) const {
    return table_[row_begin_[f] + out_pos_[g]];
  }

  const std::vector<StrayEntry>& stray_entries() const { return strays_; }
  const std::vector<StrayEntry>& conflicting_entries() const { return conflicts_; }

  /// Number of composable (g, f) pairs.
  std::size_t composable_pair_count() const { return table_.size(); }

  bool operator==(const FiniteCategory& other) const;

 private:
  friend class Builder;
  static constexpr std::uint32_t kUndefined = 0xffffffffu;

  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<std::size_t> identity_;
  std::map<std::string, std::size_t, std::less<>> obj_index_;
  std::map<std::string, std::size_t, std::less<>> mor_index_;

  std::vector<std::size_t> out_, out_begin_, in_, in_begin_;
  std::vector<std::size_t> out_pos_;    // position of a morphism in out(dom)
  std::vector<std::size_t> row_begin_;  // row of f spans out(cod f)
  std::vector<std::uint32_t> table_;
  std::vector<StrayEntry> strays_;
  std::vector<StrayEntry> conflicts_;
};

using CategoryPtr = std::shared_ptr<const FiniteCategory>;

inline CategoryPtr share(FiniteCategory c) {
  return std::make_shared<const FiniteCategory>(std::move(c));
}

/// Pointer identity first, structural equality otherwise.
bool same_category(const CategoryPtr& a, const CategoryPtr& b);

/// Checks typing of identities, totality of composition on composable pairs
/// (and nowhere else), typing of composites, identity laws, associativity.
ValidationReport validate_category(const FiniteCategory& c);

// --- small constructors ----------------------------------------------------

struct ArrowSpec {
  std::string id;
  std::string dom;
  std::string cod;
};

FiniteCategory terminal_category();
FiniteCategory empty_category();

/// Preorder generated by `arrows`: one morphism per reachable ordered pair.
/// Generating arrows keep their ids; identities are "id_<obj>", other
/// composites "<dom>><cod>". Two generators with equal endpoints are rejected.
FiniteCategory thin_category(const std::vector<std::string>& objects,
                             const std::vector<ArrowSpec>& arrows);

/// Free category on an acyclic quiver; paths are named by their arrow ids
/// joined with ';' in traversal order. Cyclic input is rejected.
FiniteCategory free_category(const std::vector<std::string>& objects,
                             const std::vector<ArrowSpec>& arrows);

// --- groups ----------------------------------------------------------------

class GroupTable {
 public:
  GroupTable() = default;
  /// product[a][b] is the index of a*b. Throws Error if the table is not
  /// square or refers to out-of-range elements, or if `unit` is unknown.
  GroupTable(std::vector<std::string> elements,
             std::vector<std::vector<std::size_t>> product, std::string_view unit);

  template <class Product>
  static GroupTable from_function(std::vector<std::string> elements,
                                  std::string_view unit, Product&& product) {
    const std::size_t n = elements.size();
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) table[a][b] = product(a, b);
    return GroupTable(std::move(elements), std::move(table), unit);
  }

  std::size_t size() const { return elements_.size(); }
  const std::string& element(std::size_t i) const { return elements_[i]; }
  const std::vector<std::string>& elements() const { return elements_; }
  std::size_t index(std::string_view name) const;
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t unit() const { return unit_; }
  std::size_t product(std::size_t a, std::size_t b) const { return product_[a][b]; }
  /// npos when no two-sided inverse exists.
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::vector<std::vector<std::size_t>>& table() const { return product_; }

  bool operator==(const GroupTable&) const = default;

 private:
  std::vector<std::string> elements_;
  std::vector<std::vector<std::size_t>> product_;
  std::vector<std::size_t> inverse_;
  std::size_t unit_ = 0;
};

ValidationReport validate_group(const GroupTable& g);

/// Same elements, product reversed (a *op b = b * a).
GroupTable opposite_group(const GroupTable& g);

/// Single object "*", one morphism per element, compose(a, b) = a*b.
/// Throws ValidationError when the group axioms fail.
FiniteCategory group_as_category(const GroupTable& g);

// --- functors --------------------------------------------------------------

class Functor {
 public:
  /// Throws Error on arity mismatch or out-of-range images.
  Functor(CategoryPtr source, CategoryPtr target, std::vector<std::size_t> objects,
          std::vector<std::size_t> morphisms);

  static Functor from_names(CategoryPtr source, CategoryPtr target,
                            const std::map<std::string, std::string>& objects,
                            const std::map<std::string, std::string>& morphisms);
  static Functor identity(CategoryPtr c);

  const FiniteCategory& source() const { return *source_; }
  const FiniteCategory& target() const { return *target_; }
  const CategoryPtr& source_ptr() const { return source_; }
  const CategoryPtr& target_ptr() const { return target_; }

  std::size_t object(std::size_t x) const { return objects_[x]; }
  std::size_t morphism(std::size_t f) const { return morphisms_[f]; }
  const std::vector<std::size_t>& object_map() const { return objects_; }
  const std::vector<std::size_t>& morphism_map() const { return morphisms_; }

  /// Same categories (structurally) and same maps.
  bool operator==(const Functor& other) const;

 private:
  CategoryPtr source_, target_;
  std::vector<std::size_t> objects_, morphisms_;
};

ValidationReport validate_functor(const Functor& f);

/// g∘f. Throws Error when f's target is not g's source.
Functor compose_functors(const Functor& g, const Functor& f);

// --- natural transformations ----------------------------------------------

class CatNatTrans {
 public:
  /// components[x] is a morphism of the target category. Throws Error when
  /// the functors are not parallel or an index is out of range.
  CatNatTrans(Functor source, Functor target, std::vector<std::size_t> components);

  static CatNatTrans identity(const Functor& f);

  const Functor& source() const { return source_; }
  const Functor& target() const { return target_; }
  std::size_t component(std::size_t x) const { return components_[x]; }
  const std::vector<std::size_t>& components() const { return components_; }

  bool operator==(const CatNatTrans&) const = default;

 private:
  Functor source_, target_;
  std::vector<std::size_t> components_;
};

ValidationReport validate_natural(const CatNatTrans& n);

/// (b·a)_X = b_X ∘ a_X. Throws Error when a's target is not b's source or a
/// component pair does not compose.
CatNatTrans vertical_compose(const CatNatTrans& b, const CatNatTrans& a);
/// j∘a, components j(a_X).
CatNatTrans whisker_left(const Functor& j, const CatNatTrans& a);
/// a∘i, components a_{i(X)}.
CatNatTrans whisker_right(const CatNatTrans& a, const Functor& i);

}  // namespace catnet
