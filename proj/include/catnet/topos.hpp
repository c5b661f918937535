#pragma once

// Sieves, the subobject classifier Ω of Sets^C, characteristic morphisms of
// subfunctors and the CT-Net morphism they induce.
//
// Functors here are covariant, so a sieve at X is a set of morphisms out of X
// closed under postcomposition: f in σ implies g∘f in σ. Ω(f)(σ) = {g : g∘f in σ}.

#include <string>
#include <vector>

#include "catnet/concrete.hpp"
#include "catnet/ctnet.hpp"
#include "catnet/fincat.hpp"

namespace catnet {

struct Sieve {
  std::size_t at = 0;
  /// Morphism indices, sorted by morphism id.
  std::vector<std::size_t> arrows;

  bool operator==(const Sieve&) const = default;
};

/// "{f,g}" with ids in sorted order; "{}" for the empty sieve.
std::string sieve_name(const FiniteCategory& c, const Sieve& s);

/// Every sieve at x, ordered by size then by name.
std::vector<Sieve> sieves_at(const FiniteCategory& c, std::size_t x);

/// Ω as a Sets-valued functor; element names come from sieve_name.
SetValuedFunctor subobject_classifier(const CategoryPtr& c);

struct Subfunctor {
  SetValuedFunctor parent;
  /// member[X][i]: element i of parent(X) belongs to the subfunctor.
  std::vector<std::vector<bool>> member;
};

/// "closure" violations (X, x, f) where x is in A but f·x is not.
ValidationReport validate_subfunctor(const Subfunctor& a);

/// Every subfunctor of `s` (exponential in the total set size; capped at 20
/// elements, Error beyond).
std::vector<Subfunctor> all_subfunctors(const SetValuedFunctor& s);

/// χ_A : S => Ω, χ_A(x) = {f : f·x in A}. Throws ValidationError when A is not
/// closed.
SetNatTrans characteristic_morphism(const Subfunctor& a);

/// The net (J_χ∘h, π_Ω) and the morphism (id, id, J_χ, identity), where J_χ is
/// induced by χ_A with N = id. The net must live on ∫ parent.
NetTransform classifier_ctnet_morphism(const CTNet& net, const Subfunctor& a);

}  // namespace catnet
