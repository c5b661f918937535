#pragma once

// Categories of elements of Sets- and Rel-valued functors, their canonical
// projections, and the functor between categories of elements induced by a
// natural transformation R => S∘F.

#include <cstddef>
#include <string>
#include <vector>

#include "catnet/concrete.hpp"
#include "catnet/fincat.hpp"

namespace catnet {

/// Objects "(X|x)" and morphisms "(x|f|y)" with the projection back to the
/// base category.
///
/// Object (X, i) has index object_offset[X] + i. For a Sets-valued functor
/// the morphism over f starting at element i has index
/// morphism_offset[f] + i; for a Rel-valued one the p-th pair of rel(f) has
/// index morphism_offset[f] + p.
struct ElementsResult {
  CategoryPtr cat;
  Functor proj;
  std::vector<std::size_t> object_offset;
  std::vector<std::size_t> morphism_offset;

  std::size_t object_of(std::size_t x, std::size_t i) const { return object_offset[x] + i; }
};

std::string element_object_name(const std::string& object, const std::string& element);
std::string element_morphism_name(const std::string& from, const std::string& morphism,
                                  const std::string& to);

/// Throws ValidationError when `s` is not a functor.
ElementsResult elements_of_set_functor(const SetValuedFunctor& s);

/// Throws ValidationError when `s` is not a functor, or (for a table that
/// slipped past validation) when a composite pair is missing from rel(g∘f).
ElementsResult elements_of_rel_functor(const RelValuedFunctor& s);

/// A PK-net of form r and support s: f : Δ -> C and phi : r => s∘f.
struct PKNet {
  SetValuedFunctor r;
  SetValuedFunctor s;
  Functor f;
  SetNatTrans phi;
};

/// r and s functors, f a functor from r's category to s's, r non-empty on
/// every object, phi a natural transformation r => s∘f.
ValidationReport validate_pknet(const PKNet& p);

/// H_F : ∫r -> ∫s, (X,x) -> (F X, phi_X(x)), (x,f,y) -> (phi x, F f, phi y).
/// Rejects any input that is not a PK-net.
Functor induced_functor_HF(const SetValuedFunctor& r, const SetValuedFunctor& s,
                           const Functor& f, const SetNatTrans& phi);
Functor induced_functor_HF(const PKNet& p);
Functor induced_functor_HF(const PKNet& p, const ElementsResult& el_r,
                           const ElementsResult& el_s);

/// Same construction without the non-emptiness requirement on r; used for
/// the global maps J_N and J_chi. Only naturality of phi is checked.
Functor induced_elements_functor(const SetValuedFunctor& r, const SetValuedFunctor& s,
                                 const Functor& f, const SetNatTrans& phi,
                                 const ElementsResult& el_r, const ElementsResult& el_s);

/// The PK-net (r, s, f', (s nu_hat) phi). nu_hat : f => f' must be natural.
PKNet local_pknet(const PKNet& p, const Functor& f_prime, const CatNatTrans& nu_hat);

/// eta : H_F => H_F' with component (phi_X x, nu_hat_X, phi'_X x) at (X,x).
/// Both nets must share r and s; rejects with the failing (X, x) when
/// s(nu_hat_X)(phi_X x) differs from phi'_X x.
CatNatTrans induced_nattrans_eta(const PKNet& p, const PKNet& p_prime,
                                 const CatNatTrans& nu_hat);

}  // namespace catnet
