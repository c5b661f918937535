#pragma once

// CT-Nets Δ -> C_el -> C_T, their morphisms (I, N, J, ν), complete and local
// homographies, and Klumpenhouwer isography on T/I labels.

#include <optional>
#include <string>
#include <vector>

#include "catnet/concrete.hpp"
#include "catnet/elements.hpp"
#include "catnet/fincat.hpp"
#include "catnet/music.hpp"

namespace catnet {

struct CTNet {
  Functor h;   // delta -> c_el
  Functor pi;  // c_el -> c_t

  const FiniteCategory& delta() const { return h.source(); }
  const FiniteCategory& c_el() const { return h.target(); }
  const FiniteCategory& c_t() const { return pi.target(); }

  /// Object of c_el at a node of delta.
  std::size_t node(std::size_t x) const { return h.object(x); }
  const std::string& node_label(std::size_t x) const { return c_el().object(h.object(x)); }
  /// Morphism of c_t labelling an arrow of delta.
  std::size_t arrow(std::size_t f) const { return pi.morphism(h.morphism(f)); }
  const std::string& arrow_label(std::size_t f) const { return c_t().morphism(arrow(f)).id; }

  bool operator==(const CTNet&) const = default;
};

/// Prefixes "delta: ", "c_el: ", "c_t: ", "h: ", "pi: "; "compose" when h
/// and pi do not meet in the same category.
ValidationReport validate_ctnet(const CTNet& net);

/// Singleton-valued R: delta is R's own category. Otherwise delta is ∫R and
/// h is H_F. Throws ValidationError on an invalid PK-net.
CTNet ctnet_from_pknet(const PKNet& p);

struct CTNetMorphism {
  CTNet source, target;
  Functor i;        // delta -> delta'
  Functor n;        // c_t -> c_t'
  Functor j;        // c_el -> c_el'
  CatNatTrans nu;   // j∘h => h'∘i
};

/// Typing of i, n, j; pi'∘j = n∘pi; nu parallel to (j∘h, h'∘i) and natural.
ValidationReport validate_ctnet_morphism(const CTNetMorphism& m);

/// Identity morphism on a net.
CTNetMorphism identity_morphism(const CTNet& net);

/// m2 after m1. Throws Error unless m1.target == m2.source.
CTNetMorphism compose_ctnet_morphisms(const CTNetMorphism& m2, const CTNetMorphism& m1);

struct CompleteHomography {
  Functor n;               // C -> C'
  SetValuedFunctor s_prime;  // on C'
  SetNatTrans nu_tilde;    // S => S'∘N
};

struct NetTransform {
  CTNet net;
  CTNetMorphism morphism;
};

/// The net's c_el must be ∫S for S = nu_tilde.source(). Returns the net
/// (J_N∘h, π_S') and (id, N, J_N, identity). Throws ValidationError when ν̃
/// is not natural.
NetTransform apply_complete_homography(const CTNet& net, const CompleteHomography& ch);

/// nu_hat : h => h' in c_el. Returns (h', pi) and (id, id, id, nu_hat).
NetTransform apply_local_homography(const CTNet& net, const CatNatTrans& nu_hat);

/// Local homography given on labels: f_prime : delta -> c_t is the new
/// labelling and nu_hat : pi∘h => f_prime its components. Each component is
/// lifted to the unique morphism of c_el out of h(X) over nu_hat_X, so c_el
/// must be the category of elements of a Sets-valued functor (checked).
/// Throws ValidationError with the failing arrow when nu_hat is not natural.
NetTransform local_homography_by_labels(const CTNet& net, const Functor& f_prime,
                                        const CatNatTrans& nu_hat);

// --- T/I specifics ---------------------------------------------------------

/// m with 2m = j (mod 12): the ν̃ = (x -> ux + m) making ⟨u, j⟩ natural.
std::vector<int> ti_homography_choices(int j);

/// N = ti_automorphism(u, j), S = S' = the T/I action, ν̃(x) = ux + m.
/// Throws Error listing the valid m when 2m != j.
CompleteHomography ti_complete_homography(int u, int j, int m);

enum class IsographyKind { strong, positive, negative, none };

struct IsographyVerdict {
  IsographyKind kind = IsographyKind::none;
  int j = 0;
  std::string reason;  // why not isographic
  /// Object map of delta1 -> delta2 that was used.
  std::vector<std::size_t> object_map;
};

std::string to_string(IsographyKind k);

/// Strong when equal; positive ⟨T_j⟩ when T labels agree and I_n -> I_{n+j};
/// negative ⟨I_j⟩ when T_n -> T_{-n} and I_n -> I_{j-n}. Smallest j wins.
IsographyVerdict check_label_isography(const std::vector<music::TiElement>& a,
                                       const std::vector<music::TiElement>& b);

/// Both c_t must be the T/I group category (Error otherwise). The skeletons
/// are matched in declared order; with `search` every skeleton isomorphism
/// is tried and the strongest verdict kept.
IsographyVerdict check_isography(const CTNet& a, const CTNet& b, bool search = false);

}  // namespace catnet
