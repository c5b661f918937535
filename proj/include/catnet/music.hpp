#pragma once

// Ready-made musical structures: pitch classes, triads, the T and T/I
// groups on Z12, the PLR group on major/minor triads, the Cube Dance
// Rel-valued functor and the chicken-wire highlight.
//
// Serialized names are ASCII ("Cs", "Bb" is read as "As"); display names use
// ♯. Triads: "C" major, "c" minor, "Caug" augmented.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catnet/concrete.hpp"
#include "catnet/fincat.hpp"

namespace catnet::music {

inline int mod12(int x) { return ((x % 12) + 12) % 12; }

/// Canonical ASCII spelling, sharps preferred.
std::string pitch_name(int pc);
/// Same spelling with ♯.
std::string pitch_display(int pc);
/// Accepts C..B followed by any of #, s, ♯, b, ♭ (repeated accidentals add up).
std::optional<int> parse_pitch(std::string_view s);

enum class Quality { major, minor, augmented };

struct Triad {
  int root = 0;
  Quality quality = Quality::major;

  /// Sorted pitch-class set.
  std::array<int, 3> pitches() const;
  std::string name() const;
  std::string display() const;
  /// "C", "c", "Caug", also "C_major", "C_minor", "C_aug" and ♭/♯ spellings.
  /// Augmented roots are normalized into 0..3.
  static std::optional<Triad> parse(std::string_view s);

  bool operator==(const Triad&) const = default;
};

/// C..B major, then c..b minor.
std::vector<Triad> major_minor_triads();
/// The 24 major/minor triads followed by the 4 augmented ones.
std::vector<Triad> cube_dance_chords();

/// True when the pitch sets differ in exactly one pitch class and that pitch
/// moved by one semitone.
bool single_semitone_move(const Triad& a, const Triad& b);

/// Canonical ASCII name for anything that parses as a pitch class or triad.
std::optional<std::string> canonical_name(std::string_view s);
/// Unicode rendering of a canonical pitch or triad name; other strings unchanged.
std::string display_name(std::string_view ascii);

/// T_n : x -> x+n, I_n : x -> n-x on Z12.
struct TiElement {
  bool inversion = false;
  int n = 0;

  int apply(int x) const { return inversion ? mod12(n - x) : mod12(x + n); }
  /// this after other.
  TiElement after(const TiElement& other) const;
  std::string name() const;
  static std::optional<TiElement> parse(std::string_view s);

  bool operator==(const TiElement&) const = default;
};

struct GroupAction {
  GroupTable group;
  CategoryPtr category;    // group_as_category(group)
  SetValuedFunctor action;  // left action on the carrier
};

/// Z12 acting on pitch classes by transposition. Elements "T0".."T11".
GroupAction builtin_t_group();
/// The 24 transpositions and inversions. Elements "T0".."T11", "I0".."I11".
GroupAction builtin_ti_group();
/// The group generated by P, L, R on the 24 major/minor triads. The unit is
/// "id"; other elements are named by a shortest word, rightmost letter
/// applied first.
GroupAction builtin_plr();

/// Cyclic subgroup {T0, T6} acting on Z12.
GroupAction builtin_tritone_group();

/// Cube Dance: 28 chords, one-object monoid generated by the single-semitone
/// relation "U" (elements "id", "U", "U2", ...; closure computed).
RelValuedFunctor builtin_cube_dance();

/// T_n -> T_{un}, I_n -> I_{un+j} on the T/I group category, u a unit mod 12.
Functor ti_automorphism(const CategoryPtr& ti, int u, int j);
/// The 48 automorphisms of T/I, ordered by u in {1,5,7,11} then j.
std::vector<std::pair<int, int>> ti_automorphism_parameters();

struct HighlightClass {
  std::string label;  // morphism of the base category
  std::string color;  // DOT color
};

/// Morphisms of ∫ PLR projecting to P (blue), L (green) or R (red).
std::vector<HighlightClass> builtin_chicken_wire_spec();

/// Index of the highlight class for a base morphism label, or npos.
std::size_t highlight_class(const std::vector<HighlightClass>& spec, std::string_view label);

}  // namespace catnet::music
