#pragma once

// The forgetful image of a finite category in quivers, colored multidigraphs
// of diagrams U -> V, subquivers by color and DOT output.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "catnet/fincat.hpp"

namespace catnet {

struct ColoredQuiver {
  struct Node {
    std::string id;
    std::string color;
    bool operator==(const Node&) const = default;
  };
  struct Arrow {
    std::string id;
    std::size_t src;
    std::size_t dst;
    std::string color;
    bool operator==(const Arrow&) const = default;
  };

  std::vector<Node> nodes;
  std::vector<Arrow> arrows;
  /// Arrow index pairs (representative first) drawn as one undirected edge.
  std::vector<std::pair<std::size_t, std::size_t>> inverse_pairs;

  bool operator==(const ColoredQuiver&) const = default;
};

/// Endpoints in range, inverse pairs with swapped endpoints, no arrow in two pairs.
ValidationReport validate_quiver(const ColoredQuiver& q);

/// Objects and morphisms, single color "". Mutually inverse morphisms are
/// paired; the smaller id is the representative.
ColoredQuiver forget_to_quiver(const FiniteCategory& c, bool drop_identities = true);

/// Nodes and arrows of f's source, colored by their image ids.
ColoredQuiver colored_quiver_of_diagram(const Functor& f, bool drop_identities = true);

/// Keeps the arrows whose color is in `colors` (Error on a color that no arrow
/// or node carries); nodes are kept, surviving pairs are kept.
ColoredQuiver extract_subquiver(const ColoredQuiver& q, const std::set<std::string>& colors);

/// Pairs every arrow with an unpaired arrow of the same color going the other
/// way, for symmetric relations that have no inverses.
ColoredQuiver pair_symmetric_arrows(const ColoredQuiver& q);

struct DotOptions {
  bool undirected = false;
  /// Arrow color -> DOT color. Colors missing from the map draw in gray.
  std::map<std::string, std::string> palette = {{"P", "blue"}, {"L", "green"}, {"R", "red"}};
  /// Render node ids through music::display_name.
  bool unicode_labels = false;
  std::string name = "quiver";
};

/// Nodes in declared order, arrows sorted by (src, dst, color, id). With
/// `undirected` the output is a graph and each inverse pair becomes one edge.
std::string emit_dot(const ColoredQuiver& q, const DotOptions& options = {});

}  // namespace catnet
