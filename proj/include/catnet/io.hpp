#pragma once

// JSON documents: an envelope {kind, version: "1", payload} around categories,
// groups, functors, interval systems, PK-nets, CT-Nets, morphisms and quivers.

#include <string>
#include <string_view>

#include <json.hpp>

#include "catnet/concrete.hpp"
#include "catnet/ctnet.hpp"
#include "catnet/elements.hpp"
#include "catnet/fincat.hpp"
#include "catnet/music.hpp"
#include "catnet/quiver.hpp"

namespace catnet::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "1";

/// Malformed document: bad JSON, wrong shape, unknown identifiers.
class SchemaError : public Error {
 public:
  using Error::Error;
};

struct Document {
  std::string kind;
  Json payload;
};

Json envelope(std::string_view kind, Json payload);
/// Throws SchemaError on bad JSON, an unknown kind or a wrong version.
Document parse_document(std::string_view text);
Document read_document(const std::string& path);
std::string dump(const Json& j);

// --- builtins --------------------------------------------------------------

/// z12-t, z12-ti, z12-tritone, plr-triads. Throws SchemaError otherwise.
music::GroupAction builtin_action(std::string_view name);
bool is_builtin_action(std::string_view name);

// --- values ----------------------------------------------------------------

/// Explicit {objects, morphisms, identities, compose}, or one of
/// {"builtin": name}, {"group": group}, {"thin": {objects, arrows}},
/// {"free": {objects, arrows}}.
CategoryPtr category_from_json(const Json& j);
Json category_to_json(const FiniteCategory& c);

/// {elements, unit, product} with product[a][b] = a*b by name, or {"builtin": name}.
GroupTable group_from_json(const Json& j);
Json group_to_json(const GroupTable& g);

/// {objects: {x: y}, morphisms: {f: g}}; identities may be omitted.
Functor functor_from_json(const Json& j, CategoryPtr source, CategoryPtr target);
Json functor_to_json(const Functor& f);

/// {source, sets: {X: [..]}, maps: {f: {x: y}}}, or {"builtin": name}.
SetValuedFunctor set_functor_from_json(const Json& j);
/// `source` overrides the serialized source category.
Json set_functor_to_json(const SetValuedFunctor& s, const Json* source = nullptr);

/// {source, sets, rels: {f: [[x, y], ..]}}, or {"builtin": "cube-dance"}.
RelValuedFunctor rel_functor_from_json(const Json& j);
Json rel_functor_to_json(const RelValuedFunctor& s, const Json* source = nullptr);

/// {x, group, int: [[..]]} with int[i][k] = int(x_i, x_k); "orientation":
/// "right" converts a table written for int(x,y)*int(y,z) = int(x,z).
GisData gis_from_json(const Json& j);
Json gis_to_json(const GisData& g);

/// {r, s, f, phi: {X: {x: y}}}.
PKNet pknet_from_json(const Json& j);

/// Node arrays {id, color}, arrays {id, src, dst, color} by node id, and
/// inverse_pairs as arrow id pairs.
ColoredQuiver quiver_from_json(const Json& j);
Json quiver_to_json(const ColoredQuiver& q);

Json violation_to_json(const Violation& v);
Json report_to_json(const ValidationReport& r);

Json elements_to_json(const ElementsResult& el);

// --- networks --------------------------------------------------------------

/// A net together with the builtin support it lives on ("" when explicit).
struct NetDocument {
  CTNet net;
  std::string support;
};

/// Compact {support, delta, nodes: {X: element}, labels: {f: label}} (labels
/// of composites may be omitted) or explicit {delta, c_el, c_t, h, pi}.
/// Compact input is checked as a PK-net and throws ValidationError when the
/// labels do not carry the nodes.
NetDocument ctnet_from_json(const Json& j);
/// Compact when the support is a builtin, explicit otherwise.
Json ctnet_to_json(const NetDocument& d);

struct AppliedMorphism {
  NetDocument net;
  CTNetMorphism morphism;
};

/// Morphism payload {type: complete | local | identity | sequence, ...}.
AppliedMorphism apply_morphism_json(const NetDocument& net, const Json& m);

}  // namespace catnet::io
