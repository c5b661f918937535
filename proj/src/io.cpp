#include "catnet/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace catnet::io {

namespace {

const std::set<std::string, std::less<>> kKinds = {
    "category", "group", "set-functor", "rel-functor", "gis",
    "pknet",    "ctnet", "morphism",    "quiver"};

// Runs `body`, turning JSON access errors and construction errors into
// SchemaError. ValidationError passes through untouched.
template <class Body>
auto guarded(const char* what, Body&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const ValidationError&) {
    throw;
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(std::string(what) + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string(what) + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw SchemaError(std::string("expected an object with '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing field '") + key + "'");
  return *it;
}

std::vector<std::string> strings(const Json& j) {
  if (!j.is_array()) throw SchemaError("expected an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(e.get<std::string>());
  return out;
}

std::map<std::string, std::string> string_map(const Json& j) {
  if (!j.is_object()) throw SchemaError("expected an object of strings");
  std::map<std::string, std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = it.value().get<std::string>();
  return out;
}

std::vector<ArrowSpec> arrow_specs(const Json& j) {
  std::vector<ArrowSpec> out;
  for (const auto& a : j)
    out.push_back({field(a, "id").get<std::string>(), field(a, "dom").get<std::string>(),
                   field(a, "cod").get<std::string>()});
  return out;
}

// Functor on delta given on some morphisms; identities map to identities and
// the rest is filled in from composites of known labels.
Functor functor_from_labels(const CategoryPtr& delta, const CategoryPtr& c,
                            const std::vector<std::size_t>& objects,
                            const std::map<std::string, std::string>& labels) {
  const auto& d = *delta;
  for (const auto& [arrow, label] : labels)
    if (!d.find_morphism(arrow)) throw SchemaError("unknown arrow '" + arrow + "'");
  std::vector<std::size_t> mm(d.morphism_count(), npos);
  for (std::size_t f = 0; f < d.morphism_count(); ++f) {
    if (auto it = labels.find(d.morphism(f).id); it != labels.end()) {
      auto m = c->find_morphism(it->second);
      if (!m) throw SchemaError("unknown label '" + it->second + "'");
      mm[f] = *m;
    } else if (d.is_identity(f)) {
      mm[f] = c->identity(objects[d.morphism(f).dom]);
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t f = 0; f < d.morphism_count(); ++f) {
      if (mm[f] != npos) continue;
      for (auto k : d.out(d.morphism(f).dom)) {
        if (mm[k] == npos) continue;
        for (auto g : d.out(d.morphism(k).cod)) {
          if (mm[g] == npos || d.compose(g, k) != f) continue;
          auto gk = c->compose(mm[g], mm[k]);
          if (!gk)
            throw SchemaError("labels of '" + d.morphism(g).id + "' and '" + d.morphism(k).id +
                              "' do not compose");
          mm[f] = *gk;
          changed = true;
          break;
        }
        if (mm[f] != npos) break;
      }
    }
  }
  for (std::size_t f = 0; f < d.morphism_count(); ++f)
    if (mm[f] == npos) throw SchemaError("no label for arrow '" + d.morphism(f).id + "'");
  return Functor(delta, c, objects, std::move(mm));
}

std::string element_of(const CTNet& net, std::size_t x) {
  const auto o = net.node(x);
  const auto& name = net.c_el().object(o);
  const auto prefix = "(" + net.c_t().object(net.pi.object(o)) + "|";
  if (name.starts_with(prefix) && name.ends_with(")"))
    return name.substr(prefix.size(), name.size() - prefix.size() - 1);
  return name;
}

}  // namespace

// --- envelope --------------------------------------------------------------

Json envelope(std::string_view kind, Json payload) {
  Json j;
  j["kind"] = std::string(kind);
  j["version"] = kVersion;
  j["payload"] = std::move(payload);
  return j;
}

Document parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  return guarded("envelope", [&] {
    const auto kind = field(j, "kind").get<std::string>();
    if (!kKinds.contains(kind)) throw SchemaError("unknown kind '" + kind + "'");
    const auto version = field(j, "version").get<std::string>();
    if (version != kVersion) throw SchemaError("unsupported version '" + version + "'");
    return Document{kind, field(j, "payload")};
  });
}

Document read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// --- builtins --------------------------------------------------------------

bool is_builtin_action(std::string_view name) {
  return name == "z12-t" || name == "z12-ti" || name == "z12-tritone" || name == "plr-triads";
}

music::GroupAction builtin_action(std::string_view name) {
  if (name == "z12-t") return music::builtin_t_group();
  if (name == "z12-ti") return music::builtin_ti_group();
  if (name == "z12-tritone") return music::builtin_tritone_group();
  if (name == "plr-triads") return music::builtin_plr();
  throw SchemaError("unknown builtin action '" + std::string(name) + "'");
}

// --- categories ------------------------------------------------------------

CategoryPtr category_from_json(const Json& j) {
  return guarded("category", [&]() -> CategoryPtr {
    if (j.contains("builtin")) {
      const auto name = j["builtin"].get<std::string>();
      if (name == "cube-dance") return music::builtin_cube_dance().source_ptr();
      return builtin_action(name).category;
    }
    if (j.contains("group")) return share(group_as_category(group_from_json(j["group"])));
    if (j.contains("thin")) {
      const auto& t = j["thin"];
      return share(thin_category(strings(field(t, "objects")), arrow_specs(field(t, "arrows"))));
    }
    if (j.contains("free")) {
      const auto& t = j["free"];
      return share(free_category(strings(field(t, "objects")), arrow_specs(field(t, "arrows"))));
    }
    FiniteCategory::Builder b;
    for (const auto& o : field(j, "objects")) b.add_object(o.get<std::string>());
    for (const auto& m : field(j, "morphisms"))
      b.add_morphism(field(m, "id").get<std::string>(), field(m, "dom").get<std::string>(),
                     field(m, "cod").get<std::string>());
    const auto& ids = field(j, "identities");
    for (auto it = ids.begin(); it != ids.end(); ++it)
      b.set_identity(b.object_index(it.key()), b.morphism_index(it.value().get<std::string>()));
    if (j.contains("compose"))
      for (const auto& e : j["compose"]) {
        if (!e.is_array() || e.size() != 3)
          throw SchemaError("compose entries are [g, f, g∘f] triples");
        b.set_compose(b.morphism_index(e[0].get<std::string>()),
                      b.morphism_index(e[1].get<std::string>()),
                      b.morphism_index(e[2].get<std::string>()));
      }
    return share(std::move(b).build());
  });
}

Json category_to_json(const FiniteCategory& c) {
  Json j;
  j["objects"] = c.objects();
  j["morphisms"] = Json::array();
  for (const auto& m : c.morphisms())
    j["morphisms"].push_back({{"id", m.id}, {"dom", c.object(m.dom)}, {"cod", c.object(m.cod)}});
  j["identities"] = Json::object();
  for (std::size_t x = 0; x < c.object_count(); ++x)
    j["identities"][c.object(x)] = c.morphism(c.identity(x)).id;
  j["compose"] = Json::array();
  for (std::size_t f = 0; f < c.morphism_count(); ++f)
    for (auto g : c.out(c.morphism(f).cod))
      if (auto gf = c.compose(g, f))
        j["compose"].push_back(
            Json::array({c.morphism(g).id, c.morphism(f).id, c.morphism(*gf).id}));
  return j;
}

GroupTable group_from_json(const Json& j) {
  return guarded("group", [&] {
    if (j.contains("builtin")) return builtin_action(j["builtin"].get<std::string>()).group;
    auto elements = strings(field(j, "elements"));
    const auto& rows = field(j, "product");
    if (!rows.is_array() || rows.size() != elements.size())
      throw SchemaError("product must have one row per element");
    ElementSet names(elements);
    std::vector<std::vector<std::size_t>> product;
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != elements.size())
        throw SchemaError("product rows must have one entry per element");
      auto& out = product.emplace_back();
      for (const auto& e : row) out.push_back(names.index(e.get<std::string>()));
    }
    return GroupTable(std::move(elements), std::move(product),
                      field(j, "unit").get<std::string>());
  });
}

Json group_to_json(const GroupTable& g) {
  Json j;
  j["elements"] = g.elements();
  j["unit"] = g.element(g.unit());
  j["product"] = Json::array();
  for (std::size_t a = 0; a < g.size(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < g.size(); ++b) row.push_back(g.element(g.product(a, b)));
    j["product"].push_back(std::move(row));
  }
  return j;
}

Functor functor_from_json(const Json& j, CategoryPtr source, CategoryPtr target) {
  return guarded("functor", [&] {
    std::vector<std::size_t> om(source->object_count());
    const Json empty = Json::object();
    const auto& objects = j.contains("objects") ? j["objects"] : empty;
    for (std::size_t x = 0; x < om.size(); ++x) {
      if (objects.contains(source->object(x)))
        om[x] = target->object_index(objects[source->object(x)].get<std::string>());
      else if (target->object_count() == 1)
        om[x] = 0;
      else
        throw SchemaError("functor: no image for object '" + source->object(x) + "'");
    }
    std::map<std::string, std::string> labels;
    if (j.contains("morphisms")) labels = string_map(j["morphisms"]);
    // Explicit maps must be complete apart from identities.
    for (std::size_t f = 0; f < source->morphism_count(); ++f)
      if (!source->is_identity(f) && !labels.contains(source->morphism(f).id))
        throw SchemaError("functor: no image for morphism '" + source->morphism(f).id + "'");
    return functor_from_labels(source, target, om, labels);
  });
}

Json functor_to_json(const Functor& f) {
  Json j;
  j["objects"] = Json::object();
  for (std::size_t x = 0; x < f.source().object_count(); ++x)
    j["objects"][f.source().object(x)] = f.target().object(f.object(x));
  j["morphisms"] = Json::object();
  for (std::size_t m = 0; m < f.source().morphism_count(); ++m)
    j["morphisms"][f.source().morphism(m).id] = f.target().morphism(f.morphism(m)).id;
  return j;
}

// --- Sets / Rel functors ---------------------------------------------------

SetValuedFunctor set_functor_from_json(const Json& j) {
  return guarded("set functor", [&] {
    if (j.contains("builtin")) return builtin_action(j["builtin"].get<std::string>()).action;
    auto source = category_from_json(field(j, "source"));
    std::map<std::string, std::vector<std::string>> sets;
    const auto& js = field(j, "sets");
    for (auto it = js.begin(); it != js.end(); ++it) sets[it.key()] = strings(it.value());
    std::map<std::string, std::map<std::string, std::string>> maps;
    if (j.contains("maps"))
      for (auto it = j["maps"].begin(); it != j["maps"].end(); ++it)
        maps[it.key()] = string_map(it.value());
    return SetValuedFunctor::from_names(std::move(source), sets, maps);
  });
}

namespace {

bool is_identity_map(const std::vector<std::size_t>& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != i) return false;
  return true;
}

}  // namespace

Json set_functor_to_json(const SetValuedFunctor& s, const Json* source) {
  const auto& c = s.source();
  Json j;
  j["source"] = source ? *source : category_to_json(c);
  j["sets"] = Json::object();
  for (std::size_t x = 0; x < c.object_count(); ++x) j["sets"][c.object(x)] = s.set(x).names();
  j["maps"] = Json::object();
  for (std::size_t f = 0; f < c.morphism_count(); ++f) {
    if (c.is_identity(f) && is_identity_map(s.map(f))) continue;
    const auto& m = c.morphism(f);
    Json mj = Json::object();
    for (std::size_t i = 0; i < s.set(m.dom).size(); ++i)
      mj[s.set(m.dom)[i]] = s.set(m.cod)[s.apply(f, i)];
    j["maps"][m.id] = std::move(mj);
  }
  return j;
}

RelValuedFunctor rel_functor_from_json(const Json& j) {
  return guarded("rel functor", [&] {
    if (j.contains("builtin")) {
      const auto name = j["builtin"].get<std::string>();
      if (name == "cube-dance") return music::builtin_cube_dance();
      return RelValuedFunctor::from_set_functor(builtin_action(name).action);
    }
    auto source = category_from_json(field(j, "source"));
    const auto& c = *source;
    std::vector<ElementSet> sets;
    const auto& js = field(j, "sets");
    for (const auto& o : c.objects()) {
      if (!js.contains(o)) throw SchemaError("rel functor: no set for object '" + o + "'");
      sets.emplace_back(strings(js[o]));
    }
    std::vector<std::vector<RelValuedFunctor::Pair>> rels(c.morphism_count());
    const Json empty = Json::object();
    const auto& jr = j.contains("rels") ? j["rels"] : empty;
    for (std::size_t f = 0; f < c.morphism_count(); ++f) {
      const auto& m = c.morphism(f);
      if (!jr.contains(m.id)) {
        if (!c.is_identity(f))
          throw SchemaError("rel functor: no relation for morphism '" + m.id + "'");
        for (std::size_t i = 0; i < sets[m.dom].size(); ++i) rels[f].push_back({i, i});
        continue;
      }
      for (const auto& p : jr[m.id]) {
        if (!p.is_array() || p.size() != 2) throw SchemaError("relation entries are [x, y] pairs");
        rels[f].push_back({sets[m.dom].index(p[0].get<std::string>()),
                           sets[m.cod].index(p[1].get<std::string>())});
      }
    }
    return RelValuedFunctor(std::move(source), std::move(sets), std::move(rels));
  });
}

Json rel_functor_to_json(const RelValuedFunctor& s, const Json* source) {
  const auto& c = s.source();
  Json j;
  j["source"] = source ? *source : category_to_json(c);
  j["sets"] = Json::object();
  for (std::size_t x = 0; x < c.object_count(); ++x) j["sets"][c.object(x)] = s.set(x).names();
  j["rels"] = Json::object();
  for (std::size_t f = 0; f < c.morphism_count(); ++f) {
    const auto& m = c.morphism(f);
    Json pairs = Json::array();
    for (auto [a, b] : s.rel(f)) pairs.push_back(Json::array({s.set(m.dom)[a], s.set(m.cod)[b]}));
    j["rels"][m.id] = std::move(pairs);
  }
  return j;
}

// --- GIS -------------------------------------------------------------------

GisData gis_from_json(const Json& j) {
  return guarded("gis", [&] {
    auto x = strings(field(j, "x"));
    auto group = group_from_json(field(j, "group"));
    const auto& rows = field(j, "int");
    if (!rows.is_array() || rows.size() != x.size())
      throw SchemaError("int must have one row per element of x");
    std::vector<std::vector<std::size_t>> table;
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != x.size())
        throw SchemaError("int rows must have one entry per element of x");
      auto& out = table.emplace_back();
      for (const auto& e : row) out.push_back(group.index(e.get<std::string>()));
    }
    GisData g(ElementSet(std::move(x)), std::move(group), std::move(table));
    const auto orientation = j.value("orientation", std::string("left"));
    if (orientation == "right") return to_left_orientation(g);
    if (orientation != "left") throw SchemaError("orientation is 'left' or 'right'");
    return g;
  });
}

Json gis_to_json(const GisData& g) {
  Json j;
  j["x"] = g.x.names();
  j["group"] = group_to_json(g.group);
  j["int"] = Json::array();
  for (const auto& row : g.interval) {
    Json r = Json::array();
    for (auto k : row) r.push_back(g.group.element(k));
    j["int"].push_back(std::move(r));
  }
  return j;
}

// --- PK-nets ---------------------------------------------------------------

PKNet pknet_from_json(const Json& j) {
  return guarded("pknet", [&] {
    auto r = set_functor_from_json(field(j, "r"));
    auto s = set_functor_from_json(field(j, "s"));
    auto f = functor_from_json(field(j, "f"), r.source_ptr(), s.source_ptr());
    std::map<std::string, std::map<std::string, std::string>> comps;
    const auto& jp = field(j, "phi");
    for (auto it = jp.begin(); it != jp.end(); ++it) comps[it.key()] = string_map(it.value());
    auto phi = SetNatTrans::from_names(r, precompose(s, f), comps);
    return PKNet{std::move(r), std::move(s), std::move(f), std::move(phi)};
  });
}

// --- quivers ---------------------------------------------------------------

ColoredQuiver quiver_from_json(const Json& j) {
  return guarded("quiver", [&] {
    ColoredQuiver q;
    std::map<std::string, std::size_t> node_index, arrow_index;
    for (const auto& n : field(j, "nodes")) {
      auto id = field(n, "id").get<std::string>();
      if (!node_index.emplace(id, q.nodes.size()).second)
        throw SchemaError("duplicate node '" + id + "'");
      q.nodes.push_back({id, n.value("color", std::string())});
    }
    auto node = [&](const Json& v) {
      auto it = node_index.find(v.get<std::string>());
      if (it == node_index.end()) throw SchemaError("unknown node '" + v.get<std::string>() + "'");
      return it->second;
    };
    for (const auto& a : field(j, "arrows")) {
      auto id = field(a, "id").get<std::string>();
      if (!arrow_index.emplace(id, q.arrows.size()).second)
        throw SchemaError("duplicate arrow '" + id + "'");
      q.arrows.push_back({id, node(field(a, "src")), node(field(a, "dst")),
                          a.value("color", std::string())});
    }
    if (j.contains("inverse_pairs"))
      for (const auto& p : j["inverse_pairs"]) {
        if (!p.is_array() || p.size() != 2) throw SchemaError("inverse pairs are [a, b]");
        auto a = arrow_index.find(p[0].get<std::string>());
        auto b = arrow_index.find(p[1].get<std::string>());
        if (a == arrow_index.end() || b == arrow_index.end())
          throw SchemaError("inverse pair names an unknown arrow");
        q.inverse_pairs.emplace_back(a->second, b->second);
      }
    return q;
  });
}

Json quiver_to_json(const ColoredQuiver& q) {
  Json j;
  j["nodes"] = Json::array();
  for (const auto& n : q.nodes) j["nodes"].push_back({{"id", n.id}, {"color", n.color}});
  j["arrows"] = Json::array();
  for (const auto& a : q.arrows)
    j["arrows"].push_back({{"id", a.id},
                           {"src", q.nodes[a.src].id},
                           {"dst", q.nodes[a.dst].id},
                           {"color", a.color}});
  j["inverse_pairs"] = Json::array();
  for (auto [a, b] : q.inverse_pairs)
    j["inverse_pairs"].push_back(Json::array({q.arrows[a].id, q.arrows[b].id}));
  return j;
}

// --- reports ---------------------------------------------------------------

Json violation_to_json(const Violation& v) {
  Json j;
  j["axiom"] = v.axiom;
  j["witness"] = v.witness;
  return j;
}

Json report_to_json(const ValidationReport& r) {
  Json j = Json::array();
  for (const auto& v : r) j.push_back(violation_to_json(v));
  return j;
}

Json elements_to_json(const ElementsResult& el) {
  Json j = category_to_json(*el.cat);
  j["projection"] = functor_to_json(el.proj);
  j["summary"] = {{"objects", el.cat->object_count()}, {"morphisms", el.cat->morphism_count()}};
  return j;
}

// --- networks --------------------------------------------------------------

NetDocument ctnet_from_json(const Json& j) {
  return guarded("ctnet", [&] {
    if (!j.contains("support")) {
      auto delta = category_from_json(field(j, "delta"));
      auto c_el = category_from_json(field(j, "c_el"));
      auto c_t = category_from_json(field(j, "c_t"));
      auto h = functor_from_json(field(j, "h"), delta, c_el);
      auto pi = functor_from_json(field(j, "pi"), c_el, c_t);
      return NetDocument{CTNet{std::move(h), std::move(pi)}, ""};
    }
    const auto support = field(j, "support").get<std::string>();
    auto action = builtin_action(support);
    auto delta = category_from_json(field(j, "delta"));
    const auto& carrier = action.action.set(0);

    const auto& nodes = field(j, "nodes");
    for (auto it = nodes.begin(); it != nodes.end(); ++it)
      if (!delta->find_object(it.key())) throw SchemaError("unknown node '" + it.key() + "'");
    std::vector<std::vector<std::size_t>> phi(delta->object_count());
    for (std::size_t x = 0; x < delta->object_count(); ++x) {
      if (!nodes.contains(delta->object(x)))
        throw SchemaError("no element for node '" + delta->object(x) + "'");
      auto raw = nodes[delta->object(x)].get<std::string>();
      auto name = music::canonical_name(raw).value_or(raw);
      auto idx = carrier.find(name);
      if (!idx) throw SchemaError("'" + raw + "' is not an element of " + support);
      phi[x] = {*idx};
    }
    std::map<std::string, std::string> labels;
    if (j.contains("labels")) labels = string_map(j["labels"]);
    auto f = functor_from_labels(delta, action.category,
                                 std::vector<std::size_t>(delta->object_count(), 0), labels);
    auto r = SetValuedFunctor::constant(delta, {"*"});
    SetNatTrans nat(r, precompose(action.action, f), std::move(phi));
    auto net = ctnet_from_pknet(PKNet{std::move(r), action.action, std::move(f), std::move(nat)});
    return NetDocument{std::move(net), support};
  });
}

Json ctnet_to_json(const NetDocument& d) {
  const auto& net = d.net;
  Json j;
  if (d.support.empty()) {
    j["delta"] = category_to_json(net.delta());
    j["c_el"] = category_to_json(net.c_el());
    j["c_t"] = category_to_json(net.c_t());
    j["h"] = functor_to_json(net.h);
    j["pi"] = functor_to_json(net.pi);
    return j;
  }
  j["support"] = d.support;
  j["delta"] = category_to_json(net.delta());
  j["nodes"] = Json::object();
  for (std::size_t x = 0; x < net.delta().object_count(); ++x)
    j["nodes"][net.delta().object(x)] = element_of(net, x);
  j["labels"] = Json::object();
  for (std::size_t f = 0; f < net.delta().morphism_count(); ++f)
    if (!net.delta().is_identity(f)) j["labels"][net.delta().morphism(f).id] = net.arrow_label(f);
  return j;
}

namespace {

AppliedMorphism apply_complete(const NetDocument& doc, const Json& m) {
  auto s = doc.support.empty() ? set_functor_from_json(field(m, "s"))
                               : builtin_action(doc.support).action;
  auto support = doc.support;
  auto s_prime = s;
  if (m.contains("s_prime")) {
    if (m["s_prime"].is_string()) {
      support = m["s_prime"].get<std::string>();
      s_prime = builtin_action(support).action;
    } else {
      support.clear();
      s_prime = set_functor_from_json(m["s_prime"]);
    }
  }

  const auto& jn = field(m, "n");
  std::optional<std::pair<int, int>> affine_n;
  Functor n = [&] {
    if (jn.contains("ti_affine")) {
      const int u = field(jn["ti_affine"], "u").get<int>();
      const int jj = field(jn["ti_affine"], "j").get<int>();
      affine_n = std::pair{u, jj};
      auto auto_n = music::ti_automorphism(s.source_ptr(), u, jj);
      return Functor(s.source_ptr(), s_prime.source_ptr(), auto_n.object_map(),
                     auto_n.morphism_map());
    }
    return functor_from_json(jn, s.source_ptr(), s_prime.source_ptr());
  }();

  auto target = precompose(s_prime, n);
  const auto& jt = field(m, "nu_tilde");
  SetNatTrans nu_tilde = [&] {
    if (jt.contains("affine")) {
      const int u = field(jt["affine"], "u").get<int>();
      const int shift = field(jt["affine"], "m").get<int>();
      const auto& c = s.source();
      std::vector<std::vector<std::size_t>> comps(c.object_count());
      for (std::size_t x = 0; x < c.object_count(); ++x) {
        if (s.set(x).size() != 12 || target.set(x).size() != 12)
          throw SchemaError("affine nu_tilde needs pitch-class sets");
        for (int i = 0; i < 12; ++i)
          comps[x].push_back(static_cast<std::size_t>(music::mod12(u * i + shift)));
      }
      return SetNatTrans(s, target, std::move(comps));
    }
    std::map<std::string, std::map<std::string, std::string>> comps;
    for (auto it = jt.begin(); it != jt.end(); ++it) comps[it.key()] = string_map(it.value());
    return SetNatTrans::from_names(s, target, comps);
  }();

  try {
    auto t = apply_complete_homography(doc.net, CompleteHomography{n, s_prime, nu_tilde});
    return {NetDocument{std::move(t.net), support}, std::move(t.morphism)};
  } catch (const ValidationError& e) {
    if (!affine_n) throw;
    std::string list;
    for (auto c : ti_homography_choices(affine_n->second))
      list += (list.empty() ? "" : ", ") + std::to_string(c);
    throw ValidationError("complete homography: nu_tilde is not natural for <" +
                              std::to_string(affine_n->first) + "," +
                              std::to_string(affine_n->second) + ">; valid m: " +
                              (list.empty() ? "none" : list),
                          e.report());
  }
}

AppliedMorphism apply_local(const NetDocument& doc, const Json& m) {
  const auto& net = doc.net;
  const auto& delta = net.delta();
  const auto& c_t = net.c_t();
  const auto f = compose_functors(net.pi, net.h);

  const auto comps_json = string_map(field(m, "components"));
  for (const auto& [node, label] : comps_json)
    if (!delta.find_object(node)) throw SchemaError("unknown node '" + node + "'");
  std::vector<std::size_t> comps(delta.object_count());
  std::vector<std::size_t> objects(delta.object_count());
  for (std::size_t x = 0; x < delta.object_count(); ++x) {
    auto it = comps_json.find(delta.object(x));
    if (it == comps_json.end()) throw SchemaError("no component at '" + delta.object(x) + "'");
    auto c = c_t.find_morphism(it->second);
    if (!c) throw SchemaError("unknown label '" + it->second + "'");
    comps[x] = *c;
    objects[x] = c_t.morphism(*c).cod;
  }
  Functor f_prime = m.contains("f_prime")
                        ? functor_from_labels(net.h.source_ptr(), net.pi.target_ptr(), objects,
                                              string_map(m["f_prime"]))
                        : f;
  auto t = local_homography_by_labels(net, f_prime, CatNatTrans(f, f_prime, std::move(comps)));
  return {NetDocument{std::move(t.net), doc.support}, std::move(t.morphism)};
}

}  // namespace

AppliedMorphism apply_morphism_json(const NetDocument& doc, const Json& m) {
  return guarded("morphism", [&]() -> AppliedMorphism {
    const auto type = field(m, "type").get<std::string>();
    if (type == "identity") return {doc, identity_morphism(doc.net)};
    if (type == "complete") return apply_complete(doc, m);
    if (type == "local") return apply_local(doc, m);
    if (type == "sequence") {
      AppliedMorphism acc{doc, identity_morphism(doc.net)};
      for (const auto& step : field(m, "steps")) {
        auto next = apply_morphism_json(acc.net, step);
        acc.morphism = compose_ctnet_morphisms(next.morphism, acc.morphism);
        acc.net = std::move(next.net);
      }
      if (auto r = validate_ctnet_morphism(acc.morphism); !r.ok())
        throw ValidationError("sequence: composed morphism is invalid", std::move(r));
      return acc;
    }
    throw SchemaError("unknown morphism type '" + type + "'");
  });
}

}  // namespace catnet::io
