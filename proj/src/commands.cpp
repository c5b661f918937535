#include "catnet/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <ostream>
#include <set>

#include "catnet/io.hpp"

namespace catnet::cli {

namespace {

using io::Json;

constexpr std::size_t kMaxWitnesses = 20;

void print_lines(const ValidationReport& r, std::ostream& os) {
  for (const auto& v : r) os << io::violation_to_json(v).dump() << "\n";
}

// Maps exceptions onto exit codes. A ValidationError prints its witnesses as
// JSON lines on `report_to` (stdout for validate, stderr elsewhere).
int guarded(std::ostream& err, std::ostream& report_to, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    print_lines(e.report(), report_to);
    return kFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
}

io::Document expect(const std::string& path, std::initializer_list<const char*> kinds) {
  auto doc = io::read_document(path);
  for (const auto* k : kinds)
    if (doc.kind == k) return doc;
  std::string list;
  for (const auto* k : kinds) list += (list.empty() ? "" : ", ") + std::string(k);
  throw io::SchemaError("'" + path + "' is a " + doc.kind + " document; expected " + list);
}

ValidationReport prefixed(const ValidationReport& r, const std::string& prefix) {
  ValidationReport out;
  for (const auto& v : r) out.add(prefix + v.axiom, v.witness);
  return out;
}

int finish(const ValidationReport& r, std::ostream& out, std::ostream& err) {
  print_lines(r, out);
  if (r.ok()) {
    err << "ok\n";
    return kOk;
  }
  err << r.size() << " violation" << (r.size() == 1 ? "" : "s") << "\n";
  return kFailed;
}

Json condition_json(const ValidationReport& r) {
  Json j;
  j["holds"] = r.ok();
  j["count"] = r.size();
  j["witnesses"] = Json::array();
  for (std::size_t k = 0; k < r.size() && k < kMaxWitnesses; ++k)
    j["witnesses"].push_back(io::violation_to_json(r.violations()[k]));
  return j;
}

bool is_builtin_name(const std::string& s) {
  return io::is_builtin_action(s) || s == "cube-dance" || s == "chicken-wire";
}

struct Source {
  ColoredQuiver quiver;
  bool symmetric = false;  // Rel-valued: pair reverse arrows when undirected
  std::string name = "quiver";
};

Source quiver_source(const std::string& input, bool keep_identities) {
  const bool drop = !keep_identities;
  if (input == "chicken-wire" || io::is_builtin_action(input)) {
    auto a = io::builtin_action(input == "chicken-wire" ? "plr-triads" : input);
    auto el = elements_of_set_functor(a.action);
    return {colored_quiver_of_diagram(el.proj, drop), false, input};
  }
  if (input == "cube-dance") {
    auto el = elements_of_rel_functor(music::builtin_cube_dance());
    return {colored_quiver_of_diagram(el.proj, drop), true, input};
  }
  auto doc = expect(input, {"category", "set-functor", "rel-functor", "quiver", "ctnet"});
  if (doc.kind == "category") return {forget_to_quiver(*io::category_from_json(doc.payload), drop)};
  if (doc.kind == "set-functor") {
    auto el = elements_of_set_functor(io::set_functor_from_json(doc.payload));
    return {colored_quiver_of_diagram(el.proj, drop)};
  }
  if (doc.kind == "rel-functor") {
    auto el = elements_of_rel_functor(io::rel_functor_from_json(doc.payload));
    return {colored_quiver_of_diagram(el.proj, drop), true};
  }
  if (doc.kind == "quiver") {
    auto q = io::quiver_from_json(doc.payload);
    if (auto r = validate_quiver(q); !r.ok()) throw ValidationError("invalid quiver", r);
    return {std::move(q)};
  }
  // A network: nodes carry their elements, arrows their labels.
  auto net = io::ctnet_from_json(doc.payload).net;
  auto q = forget_to_quiver(net.delta(), drop);
  for (std::size_t x = 0; x < q.nodes.size(); ++x) q.nodes[x].color = net.node_label(x);
  for (auto& a : q.arrows) a.color = net.arrow_label(net.delta().morphism_index(a.id));
  return {std::move(q)};
}

std::string dot_name(std::string s) {
  std::replace(s.begin(), s.end(), '-', '_');
  return s;
}

}  // namespace

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, out, [&] {
    auto doc = io::read_document(path);
    const auto& p = doc.payload;
    ValidationReport r;
    if (doc.kind == "category") {
      r = validate_category(*io::category_from_json(p));
    } else if (doc.kind == "group") {
      r = validate_group(io::group_from_json(p));
    } else if (doc.kind == "set-functor") {
      auto s = io::set_functor_from_json(p);
      r = prefixed(validate_category(s.source()), "source: ");
      r.append(validate_set_functor(s));
    } else if (doc.kind == "rel-functor") {
      auto s = io::rel_functor_from_json(p);
      r = prefixed(validate_category(s.source()), "source: ");
      r.append(validate_rel_functor(s));
    } else if (doc.kind == "gis") {
      auto g = io::gis_from_json(p);
      r = prefixed(validate_group(g.group), "group: ");
      r.append(check_gis_condition1(g));
      r.append(check_gis_condition2(g));
    } else if (doc.kind == "pknet") {
      r = validate_pknet(io::pknet_from_json(p));
    } else if (doc.kind == "ctnet") {
      r = validate_ctnet(io::ctnet_from_json(p).net);
    } else if (doc.kind == "quiver") {
      r = validate_quiver(io::quiver_from_json(p));
    } else {
      err << "error: a morphism document is checked against a net with 'apply'\n";
      return kBadInput;
    }
    return finish(r, out, err);
  });
}

int cmd_check_gis(const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, err, [&] {
    auto g = io::gis_from_json(expect(path, {"gis"}).payload);
    if (auto r = validate_group(g.group); !r.ok()) throw ValidationError("not a group", r);
    const auto c1 = check_gis_condition1(g);
    const auto c2 = check_gis_condition2(g);
    Json j;
    j["condition1"] = condition_json(c1);
    j["condition2"] = condition_json(c2);
    out << io::dump(j);
    return c1.ok() && c2.ok() ? kOk : kFailed;
  });
}

int cmd_elements(const std::string& input, bool rel, std::ostream& out, std::ostream& err) {
  return guarded(err, err, [&] {
    std::optional<ElementsResult> el;
    if (input == "cube-dance") {
      el = elements_of_rel_functor(music::builtin_cube_dance());
    } else if (io::is_builtin_action(input)) {
      auto s = io::builtin_action(input).action;
      el = rel ? elements_of_rel_functor(RelValuedFunctor::from_set_functor(s))
               : elements_of_set_functor(s);
    } else {
      auto doc = expect(input, {"set-functor", "rel-functor"});
      if (doc.kind == "rel-functor") {
        el = elements_of_rel_functor(io::rel_functor_from_json(doc.payload));
      } else {
        auto s = io::set_functor_from_json(doc.payload);
        el = rel ? elements_of_rel_functor(RelValuedFunctor::from_set_functor(s))
                 : elements_of_set_functor(s);
      }
    }
    out << io::dump(io::envelope("category", io::elements_to_json(*el)));
    err << el->cat->object_count() << " objects, " << el->cat->morphism_count()
        << " morphisms\n";
    return kOk;
  });
}

int cmd_export_dot(const std::string& input, const ExportOptions& options, std::ostream& out,
                   std::ostream& err) {
  return guarded(err, err, [&] {
    auto src = quiver_source(input, options.keep_identities);
    auto highlight = options.highlight;
    bool undirected = options.undirected;
    if (input == "chicken-wire") {
      if (highlight.empty())
        for (const auto& h : music::builtin_chicken_wire_spec()) highlight.push_back(h.label);
      undirected = true;
    }
    auto q = std::move(src.quiver);
    if (!highlight.empty()) q = extract_subquiver(q, {highlight.begin(), highlight.end()});
    if (undirected && src.symmetric) q = pair_symmetric_arrows(q);
    DotOptions dot;
    dot.undirected = undirected;
    dot.unicode_labels = options.unicode;
    dot.name = dot_name(is_builtin_name(input) ? input : src.name);
    out << emit_dot(q, dot);
    return kOk;
  });
}

int cmd_isography(const std::string& a, const std::string& b, bool search, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, err, [&] {
    auto na = io::ctnet_from_json(expect(a, {"ctnet"}).payload).net;
    auto nb = io::ctnet_from_json(expect(b, {"ctnet"}).payload).net;
    auto v = check_isography(na, nb, search);
    Json j;
    j["verdict"] = to_string(v.kind);
    if (v.kind == IsographyKind::positive || v.kind == IsographyKind::negative) j["j"] = v.j;
    if (v.kind == IsographyKind::none) {
      j["reason"] = v.reason;
    } else {
      j["object_map"] = Json::object();
      for (std::size_t x = 0; x < v.object_map.size(); ++x)
        j["object_map"][na.delta().object(x)] = nb.delta().object(v.object_map[x]);
    }
    out << io::dump(j);
    return v.kind == IsographyKind::none ? kFailed : kOk;
  });
}

int cmd_apply(const std::string& net, const std::string& morphism, std::ostream& out,
              std::ostream& err) {
  return guarded(err, err, [&] {
    auto doc = io::ctnet_from_json(expect(net, {"ctnet"}).payload);
    auto m = expect(morphism, {"morphism"});
    auto result = io::apply_morphism_json(doc, m.payload);
    out << io::dump(io::envelope("ctnet", io::ctnet_to_json(result.net)));
    return kOk;
  });
}

int cmd_builtin(const std::string& name, std::ostream& out, std::ostream& err) {
  return guarded(err, err, [&] {
    if (io::is_builtin_action(name)) {
      auto a = io::builtin_action(name);
      Json source = {{"group", io::group_to_json(a.group)}};
      out << io::dump(io::envelope("set-functor", io::set_functor_to_json(a.action, &source)));
      return kOk;
    }
    if (name == "cube-dance") {
      out << io::dump(io::envelope("rel-functor", io::rel_functor_to_json(music::builtin_cube_dance())));
      return kOk;
    }
    if (name == "chicken-wire") {
      auto src = quiver_source(name, false);
      std::set<std::string> colors;
      for (const auto& h : music::builtin_chicken_wire_spec()) colors.insert(h.label);
      out << io::dump(io::envelope("quiver", io::quiver_to_json(extract_subquiver(src.quiver, colors))));
      return kOk;
    }
    err << "error: unknown builtin '" << name
        << "' (z12-t, z12-ti, z12-tritone, plr-triads, cube-dance, chicken-wire)\n";
    return kBadInput;
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite categories, categories of elements and transformational networks"};
  app.name(args.empty() ? "catnet" : args.front());
  app.require_subcommand(1);

  std::string path, second, name;
  bool rel = false, search = false;
  ExportOptions ex;

  auto* validate = app.add_subcommand("validate", "Check the laws a document must satisfy");
  validate->add_option("file", path, "Document")->required();
  auto* gis = app.add_subcommand("check-gis", "Check both interval-system conditions");
  gis->add_option("file", path, "gis document")->required();
  auto* elements = app.add_subcommand("elements", "Category of elements of a functor");
  elements->add_option("input", path, "Document or builtin name")->required();
  elements->add_flag("--rel", rel, "Treat the functor as Rel-valued");
  auto* dot = app.add_subcommand("export-dot", "Colored multidigraph as DOT");
  dot->add_option("input", path, "Document or builtin name")->required();
  dot->add_option("--highlight", ex.highlight, "Arrow colors to keep")->delimiter(',');
  dot->add_flag("--undirected", ex.undirected, "Draw inverse pairs as single edges");
  dot->add_flag("--keep-identities", ex.keep_identities, "Draw identity morphisms");
  dot->add_flag("--unicode", ex.unicode, "Label nodes with ♯ spellings");
  auto* iso = app.add_subcommand("isography", "Compare the labels of two T/I networks");
  iso->add_option("first", path, "ctnet document")->required();
  iso->add_option("second", second, "ctnet document")->required();
  iso->add_flag("--search", search, "Try every skeleton isomorphism");
  auto* apply = app.add_subcommand("apply", "Apply a morphism document to a network");
  apply->add_option("net", path, "ctnet document")->required();
  apply->add_option("morphism", second, "morphism document")->required();
  auto* builtin = app.add_subcommand("builtin", "Dump a builtin structure");
  builtin->add_option("name", name, "Builtin name")->required();

  try {
    std::vector<std::string> rest(args.rbegin(), args.rend());
    if (!rest.empty()) rest.pop_back();
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  if (*validate) return cmd_validate(path, out, err);
  if (*gis) return cmd_check_gis(path, out, err);
  if (*elements) return cmd_elements(path, rel, out, err);
  if (*dot) return cmd_export_dot(path, ex, out, err);
  if (*iso) return cmd_isography(path, second, search, out, err);
  if (*apply) return cmd_apply(path, second, out, err);
  return cmd_builtin(name, out, err);
}

}  // namespace catnet::cli
