#include "catnet/quiver.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "catnet/music.hpp"

namespace catnet {

namespace {

struct Forgotten {
  ColoredQuiver q;
  std::vector<std::size_t> morphism_of;  // arrow -> morphism
};

Forgotten forget(const FiniteCategory& c, bool drop_identities) {
  Forgotten out;
  for (const auto& o : c.objects()) out.q.nodes.push_back({o, ""});
  std::vector<std::size_t> arrow_of(c.morphism_count(), npos);
  for (std::size_t f = 0; f < c.morphism_count(); ++f) {
    if (drop_identities && c.is_identity(f)) continue;
    const auto& m = c.morphism(f);
    arrow_of[f] = out.q.arrows.size();
    out.q.arrows.push_back({m.id, m.dom, m.cod, ""});
    out.morphism_of.push_back(f);
  }
  for (std::size_t f = 0; f < c.morphism_count(); ++f) {
    if (arrow_of[f] == npos || c.is_identity(f)) continue;
    const auto& m = c.morphism(f);
    for (auto g : c.out(m.cod)) {
      if (g == f || arrow_of[g] == npos || c.morphism(g).cod != m.dom) continue;
      if (c.compose(g, f) != c.identity(m.dom) || c.compose(f, g) != c.identity(m.cod)) continue;
      if (m.id < c.morphism(g).id) out.q.inverse_pairs.emplace_back(arrow_of[f], arrow_of[g]);
      break;
    }
  }
  return out;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

ValidationReport validate_quiver(const ColoredQuiver& q) {
  ValidationReport r;
  for (const auto& a : q.arrows)
    if (a.src >= q.nodes.size() || a.dst >= q.nodes.size()) r.add("endpoint", {a.id});
  std::vector<int> used(q.arrows.size(), 0);
  for (auto [a, b] : q.inverse_pairs) {
    if (a >= q.arrows.size() || b >= q.arrows.size()) {
      r.add("inverse pair", {"out of range"});
      continue;
    }
    if (q.arrows[a].src != q.arrows[b].dst || q.arrows[a].dst != q.arrows[b].src)
      r.add("inverse pair", {q.arrows[a].id, q.arrows[b].id});
    if (++used[a] > 1) r.add("inverse pair reused", {q.arrows[a].id});
    if (++used[b] > 1) r.add("inverse pair reused", {q.arrows[b].id});
  }
  return r;
}

ColoredQuiver forget_to_quiver(const FiniteCategory& c, bool drop_identities) {
  return forget(c, drop_identities).q;
}

ColoredQuiver colored_quiver_of_diagram(const Functor& f, bool drop_identities) {
  auto out = forget(f.source(), drop_identities);
  const auto& t = f.target();
  for (std::size_t x = 0; x < out.q.nodes.size(); ++x) out.q.nodes[x].color = t.object(f.object(x));
  for (std::size_t a = 0; a < out.q.arrows.size(); ++a)
    out.q.arrows[a].color = t.morphism(f.morphism(out.morphism_of[a])).id;
  return out.q;
}

ColoredQuiver extract_subquiver(const ColoredQuiver& q, const std::set<std::string>& colors) {
  std::set<std::string> known;
  for (const auto& a : q.arrows) known.insert(a.color);
  for (const auto& c : colors)
    if (!known.contains(c)) throw Error("extract_subquiver: unknown color '" + c + "'");
  ColoredQuiver out;
  out.nodes = q.nodes;
  std::vector<std::size_t> index(q.arrows.size(), npos);
  for (std::size_t a = 0; a < q.arrows.size(); ++a)
    if (colors.contains(q.arrows[a].color)) {
      index[a] = out.arrows.size();
      out.arrows.push_back(q.arrows[a]);
    }
  for (auto [a, b] : q.inverse_pairs)
    if (index[a] != npos && index[b] != npos) out.inverse_pairs.emplace_back(index[a], index[b]);
  return out;
}

ColoredQuiver pair_symmetric_arrows(const ColoredQuiver& q) {
  ColoredQuiver out = q;
  std::vector<bool> paired(q.arrows.size(), false);
  for (auto [a, b] : q.inverse_pairs) paired[a] = paired[b] = true;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& x = q.arrows[a];
    if (paired[a] || x.src == x.dst) continue;
    for (std::size_t b = a + 1; b < q.arrows.size(); ++b) {
      const auto& y = q.arrows[b];
      if (paired[b] || y.src != x.dst || y.dst != x.src || y.color != x.color) continue;
      paired[a] = paired[b] = true;
      if (x.id < y.id)
        out.inverse_pairs.emplace_back(a, b);
      else
        out.inverse_pairs.emplace_back(b, a);
      break;
    }
  }
  return out;
}

std::string emit_dot(const ColoredQuiver& q, const DotOptions& options) {
  std::ostringstream os;
  os << (options.undirected ? "graph " : "digraph ") << quote(options.name) << " {\n";
  for (const auto& n : q.nodes) {
    os << "  " << quote(n.id);
    std::vector<std::string> attrs;
    if (options.unicode_labels) {
      // element part of "(X|x)" when present
      std::string label = n.id;
      if (label.size() > 2 && label.front() == '(' && label.back() == ')') {
        auto bar = label.find('|');
        if (bar != std::string::npos) label = label.substr(bar + 1, label.size() - bar - 2);
      }
      attrs.push_back("label=" + quote(music::display_name(label)));
    }
    if (!n.color.empty()) attrs.push_back("class=" + quote(n.color));
    if (!attrs.empty()) {
      os << " [";
      for (std::size_t k = 0; k < attrs.size(); ++k) os << (k ? ", " : "") << attrs[k];
      os << "]";
    }
    os << ";\n";
  }

  std::vector<bool> hidden(q.arrows.size(), false);
  if (options.undirected)
    for (auto [rep, other] : q.inverse_pairs) hidden[other] = true;
  std::vector<std::size_t> order;
  for (std::size_t a = 0; a < q.arrows.size(); ++a)
    if (!hidden[a]) order.push_back(a);
  std::sort(order.begin(), order.end(), [&](auto x, auto y) {
    const auto& a = q.arrows[x];
    const auto& b = q.arrows[y];
    return std::tie(a.src, a.dst, a.color, a.id) < std::tie(b.src, b.dst, b.color, b.id);
  });

  const char* edge = options.undirected ? " -- " : " -> ";
  for (auto k : order) {
    const auto& a = q.arrows[k];
    os << "  " << quote(q.nodes[a.src].id) << edge << quote(q.nodes[a.dst].id) << " [id="
       << quote(a.id);
    if (!a.color.empty()) {
      auto it = options.palette.find(a.color);
      os << ", label=" << quote(a.color)
         << ", color=" << quote(it == options.palette.end() ? "gray" : it->second);
    }
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace catnet
