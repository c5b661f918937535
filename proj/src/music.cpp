#include "catnet/music.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>

namespace catnet::music {

namespace {

constexpr std::array<const char*, 12> kAscii = {"C",  "Cs", "D",  "Ds", "E",  "F",
                                                "Fs", "G",  "Gs", "A",  "As", "B"};
constexpr std::array<const char*, 12> kDisplay = {"C",  "C♯", "D",  "D♯", "E",  "F",
                                                  "F♯", "G",  "G♯", "A",  "A♯", "B"};
constexpr std::string_view kSharp = "♯";
constexpr std::string_view kFlat = "♭";

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::string lower_first(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(s[0])));
  return s;
}

}  // namespace

std::string pitch_name(int pc) { return kAscii[mod12(pc)]; }
std::string pitch_display(int pc) { return kDisplay[mod12(pc)]; }

std::optional<int> parse_pitch(std::string_view s) {
  if (s.empty()) return std::nullopt;
  static const std::map<char, int> base = {{'C', 0}, {'D', 2}, {'E', 4}, {'F', 5},
                                           {'G', 7}, {'A', 9}, {'B', 11}};
  auto it = base.find(s[0]);
  if (it == base.end()) return std::nullopt;
  int v = it->second;
  s.remove_prefix(1);
  while (!s.empty()) {
    if (s[0] == '#' || s[0] == 's') {
      ++v;
      s.remove_prefix(1);
    } else if (s[0] == 'b') {
      --v;
      s.remove_prefix(1);
    } else if (s.starts_with(kSharp)) {
      ++v;
      s.remove_prefix(kSharp.size());
    } else if (s.starts_with(kFlat)) {
      --v;
      s.remove_prefix(kFlat.size());
    } else {
      return std::nullopt;
    }
  }
  return mod12(v);
}

// --- triads ----------------------------------------------------------------

std::array<int, 3> Triad::pitches() const {
  const int third = quality == Quality::minor ? 3 : 4;
  const int fifth = quality == Quality::augmented ? 8 : 7;
  std::array<int, 3> p = {mod12(root), mod12(root + third), mod12(root + fifth)};
  std::sort(p.begin(), p.end());
  return p;
}

std::string Triad::name() const {
  switch (quality) {
    case Quality::major: return pitch_name(root);
    case Quality::minor: return lower_first(pitch_name(root));
    case Quality::augmented: return pitch_name(mod12(root) % 4) + "aug";
  }
  return {};
}

std::string Triad::display() const {
  switch (quality) {
    case Quality::major: return pitch_display(root);
    case Quality::minor: return lower_first(pitch_display(root));
    case Quality::augmented: return pitch_display(mod12(root) % 4) + "aug";
  }
  return {};
}

std::optional<Triad> Triad::parse(std::string_view s) {
  std::optional<Quality> explicit_quality;
  for (auto [suffix, q] : {std::pair{std::string_view("_major"), Quality::major},
                           std::pair{std::string_view("_minor"), Quality::minor},
                           std::pair{std::string_view("_aug"), Quality::augmented},
                           std::pair{std::string_view("aug"), Quality::augmented}}) {
    if (ends_with(s, suffix)) {
      explicit_quality = q;
      s.remove_suffix(suffix.size());
      break;
    }
  }
  if (s.empty()) return std::nullopt;
  const bool lower = std::islower(static_cast<unsigned char>(s[0])) != 0;
  std::string root(s);
  root[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(root[0])));
  auto pc = parse_pitch(root);
  if (!pc) return std::nullopt;
  Triad t{*pc, explicit_quality.value_or(lower ? Quality::minor : Quality::major)};
  if (explicit_quality && lower && *explicit_quality != Quality::minor) return std::nullopt;
  if (t.quality == Quality::augmented) t.root %= 4;
  return t;
}

std::vector<Triad> major_minor_triads() {
  std::vector<Triad> out;
  for (int r = 0; r < 12; ++r) out.push_back({r, Quality::major});
  for (int r = 0; r < 12; ++r) out.push_back({r, Quality::minor});
  return out;
}

std::vector<Triad> cube_dance_chords() {
  auto out = major_minor_triads();
  for (int r = 0; r < 4; ++r) out.push_back({r, Quality::augmented});
  return out;
}

bool single_semitone_move(const Triad& a, const Triad& b) {
  const auto pa = a.pitches(), pb = b.pitches();
  std::vector<int> only_a, only_b;
  std::set_difference(pa.begin(), pa.end(), pb.begin(), pb.end(), std::back_inserter(only_a));
  std::set_difference(pb.begin(), pb.end(), pa.begin(), pa.end(), std::back_inserter(only_b));
  if (only_a.size() != 1 || only_b.size() != 1) return false;
  const int d = mod12(only_a[0] - only_b[0]);
  return d == 1 || d == 11;
}

std::optional<std::string> canonical_name(std::string_view s) {
  if (auto pc = parse_pitch(s)) return pitch_name(*pc);
  if (auto t = Triad::parse(s)) return t->name();
  return std::nullopt;
}

std::string display_name(std::string_view ascii) {
  if (auto t = Triad::parse(ascii); t && t->name() == ascii) return t->display();
  return std::string(ascii);
}

// --- T/I -------------------------------------------------------------------

TiElement TiElement::after(const TiElement& o) const {
  if (!inversion && !o.inversion) return {false, mod12(n + o.n)};
  if (!inversion && o.inversion) return {true, mod12(n + o.n)};
  if (inversion && !o.inversion) return {true, mod12(n - o.n)};
  return {false, mod12(n - o.n)};
}

std::string TiElement::name() const { return (inversion ? "I" : "T") + std::to_string(n); }

std::optional<TiElement> TiElement::parse(std::string_view s) {
  if (s.size() < 2 || s.size() > 3 || (s[0] != 'T' && s[0] != 'I')) return std::nullopt;
  int v = 0;
  for (char c : s.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    v = v * 10 + (c - '0');
  }
  if (v >= 12 || (s.size() == 3 && s[1] == '0')) return std::nullopt;
  return TiElement{s[0] == 'I', v};
}

namespace {

std::vector<std::string> pitch_names() {
  std::vector<std::string> out;
  for (int i = 0; i < 12; ++i) out.push_back(pitch_name(i));
  return out;
}

template <class Apply>
GroupAction make_action(GroupTable g, std::vector<std::string> carrier, Apply&& apply) {
  auto cat = share(group_as_category(g));
  std::vector<std::vector<std::size_t>> maps(g.size());
  for (std::size_t e = 0; e < g.size(); ++e)
    for (std::size_t x = 0; x < carrier.size(); ++x) maps[e].push_back(apply(e, x));
  SetValuedFunctor action(cat, {ElementSet(std::move(carrier))}, std::move(maps));
  return {std::move(g), std::move(cat), std::move(action)};
}

TiElement ti_of(std::size_t i) {
  return i < 12 ? TiElement{false, static_cast<int>(i)} : TiElement{true, static_cast<int>(i) - 12};
}

std::size_t ti_index(const TiElement& e) {
  return static_cast<std::size_t>(e.inversion ? 12 + e.n : e.n);
}

}  // namespace

GroupAction builtin_t_group() {
  std::vector<std::string> names;
  for (int n = 0; n < 12; ++n) names.push_back("T" + std::to_string(n));
  auto g = GroupTable::from_function(names, "T0", [](std::size_t a, std::size_t b) {
    return static_cast<std::size_t>(mod12(static_cast<int>(a + b)));
  });
  return make_action(std::move(g), pitch_names(), [](std::size_t e, std::size_t x) {
    return static_cast<std::size_t>(mod12(static_cast<int>(x + e)));
  });
}

GroupAction builtin_ti_group() {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < 24; ++i) names.push_back(ti_of(i).name());
  auto g = GroupTable::from_function(names, "T0", [](std::size_t a, std::size_t b) {
    return ti_index(ti_of(a).after(ti_of(b)));
  });
  return make_action(std::move(g), pitch_names(), [](std::size_t e, std::size_t x) {
    return static_cast<std::size_t>(ti_of(e).apply(static_cast<int>(x)));
  });
}

GroupAction builtin_tritone_group() {
  auto g = GroupTable::from_function({"T0", "T6"}, "T0",
                                     [](std::size_t a, std::size_t b) { return (a + b) % 2; });
  return make_action(std::move(g), pitch_names(), [](std::size_t e, std::size_t x) {
    return static_cast<std::size_t>(mod12(static_cast<int>(x + 6 * e)));
  });
}

GroupAction builtin_plr() {
  const auto triads = major_minor_triads();
  const std::size_t n = triads.size();
  using Perm = std::vector<std::size_t>;
  auto index_of = [&](const Triad& t) {
    return static_cast<std::size_t>(std::find(triads.begin(), triads.end(), t) - triads.begin());
  };
  // P: C <-> c, L: C <-> e, R: C <-> a
  auto involution = [&](int minor_offset) {
    Perm p(n);
    for (int r = 0; r < 12; ++r) {
      const auto maj = index_of({r, Quality::major});
      const auto min = index_of({mod12(r + minor_offset), Quality::minor});
      p[maj] = min;
      p[min] = maj;
    }
    return p;
  };
  const std::vector<std::pair<std::string, Perm>> gens = {
      {"P", involution(0)}, {"L", involution(4)}, {"R", involution(9)}};

  Perm id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = i;
  std::vector<Perm> elems{id};
  std::vector<std::string> names{"id"};
  std::map<Perm, std::size_t> seen{{id, 0}};
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (const auto& [gname, gperm] : gens) {
      Perm p(n);
      for (std::size_t i = 0; i < n; ++i) p[i] = gperm[elems[k][i]];
      if (seen.contains(p)) continue;
      seen.emplace(p, elems.size());
      names.push_back(gname + (k == 0 ? std::string() : names[k]));
      elems.push_back(std::move(p));
    }
  }

  auto g = GroupTable::from_function(names, "id", [&](std::size_t a, std::size_t b) {
    Perm p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = elems[a][elems[b][i]];
    return seen.at(p);
  });
  std::vector<std::string> carrier;
  for (const auto& t : triads) carrier.push_back(t.name());
  return make_action(std::move(g), std::move(carrier),
                     [&](std::size_t e, std::size_t x) { return elems[e][x]; });
}

RelValuedFunctor builtin_cube_dance() {
  const auto chords = cube_dance_chords();
  const std::size_t n = chords.size();
  using Rel = std::vector<RelValuedFunctor::Pair>;

  Rel diag, u;
  for (std::size_t i = 0; i < n; ++i) diag.push_back({i, i});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (single_semitone_move(chords[i], chords[j])) u.push_back({i, j});

  std::vector<Rel> powers{diag};
  std::map<Rel, std::size_t> index{{diag, 0}};
  for (Rel cur = u; !index.contains(cur); cur = compose_relations(u, cur)) {
    index.emplace(cur, powers.size());
    powers.push_back(cur);
  }

  FiniteCategory::Builder b;
  b.add_object("*");
  for (std::size_t k = 0; k < powers.size(); ++k)
    b.add_morphism(k == 0 ? "id" : k == 1 ? "U" : "U" + std::to_string(k), 0, 0);
  b.set_identity(0, 0);
  for (std::size_t a = 0; a < powers.size(); ++a)
    for (std::size_t c = 0; c < powers.size(); ++c)
      b.set_compose(a, c, index.at(compose_relations(powers[a], powers[c])));

  std::vector<std::string> carrier;
  for (const auto& t : chords) carrier.push_back(t.name());
  return RelValuedFunctor(share(std::move(b).build()), {ElementSet(std::move(carrier))},
                          std::move(powers));
}

Functor ti_automorphism(const CategoryPtr& ti, int u, int j) {
  std::vector<std::size_t> mm(ti->morphism_count());
  for (std::size_t m = 0; m < mm.size(); ++m) {
    auto e = TiElement::parse(ti->morphism(m).id);
    if (!e) throw Error("ti_automorphism: '" + ti->morphism(m).id + "' is not a T/I element");
    TiElement image = e->inversion ? TiElement{true, mod12(u * e->n + j)}
                                   : TiElement{false, mod12(u * e->n)};
    mm[m] = ti->morphism_index(image.name());
  }
  return Functor(ti, ti, std::vector<std::size_t>(ti->object_count(), 0), std::move(mm));
}

std::vector<std::pair<int, int>> ti_automorphism_parameters() {
  std::vector<std::pair<int, int>> out;
  for (int u : {1, 5, 7, 11})
    for (int j = 0; j < 12; ++j) out.push_back({u, j});
  return out;
}

std::vector<HighlightClass> builtin_chicken_wire_spec() {
  return {{"P", "blue"}, {"L", "green"}, {"R", "red"}};
}

std::size_t highlight_class(const std::vector<HighlightClass>& spec, std::string_view label) {
  for (std::size_t i = 0; i < spec.size(); ++i)
    if (spec[i].label == label) return i;
  return npos;
}

}  // namespace catnet::music
