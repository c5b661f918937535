#include "catnet/concrete.hpp"

#include <algorithm>
#include <numeric>

#include "catnet/kernels.hpp"

namespace catnet {

// --- ElementSet ------------------------------------------------------------

ElementSet::ElementSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (!index_.emplace(names_[i], i).second)
      throw Error("duplicate element '" + names_[i] + "'");
}

std::optional<std::size_t> ElementSet::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t ElementSet::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error("unknown element '" + std::string(name) + "'");
}

// --- SetValuedFunctor ------------------------------------------------------

SetValuedFunctor::SetValuedFunctor(CategoryPtr source, std::vector<ElementSet> sets,
                                   std::vector<std::vector<std::size_t>> maps)
    : source_(std::move(source)), sets_(std::move(sets)), maps_(std::move(maps)) {
  if (!source_) throw Error("set functor: missing source category");
  if (sets_.size() != source_->object_count())
    throw Error("set functor: one set per object required");
  if (maps_.size() != source_->morphism_count())
    throw Error("set functor: one map per morphism required");
  for (std::size_t f = 0; f < maps_.size(); ++f) {
    const auto& m = source_->morphism(f);
    if (maps_[f].size() != sets_[m.dom].size())
      throw Error("set functor: map of '" + m.id + "' is not total");
    for (auto v : maps_[f])
      if (v >= sets_[m.cod].size())
        throw Error("set functor: map of '" + m.id + "' leaves its codomain");
  }
}

SetValuedFunctor SetValuedFunctor::from_names(
    CategoryPtr source, const std::map<std::string, std::vector<std::string>>& sets,
    const std::map<std::string, std::map<std::string, std::string>>& maps) {
  std::vector<ElementSet> ss;
  for (std::size_t x = 0; x < source->object_count(); ++x) {
    auto it = sets.find(source->object(x));
    if (it == sets.end()) throw Error("set functor: no set for object '" + source->object(x) + "'");
    ss.emplace_back(it->second);
  }
  std::vector<std::vector<std::size_t>> ms(source->morphism_count());
  for (std::size_t f = 0; f < ms.size(); ++f) {
    const auto& m = source->morphism(f);
    auto it = maps.find(m.id);
    if (it == maps.end()) {
      if (source->is_identity(f)) {
        ms[f].resize(ss[m.dom].size());
        std::iota(ms[f].begin(), ms[f].end(), 0);
        continue;
      }
      throw Error("set functor: no map for morphism '" + m.id + "'");
    }
    ms[f].resize(ss[m.dom].size());
    for (std::size_t i = 0; i < ss[m.dom].size(); ++i) {
      auto v = it->second.find(ss[m.dom][i]);
      if (v == it->second.end())
        throw Error("set functor: map of '" + m.id + "' misses '" + ss[m.dom][i] + "'");
      ms[f][i] = ss[m.cod].index(v->second);
    }
  }
  return SetValuedFunctor(std::move(source), std::move(ss), std::move(ms));
}

SetValuedFunctor SetValuedFunctor::constant(CategoryPtr source, std::vector<std::string> elements) {
  ElementSet e(std::move(elements));
  std::vector<ElementSet> ss(source->object_count(), e);
  std::vector<std::size_t> id(e.size());
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<std::size_t>> ms(source->morphism_count(), id);
  return SetValuedFunctor(std::move(source), std::move(ss), std::move(ms));
}

bool SetValuedFunctor::operator==(const SetValuedFunctor& o) const {
  return sets_ == o.sets_ && maps_ == o.maps_ && same_category(source_, o.source_);
}

ValidationReport validate_set_functor(const SetValuedFunctor& s) {
  ValidationReport r;
  const auto& c = s.source();
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    const auto& m = s.map(c.identity(x));
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != i) {
        r.add("identity preservation", {c.object(x), s.set(x)[i]});
        break;
      }
  }
  r.append(kernels::set_functor_composition(s));
  return r;
}

SetValuedFunctor precompose(const SetValuedFunctor& s, const Functor& f) {
  if (!same_category(f.target_ptr(), s.source_ptr()))
    throw Error("precompose: functor target is not the set functor's source");
  std::vector<ElementSet> ss;
  for (std::size_t x = 0; x < f.source().object_count(); ++x) ss.push_back(s.set(f.object(x)));
  std::vector<std::vector<std::size_t>> ms(f.source().morphism_count());
  for (std::size_t m = 0; m < ms.size(); ++m) ms[m] = s.map(f.morphism(m));
  return SetValuedFunctor(f.source_ptr(), std::move(ss), std::move(ms));
}

// --- RelValuedFunctor ------------------------------------------------------

RelValuedFunctor::RelValuedFunctor(CategoryPtr source, std::vector<ElementSet> sets,
                                   std::vector<std::vector<Pair>> rels)
    : source_(std::move(source)), sets_(std::move(sets)), rels_(std::move(rels)) {
  if (!source_) throw Error("rel functor: missing source category");
  if (sets_.size() != source_->object_count())
    throw Error("rel functor: one set per object required");
  if (rels_.size() != source_->morphism_count())
    throw Error("rel functor: one relation per morphism required");
  for (std::size_t f = 0; f < rels_.size(); ++f) {
    const auto& m = source_->morphism(f);
    for (auto [a, b] : rels_[f])
      if (a >= sets_[m.dom].size() || b >= sets_[m.cod].size())
        throw Error("rel functor: relation of '" + m.id + "' leaves its sets");
    std::sort(rels_[f].begin(), rels_[f].end());
    rels_[f].erase(std::unique(rels_[f].begin(), rels_[f].end()), rels_[f].end());
  }
}

RelValuedFunctor RelValuedFunctor::from_set_functor(const SetValuedFunctor& s) {
  const auto& c = s.source();
  std::vector<ElementSet> ss;
  for (std::size_t x = 0; x < c.object_count(); ++x) ss.push_back(s.set(x));
  std::vector<std::vector<Pair>> rs(c.morphism_count());
  for (std::size_t f = 0; f < rs.size(); ++f)
    for (std::size_t i = 0; i < s.map(f).size(); ++i) rs[f].push_back({i, s.map(f)[i]});
  return RelValuedFunctor(s.source_ptr(), std::move(ss), std::move(rs));
}

bool RelValuedFunctor::related(std::size_t f, std::size_t a, std::size_t b) const {
  return std::binary_search(rels_[f].begin(), rels_[f].end(), Pair{a, b});
}

bool RelValuedFunctor::operator==(const RelValuedFunctor& o) const {
  return sets_ == o.sets_ && rels_ == o.rels_ && same_category(source_, o.source_);
}

std::vector<RelValuedFunctor::Pair> compose_relations(
    const std::vector<RelValuedFunctor::Pair>& second,
    const std::vector<RelValuedFunctor::Pair>& first) {
  std::vector<RelValuedFunctor::Pair> out;
  for (auto [a, b] : first) {
    auto it = std::lower_bound(second.begin(), second.end(), RelValuedFunctor::Pair{b, 0});
    for (; it != second.end() && it->first == b; ++it) out.push_back({a, it->second});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ValidationReport validate_rel_functor(const RelValuedFunctor& s) {
  ValidationReport r;
  const auto& c = s.source();
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    std::vector<RelValuedFunctor::Pair> diag;
    for (std::size_t i = 0; i < s.set(x).size(); ++i) diag.push_back({i, i});
    if (s.rel(c.identity(x)) != diag) r.add("identity preservation", {c.object(x)});
  }
  for (std::size_t f = 0; f < c.morphism_count(); ++f)
    for (auto g : c.out(c.morphism(f).cod)) {
      auto gf = c.compose(g, f);
      if (!gf) continue;
      if (s.rel(*gf) != compose_relations(s.rel(g), s.rel(f)))
        r.add("composition preservation", {c.morphism(g).id, c.morphism(f).id});
    }
  return r;
}

// --- SetNatTrans -----------------------------------------------------------

SetNatTrans::SetNatTrans(SetValuedFunctor source, SetValuedFunctor target,
                         std::vector<std::vector<std::size_t>> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (!same_category(source_.source_ptr(), target_.source_ptr()))
    throw Error("set natural transformation: functors live on different categories");
  const auto& c = source_.source();
  if (components_.size() != c.object_count())
    throw Error("set natural transformation: one component per object required");
  for (std::size_t x = 0; x < components_.size(); ++x) {
    if (components_[x].size() != source_.set(x).size())
      throw Error("set natural transformation: component at '" + c.object(x) + "' is not total");
    for (auto v : components_[x])
      if (v >= target_.set(x).size())
        throw Error("set natural transformation: component at '" + c.object(x) +
                    "' leaves its codomain");
  }
}

SetNatTrans SetNatTrans::from_names(
    SetValuedFunctor source, SetValuedFunctor target,
    const std::map<std::string, std::map<std::string, std::string>>& components) {
  const auto& c = source.source();
  std::vector<std::vector<std::size_t>> comps(c.object_count());
  for (std::size_t x = 0; x < comps.size(); ++x) {
    auto it = components.find(c.object(x));
    if (it == components.end())
      throw Error("set natural transformation: no component at '" + c.object(x) + "'");
    for (const auto& e : source.set(x).names()) {
      auto v = it->second.find(e);
      if (v == it->second.end())
        throw Error("set natural transformation: component at '" + c.object(x) +
                    "' misses '" + e + "'");
      comps[x].push_back(target.set(x).index(v->second));
    }
  }
  return SetNatTrans(std::move(source), std::move(target), std::move(comps));
}

SetNatTrans SetNatTrans::identity(const SetValuedFunctor& s) {
  std::vector<std::vector<std::size_t>> comps(s.source().object_count());
  for (std::size_t x = 0; x < comps.size(); ++x) {
    comps[x].resize(s.set(x).size());
    std::iota(comps[x].begin(), comps[x].end(), 0);
  }
  return SetNatTrans(s, s, std::move(comps));
}

ValidationReport validate_set_natural(const SetNatTrans& n) {
  ValidationReport r;
  const auto& c = n.source().source();
  for (std::size_t f = 0; f < c.morphism_count(); ++f) {
    const auto& m = c.morphism(f);
    for (std::size_t i = 0; i < n.source().set(m.dom).size(); ++i) {
      const auto lhs = n.target().apply(f, n.apply(m.dom, i));
      const auto rhs = n.apply(m.cod, n.source().apply(f, i));
      if (lhs != rhs) {
        r.add("naturality", {m.id, n.source().set(m.dom)[i]});
        break;
      }
    }
  }
  return r;
}

// --- interval systems ------------------------------------------------------

GisData::GisData(ElementSet x_, GroupTable group_, std::vector<std::vector<std::size_t>> interval_)
    : x(std::move(x_)), group(std::move(group_)), interval(std::move(interval_)) {
  if (interval.size() != x.size()) throw Error("gis: interval table has wrong row count");
  for (const auto& row : interval) {
    if (row.size() != x.size()) throw Error("gis: interval row has wrong length");
    for (auto v : row)
      if (v >= group.size()) throw Error("gis: interval value is not a group element");
  }
}

ValidationReport check_gis_condition1(const GisData& g) {
  ValidationReport r;
  const std::size_t n = g.x.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.group.product(g.interval[b][c], g.interval[a][b]) != g.interval[a][c])
          r.add("condition 1", {g.x[a], g.x[b], g.x[c]});
  return r;
}

ValidationReport check_gis_condition2(const GisData& g) {
  ValidationReport r;
  const std::size_t n = g.x.size();
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::size_t> fiber(g.group.size(), 0);
    for (std::size_t b = 0; b < n; ++b) ++fiber[g.interval[a][b]];
    for (std::size_t k = 0; k < fiber.size(); ++k) {
      if (fiber[k] == 0)
        r.add("condition 2: existence", {g.x[a], g.group.element(k), "0"});
      else if (fiber[k] > 1)
        r.add("condition 2: uniqueness", {g.x[a], g.group.element(k), std::to_string(fiber[k])});
    }
  }
  return r;
}

GisData to_left_orientation(const GisData& g) {
  return GisData(g.x, opposite_group(g.group), g.interval);
}

LewinCategory lewin_category(const GisData& g) {
  if (auto r = check_gis_condition1(g); !r.ok())
    throw ValidationError("interval function fails condition 1", std::move(r));
  const std::size_t n = g.x.size();
  FiniteCategory::Builder b;
  for (const auto& e : g.x.names()) b.add_object(e);
  std::vector<std::vector<std::size_t>> mor(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      mor[i][j] = b.add_morphism("(" + g.x[i] + "," + g.x[j] + ")", i, j);
  for (std::size_t i = 0; i < n; ++i) b.set_identity(i, mor[i][i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) b.set_compose(mor[j][k], mor[i][j], mor[i][k]);
  auto cat = share(std::move(b).build());
  auto grp = share(group_as_category(g.group));

  std::vector<std::size_t> om(n, 0), mm(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mm[mor[i][j]] = g.interval[i][j];
  Functor to_group(cat, grp, std::move(om), std::move(mm));
  return {std::move(cat), std::move(to_group)};
}

SetValuedFunctor derived_action(const GisData& g) {
  ValidationReport r = check_gis_condition1(g);
  r.append(check_gis_condition2(g));
  if (!r.ok()) throw ValidationError("not a generalized interval system", std::move(r));
  const std::size_t n = g.x.size();
  std::vector<std::vector<std::size_t>> ms(g.group.size(), std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) ms[g.interval[a][b]][a] = b;
  return SetValuedFunctor(share(group_as_category(g.group)), {g.x}, std::move(ms));
}

TransitivityVerdict simply_transitive(const SetValuedFunctor& s) {
  const auto& c = s.source();
  if (c.object_count() != 1)
    throw Error("simply_transitive: source must be a one-object category");
  const auto& set = s.set(0);
  const std::size_t n = set.size();
  std::vector<std::size_t> count(n * n, 0);
  for (std::size_t f = 0; f < c.morphism_count(); ++f)
    for (std::size_t i = 0; i < n; ++i) ++count[i * n + s.apply(f, i)];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (count[i * n + j] != 1) return {false, set[i], set[j], count[i * n + j]};
  return {};
}

GisData interval_from_action(const SetValuedFunctor& s, const GroupTable& g) {
  if (auto v = simply_transitive(s); !v.holds) {
    ValidationReport r;
    r.add("simple transitivity", {v.from, v.to, std::to_string(v.count)});
    throw ValidationError("action is not simply transitive", std::move(r));
  }
  if (s.source().morphism_count() != g.size())
    throw Error("interval_from_action: group does not match the action's category");
  const std::size_t n = s.set(0).size();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t f = 0; f < g.size(); ++f)
    for (std::size_t i = 0; i < n; ++i) t[i][s.apply(f, i)] = g.index(s.source().morphism(f).id);
  return GisData(s.set(0), g, std::move(t));
}

}  // namespace catnet
