#include "catnet/fincat.hpp"

#include <algorithm>
#include <numeric>

#include "catnet/kernels.hpp"

namespace catnet {

namespace {

template <class Map>
std::optional<std::size_t> lookup(const Map& m, std::string_view id) {
  auto it = m.find(id);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

// Compressed adjacency: begin[v]..begin[v+1] indexes into items.
void build_csr(std::size_t n, const std::vector<std::size_t>& key,
               std::vector<std::size_t>& items, std::vector<std::size_t>& begin) {
  begin.assign(n + 1, 0);
  for (auto k : key) ++begin[k + 1];
  std::partial_sum(begin.begin(), begin.end(), begin.begin());
  items.assign(key.size(), 0);
  auto fill = begin;
  for (std::size_t i = 0; i < key.size(); ++i) items[fill[key[i]]++] = i;
}

}  // namespace

// --- Builder ---------------------------------------------------------------

std::size_t FiniteCategory::Builder::add_object(std::string id) {
  if (obj_index_.contains(id)) throw Error("duplicate object id '" + id + "'");
  const std::size_t i = objects_.size();
  obj_index_.emplace(id, i);
  objects_.push_back(std::move(id));
  identity_.push_back(npos);
  return i;
}

std::size_t FiniteCategory::Builder::add_morphism(std::string id, std::size_t dom,
                                                  std::size_t cod) {
  if (dom >= objects_.size() || cod >= objects_.size())
    throw Error("morphism '" + id + "' has an unknown endpoint");
  if (mor_index_.contains(id)) throw Error("duplicate morphism id '" + id + "'");
  const std::size_t i = morphisms_.size();
  mor_index_.emplace(id, i);
  morphisms_.push_back({std::move(id), dom, cod});
  return i;
}

std::size_t FiniteCategory::Builder::add_morphism(std::string id, std::string_view dom,
                                                  std::string_view cod) {
  return add_morphism(std::move(id), object_index(dom), object_index(cod));
}

void FiniteCategory::Builder::set_identity(std::size_t obj, std::size_t mor) {
  if (obj >= objects_.size() || mor >= morphisms_.size())
    throw Error("identity assignment out of range");
  identity_[obj] = mor;
}

void FiniteCategory::Builder::set_compose(std::size_t g, std::size_t f, std::size_t gf) {
  if (g >= morphisms_.size() || f >= morphisms_.size() || gf >= morphisms_.size())
    throw Error("composition entry out of range");
  entries_.push_back({g, f, gf});
}

std::size_t FiniteCategory::Builder::object_index(std::string_view id) const {
  if (auto i = lookup(obj_index_, id)) return *i;
  throw Error("unknown object '" + std::string(id) + "'");
}

std::size_t FiniteCategory::Builder::morphism_index(std::string_view id) const {
  if (auto i = lookup(mor_index_, id)) return *i;
  throw Error("unknown morphism '" + std::string(id) + "'");
}

FiniteCategory FiniteCategory::Builder::build() && {
  for (std::size_t x = 0; x < objects_.size(); ++x)
    if (identity_[x] == npos) throw Error("object '" + objects_[x] + "' has no identity");

  FiniteCategory c;
  c.objects_ = std::move(objects_);
  c.morphisms_ = std::move(morphisms_);
  c.identity_ = std::move(identity_);
  c.obj_index_ = std::move(obj_index_);
  c.mor_index_ = std::move(mor_index_);

  const std::size_t n_obj = c.objects_.size();
  const std::size_t n_mor = c.morphisms_.size();
  std::vector<std::size_t> doms(n_mor), cods(n_mor);
  for (std::size_t m = 0; m < n_mor; ++m) {
    doms[m] = c.morphisms_[m].dom;
    cods[m] = c.morphisms_[m].cod;
  }
  build_csr(n_obj, doms, c.out_, c.out_begin_);
  build_csr(n_obj, cods, c.in_, c.in_begin_);

  c.out_pos_.assign(n_mor, 0);
  for (std::size_t x = 0; x < n_obj; ++x) {
    auto outs = c.out(x);
    for (std::size_t p = 0; p < outs.size(); ++p) c.out_pos_[outs[p]] = p;
  }
  c.row_begin_.assign(n_mor + 1, 0);
  for (std::size_t f = 0; f < n_mor; ++f)
    c.row_begin_[f + 1] = c.row_begin_[f] + c.out(cods[f]).size();
  c.table_.assign(c.row_begin_[n_mor], kUndefined);

  for (const auto& e : entries_) {
    if (doms[e.g] != cods[e.f]) {
      c.strays_.push_back(e);
      continue;
    }
    auto& slot = c.table_[c.row_begin_[e.f] + c.out_pos_[e.g]];
    if (slot == kUndefined)
      slot = static_cast<std::uint32_t>(e.gf);
    else if (slot != e.gf)
      c.conflicts_.push_back(e);
  }
  return c;
}

// --- FiniteCategory --------------------------------------------------------

std::optional<std::size_t> FiniteCategory::find_object(std::string_view id) const {
  return lookup(obj_index_, id);
}

std::optional<std::size_t> FiniteCategory::find_morphism(std::string_view id) const {
  return lookup(mor_index_, id);
}

std::size_t FiniteCategory::object_index(std::string_view id) const {
  if (auto i = find_object(id)) return *i;
  throw Error("unknown object '" + std::string(id) + "'");
}

std::size_t FiniteCategory::morphism_index(std::string_view id) const {
  if (auto i = find_morphism(id)) return *i;
  throw Error("unknown morphism '" + std::string(id) + "'");
}

bool FiniteCategory::is_identity(std::size_t mor) const {
  const auto& m = morphisms_[mor];
  return m.dom == m.cod && identity_[m.dom] == mor;
}

std::optional<std::size_t> FiniteCategory::compose(std::size_t g, std::size_t f) const {
  if (morphisms_[g].dom != morphisms_[f].cod) return std::nullopt;
  const auto v = table_[row_begin_[f] + out_pos_[g]];
  if (v == kUndefined) return std::nullopt;
  return v;
}

bool FiniteCategory::operator==(const FiniteCategory& o) const {
  return objects_ == o.objects_ && morphisms_ == o.morphisms_ &&
         identity_ == o.identity_ && table_ == o.table_ && strays_ == o.strays_ &&
         conflicts_ == o.conflicts_;
}

bool same_category(const CategoryPtr& a, const CategoryPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

ValidationReport validate_category(const FiniteCategory& c) {
  ValidationReport r;
  const auto& mors = c.morphisms();
  auto name = [&](std::size_t m) { return mors[m].id; };

  for (std::size_t x = 0; x < c.object_count(); ++x) {
    const auto id = c.identity(x);
    if (mors[id].dom != x || mors[id].cod != x)
      r.add("identity typing", {c.object(x), name(id)});
  }
  for (const auto& e : c.stray_entries())
    r.add("composition on non-composable pair", {name(e.g), name(e.f)});
  for (const auto& e : c.conflicting_entries())
    r.add("conflicting composition", {name(e.g), name(e.f)});

  for (std::size_t f = 0; f < mors.size(); ++f) {
    for (auto g : c.out(mors[f].cod)) {
      auto gf = c.compose(g, f);
      if (!gf) {
        r.add("composition undefined on composable pair", {name(g), name(f)});
      } else if (mors[*gf].dom != mors[f].dom || mors[*gf].cod != mors[g].cod) {
        r.add("composite typing", {name(g), name(f), name(*gf)});
      }
    }
  }
  for (std::size_t f = 0; f < mors.size(); ++f) {
    auto left = c.compose(c.identity(mors[f].cod), f);
    if (!left || *left != f) r.add("left identity", {name(f)});
    auto right = c.compose(f, c.identity(mors[f].dom));
    if (!right || *right != f) r.add("right identity", {name(f)});
  }
  r.append(kernels::associativity(c));
  return r;
}

// --- small constructors ----------------------------------------------------

FiniteCategory terminal_category() {
  FiniteCategory::Builder b;
  b.add_object("*");
  b.add_morphism("id_*", 0, 0);
  b.set_identity(0, 0);
  b.set_compose(0, 0, 0);
  return std::move(b).build();
}

FiniteCategory empty_category() { return FiniteCategory::Builder{}.build(); }

FiniteCategory thin_category(const std::vector<std::string>& objects,
                             const std::vector<ArrowSpec>& arrows) {
  FiniteCategory::Builder b;
  for (const auto& o : objects) b.add_object(o);
  const std::size_t n = objects.size();

  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  std::vector<std::vector<std::string>> label(n, std::vector<std::string>(n));
  for (std::size_t x = 0; x < n; ++x) reach[x][x] = 1;
  for (const auto& a : arrows) {
    const auto d = b.object_index(a.dom), c = b.object_index(a.cod);
    if (d == c) throw Error("thin category: loop arrow '" + a.id + "'");
    if (!label[d][c].empty())
      throw Error("thin category: arrows '" + label[d][c] + "' and '" + a.id +
                  "' are parallel");
    label[d][c] = a.id;
    reach[d][c] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = 1;

  std::vector<std::vector<std::size_t>> mor(n, std::vector<std::size_t>(n, npos));
  for (std::size_t x = 0; x < n; ++x) {
    mor[x][x] = b.add_morphism("id_" + objects[x], x, x);
    b.set_identity(x, mor[x][x]);
  }
  for (const auto& a : arrows) {
    const auto d = b.object_index(a.dom), c = b.object_index(a.cod);
    mor[d][c] = b.add_morphism(a.id, d, c);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (reach[i][j] && mor[i][j] == npos)
        mor[i][j] = b.add_morphism(objects[i] + ">" + objects[j], i, j);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (reach[i][j])
        for (std::size_t k = 0; k < n; ++k)
          if (reach[j][k]) b.set_compose(mor[j][k], mor[i][j], mor[i][k]);
  return std::move(b).build();
}

FiniteCategory free_category(const std::vector<std::string>& objects,
                             const std::vector<ArrowSpec>& arrows) {
  FiniteCategory::Builder b;
  for (const auto& o : objects) b.add_object(o);
  const std::size_t n = objects.size();
  std::vector<std::size_t> dom(arrows.size()), cod(arrows.size());
  std::vector<std::vector<std::size_t>> outgoing(n);
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    dom[a] = b.object_index(arrows[a].dom);
    cod[a] = b.object_index(arrows[a].cod);
    outgoing[dom[a]].push_back(a);
  }

  // Kahn's algorithm doubles as the cycle check.
  std::vector<std::size_t> indeg(n, 0), order;
  for (std::size_t a = 0; a < arrows.size(); ++a) ++indeg[cod[a]];
  for (std::size_t x = 0; x < n; ++x)
    if (indeg[x] == 0) order.push_back(x);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (auto a : outgoing[order[i]])
      if (--indeg[cod[a]] == 0) order.push_back(cod[a]);
  if (order.size() != n) throw Error("free category: the quiver has a cycle");

  std::vector<std::vector<std::size_t>> paths;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::vector<std::size_t>> stack{{}};
    std::vector<std::size_t> ends{x};
    while (!stack.empty()) {
      auto p = std::move(stack.back());
      auto at = ends.back();
      stack.pop_back();
      ends.pop_back();
      for (auto a : outgoing[at]) {
        auto q = p;
        q.push_back(a);
        paths.push_back(q);
        stack.push_back(std::move(q));
        ends.push_back(cod[a]);
      }
    }
  }
  std::sort(paths.begin(), paths.end(), [](const auto& p, const auto& q) {
    return p.size() != q.size() ? p.size() < q.size() : p < q;
  });

  std::map<std::vector<std::size_t>, std::size_t> index;
  std::vector<std::size_t> id(n);
  for (std::size_t x = 0; x < n; ++x) {
    id[x] = b.add_morphism("id_" + objects[x], x, x);
    b.set_identity(x, id[x]);
  }
  std::vector<std::size_t> path_dom;
  for (const auto& p : paths) {
    std::string nm;
    for (auto a : p) nm += (nm.empty() ? "" : ";") + arrows[a].id;
    index[p] = b.add_morphism(nm, dom[p.front()], cod[p.back()]);
  }

  auto mor_of = [&](const std::vector<std::size_t>& p, std::size_t at) {
    return p.empty() ? id[at] : index.at(p);
  };
  // Every morphism is (object, path); compose by concatenation.
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> all;
  for (std::size_t x = 0; x < n; ++x) all.push_back({x, {}});
  for (const auto& p : paths) all.push_back({dom[p.front()], p});
  auto end_of = [&](const auto& m) { return m.second.empty() ? m.first : cod[m.second.back()]; };
  for (const auto& f : all)
    for (const auto& g : all) {
      if (g.first != end_of(f)) continue;
      auto cat = f.second;
      cat.insert(cat.end(), g.second.begin(), g.second.end());
      b.set_compose(mor_of(g.second, g.first), mor_of(f.second, f.first),
                    mor_of(cat, f.first));
    }
  return std::move(b).build();
}

// --- groups ----------------------------------------------------------------

GroupTable::GroupTable(std::vector<std::string> elements,
                       std::vector<std::vector<std::size_t>> product,
                       std::string_view unit)
    : elements_(std::move(elements)), product_(std::move(product)) {
  const std::size_t n = elements_.size();
  if (product_.size() != n) throw Error("group table: product has wrong row count");
  for (const auto& row : product_) {
    if (row.size() != n) throw Error("group table: product row has wrong length");
    for (auto v : row)
      if (v >= n) throw Error("group table: product refers to an unknown element");
  }
  {
    std::vector<std::string> sorted = elements_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error("group table: duplicate element names");
  }
  unit_ = index(unit);
  inverse_.assign(n, npos);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (product_[a][b] == unit_ && product_[b][a] == unit_) {
        inverse_[a] = b;
        break;
      }
}

std::optional<std::size_t> GroupTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == name) return i;
  return std::nullopt;
}

std::size_t GroupTable::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error("unknown group element '" + std::string(name) + "'");
}

ValidationReport validate_group(const GroupTable& g) {
  ValidationReport r;
  const std::size_t n = g.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.product(g.product(a, b), c) != g.product(a, g.product(b, c)))
          r.add("associativity", {g.element(a), g.element(b), g.element(c)});
  for (std::size_t a = 0; a < n; ++a)
    if (g.product(g.unit(), a) != a || g.product(a, g.unit()) != a)
      r.add("unit", {g.element(a)});
  for (std::size_t a = 0; a < n; ++a)
    if (g.inverse(a) == npos) r.add("inverse", {g.element(a)});
  return r;
}

GroupTable opposite_group(const GroupTable& g) {
  return GroupTable::from_function(g.elements(), g.element(g.unit()),
                                   [&](std::size_t a, std::size_t b) { return g.product(b, a); });
}

FiniteCategory group_as_category(const GroupTable& g) {
  if (auto r = validate_group(g); !r.ok()) throw ValidationError("not a group", std::move(r));
  FiniteCategory::Builder b;
  b.add_object("*");
  for (const auto& e : g.elements()) b.add_morphism(e, 0, 0);
  b.set_identity(0, g.unit());
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t c = 0; c < g.size(); ++c) b.set_compose(a, c, g.product(a, c));
  return std::move(b).build();
}

// --- functors --------------------------------------------------------------

Functor::Functor(CategoryPtr source, CategoryPtr target, std::vector<std::size_t> objects,
                 std::vector<std::size_t> morphisms)
    : source_(std::move(source)),
      target_(std::move(target)),
      objects_(std::move(objects)),
      morphisms_(std::move(morphisms)) {
  if (!source_ || !target_) throw Error("functor: missing category");
  if (objects_.size() != source_->object_count() ||
      morphisms_.size() != source_->morphism_count())
    throw Error("functor: map sizes do not match the source category");
  for (auto o : objects_)
    if (o >= target_->object_count()) throw Error("functor: object image out of range");
  for (auto m : morphisms_)
    if (m >= target_->morphism_count()) throw Error("functor: morphism image out of range");
}

Functor Functor::from_names(CategoryPtr source, CategoryPtr target,
                            const std::map<std::string, std::string>& objects,
                            const std::map<std::string, std::string>& morphisms) {
  std::vector<std::size_t> om(source->object_count()), mm(source->morphism_count());
  for (std::size_t x = 0; x < om.size(); ++x) {
    auto it = objects.find(source->object(x));
    if (it == objects.end())
      throw Error("functor: no image for object '" + source->object(x) + "'");
    om[x] = target->object_index(it->second);
  }
  for (std::size_t f = 0; f < mm.size(); ++f) {
    auto it = morphisms.find(source->morphism(f).id);
    if (it == morphisms.end())
      throw Error("functor: no image for morphism '" + source->morphism(f).id + "'");
    mm[f] = target->morphism_index(it->second);
  }
  return Functor(std::move(source), std::move(target), std::move(om), std::move(mm));
}

Functor Functor::identity(CategoryPtr c) {
  std::vector<std::size_t> om(c->object_count()), mm(c->morphism_count());
  std::iota(om.begin(), om.end(), 0);
  std::iota(mm.begin(), mm.end(), 0);
  return Functor(c, c, std::move(om), std::move(mm));
}

bool Functor::operator==(const Functor& o) const {
  return objects_ == o.objects_ && morphisms_ == o.morphisms_ &&
         same_category(source_, o.source_) && same_category(target_, o.target_);
}

ValidationReport validate_functor(const Functor& F) {
  ValidationReport r;
  const auto& s = F.source();
  const auto& t = F.target();
  for (std::size_t f = 0; f < s.morphism_count(); ++f) {
    const auto& m = s.morphism(f);
    const auto& im = t.morphism(F.morphism(f));
    if (im.dom != F.object(m.dom) || im.cod != F.object(m.cod))
      r.add("dom/cod preservation", {m.id, im.id});
  }
  for (std::size_t x = 0; x < s.object_count(); ++x)
    if (F.morphism(s.identity(x)) != t.identity(F.object(x)))
      r.add("identity preservation", {s.object(x)});
  r.append(kernels::functor_composition(F));
  return r;
}

Functor compose_functors(const Functor& g, const Functor& f) {
  if (!same_category(f.target_ptr(), g.source_ptr()))
    throw Error("compose_functors: target of the first is not the source of the second");
  std::vector<std::size_t> om(f.source().object_count()), mm(f.source().morphism_count());
  for (std::size_t x = 0; x < om.size(); ++x) om[x] = g.object(f.object(x));
  for (std::size_t m = 0; m < mm.size(); ++m) mm[m] = g.morphism(f.morphism(m));
  return Functor(f.source_ptr(), g.target_ptr(), std::move(om), std::move(mm));
}

// --- natural transformations ----------------------------------------------

CatNatTrans::CatNatTrans(Functor source, Functor target, std::vector<std::size_t> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (!same_category(source_.source_ptr(), target_.source_ptr()) ||
      !same_category(source_.target_ptr(), target_.target_ptr()))
    throw Error("natural transformation: functors are not parallel");
  if (components_.size() != source_.source().object_count())
    throw Error("natural transformation: wrong number of components");
  for (auto c : components_)
    if (c >= source_.target().morphism_count())
      throw Error("natural transformation: component out of range");
}

CatNatTrans CatNatTrans::identity(const Functor& f) {
  std::vector<std::size_t> comps(f.source().object_count());
  for (std::size_t x = 0; x < comps.size(); ++x) comps[x] = f.target().identity(f.object(x));
  return CatNatTrans(f, f, std::move(comps));
}

ValidationReport validate_natural(const CatNatTrans& n) {
  ValidationReport r;
  const auto& F = n.source();
  const auto& G = n.target();
  const auto& s = F.source();
  const auto& t = F.target();
  bool typed = true;
  for (std::size_t x = 0; x < s.object_count(); ++x) {
    const auto& c = t.morphism(n.component(x));
    if (c.dom != F.object(x) || c.cod != G.object(x)) {
      r.add("component typing", {s.object(x), c.id});
      typed = false;
    }
  }
  if (!typed) return r;
  for (std::size_t f = 0; f < s.morphism_count(); ++f) {
    const auto& m = s.morphism(f);
    auto lhs = t.compose(G.morphism(f), n.component(m.dom));
    auto rhs = t.compose(n.component(m.cod), F.morphism(f));
    if (!lhs || !rhs || *lhs != *rhs)
      r.add("naturality", {m.id, lhs ? t.morphism(*lhs).id : "undefined",
                           rhs ? t.morphism(*rhs).id : "undefined"});
  }
  return r;
}

CatNatTrans vertical_compose(const CatNatTrans& b, const CatNatTrans& a) {
  if (!(a.target() == b.source()))
    throw Error("vertical_compose: transformations are not composable");
  const auto& t = a.source().target();
  std::vector<std::size_t> comps(a.components().size());
  for (std::size_t x = 0; x < comps.size(); ++x) {
    auto c = t.compose(b.component(x), a.component(x));
    if (!c) throw Error("vertical_compose: components do not compose at '" +
                        a.source().source().object(x) + "'");
    comps[x] = *c;
  }
  return CatNatTrans(a.source(), b.target(), std::move(comps));
}

CatNatTrans whisker_left(const Functor& j, const CatNatTrans& a) {
  std::vector<std::size_t> comps(a.components().size());
  for (std::size_t x = 0; x < comps.size(); ++x) comps[x] = j.morphism(a.component(x));
  return CatNatTrans(compose_functors(j, a.source()), compose_functors(j, a.target()),
                     std::move(comps));
}

CatNatTrans whisker_right(const CatNatTrans& a, const Functor& i) {
  std::vector<std::size_t> comps(i.source().object_count());
  for (std::size_t x = 0; x < comps.size(); ++x) comps[x] = a.component(i.object(x));
  return CatNatTrans(compose_functors(a.source(), i), compose_functors(a.target(), i),
                     std::move(comps));
}

}  // namespace catnet
