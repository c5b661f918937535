#include <doctest.h>

#include <random>
#include <set>

#include "catnet/elements.hpp"
#include "catnet/music.hpp"
#include "support/oracles.hpp"
#include "support/random_pknets.hpp"
#include "support/square_net.hpp"

using namespace catnet;

namespace {

// Out-degree of (X,x) over base morphism f in ∫S.
std::size_t out_over(const ElementsResult& el, std::size_t obj, std::size_t f) {
  std::size_t n = 0;
  for (auto m : el.cat->out(obj))
    if (el.proj.morphism(m) == f) ++n;
  return n;
}

// π_S∘H_F = F∘π_R on every object and morphism.
bool square_commutes(const PKNet& p, const Functor& h, const ElementsResult& el_r,
                     const ElementsResult& el_s) {
  for (std::size_t o = 0; o < el_r.cat->object_count(); ++o)
    if (el_s.proj.object(h.object(o)) != p.f.object(el_r.proj.object(o))) return false;
  for (std::size_t m = 0; m < el_r.cat->morphism_count(); ++m)
    if (el_s.proj.morphism(h.morphism(m)) != p.f.morphism(el_r.proj.morphism(m))) return false;
  return true;
}

}  // namespace

TEST_SUITE("elements") {

TEST_CASE("T/I on Z12 has 12 objects and 288 morphisms") {
  auto el = elements_of_set_functor(music::builtin_ti_group().action);
  CHECK(el.cat->object_count() == 12);
  CHECK(el.cat->morphism_count() == 288);
  CHECK(validate_category(*el.cat).ok());
  CHECK(validate_functor(el.proj).ok());
  for (std::size_t o = 0; o < 12; ++o)
    for (std::size_t f = 0; f < 24; ++f) CHECK(out_over(el, o, f) == 1);
  CHECK(el.cat->object(0) == "(*|C)");
  CHECK(el.cat->find_morphism("(B|T2|Cs)"));
  CHECK(el.cat->find_morphism("(B|I3|E)"));
}

TEST_CASE("PLR quiver is complete") {
  auto el = elements_of_set_functor(music::builtin_plr().action);
  CHECK(el.cat->object_count() == 24);
  CHECK(el.cat->morphism_count() == 576);
  CHECK(validate_category(*el.cat).ok());
  for (std::size_t a = 0; a < 24; ++a)
    for (std::size_t b = 0; b < 24; ++b) {
      std::size_t n = 0;
      for (auto m : el.cat->out(a))
        if (el.cat->morphism(m).cod == b) ++n;
      CHECK(n == 1);
    }
}

TEST_CASE("constant singleton functor gives a copy of the base") {
  auto base = square::shape();
  auto el = elements_of_set_functor(SetValuedFunctor::constant(base, {"*"}));
  CHECK(el.cat->object_count() == base->object_count());
  CHECK(el.cat->morphism_count() == base->morphism_count());
  CHECK(validate_functor(el.proj).ok());
  // proj is bijective on objects and morphisms.
  std::set<std::size_t> objs(el.proj.object_map().begin(), el.proj.object_map().end());
  std::set<std::size_t> mors(el.proj.morphism_map().begin(), el.proj.morphism_map().end());
  CHECK(objs.size() == base->object_count());
  CHECK(mors.size() == base->morphism_count());
}

TEST_CASE("functions viewed as relations give the same category") {
  auto s = music::builtin_plr().action;
  auto a = elements_of_set_functor(s);
  auto b = elements_of_rel_functor(RelValuedFunctor::from_set_functor(s));
  CHECK(*a.cat == *b.cat);
  CHECK(a.proj.morphism_map() == b.proj.morphism_map());
}

TEST_CASE("Cube Dance elements: counts and degrees by brute force") {
  auto cd = music::builtin_cube_dance();
  auto el = elements_of_rel_functor(cd);
  CHECK(validate_category(*el.cat).ok());
  CHECK(validate_functor(el.proj).ok());
  REQUIRE(el.cat->object_count() == 28);
  const auto u = cd.source().morphism_index("U");
  std::size_t over_u = 0;
  for (std::size_t m = 0; m < el.cat->morphism_count(); ++m)
    if (el.proj.morphism(m) == u) ++over_u;
  CHECK(over_u == 96);

  // Oracle: the same adjacency from pitch-class sets.
  const auto sets = oracle::cube_dance_sets();
  std::size_t oracle_pairs = 0;
  for (const auto& a : sets)
    for (const auto& b : sets) oracle_pairs += oracle::semitone_neighbors(a, b);
  CHECK(oracle_pairs == 96);

  // Out-degree over U equals the number of related chords.
  for (std::size_t x = 0; x < 28; ++x) {
    std::size_t related = 0;
    for (auto [a, b] : cd.rel(u)) related += a == x;
    CHECK(out_over(el, el.object_of(0, x), u) == related);
  }
}

TEST_CASE("empty relation on the generator leaves only identities over it") {
  FiniteCategory::Builder b;
  b.add_object("*");
  auto id = b.add_morphism("id", 0, 0);
  auto u = b.add_morphism("U", 0, 0);
  b.set_identity(0, id);
  b.set_compose(id, id, id);
  b.set_compose(u, id, u);
  b.set_compose(id, u, u);
  b.set_compose(u, u, u);
  auto cat = share(std::move(b).build());
  RelValuedFunctor s(cat, {ElementSet({"p", "q"})}, {{{0, 0}, {1, 1}}, {}});
  CHECK(validate_rel_functor(s).ok());
  auto el = elements_of_rel_functor(s);
  CHECK(el.cat->object_count() == 2);
  CHECK(el.cat->morphism_count() == 2);
}

TEST_CASE("invalid input is rejected") {
  auto a = music::builtin_t_group();
  std::vector<std::vector<std::size_t>> maps;
  for (std::size_t f = 0; f < 12; ++f) maps.push_back(a.action.map(f));
  std::swap(maps[1], maps[2]);
  SetValuedFunctor bad(a.category, {a.action.set(0)}, maps);
  CHECK_THROWS_AS(elements_of_set_functor(bad), ValidationError);
}

TEST_CASE("H_F of the identity PK-net is the identity") {
  auto s = music::builtin_plr().action;
  auto f = Functor::identity(s.source_ptr());
  auto h = induced_functor_HF(s, s, f, SetNatTrans::identity(s));
  CHECK(validate_functor(h).ok());
  for (std::size_t o = 0; o < h.source().object_count(); ++o) CHECK(h.object(o) == o);
  for (std::size_t m = 0; m < h.source().morphism_count(); ++m) CHECK(h.morphism(m) == m);
}

TEST_CASE("H_F on the square network picks out the nodes and labels") {
  auto p = square::pknet(square::kEnd, square::kEndLabels);
  CHECK(validate_pknet(p).ok());
  auto el_r = elements_of_set_functor(p.r);
  auto el_s = elements_of_set_functor(p.s);
  auto h = induced_functor_HF(p, el_r, el_s);
  CHECK(validate_functor(h).ok());
  CHECK(square_commutes(p, h, el_r, el_s));
  std::vector<std::string> objs;
  for (std::size_t x = 0; x < 4; ++x) objs.push_back(el_s.cat->object(h.object(el_r.object_of(x, 0))));
  CHECK(objs == std::vector<std::string>{"(*|B)", "(*|Cs)", "(*|E)", "(*|Gs)"});
  const auto& d = *square::shape();
  auto arrow = [&](const char* id) {
    auto m = el_r.morphism_offset[d.morphism_index(id)];
    return el_s.cat->morphism(h.morphism(m)).id;
  };
  CHECK(arrow("ab") == "(B|T2|Cs)");
  CHECK(arrow("bd") == "(Cs|I9|Gs)");
  CHECK(arrow("ac") == "(B|I3|E)");
  CHECK(arrow("cd") == "(E|T4|Gs)");
}

TEST_CASE("phi collapsing two elements merges objects") {
  // R has two elements on a; both go to C.
  auto shape = square::shape();
  std::map<std::string, std::vector<std::string>> sets{
      {"a", {"x", "y"}}, {"b", {"*"}}, {"c", {"*"}}, {"d", {"*"}}};
  std::map<std::string, std::map<std::string, std::string>> maps{
      {"ab", {{"x", "*"}, {"y", "*"}}},
      {"ac", {{"x", "*"}, {"y", "*"}}},
      {"a>d", {{"x", "*"}, {"y", "*"}}},
      {"bd", {{"*", "*"}}},
      {"cd", {{"*", "*"}}}};
  auto r = SetValuedFunctor::from_names(shape, sets, maps);
  CHECK(validate_set_functor(r).ok());
  auto base = square::pknet(square::kEnd, square::kEndLabels);
  auto sf = precompose(base.s, base.f);
  std::vector<std::vector<std::size_t>> comps{{11, 11}, {1}, {4}, {8}};
  PKNet p{r, base.s, base.f, SetNatTrans(r, sf, comps)};
  CHECK(validate_pknet(p).ok());
  auto el_r = elements_of_set_functor(p.r);
  auto el_s = elements_of_set_functor(p.s);
  auto h = induced_functor_HF(p, el_r, el_s);
  CHECK(validate_functor(h).ok());
  CHECK(h.object(el_r.object_of(0, 0)) == h.object(el_r.object_of(0, 1)));
  CHECK(square_commutes(p, h, el_r, el_s));
}

TEST_CASE("non-natural phi and empty R are rejected") {
  auto p = square::pknet(square::kStart, square::kEndLabels);
  auto rep = validate_pknet(p);
  CHECK(rep.has("phi: naturality"));
  CHECK_THROWS_AS(induced_functor_HF(p), ValidationError);

  auto shape = square::shape();
  auto r = SetValuedFunctor::from_names(
      shape, {{"a", {}}, {"b", {}}, {"c", {}}, {"d", {}}},
      {{"ab", {}}, {"bd", {}}, {"ac", {}}, {"cd", {}}, {"a>d", {}}});
  auto base = square::pknet(square::kEnd, square::kEndLabels);
  PKNet empty{r, base.s, base.f, SetNatTrans(r, precompose(base.s, base.f), {{}, {}, {}, {}})};
  CHECK(validate_pknet(empty).has("R: empty value"));
}

TEST_CASE("eta for the local homography (T8,T8,T4,T4)") {
  auto from = square::pknet(square::kMiddle, square::kEndLabels);
  auto to = square::pknet(square::kEnd, square::kEndLabels);
  const auto& ti = *square::ti().category;
  auto comps = [&](std::array<const char*, 4> c) {
    std::vector<std::size_t> v;
    for (auto s : c) v.push_back(ti.morphism_index(s));
    return v;
  };
  CatNatTrans nu(from.f, to.f, comps({"T8", "T8", "T4", "T4"}));
  auto local = local_pknet(from, to.f, nu);
  CHECK(local.phi == to.phi);
  auto eta = induced_nattrans_eta(from, to, nu);
  CHECK(validate_natural(eta).ok());

  CatNatTrans id(from.f, from.f, comps({"T0", "T0", "T0", "T0"}));
  auto eta_id = induced_nattrans_eta(from, from, id);
  CHECK(eta_id == CatNatTrans::identity(eta_id.source()));

  CatNatTrans bad(from.f, to.f, comps({"T8", "T8", "T4", "T0"}));
  try {
    induced_nattrans_eta(from, to, bad);
    FAIL("expected a rejection");
  } catch (const ValidationError& e) {
    bool on_cd = false;
    for (const auto& v : e.report()) on_cd = on_cd || v.witness[0] == "cd";
    CHECK(on_cd);
  }
}

TEST_CASE("random PK-nets: H_F is a functor and the square commutes") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 40; ++trial) {
    auto p = gen::random_pknet(rng);
    REQUIRE(validate_pknet(p).ok());
    auto el_r = elements_of_set_functor(p.r);
    auto el_s = elements_of_set_functor(p.s);
    auto h = induced_functor_HF(p, el_r, el_s);
    CHECK(validate_functor(h).ok());
    CHECK(square_commutes(p, h, el_r, el_s));
  }
}

TEST_CASE("Lewin category is the category of elements of the derived action") {
  auto t = music::builtin_t_group();
  auto g = interval_from_action(t.action, t.group);
  auto lc = lewin_category(g);
  auto el = elements_of_set_functor(derived_action(g));
  const auto& c = *lc.category;
  REQUIRE(c.object_count() == el.cat->object_count());
  REQUIRE(c.morphism_count() == el.cat->morphism_count());
  // x -> (*,x), (x,y) -> (x, int(x,y), y).
  std::vector<std::size_t> mm(c.morphism_count());
  for (std::size_t m = 0; m < c.morphism_count(); ++m) {
    const auto& mor = c.morphism(m);
    auto name = element_morphism_name(g.x[mor.dom],
                                      lc.to_group.target().morphism(lc.to_group.morphism(m)).id,
                                      g.x[mor.cod]);
    mm[m] = el.cat->morphism_index(name);
  }
  std::vector<std::size_t> om(c.object_count());
  for (std::size_t x = 0; x < om.size(); ++x) om[x] = el.object_of(0, x);
  Functor iso(lc.category, el.cat, om, mm);
  CHECK(validate_functor(iso).ok());
  CHECK(std::set<std::size_t>(mm.begin(), mm.end()).size() == mm.size());
}

}  // TEST_SUITE
