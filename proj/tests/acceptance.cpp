// One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "catnet/commands.hpp"
#include "catnet/concrete.hpp"
#include "catnet/ctnet.hpp"
#include "catnet/elements.hpp"
#include "catnet/music.hpp"
#include "catnet/quiver.hpp"
#include "catnet/topos.hpp"
#include "support/oracles.hpp"
#include "support/random_pknets.hpp"
#include "support/square_net.hpp"

using namespace catnet;

namespace {

using Names = std::array<std::string, 4>;

struct Check {
  bool ok = true;
  std::string why;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

int failures = 0;

void criterion(int n, double limit_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0) c.require(s < limit_s, "took " + std::to_string(s) + " s");
  failures += !c.ok;
  std::printf("criterion %d: %s (%.3f s%s)%s%s\n", n, c.ok ? "PASS" : "FAIL", s,
              limit_s > 0 ? (", limit " + std::to_string(int(limit_s)) + " s").c_str() : "",
              c.ok ? "" : ": ", c.why.c_str());
}

std::vector<std::string> pcs(std::initializer_list<int> xs) {
  std::vector<std::string> out;
  for (int x : xs) out.push_back(std::to_string(x));
  return out;
}

GisData difference_gis(const std::vector<std::string>& xs, const GroupTable& g) {
  return GisData::from_function(xs, g, [&](std::size_t a, std::size_t b) {
    return g.index("T" + std::to_string(oracle::mod(std::stoi(xs[b]) - std::stoi(xs[a]), 12)));
  });
}

bool square_commutes(const PKNet& p, const Functor& h, const ElementsResult& el_r,
                     const ElementsResult& el_s) {
  for (std::size_t o = 0; o < el_r.cat->object_count(); ++o)
    if (el_s.proj.object(h.object(o)) != p.f.object(el_r.proj.object(o))) return false;
  for (std::size_t m = 0; m < el_r.cat->morphism_count(); ++m)
    if (el_s.proj.morphism(h.morphism(m)) != p.f.morphism(el_r.proj.morphism(m))) return false;
  return true;
}

bool complete_quiver(const ElementsResult& el, std::size_t group_size) {
  // Between any two elements of a simply transitive action there is exactly one arrow, and
  // there are group_size arrows out of each.
  const auto& c = *el.cat;
  for (std::size_t o = 0; o < c.object_count(); ++o) {
    std::set<std::size_t> targets;
    for (auto m : c.out(o)) targets.insert(c.morphism(m).cod);
    if (targets.size() != c.object_count() || c.out(o).size() != group_size) return false;
  }
  return true;
}

std::string run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "catnet");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return std::to_string(code) + "\n" + out.str() + "\n" + err.str();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string data(const std::string& name) { return std::string(CATNET_TEST_ROOT) + "/data/" + name; }

}  // namespace

int main() {
  criterion(1, 1.0, [](Check& c) {
    auto t = music::builtin_t_group().group;
    auto full = difference_gis(pcs({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}), t);
    c.require(check_gis_condition1(full).ok(), "Z12 condition 1");
    c.require(check_gis_condition2(full).ok(), "Z12 condition 2");
    auto even = difference_gis(pcs({0, 2, 4, 6, 8, 10}), t);
    c.require(check_gis_condition1(even).ok(), "even condition 1");
    auto r = check_gis_condition2(even);
    c.require(!r.ok(), "even condition 2 should fail");
    c.require(!r.ok() && r.front().witness == std::vector<std::string>{"0", "T1", "0"},
              "even witness");
  });

  criterion(2, 1.0, [](Check& c) {
    auto t = music::builtin_t_group();
    auto g = interval_from_action(t.action, t.group);
    auto lc = lewin_category(g);
    const auto& cat = *lc.category;
    c.require(cat.object_count() == 12 && cat.morphism_count() == 144, "Lewin counts");
    c.require(validate_category(cat).ok(), "Lewin category laws");
    auto el = elements_of_set_functor(derived_action(g));
    c.require(el.cat->object_count() == 12 && el.cat->morphism_count() == 144, "elements counts");
    std::vector<std::size_t> om(cat.object_count()), mm(cat.morphism_count());
    for (std::size_t x = 0; x < om.size(); ++x) om[x] = el.object_of(0, x);
    for (std::size_t m = 0; m < mm.size(); ++m) {
      const auto& mor = cat.morphism(m);
      mm[m] = el.cat->morphism_index(element_morphism_name(
          g.x[mor.dom], lc.to_group.target().morphism(lc.to_group.morphism(m)).id, g.x[mor.cod]));
    }
    Functor iso(lc.category, el.cat, om, mm);
    c.require(validate_functor(iso).ok(), "isomorphism is a functor");
    c.require(std::set<std::size_t>(mm.begin(), mm.end()).size() == mm.size(), "bijective on arrows");
    c.require(std::set<std::size_t>(om.begin(), om.end()).size() == om.size(), "bijective on objects");
  });

  criterion(3, 5.0, [](Check& c) {
    auto ti = elements_of_set_functor(music::builtin_ti_group().action);
    c.require(ti.cat->object_count() == 12 && ti.cat->morphism_count() == 288, "T/I counts");
    c.require(validate_category(*ti.cat).ok() && validate_functor(ti.proj).ok(), "T/I laws");
    auto plr = elements_of_set_functor(music::builtin_plr().action);
    c.require(plr.cat->object_count() == 24 && plr.cat->morphism_count() == 576, "PLR counts");
    c.require(validate_category(*plr.cat).ok() && validate_functor(plr.proj).ok(), "PLR laws");
    c.require(complete_quiver(plr, 24), "PLR quiver complete");
  });

  criterion(4, 10.0, [](Check& c) {
    auto p = square::pknet(square::kEnd, square::kEndLabels);
    auto el_r = elements_of_set_functor(p.r);
    auto el_s = elements_of_set_functor(p.s);
    auto h = induced_functor_HF(p, el_r, el_s);
    c.require(validate_functor(h).ok() && square_commutes(p, h, el_r, el_s), "square net");
    std::mt19937 rng(20241015);
    for (int trial = 0; trial < 100; ++trial) {
      auto q = gen::random_pknet(rng);
      c.require(validate_pknet(q).ok(), "random net " + std::to_string(trial) + " invalid");
      c.require(q.f.source().object_count() <= 4 && q.f.target().morphism_count() <= 24,
                "random net size");
      auto er = elements_of_set_functor(q.r);
      auto es = elements_of_set_functor(q.s);
      auto hq = induced_functor_HF(q, er, es);
      c.require(validate_functor(hq).ok(), "H_F functor, trial " + std::to_string(trial));
      c.require(square_commutes(q, hq, er, es), "square, trial " + std::to_string(trial));
    }
  });

  criterion(5, 0, [](Check& c) {
    auto start = square::net(square::kStart, square::kStartLabels);
    auto g = apply_complete_homography(start, ti_complete_homography(1, 2, 7));
    c.require(square::node_names(g.net) == Names{"Ds", "F", "C", "E"}, "global nodes");
    c.require(square::arrow_names(g.net) == square::kEndLabels, "global labels");
    c.require(validate_ctnet_morphism(g.morphism).ok(), "global morphism");
    auto f = compose_functors(g.net.pi, g.net.h);
    auto fl = square::labels(square::kEndLabels);
    Functor fp(f.source_ptr(), f.target_ptr(), fl.object_map(), fl.morphism_map());
    const auto& ti = *square::ti().category;
    std::vector<std::size_t> comps;
    for (auto s : {"T8", "T8", "T4", "T4"}) comps.push_back(ti.morphism_index(s));
    auto l = local_homography_by_labels(g.net, fp, CatNatTrans(f, fp, comps));
    c.require(square::node_names(l.net) == Names{"B", "Cs", "E", "Gs"}, "local nodes");
    c.require(validate_ctnet_morphism(l.morphism).ok(), "local morphism");
    auto m = compose_ctnet_morphisms(l.morphism, g.morphism);
    c.require(validate_ctnet_morphism(m).ok(), "composite morphism");
    c.require(m.source == start, "composite source");
  });

  criterion(6, 5.0, [](Check& c) {
    auto start = square::net(square::kStart, square::kStartLabels);
    auto end = square::net(square::kEnd, square::kEndLabels);
    const auto& ti = square::ti();
    std::size_t natural = 0, hits = 0;
    for (auto [u, j] : music::ti_automorphism_parameters()) {
      auto n = music::ti_automorphism(ti.category, u, j);
      auto target = precompose(ti.action, n);
      for (int v = 0; v < 12; ++v) {
        std::vector<std::size_t> comp(12);
        for (int x = 0; x < 12; ++x) comp[x] = static_cast<std::size_t>(music::mod12(u * x + v));
        SetNatTrans nu(ti.action, target, {comp});
        if (!validate_set_natural(nu).ok()) continue;
        ++natural;
        auto t = apply_complete_homography(start, CompleteHomography{n, ti.action, nu});
        hits += square::node_names(t.net) == square::node_names(end) &&
                square::arrow_names(t.net) == square::arrow_names(end);
      }
    }
    c.require(natural == 48, "natural candidates " + std::to_string(natural));
    c.require(hits == 0, "successes " + std::to_string(hits));
  });

  criterion(7, 0, [](Check& c) {
    auto el = elements_of_set_functor(music::builtin_plr().action);
    auto cw = extract_subquiver(colored_quiver_of_diagram(el.proj), {"P", "L", "R"});
    c.require(cw.nodes.size() == 24, "nodes");
    c.require(cw.arrows.size() == 72, "arrows");
    c.require(cw.inverse_pairs.size() == 36, "edges");
    std::map<std::string, std::size_t> per;
    for (auto [a, b] : cw.inverse_pairs) ++per[cw.arrows[a].color];
    c.require(per == std::map<std::string, std::size_t>{{"L", 12}, {"P", 12}, {"R", 12}},
              "edges per color");
    std::ostringstream out, err;
    c.require(cli::cmd_export_dot("chicken-wire", {}, out, err) == cli::kOk, "export");
    const auto golden = slurp(std::string(CATNET_TEST_ROOT) + "/golden/chicken_wire.dot");
    c.require(!golden.empty() && out.str() == golden, "DOT differs from golden");
  });

  criterion(8, 0, [](Check& c) {
    auto cd = music::builtin_cube_dance();
    c.require(validate_rel_functor(cd).ok(), "functor laws");
    auto el = elements_of_rel_functor(cd);
    c.require(validate_category(*el.cat).ok(), "elements laws");
    c.require(el.cat->object_count() == 28, "objects");
    const auto& chords = cd.set(0);
    const auto u = cd.source().morphism_index("U");
    std::size_t pairs = 0;
    std::map<std::size_t, std::size_t> degree;
    for (std::size_t a = 0; a < chords.size(); ++a)
      for (std::size_t b = 0; b < chords.size(); ++b) {
        auto t1 = music::Triad::parse(chords[a]);
        auto t2 = music::Triad::parse(chords[b]);
        auto p1 = t1->pitches(), p2 = t2->pitches();
        bool oracle_rel = oracle::semitone_neighbors({p1.begin(), p1.end()}, {p2.begin(), p2.end()});
        bool rel = std::find(cd.rel(u).begin(), cd.rel(u).end(), std::make_pair(a, b)) !=
                   cd.rel(u).end();
        c.require(rel == oracle_rel, "U disagrees with brute force at " + chords[a] + "," + chords[b]);
        pairs += rel;
        degree[a] += rel;
      }
    c.require(pairs == 96, "generator morphisms " + std::to_string(pairs));
    auto q = pair_symmetric_arrows(extract_subquiver(colored_quiver_of_diagram(el.proj), {"U"}));
    c.require(q.inverse_pairs.size() == 48, "adjacencies");
    for (auto [a, d] : degree)
      c.require(d == (chords[a].find("aug") != std::string::npos ? 6u : 3u), "degree of " + chords[a]);
  });

  criterion(9, 5.0, [](Check& c) {
    for (const auto& a : {music::builtin_t_group(), music::builtin_ti_group(), music::builtin_plr(),
                          music::builtin_tritone_group()})
      c.require(subobject_classifier(a.category).set(0).size() == 2, "group Ω");
    FiniteCategory::Builder b;
    b.add_object("*");
    auto one = b.add_morphism("1", 0, 0);
    auto f = b.add_morphism("f", 0, 0);
    b.set_identity(0, one);
    b.set_compose(one, one, one);
    b.set_compose(f, one, f);
    b.set_compose(one, f, f);
    b.set_compose(f, f, f);
    auto m = share(std::move(b).build());
    c.require(subobject_classifier(m).set(0).size() == 3, "idempotent monoid Ω");

    auto s = music::builtin_tritone_group().action;
    auto subs = all_subfunctors(s);
    c.require(subs.size() == 64, "subfunctor count");
    const auto& cat = s.source();
    const auto top = sieve_name(cat, sieves_at(cat, 0).back());
    for (const auto& a : subs) {
      auto chi = characteristic_morphism(a);
      c.require(validate_set_natural(chi).ok(), "χ natural");
      for (std::size_t x = 0; x < 12; ++x)
        c.require((chi.target().set(0)[chi.apply(0, x)] == top) == a.member[0][x], "pullback");
    }
  });

  criterion(10, 0, [](Check& c) {
    const std::vector<std::vector<std::string>> cmds = {
        {"export-dot", "plr-triads"},
        {"export-dot", "cube-dance", "--highlight", "U", "--undirected"},
        {"elements", "cube-dance"},
        {"builtin", "z12-ti"},
        {"validate", data("category_broken_assoc.json")},
        {"apply", data("net_start.json"), data("morphism_pipeline.json")},
        {"isography", data("net_start.json"), data("net_end.json")}};
    for (const auto& cmd : cmds) c.require(run_cli(cmd) == run_cli(cmd), "output differs: " + cmd[0]);
    std::mt19937 r1(7), r2(7);
    for (int k = 0; k < 10; ++k) {
      auto a = gen::random_pknet(r1);
      auto b = gen::random_pknet(r2);
      c.require(a.f == b.f && a.r == b.r && a.s == b.s, "seeded generator");
    }
  });

  return failures == 0 ? 0 : 1;
}
