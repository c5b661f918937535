#pragma once

// Seeded generators of small valid PK-nets and interval systems.
//
// Δ is the free category on a random acyclic quiver, C a random
// transformation monoid acting on at most four points, F picks an image for
// each generating arrow, and R is grown along Δ so that φ is natural by
// construction.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "catnet/concrete.hpp"
#include "catnet/elements.hpp"
#include "catnet/fincat.hpp"

namespace gen {

using namespace catnet;

struct Monoid {
  CategoryPtr cat;
  SetValuedFunctor action;
};

inline int uniform(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Closure of one or two random maps on k points; retried until it has at
/// most `max_size` elements.
inline Monoid random_monoid(std::mt19937& rng, std::size_t max_size = 24) {
  for (;;) {
    const int k = uniform(rng, 1, 4);
    std::vector<std::vector<int>> elems{{}};
    for (int i = 0; i < k; ++i) elems[0].push_back(i);
    const int gens = uniform(rng, 1, 2);
    for (int g = 0; g < gens; ++g) {
      std::vector<int> m(k);
      for (auto& v : m) v = uniform(rng, 0, k - 1);
      if (std::find(elems.begin(), elems.end(), m) == elems.end()) elems.push_back(m);
    }
    for (std::size_t i = 0; i < elems.size() && elems.size() <= max_size; ++i)
      for (std::size_t j = 0; j <= i && elems.size() <= max_size; ++j)
        for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
          std::vector<int> c(k);
          for (int x = 0; x < k; ++x) c[x] = elems[a][elems[b][x]];
          if (std::find(elems.begin(), elems.end(), c) == elems.end()) elems.push_back(c);
        }
    if (elems.size() > max_size) continue;

    const auto index = [&](const std::vector<int>& m) {
      return static_cast<std::size_t>(std::find(elems.begin(), elems.end(), m) - elems.begin());
    };
    FiniteCategory::Builder b;
    b.add_object("*");
    for (std::size_t i = 0; i < elems.size(); ++i)
      b.add_morphism(i == 0 ? "id" : "m" + std::to_string(i), 0, 0);
    b.set_identity(0, 0);
    for (std::size_t g = 0; g < elems.size(); ++g)
      for (std::size_t f = 0; f < elems.size(); ++f) {
        std::vector<int> c(k);
        for (int x = 0; x < k; ++x) c[x] = elems[g][elems[f][x]];
        b.set_compose(g, f, index(c));
      }
    auto cat = share(std::move(b).build());

    std::vector<std::string> pts;
    for (int x = 0; x < k; ++x) pts.push_back("p" + std::to_string(x));
    std::vector<std::vector<std::size_t>> maps;
    for (const auto& e : elems) maps.emplace_back(e.begin(), e.end());
    SetValuedFunctor s(cat, {ElementSet(pts)}, std::move(maps));
    return {cat, std::move(s)};
  }
}

struct RandomDag {
  std::vector<std::string> objects;
  std::vector<ArrowSpec> arrows;
  CategoryPtr cat;
};

/// Objects o0..o(n-1) with arrows only from lower to higher index, at most
/// two parallel arrows per pair.
inline RandomDag random_dag(std::mt19937& rng, int max_objects = 4) {
  RandomDag d;
  const int n = uniform(rng, 1, max_objects);
  for (int i = 0; i < n; ++i) d.objects.push_back("o" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int count = uniform(rng, 0, 3) == 0 ? 2 : uniform(rng, 0, 1);
      for (int c = 0; c < count; ++c)
        d.arrows.push_back({"e" + std::to_string(d.arrows.size()), d.objects[i], d.objects[j]});
    }
  d.cat = share(free_category(d.objects, d.arrows));
  return d;
}

/// Image of a free-category path under per-generator choices.
inline std::size_t path_image(const FiniteCategory& delta, const FiniteCategory& c,
                              const std::map<std::string, std::size_t>& gen_image,
                              std::size_t f) {
  const auto& id = delta.morphism(f).id;
  std::size_t acc = c.identity(0);
  if (delta.is_identity(f)) return acc;
  std::size_t pos = 0;
  while (pos <= id.size()) {
    auto next = id.find(';', pos);
    if (next == std::string::npos) next = id.size();
    acc = *c.compose(gen_image.at(id.substr(pos, next - pos)), acc);
    pos = next + 1;
  }
  return acc;
}

/// A valid PK-net with R non-empty, set sizes at most four. An object with no
/// incoming arrow may still end up with several elements.
inline PKNet random_pknet(std::mt19937& rng) {
  auto dag = random_dag(rng);
  auto mon = random_monoid(rng);
  const auto& delta = *dag.cat;
  const auto& c = *mon.cat;
  const auto& points = mon.action.set(0);
  const std::size_t k = points.size();

  std::map<std::string, std::size_t> gen_image;
  for (const auto& a : dag.arrows)
    gen_image[a.id] = static_cast<std::size_t>(uniform(rng, 0, int(c.morphism_count()) - 1));
  std::vector<std::size_t> fmor(delta.morphism_count());
  for (std::size_t f = 0; f < delta.morphism_count(); ++f)
    fmor[f] = path_image(delta, c, gen_image, f);
  Functor F(dag.cat, mon.cat, std::vector<std::size_t>(delta.object_count(), 0), fmor);

  // phi values per object; objects are already topologically ordered.
  std::vector<std::vector<std::size_t>> phi(delta.object_count());
  for (std::size_t y = 0; y < delta.object_count(); ++y) {
    std::vector<std::size_t> need;
    for (const auto& a : dag.arrows) {
      if (delta.object_index(a.cod) != y) continue;
      const auto x = delta.object_index(a.dom);
      for (auto v : phi[x]) need.push_back(mon.action.apply(gen_image.at(a.id), v));
    }
    std::sort(need.begin(), need.end());
    need.erase(std::unique(need.begin(), need.end()), need.end());
    phi[y] = need;
    const int extra = need.empty() ? uniform(rng, 1, 3) : uniform(rng, 0, 1);
    for (int e = 0; e < extra; ++e) {
      const auto v = static_cast<std::size_t>(uniform(rng, 0, int(k) - 1));
      if (std::find(phi[y].begin(), phi[y].end(), v) == phi[y].end()) phi[y].push_back(v);
    }
  }

  std::vector<ElementSet> rsets;
  for (std::size_t x = 0; x < delta.object_count(); ++x) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < phi[x].size(); ++i) names.push_back("r" + std::to_string(i));
    rsets.emplace_back(names);
  }
  const auto first_with = [&](std::size_t y, std::size_t value) {
    return static_cast<std::size_t>(std::find(phi[y].begin(), phi[y].end(), value) -
                                    phi[y].begin());
  };
  // φ is injective on each R(X), so R(f) is forced by naturality.
  std::vector<std::vector<std::size_t>> rmaps(delta.morphism_count());
  for (std::size_t f = 0; f < delta.morphism_count(); ++f) {
    const auto& m = delta.morphism(f);
    for (auto v : phi[m.dom]) rmaps[f].push_back(first_with(m.cod, mon.action.apply(fmor[f], v)));
  }
  SetValuedFunctor R(dag.cat, std::move(rsets), std::move(rmaps));
  auto SF = precompose(mon.action, F);
  std::vector<std::vector<std::size_t>> comps(phi.begin(), phi.end());
  SetNatTrans nat(R, SF, std::move(comps));
  return {std::move(R), mon.action, std::move(F), std::move(nat)};
}

/// A GIS int(x,y) = h(y) h(x)^-1 over a random relabeling; condition 1 holds
/// by construction, condition 2 holds when h is a bijection.
inline GisData random_cocycle_gis(std::mt19937& rng, const GroupTable& g, std::size_t n,
                                  bool bijective) {
  std::vector<std::size_t> h(n);
  if (bijective) {
    std::vector<std::size_t> perm(g.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t i = 0; i < n; ++i) h[i] = perm[i];
  } else {
    for (auto& v : h) v = static_cast<std::size_t>(uniform(rng, 0, int(g.size()) - 1));
  }
  std::vector<std::string> xs;
  for (std::size_t i = 0; i < n; ++i) xs.push_back("x" + std::to_string(i));
  return GisData::from_function(xs, g, [&](std::size_t a, std::size_t b) {
    return g.product(h[b], g.inverse(h[a]));
  });
}

}  // namespace gen
