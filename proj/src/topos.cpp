#include "catnet/topos.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace catnet {

namespace {

using Mask = std::vector<bool>;

// Closure of every union of the given generators, as masks over `width` bits.
template <class Principal>
std::vector<Mask> union_closure(std::size_t width, std::size_t generators, Principal&& principal) {
  std::vector<Mask> out{Mask(width, false)};
  std::set<Mask> seen{out.front()};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (std::size_t g = 0; g < generators; ++g) {
      Mask m = out[k];
      for (auto bit : principal(g)) m[bit] = true;
      if (seen.insert(m).second) out.push_back(std::move(m));
    }
  return out;
}

Sieve sieve_of(const FiniteCategory& c, std::size_t x, const Mask& m) {
  Sieve s{x, {}};
  for (std::size_t f = 0; f < m.size(); ++f)
    if (m[f]) s.arrows.push_back(f);
  std::sort(s.arrows.begin(), s.arrows.end(),
            [&](auto a, auto b) { return c.morphism(a).id < c.morphism(b).id; });
  return s;
}

struct Classifier {
  std::vector<std::vector<Sieve>> sieves;
  std::vector<std::map<Mask, std::size_t>> index;
};

Mask mask_of(const FiniteCategory& c, const Sieve& s) {
  Mask m(c.morphism_count(), false);
  for (auto f : s.arrows) m[f] = true;
  return m;
}

Classifier classify(const FiniteCategory& c) {
  Classifier out;
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    out.sieves.push_back(sieves_at(c, x));
    auto& idx = out.index.emplace_back();
    for (std::size_t k = 0; k < out.sieves.back().size(); ++k)
      idx.emplace(mask_of(c, out.sieves.back()[k]), k);
  }
  return out;
}

}  // namespace

std::string sieve_name(const FiniteCategory& c, const Sieve& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.arrows.size(); ++k) {
    if (k) out += ",";
    out += c.morphism(s.arrows[k]).id;
  }
  return out + "}";
}

std::vector<Sieve> sieves_at(const FiniteCategory& c, std::size_t x) {
  const auto out = c.out(x);
  auto masks = union_closure(c.morphism_count(), out.size(), [&](std::size_t k) {
    std::vector<std::size_t> up;
    const auto f = out[k];
    for (auto g : c.out(c.morphism(f).cod)) up.push_back(c.compose_unchecked(g, f));
    return up;
  });
  std::vector<std::pair<std::string, Sieve>> named;
  for (const auto& m : masks) {
    auto s = sieve_of(c, x, m);
    named.emplace_back(sieve_name(c, s), std::move(s));
  }
  std::sort(named.begin(), named.end(), [](const auto& a, const auto& b) {
    if (a.second.arrows.size() != b.second.arrows.size())
      return a.second.arrows.size() < b.second.arrows.size();
    return a.first < b.first;
  });
  std::vector<Sieve> result;
  for (auto& [name, s] : named) result.push_back(std::move(s));
  return result;
}

SetValuedFunctor subobject_classifier(const CategoryPtr& cp) {
  const auto& c = *cp;
  const auto cl = classify(c);
  std::vector<ElementSet> sets;
  for (const auto& row : cl.sieves) {
    std::vector<std::string> names;
    for (const auto& s : row) names.push_back(sieve_name(c, s));
    sets.emplace_back(std::move(names));
  }
  std::vector<std::vector<std::size_t>> maps(c.morphism_count());
  for (std::size_t f = 0; f < c.morphism_count(); ++f) {
    const auto& m = c.morphism(f);
    for (const auto& s : cl.sieves[m.dom]) {
      const auto in = mask_of(c, s);
      Mask pulled(c.morphism_count(), false);
      for (auto g : c.out(m.cod)) pulled[g] = in[c.compose_unchecked(g, f)];
      maps[f].push_back(cl.index[m.cod].at(pulled));
    }
  }
  return SetValuedFunctor(cp, std::move(sets), std::move(maps));
}

ValidationReport validate_subfunctor(const Subfunctor& a) {
  ValidationReport r;
  const auto& s = a.parent;
  const auto& c = s.source();
  if (a.member.size() != c.object_count()) {
    r.add("shape", {"wrong number of objects"});
    return r;
  }
  for (std::size_t x = 0; x < c.object_count(); ++x)
    if (a.member[x].size() != s.set(x).size()) r.add("shape", {c.object(x)});
  if (!r.ok()) return r;
  for (std::size_t f = 0; f < c.morphism_count(); ++f) {
    const auto& m = c.morphism(f);
    for (std::size_t i = 0; i < s.set(m.dom).size(); ++i)
      if (a.member[m.dom][i] && !a.member[m.cod][s.apply(f, i)])
        r.add("closure", {c.object(m.dom), s.set(m.dom)[i], m.id});
  }
  return r;
}

std::vector<Subfunctor> all_subfunctors(const SetValuedFunctor& s) {
  const auto& c = s.source();
  std::vector<std::size_t> offset(c.object_count() + 1, 0);
  for (std::size_t x = 0; x < c.object_count(); ++x) offset[x + 1] = offset[x] + s.set(x).size();
  std::vector<std::pair<std::size_t, std::size_t>> flat;  // (X, i)
  for (std::size_t x = 0; x < c.object_count(); ++x)
    for (std::size_t i = 0; i < s.set(x).size(); ++i) flat.emplace_back(x, i);

  // A closed subset is a union of the orbits {f·x}.
  auto masks = union_closure(flat.size(), flat.size(), [&](std::size_t k) {
    std::vector<std::size_t> orbit;
    const auto [x, i] = flat[k];
    for (auto f : c.out(x)) orbit.push_back(offset[c.morphism(f).cod] + s.apply(f, i));
    return orbit;
  });
  std::sort(masks.begin(), masks.end(), [](const Mask& a, const Mask& b) {
    const auto na = std::count(a.begin(), a.end(), true);
    const auto nb = std::count(b.begin(), b.end(), true);
    if (na != nb) return na < nb;
    return a > b;  // earlier elements first
  });

  std::vector<Subfunctor> out;
  for (const auto& m : masks) {
    Subfunctor a{s, {}};
    for (std::size_t x = 0; x < c.object_count(); ++x)
      a.member.emplace_back(m.begin() + static_cast<std::ptrdiff_t>(offset[x]),
                            m.begin() + static_cast<std::ptrdiff_t>(offset[x + 1]));
    out.push_back(std::move(a));
  }
  return out;
}

SetNatTrans characteristic_morphism(const Subfunctor& a) {
  if (auto r = validate_subfunctor(a); !r.ok())
    throw ValidationError("characteristic morphism: not a subfunctor", std::move(r));
  const auto& s = a.parent;
  const auto& c = s.source();
  auto omega = subobject_classifier(s.source_ptr());
  const auto cl = classify(c);
  std::vector<std::vector<std::size_t>> comps(c.object_count());
  for (std::size_t x = 0; x < c.object_count(); ++x)
    for (std::size_t i = 0; i < s.set(x).size(); ++i) {
      Mask m(c.morphism_count(), false);
      for (auto f : c.out(x)) m[f] = a.member[c.morphism(f).cod][s.apply(f, i)];
      comps[x].push_back(cl.index[x].at(m));
    }
  SetNatTrans chi(s, std::move(omega), std::move(comps));
  if (auto r = validate_set_natural(chi); !r.ok())
    throw ValidationError("characteristic morphism: not natural", std::move(r));
  return chi;
}

NetTransform classifier_ctnet_morphism(const CTNet& net, const Subfunctor& a) {
  auto chi = characteristic_morphism(a);
  const auto& s = a.parent;
  const auto el_s = elements_of_set_functor(s);
  if (!same_category(el_s.cat, net.h.target_ptr()) || !(el_s.proj == net.pi))
    throw Error("classifier morphism: the net is not built on the category of elements of S");
  const auto el_o = elements_of_set_functor(chi.target());
  auto id_c = Functor::identity(s.source_ptr());
  auto j0 = induced_elements_functor(s, chi.target(), id_c, chi, el_s, el_o);
  Functor j(net.h.target_ptr(), el_o.cat, j0.object_map(), j0.morphism_map());

  CTNet out{compose_functors(j, net.h), el_o.proj};
  auto id_delta = Functor::identity(net.h.source_ptr());
  std::vector<std::size_t> comps(net.delta().object_count());
  for (std::size_t x = 0; x < comps.size(); ++x) comps[x] = out.c_el().identity(out.h.object(x));
  CatNatTrans nu(compose_functors(j, net.h), compose_functors(out.h, id_delta), std::move(comps));
  CTNetMorphism m{net, out, std::move(id_delta),
                  Functor(net.pi.target_ptr(), el_o.proj.target_ptr(), id_c.object_map(),
                          id_c.morphism_map()),
                  std::move(j), std::move(nu)};
  if (auto r = validate_ctnet_morphism(m); !r.ok())
    throw ValidationError("classifier morphism: resulting morphism is invalid", std::move(r));
  return {std::move(out), std::move(m)};
}

}  // namespace catnet
