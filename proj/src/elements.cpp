#include "catnet/elements.hpp"

#include <algorithm>

namespace catnet {

std::string element_object_name(const std::string& object, const std::string& element) {
  return "(" + object + "|" + element + ")";
}

std::string element_morphism_name(const std::string& from, const std::string& morphism,
                                  const std::string& to) {
  return "(" + from + "|" + morphism + "|" + to + ")";
}

namespace {

template <class SetOf>
std::vector<std::size_t> add_element_objects(FiniteCategory::Builder& b,
                                             const FiniteCategory& base, SetOf&& set_of) {
  std::vector<std::size_t> offset(base.object_count() + 1, 0);
  for (std::size_t x = 0; x < base.object_count(); ++x) {
    offset[x] = b.object_count();
    const auto& set = set_of(x);
    for (std::size_t i = 0; i < set.size(); ++i)
      b.add_object(element_object_name(base.object(x), set[i]));
  }
  offset[base.object_count()] = b.object_count();
  return offset;
}

Functor projection(const CategoryPtr& cat, const CategoryPtr& base,
                   const std::vector<std::size_t>& obj_offset,
                   const std::vector<std::size_t>& mor_offset) {
  std::vector<std::size_t> om(cat->object_count()), mm(cat->morphism_count());
  for (std::size_t x = 0; x < base->object_count(); ++x)
    for (std::size_t o = obj_offset[x]; o < obj_offset[x + 1]; ++o) om[o] = x;
  for (std::size_t f = 0; f < base->morphism_count(); ++f)
    for (std::size_t m = mor_offset[f]; m < mor_offset[f + 1]; ++m) mm[m] = f;
  return Functor(cat, base, std::move(om), std::move(mm));
}

}  // namespace

ElementsResult elements_of_set_functor(const SetValuedFunctor& s) {
  if (auto r = validate_set_functor(s); !r.ok())
    throw ValidationError("category of elements: input is not a functor", std::move(r));
  const auto& base = s.source();
  FiniteCategory::Builder b;
  auto obj_offset = add_element_objects(b, base, [&](std::size_t x) -> const ElementSet& {
    return s.set(x);
  });

  std::vector<std::size_t> mor_offset(base.morphism_count() + 1, 0);
  for (std::size_t f = 0; f < base.morphism_count(); ++f) {
    mor_offset[f] = b.morphism_count();
    const auto& m = base.morphism(f);
    for (std::size_t i = 0; i < s.set(m.dom).size(); ++i) {
      const auto j = s.apply(f, i);
      b.add_morphism(element_morphism_name(s.set(m.dom)[i], m.id, s.set(m.cod)[j]),
                     obj_offset[m.dom] + i, obj_offset[m.cod] + j);
    }
  }
  mor_offset[base.morphism_count()] = b.morphism_count();

  for (std::size_t x = 0; x < base.object_count(); ++x)
    for (std::size_t i = 0; i < s.set(x).size(); ++i)
      b.set_identity(obj_offset[x] + i, mor_offset[base.identity(x)] + i);

  // (y,g,z)∘(x,f,y) = (x, g∘f, z)
  for (std::size_t f = 0; f < base.morphism_count(); ++f) {
    const auto& m = base.morphism(f);
    for (auto g : base.out(m.cod)) {
      auto gf = base.compose(g, f);
      if (!gf) continue;
      for (std::size_t i = 0; i < s.set(m.dom).size(); ++i)
        b.set_compose(mor_offset[g] + s.apply(f, i), mor_offset[f] + i, mor_offset[*gf] + i);
    }
  }

  auto cat = share(std::move(b).build());
  auto proj = projection(cat, s.source_ptr(), obj_offset, mor_offset);
  return {cat, std::move(proj), std::move(obj_offset), std::move(mor_offset)};
}

ElementsResult elements_of_rel_functor(const RelValuedFunctor& s) {
  if (auto r = validate_rel_functor(s); !r.ok())
    throw ValidationError("category of elements: input is not a functor", std::move(r));
  const auto& base = s.source();
  FiniteCategory::Builder b;
  auto obj_offset = add_element_objects(b, base, [&](std::size_t x) -> const ElementSet& {
    return s.set(x);
  });

  std::vector<std::size_t> mor_offset(base.morphism_count() + 1, 0);
  for (std::size_t f = 0; f < base.morphism_count(); ++f) {
    mor_offset[f] = b.morphism_count();
    const auto& m = base.morphism(f);
    for (auto [i, j] : s.rel(f))
      b.add_morphism(element_morphism_name(s.set(m.dom)[i], m.id, s.set(m.cod)[j]),
                     obj_offset[m.dom] + i, obj_offset[m.cod] + j);
  }
  mor_offset[base.morphism_count()] = b.morphism_count();

  // rel(id) is the diagonal, so the i-th pair is (i, i).
  for (std::size_t x = 0; x < base.object_count(); ++x)
    for (std::size_t i = 0; i < s.set(x).size(); ++i)
      b.set_identity(obj_offset[x] + i, mor_offset[base.identity(x)] + i);

  auto pair_index = [&](std::size_t f, std::size_t a, std::size_t c) -> std::size_t {
    const auto& rel = s.rel(f);
    auto it = std::lower_bound(rel.begin(), rel.end(), RelValuedFunctor::Pair{a, c});
    if (it == rel.end() || *it != RelValuedFunctor::Pair{a, c}) return npos;
    return static_cast<std::size_t>(it - rel.begin());
  };

  ValidationReport closure;
  for (std::size_t f = 0; f < base.morphism_count(); ++f) {
    const auto& m = base.morphism(f);
    for (auto g : base.out(m.cod)) {
      auto gf = base.compose(g, f);
      if (!gf) continue;
      const auto& rel_f = s.rel(f);
      const auto& rel_g = s.rel(g);
      for (std::size_t p = 0; p < rel_f.size(); ++p) {
        const auto [a, mid] = rel_f[p];
        auto it = std::lower_bound(rel_g.begin(), rel_g.end(), RelValuedFunctor::Pair{mid, 0});
        for (; it != rel_g.end() && it->first == mid; ++it) {
          const auto q = static_cast<std::size_t>(it - rel_g.begin());
          const auto k = pair_index(*gf, a, it->second);
          if (k == npos) {
            closure.add("composition closure",
                        {base.morphism(g).id, m.id, s.set(m.dom)[a],
                         s.set(base.morphism(g).cod)[it->second]});
            continue;
          }
          b.set_compose(mor_offset[g] + q, mor_offset[f] + p, mor_offset[*gf] + k);
        }
      }
    }
  }
  if (!closure.ok())
    throw ValidationError("category of elements: composites are not closed", std::move(closure));

  auto cat = share(std::move(b).build());
  auto proj = projection(cat, s.source_ptr(), obj_offset, mor_offset);
  return {cat, std::move(proj), std::move(obj_offset), std::move(mor_offset)};
}

// --- PK-nets ---------------------------------------------------------------

namespace {

void append_prefixed(ValidationReport& into, const ValidationReport& from,
                     const std::string& prefix) {
  for (const auto& v : from) into.add(prefix + v.axiom, v.witness);
}

}  // namespace

ValidationReport validate_pknet(const PKNet& p) {
  ValidationReport r;
  append_prefixed(r, validate_set_functor(p.r), "R: ");
  append_prefixed(r, validate_set_functor(p.s), "S: ");
  append_prefixed(r, validate_functor(p.f), "F: ");
  const auto& delta = p.r.source();
  for (std::size_t x = 0; x < delta.object_count(); ++x)
    if (p.r.set(x).empty()) r.add("R: empty value", {delta.object(x)});
  if (!same_category(p.f.source_ptr(), p.r.source_ptr()))
    r.add("F: source is not the form's category", {});
  if (!same_category(p.f.target_ptr(), p.s.source_ptr()))
    r.add("F: target is not the support's category", {});
  if (!r.ok()) return r;
  if (!(p.phi.source() == p.r)) r.add("phi: source is not R", {});
  if (!(p.phi.target() == precompose(p.s, p.f))) r.add("phi: target is not S∘F", {});
  if (!r.ok()) return r;
  append_prefixed(r, validate_set_natural(p.phi), "phi: ");
  return r;
}

Functor induced_elements_functor(const SetValuedFunctor& r, const SetValuedFunctor& s,
                                 const Functor& f, const SetNatTrans& phi,
                                 const ElementsResult& el_r, const ElementsResult& el_s) {
  if (!same_category(f.source_ptr(), r.source_ptr()) ||
      !same_category(f.target_ptr(), s.source_ptr()))
    throw Error("induced functor: F does not go from R's category to S's");
  if (!(phi.source() == r) || !(phi.target() == precompose(s, f)))
    throw Error("induced functor: phi is not a transformation R => S∘F");
  if (auto rep = validate_set_natural(phi); !rep.ok())
    throw ValidationError("induced functor: phi is not natural", std::move(rep));

  const auto& delta = r.source();
  std::vector<std::size_t> om(el_r.cat->object_count()), mm(el_r.cat->morphism_count());
  for (std::size_t x = 0; x < delta.object_count(); ++x)
    for (std::size_t i = 0; i < r.set(x).size(); ++i)
      om[el_r.object_offset[x] + i] = el_s.object_offset[f.object(x)] + phi.apply(x, i);
  for (std::size_t m = 0; m < delta.morphism_count(); ++m) {
    const auto dom = delta.morphism(m).dom;
    for (std::size_t i = 0; i < r.set(dom).size(); ++i)
      mm[el_r.morphism_offset[m] + i] = el_s.morphism_offset[f.morphism(m)] + phi.apply(dom, i);
  }
  return Functor(el_r.cat, el_s.cat, std::move(om), std::move(mm));
}

Functor induced_functor_HF(const PKNet& p, const ElementsResult& el_r,
                           const ElementsResult& el_s) {
  if (auto rep = validate_pknet(p); !rep.ok())
    throw ValidationError("not a PK-net", std::move(rep));
  return induced_elements_functor(p.r, p.s, p.f, p.phi, el_r, el_s);
}

Functor induced_functor_HF(const PKNet& p) {
  if (auto rep = validate_pknet(p); !rep.ok())
    throw ValidationError("not a PK-net", std::move(rep));
  return induced_elements_functor(p.r, p.s, p.f, p.phi, elements_of_set_functor(p.r),
                                  elements_of_set_functor(p.s));
}

Functor induced_functor_HF(const SetValuedFunctor& r, const SetValuedFunctor& s,
                           const Functor& f, const SetNatTrans& phi) {
  return induced_functor_HF(PKNet{r, s, f, phi});
}

PKNet local_pknet(const PKNet& p, const Functor& f_prime, const CatNatTrans& nu_hat) {
  if (!(nu_hat.source() == p.f) || !(nu_hat.target() == f_prime))
    throw Error("local homography: nu_hat is not a transformation F => F'");
  if (auto rep = validate_natural(nu_hat); !rep.ok())
    throw ValidationError("local homography: nu_hat is not natural", std::move(rep));
  const auto& delta = p.r.source();
  std::vector<std::vector<std::size_t>> comps(delta.object_count());
  for (std::size_t x = 0; x < comps.size(); ++x)
    for (std::size_t i = 0; i < p.r.set(x).size(); ++i)
      comps[x].push_back(p.s.apply(nu_hat.component(x), p.phi.apply(x, i)));
  SetNatTrans phi_prime(p.r, precompose(p.s, f_prime), std::move(comps));
  return PKNet{p.r, p.s, f_prime, std::move(phi_prime)};
}

CatNatTrans induced_nattrans_eta(const PKNet& p, const PKNet& p_prime,
                                 const CatNatTrans& nu_hat) {
  if (!(p.r == p_prime.r) || !(p.s == p_prime.s))
    throw Error("induced transformation: the PK-nets must share R and S");
  if (!(nu_hat.source() == p.f) || !(nu_hat.target() == p_prime.f))
    throw Error("induced transformation: nu_hat is not a transformation F => F'");
  if (auto rep = validate_natural(nu_hat); !rep.ok())
    throw ValidationError("induced transformation: nu_hat is not natural", std::move(rep));

  const auto& delta = p.r.source();
  ValidationReport mismatch;
  for (std::size_t x = 0; x < delta.object_count(); ++x)
    for (std::size_t i = 0; i < p.r.set(x).size(); ++i)
      if (p.s.apply(nu_hat.component(x), p.phi.apply(x, i)) != p_prime.phi.apply(x, i))
        mismatch.add("phi' = (S nu_hat) phi", {delta.object(x), p.r.set(x)[i]});
  if (!mismatch.ok())
    throw ValidationError("induced transformation: phi' is not (S nu_hat) phi", std::move(mismatch));

  const auto el_r = elements_of_set_functor(p.r);
  const auto el_s = elements_of_set_functor(p.s);
  auto h = induced_functor_HF(p, el_r, el_s);
  auto h_prime = induced_functor_HF(p_prime, el_r, el_s);
  std::vector<std::size_t> comps(el_r.cat->object_count());
  for (std::size_t x = 0; x < delta.object_count(); ++x)
    for (std::size_t i = 0; i < p.r.set(x).size(); ++i)
      comps[el_r.object_offset[x] + i] =
          el_s.morphism_offset[nu_hat.component(x)] + p.phi.apply(x, i);
  return CatNatTrans(std::move(h), std::move(h_prime), std::move(comps));
}

}  // namespace catnet
