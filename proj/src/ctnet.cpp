#include "catnet/ctnet.hpp"

#include <algorithm>
#include <functional>

namespace catnet {

namespace {

void append_prefixed(ValidationReport& into, const ValidationReport& from,
                     const std::string& prefix) {
  for (const auto& v : from) into.add(prefix + v.axiom, v.witness);
}

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

// The unique morphism of c_el out of `start` lying over `label`, or npos when
// there is none or more than one.
std::size_t lift(const Functor& pi, std::size_t start, std::size_t label) {
  std::size_t found = npos;
  for (auto m : pi.source().out(start)) {
    if (pi.morphism(m) != label) continue;
    if (found != npos) return npos;
    found = m;
  }
  return found;
}

CatNatTrans identity_between(const Functor& a, const Functor& b) {
  std::vector<std::size_t> comps(a.source().object_count());
  for (std::size_t x = 0; x < comps.size(); ++x) comps[x] = a.target().identity(a.object(x));
  return CatNatTrans(a, b, std::move(comps));
}

void check_morphism(const CTNetMorphism& m, const char* what) {
  if (auto r = validate_ctnet_morphism(m); !r.ok())
    throw ValidationError(std::string(what) + ": resulting morphism is invalid", std::move(r));
}

}  // namespace

ValidationReport validate_ctnet(const CTNet& net) {
  ValidationReport r;
  append_prefixed(r, validate_category(net.delta()), "delta: ");
  append_prefixed(r, validate_category(net.c_el()), "c_el: ");
  if (!same_category(net.h.target_ptr(), net.pi.source_ptr()))
    r.add("compose", {"h and pi do not meet in one category"});
  else
    append_prefixed(r, validate_category(net.c_t()), "c_t: ");
  append_prefixed(r, validate_functor(net.h), "h: ");
  append_prefixed(r, validate_functor(net.pi), "pi: ");
  return r;
}

CTNet ctnet_from_pknet(const PKNet& p) {
  if (auto rep = validate_pknet(p); !rep.ok())
    throw ValidationError("not a PK-net", std::move(rep));
  const auto el_r = elements_of_set_functor(p.r);
  const auto el_s = elements_of_set_functor(p.s);
  auto hf = induced_elements_functor(p.r, p.s, p.f, p.phi, el_r, el_s);

  const auto& delta = p.r.source();
  bool singleton = true;
  for (std::size_t x = 0; x < delta.object_count(); ++x) singleton &= p.r.set(x).size() == 1;
  if (!singleton) return CTNet{std::move(hf), el_s.proj};

  // ∫R is a copy of delta: (X, x) <-> X.
  std::vector<std::size_t> om(delta.object_count()), mm(delta.morphism_count());
  for (std::size_t x = 0; x < om.size(); ++x) om[x] = el_r.object_offset[x];
  for (std::size_t f = 0; f < mm.size(); ++f) mm[f] = el_r.morphism_offset[f];
  Functor iso(p.r.source_ptr(), el_r.cat, std::move(om), std::move(mm));
  return CTNet{compose_functors(hf, iso), el_s.proj};
}

ValidationReport validate_ctnet_morphism(const CTNetMorphism& m) {
  ValidationReport r;
  const auto& s = m.source;
  const auto& t = m.target;
  auto typed = [&](const Functor& f, const CategoryPtr& from, const CategoryPtr& to,
                   const char* name) {
    if (!same_category(f.source_ptr(), from) || !same_category(f.target_ptr(), to))
      r.add("typing", {name});
  };
  typed(m.i, s.h.source_ptr(), t.h.source_ptr(), "i");
  typed(m.n, s.pi.target_ptr(), t.pi.target_ptr(), "n");
  typed(m.j, s.h.target_ptr(), t.h.target_ptr(), "j");
  if (!r.ok()) return r;

  append_prefixed(r, validate_functor(m.i), "i: ");
  append_prefixed(r, validate_functor(m.n), "n: ");
  append_prefixed(r, validate_functor(m.j), "j: ");

  const auto& c_el = s.c_el();
  for (std::size_t x = 0; x < c_el.object_count(); ++x)
    if (t.pi.object(m.j.object(x)) != m.n.object(s.pi.object(x)))
      r.add("right square", {c_el.object(x)});
  for (std::size_t f = 0; f < c_el.morphism_count(); ++f)
    if (t.pi.morphism(m.j.morphism(f)) != m.n.morphism(s.pi.morphism(f)))
      r.add("right square", {c_el.morphism(f).id});

  if (!(m.nu.source() == compose_functors(m.j, s.h)) ||
      !(m.nu.target() == compose_functors(t.h, m.i))) {
    r.add("nu: not a transformation j∘h => h'∘i", {});
    return r;
  }
  append_prefixed(r, validate_natural(m.nu), "nu: ");
  return r;
}

CTNetMorphism identity_morphism(const CTNet& net) {
  return CTNetMorphism{net,
                       net,
                       Functor::identity(net.h.source_ptr()),
                       Functor::identity(net.pi.target_ptr()),
                       Functor::identity(net.h.target_ptr()),
                       CatNatTrans::identity(net.h)};
}

CTNetMorphism compose_ctnet_morphisms(const CTNetMorphism& m2, const CTNetMorphism& m1) {
  if (!(m1.target == m2.source))
    throw Error("compose morphisms: the first target is not the second source");
  // ν = (ν2 I1)·(J2 ν1) : J2 J1 h => J2 h' I1 => h'' I2 I1
  auto nu = vertical_compose(whisker_right(m2.nu, m1.i), whisker_left(m2.j, m1.nu));
  return CTNetMorphism{m1.source,
                       m2.target,
                       compose_functors(m2.i, m1.i),
                       compose_functors(m2.n, m1.n),
                       compose_functors(m2.j, m1.j),
                       std::move(nu)};
}

NetTransform apply_complete_homography(const CTNet& net, const CompleteHomography& ch) {
  const auto& s = ch.nu_tilde.source();
  if (!same_category(ch.n.source_ptr(), s.source_ptr()) ||
      !same_category(ch.n.target_ptr(), ch.s_prime.source_ptr()))
    throw Error("complete homography: N does not go from S's category to S''s");
  if (!(ch.nu_tilde.target() == precompose(ch.s_prime, ch.n)))
    throw Error("complete homography: nu_tilde is not a transformation S => S'N");
  if (auto rep = validate_set_natural(ch.nu_tilde); !rep.ok())
    throw ValidationError("complete homography: nu_tilde is not natural", std::move(rep));

  const auto el_s = elements_of_set_functor(s);
  if (!same_category(el_s.cat, net.h.target_ptr()) || !(el_s.proj == net.pi))
    throw Error("complete homography: the net is not built on the category of elements of S");
  const auto el_sp = elements_of_set_functor(ch.s_prime);

  auto j0 = induced_elements_functor(s, ch.s_prime, ch.n, ch.nu_tilde, el_s, el_sp);
  Functor j(net.h.target_ptr(), el_sp.cat, j0.object_map(), j0.morphism_map());
  Functor n(net.pi.target_ptr(), el_sp.proj.target_ptr(), ch.n.object_map(),
            ch.n.morphism_map());

  CTNet out{compose_functors(j, net.h), el_sp.proj};
  auto id_delta = Functor::identity(net.h.source_ptr());
  auto nu = identity_between(compose_functors(j, net.h), compose_functors(out.h, id_delta));
  CTNetMorphism m{net, out, std::move(id_delta), std::move(n), std::move(j), std::move(nu)};
  check_morphism(m, "complete homography");
  return {std::move(out), std::move(m)};
}

NetTransform apply_local_homography(const CTNet& net, const CatNatTrans& nu_hat) {
  if (!(nu_hat.source() == net.h))
    throw Error("local homography: the transformation does not start at h");
  if (auto rep = validate_natural(nu_hat); !rep.ok())
    throw ValidationError("local homography: components are not natural", std::move(rep));
  CTNet out{nu_hat.target(), net.pi};
  auto id_delta = Functor::identity(net.h.source_ptr());
  auto id_el = Functor::identity(net.h.target_ptr());
  CatNatTrans nu(compose_functors(id_el, net.h), compose_functors(out.h, id_delta),
                 nu_hat.components());
  CTNetMorphism m{net, out, std::move(id_delta), Functor::identity(net.pi.target_ptr()),
                  std::move(id_el), std::move(nu)};
  check_morphism(m, "local homography");
  return {std::move(out), std::move(m)};
}

NetTransform local_homography_by_labels(const CTNet& net, const Functor& f_prime,
                                        const CatNatTrans& nu_hat) {
  const auto f = compose_functors(net.pi, net.h);
  if (!(nu_hat.source() == f) || !(nu_hat.target() == f_prime))
    throw Error("local homography: components do not go from the current labels to the new ones");
  if (auto rep = validate_natural(nu_hat); !rep.ok())
    throw ValidationError("local homography: components are not natural", std::move(rep));

  const auto& delta = net.delta();
  const auto& c_t = net.c_t();
  std::vector<std::size_t> comps(delta.object_count()), om(delta.object_count()),
      mm(delta.morphism_count());
  for (std::size_t x = 0; x < comps.size(); ++x) {
    const auto m = lift(net.pi, net.h.object(x), nu_hat.component(x));
    if (m == npos)
      throw Error("local homography: no unique lift of '" + c_t.morphism(nu_hat.component(x)).id +
                  "' at node '" + delta.object(x) + "'");
    comps[x] = m;
    om[x] = net.c_el().morphism(m).cod;
  }
  ValidationReport bad;
  for (std::size_t a = 0; a < mm.size(); ++a) {
    const auto& d = delta.morphism(a);
    const auto m = lift(net.pi, om[d.dom], f_prime.morphism(a));
    if (m == npos || net.c_el().morphism(m).cod != om[d.cod]) {
      bad.add("lift", {d.id, c_t.morphism(f_prime.morphism(a)).id});
      continue;
    }
    mm[a] = m;
  }
  if (!bad.ok())
    throw ValidationError("local homography: new labels do not lift to the elements", std::move(bad));
  Functor h_prime(net.h.source_ptr(), net.h.target_ptr(), std::move(om), std::move(mm));
  return apply_local_homography(net, CatNatTrans(net.h, std::move(h_prime), std::move(comps)));
}

// --- T/I -------------------------------------------------------------------

std::vector<int> ti_homography_choices(int j) {
  std::vector<int> out;
  for (int m = 0; m < 12; ++m)
    if (music::mod12(2 * m - j) == 0) out.push_back(m);
  return out;
}

CompleteHomography ti_complete_homography(int u, int j, int m) {
  if (music::mod12(u) % 2 == 0 || music::mod12(u) % 3 == 0)
    throw Error("T/I automorphism: u = " + std::to_string(u) + " is not a unit mod 12");
  const auto choices = ti_homography_choices(j);
  if (std::find(choices.begin(), choices.end(), music::mod12(m)) == choices.end()) {
    std::string list;
    for (auto c : choices) list += (list.empty() ? "" : ", ") + std::to_string(c);
    throw Error("complete homography <" + std::to_string(u) + "," + std::to_string(j) +
                "> needs 2m = " + std::to_string(music::mod12(j)) +
                " (mod 12); valid m: " + (list.empty() ? "none" : list));
  }
  auto ti = music::builtin_ti_group();
  auto n = music::ti_automorphism(ti.category, u, j);
  std::vector<std::size_t> comp(12);
  for (int x = 0; x < 12; ++x) comp[x] = static_cast<std::size_t>(music::mod12(u * x + m));
  SetNatTrans nu(ti.action, precompose(ti.action, n), {std::move(comp)});
  return CompleteHomography{std::move(n), ti.action, std::move(nu)};
}

std::string to_string(IsographyKind k) {
  switch (k) {
    case IsographyKind::strong: return "strong";
    case IsographyKind::positive: return "positive";
    case IsographyKind::negative: return "negative";
    case IsographyKind::none: return "none";
  }
  return {};
}

IsographyVerdict check_label_isography(const std::vector<music::TiElement>& a,
                                       const std::vector<music::TiElement>& b) {
  using music::mod12;
  IsographyVerdict v;
  if (a.size() != b.size()) {
    v.reason = "different numbers of arrows";
    return v;
  }
  if (a == b) {
    v.kind = IsographyKind::strong;
    return v;
  }
  // t_ok accepts a pair of T labels; i_shift gives the j forced by a pair of
  // I labels. The common j, or nullopt on a mismatch.
  auto solve = [&](auto&& t_ok, auto&& i_shift) -> std::optional<int> {
    std::optional<int> j;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k].inversion != b[k].inversion) return std::nullopt;
      if (!a[k].inversion) {
        if (!t_ok(a[k].n, b[k].n)) return std::nullopt;
        continue;
      }
      const int jk = i_shift(a[k].n, b[k].n);
      if (j && *j != jk) return std::nullopt;
      j = jk;
    }
    return j.value_or(0);
  };
  if (auto j = solve([](int x, int y) { return x == y; },
                     [&](int x, int y) { return mod12(y - x); })) {
    v.kind = IsographyKind::positive;
    v.j = *j;
    return v;
  }
  if (auto j = solve([&](int x, int y) { return mod12(-x) == y; },
                     [&](int x, int y) { return mod12(x + y); })) {
    v.kind = IsographyKind::negative;
    v.j = *j;
    return v;
  }
  v.reason = "labels are related by no <T_j> or <I_j>";
  return v;
}

namespace {

std::vector<music::TiElement> labels_of(const CTNet& net, const Functor& skeleton) {
  // Labels of net read through skeleton: the k-th entry labels skeleton(k).
  std::vector<music::TiElement> out;
  for (std::size_t f = 0; f < skeleton.source().morphism_count(); ++f)
    out.push_back(*music::TiElement::parse(net.arrow_label(skeleton.morphism(f))));
  return out;
}

int rank(const IsographyVerdict& v) {
  switch (v.kind) {
    case IsographyKind::strong: return 0;
    case IsographyKind::positive: return 1 + v.j;
    case IsographyKind::negative: return 100 + v.j;
    case IsographyKind::none: return 1000;
  }
  return 1000;
}

}  // namespace

IsographyVerdict check_isography(const CTNet& a, const CTNet& b, bool search) {
  const auto ti = music::builtin_ti_group();
  if (!(a.c_t() == *ti.category) || !(b.c_t() == *ti.category))
    throw Error("isography: both nets must be labelled in the T/I group");

  const auto& da = a.delta();
  const auto& db = b.delta();
  IsographyVerdict none;
  none.reason = "the skeletons are not isomorphic in declared order";
  if (da.object_count() != db.object_count() || da.morphism_count() != db.morphism_count())
    return none;

  const auto self_labels = labels_of(a, Functor::identity(a.h.source_ptr()));
  auto verdict_for = [&](const Functor& iso) {
    auto v = check_label_isography(self_labels, labels_of(b, iso));
    v.object_map = iso.object_map();
    return v;
  };

  if (!search) {
    Functor iso(a.h.source_ptr(), b.h.source_ptr(), iota(da.object_count()),
                iota(da.morphism_count()));
    for (std::size_t f = 0; f < da.morphism_count(); ++f)
      if (da.is_identity(f) != db.is_identity(f)) return none;
    if (!validate_functor(iso).ok()) return none;
    return verdict_for(iso);
  }

  if (da.object_count() > 8) throw Error("isography: skeleton search is limited to 8 nodes");
  IsographyVerdict best;
  best.reason = "no skeleton isomorphism relates the labels";
  bool any_iso = false;
  std::vector<std::size_t> om(da.object_count()), mm(da.morphism_count());
  std::vector<bool> obj_used(db.object_count()), mor_used(db.morphism_count());

  std::function<void(std::size_t)> assign_morphism = [&](std::size_t f) {
    if (f == da.morphism_count()) {
      Functor iso(a.h.source_ptr(), b.h.source_ptr(), om, mm);
      if (!validate_functor(iso).ok()) return;
      any_iso = true;
      auto v = verdict_for(iso);
      if (rank(v) < rank(best)) best = std::move(v);
      return;
    }
    const auto& m = da.morphism(f);
    for (std::size_t g = 0; g < db.morphism_count(); ++g) {
      const auto& n = db.morphism(g);
      if (mor_used[g] || n.dom != om[m.dom] || n.cod != om[m.cod] ||
          db.is_identity(g) != da.is_identity(f))
        continue;
      mor_used[g] = true;
      mm[f] = g;
      assign_morphism(f + 1);
      mor_used[g] = false;
    }
  };
  std::function<void(std::size_t)> assign_object = [&](std::size_t x) {
    if (x == da.object_count()) return assign_morphism(0);
    for (std::size_t y = 0; y < db.object_count(); ++y) {
      if (obj_used[y] || da.out(x).size() != db.out(y).size()) continue;
      obj_used[y] = true;
      om[x] = y;
      assign_object(x + 1);
      obj_used[y] = false;
    }
  };
  assign_object(0);
  if (!any_iso) best.reason = "the skeletons are not isomorphic";
  return best;
}

}  // namespace catnet
