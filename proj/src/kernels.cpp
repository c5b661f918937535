#include "catnet/kernels.hpp"

namespace catnet::kernels {

namespace {

using Rows = std::vector<std::vector<Violation>>;

ValidationReport merge(Rows& rows) {
  ValidationReport r;
  for (auto& row : rows)
    for (auto& v : row) r.add(std::move(v));
  return r;
}

// Row kernels: all violations whose outermost morphism is f.

void associativity_row(const FiniteCategory& c, std::size_t f, std::vector<Violation>& out) {
  const auto& mors = c.morphisms();
  for (auto g : c.out(mors[f].cod)) {
    auto gf = c.compose(g, f);
    if (!gf) continue;
    for (auto h : c.out(mors[g].cod)) {
      auto hg = c.compose(h, g);
      if (!hg) continue;
      auto lhs = c.compose(*hg, f);
      auto rhs = c.compose(h, *gf);
      if (lhs && rhs && *lhs != *rhs)
        out.push_back({"associativity", {mors[h].id, mors[g].id, mors[f].id}});
    }
  }
}

void functor_row(const Functor& F, std::size_t f, std::vector<Violation>& out) {
  const auto& s = F.source();
  const auto& t = F.target();
  for (auto g : s.out(s.morphism(f).cod)) {
    auto gf = s.compose(g, f);
    if (!gf) continue;
    auto image = t.compose(F.morphism(g), F.morphism(f));
    if (!image || *image != F.morphism(*gf))
      out.push_back({"composition preservation", {s.morphism(g).id, s.morphism(f).id}});
  }
}

void set_functor_row(const SetValuedFunctor& S, std::size_t f, std::vector<Violation>& out) {
  const auto& c = S.source();
  const auto& mf = c.morphism(f);
  for (auto g : c.out(mf.cod)) {
    auto gf = c.compose(g, f);
    if (!gf) continue;
    const auto& map_gf = S.map(*gf);
    const auto& map_g = S.map(g);
    const auto& map_f = S.map(f);
    for (std::size_t i = 0; i < map_f.size(); ++i)
      if (map_gf[i] != map_g[map_f[i]]) {
        out.push_back({"composition preservation",
                       {c.morphism(g).id, mf.id, S.set(mf.dom)[i]}});
        break;
      }
  }
}

template <class Row>
ValidationReport run_parallel(std::size_t n, Row&& row) {
  Rows rows(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t f = 0; f < count; ++f) row(static_cast<std::size_t>(f), rows[f]);
  return merge(rows);
}

}  // namespace

ValidationReport associativity(const FiniteCategory& c) {
  return run_parallel(c.morphism_count(),
                      [&](std::size_t f, auto& out) { associativity_row(c, f, out); });
}

ValidationReport functor_composition(const Functor& F) {
  return run_parallel(F.source().morphism_count(),
                      [&](std::size_t f, auto& out) { functor_row(F, f, out); });
}

ValidationReport set_functor_composition(const SetValuedFunctor& S) {
  return run_parallel(S.source().morphism_count(),
                      [&](std::size_t f, auto& out) { set_functor_row(S, f, out); });
}

namespace serial {

// Naive loops over all morphism pairs/triples, no adjacency lists. Same
// iteration order as the indexed kernels because out-lists keep
// declaration order.

ValidationReport associativity(const FiniteCategory& c) {
  ValidationReport r;
  const auto& m = c.morphisms();
  for (std::size_t f = 0; f < m.size(); ++f)
    for (std::size_t g = 0; g < m.size(); ++g) {
      if (m[g].dom != m[f].cod) continue;
      auto gf = c.compose(g, f);
      if (!gf) continue;
      for (std::size_t h = 0; h < m.size(); ++h) {
        if (m[h].dom != m[g].cod) continue;
        auto hg = c.compose(h, g);
        if (!hg) continue;
        auto lhs = c.compose(*hg, f);
        auto rhs = c.compose(h, *gf);
        if (lhs && rhs && *lhs != *rhs) r.add("associativity", {m[h].id, m[g].id, m[f].id});
      }
    }
  return r;
}

ValidationReport functor_composition(const Functor& F) {
  ValidationReport r;
  const auto& s = F.source();
  const auto& t = F.target();
  const auto& m = s.morphisms();
  for (std::size_t f = 0; f < m.size(); ++f)
    for (std::size_t g = 0; g < m.size(); ++g) {
      if (m[g].dom != m[f].cod) continue;
      auto gf = s.compose(g, f);
      if (!gf) continue;
      auto image = t.compose(F.morphism(g), F.morphism(f));
      if (!image || *image != F.morphism(*gf))
        r.add("composition preservation", {m[g].id, m[f].id});
    }
  return r;
}

ValidationReport set_functor_composition(const SetValuedFunctor& S) {
  ValidationReport r;
  const auto& c = S.source();
  const auto& m = c.morphisms();
  for (std::size_t f = 0; f < m.size(); ++f)
    for (std::size_t g = 0; g < m.size(); ++g) {
      if (m[g].dom != m[f].cod) continue;
      auto gf = c.compose(g, f);
      if (!gf) continue;
      for (std::size_t i = 0; i < S.set(m[f].dom).size(); ++i)
        if (S.apply(*gf, i) != S.apply(g, S.apply(f, i))) {
          r.add("composition preservation", {m[g].id, m[f].id, S.set(m[f].dom)[i]});
          break;
        }
    }
  return r;
}

}  // namespace serial

}  // namespace catnet::kernels
