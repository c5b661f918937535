#pragma once

// Exhaustive law checks over composable pairs and triples. The default
// entry points split the outer loop across OpenMP threads and merge the
// per-row buffers in row order, so the report is identical to the serial
// reference in `kernels::serial`, which is kept for testing and benchmarks.

#include "catnet/concrete.hpp"
#include "catnet/fincat.hpp"
#include "catnet/report.hpp"

namespace catnet::kernels {

/// (h∘g)∘f = h∘(g∘f) over every composable triple whose composites exist.
ValidationReport associativity(const FiniteCategory& c);

/// F(g∘f) = F(g)∘F(f) over every composable pair.
ValidationReport functor_composition(const Functor& F);

/// S(g∘f) = S(g)∘S(f) pointwise over every composable pair.
ValidationReport set_functor_composition(const SetValuedFunctor& S);

namespace serial {
ValidationReport associativity(const FiniteCategory& c);
ValidationReport functor_composition(const Functor& F);
ValidationReport set_functor_composition(const SetValuedFunctor& S);
}  // namespace serial

}  // namespace catnet::kernels
