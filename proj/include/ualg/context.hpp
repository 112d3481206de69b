#ifndef UALG_CONTEXT_HPP
#define UALG_CONTEXT_HPP

#include "ualg/spectra.hpp"

namespace ualg {

/// Everything derived from one algebra that the analyses read over and over:
/// built once, then shared read-only.
struct AlgebraContext {
    FiniteAlgebra alg;
    ConLattice lat;
    CommutatorTable comm;
    HypothesisFlags flags;
    SpectrumReport spec;
    std::vector<int> perps; // perp index per lattice member
};

AlgebraContext make_algebra_context(FiniteAlgebra alg, Exec exec = Exec::Auto,
                                    std::size_t cap = enumeration_cap());

} // namespace ualg

#endif
