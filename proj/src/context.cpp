#include "ualg/context.hpp"

namespace ualg {

AlgebraContext make_algebra_context(FiniteAlgebra alg, Exec exec, std::size_t cap) {
    AlgebraContext cx;
    cx.alg = std::move(alg);
    cx.lat = con_lattice(cx.alg, exec, cap);
    cx.comm = commutator_table(cx.alg, cx.lat, exec);
    cx.flags = hypothesis_flags(cx.lat, cx.comm);
    cx.spec = spectrum(cx.lat, cx.comm);
    cx.perps = perp_all(cx.lat, cx.comm);
    return cx;
}

} // namespace ualg
