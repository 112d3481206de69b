#ifndef UALG_KERNELS_HPP
#define UALG_KERNELS_HPP

#include <vector>

#include "ualg/congruences.hpp"

namespace ualg {

/// Data-parallel kernels with serial reference implementations. The parallel
/// variants split independent cg / commutator computations across OpenMP
/// threads and merge deterministically, so both variants return identical
/// results; the serial ones are kept as the reference for tests and as the
/// fallback for builds without OpenMP.

bool exec_is_parallel(Exec exec);

std::vector<Congruence> principal_congruence_grid_serial(const FiniteAlgebra& alg);
std::vector<Congruence> principal_congruence_grid_parallel(const FiniteAlgebra& alg);

/// Commutator of every pair in the lattice, flattened row-major; entries are
/// lattice indices.
std::vector<int> commutator_grid_serial(const FiniteAlgebra& alg, const ConLattice& lat);
std::vector<int> commutator_grid_parallel(const FiniteAlgebra& alg, const ConLattice& lat);

} // namespace ualg

#endif
