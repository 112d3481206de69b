#ifndef UALG_FIXTURES_HPP
#define UALG_FIXTURES_HPP

#include "ualg/algebra.hpp"

namespace ualg::fixtures {

/// Ring of integers mod n: add(2), neg(1), zero(0), mul(2).
FiniteAlgebra zn_ring(int n);

/// Cyclic group of order n: op(2), inv(1), e(0).
FiniteAlgebra zn_group(int n);

/// Symmetric group on three letters (order 6), same signature as zn_group.
FiniteAlgebra s3_group();

/// Klein four-group as a direct product of two Z2 groups.
FiniteAlgebra v4_group();

/// Lattices: meet(2), join(2).
FiniteAlgebra chain_lattice(int n);
FiniteAlgebra b4_lattice();  // 2x2 Boolean lattice
FiniteAlgebra n5_lattice();  // pentagon
FiniteAlgebra m3_lattice();  // diamond with three atoms

/// One-element algebra with a single constant.
FiniteAlgebra one_element();

/// Z2 x Z2 ring as a direct product.
FiniteAlgebra z2z2_ring();

} // namespace ualg::fixtures

#endif
