#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ualg/context.hpp"
#include "ualg/fixtures.hpp"
#include "ualg/kernels.hpp"

#include "gen.hpp"

using namespace ualg;

TEST_CASE("parallel principal grid matches the serial reference") {
    for (FiniteAlgebra alg : {fixtures::zn_ring(6), fixtures::s3_group(), fixtures::n5_lattice(),
                              fixtures::chain_lattice(5)}) {
        CHECK(principal_congruence_grid_parallel(alg) == principal_congruence_grid_serial(alg));
    }
    Rng rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        FiniteAlgebra alg = gen::random_algebra(rng, 6);
        CHECK(principal_congruence_grid_parallel(alg) == principal_congruence_grid_serial(alg));
    }
}

TEST_CASE("parallel commutator grid matches the serial reference") {
    for (FiniteAlgebra alg : {fixtures::zn_ring(6), fixtures::s3_group(), fixtures::n5_lattice()}) {
        ConLattice lat = con_lattice(alg, Exec::Serial);
        CHECK(commutator_grid_parallel(alg, lat) == commutator_grid_serial(alg, lat));
    }
    Rng rng(103);
    for (int trial = 0; trial < 10; ++trial) {
        FiniteAlgebra alg = gen::random_algebra(rng, 4);
        ConLattice lat = con_lattice(alg, Exec::Serial);
        CHECK(commutator_grid_parallel(alg, lat) == commutator_grid_serial(alg, lat));
    }
}

TEST_CASE("lattices built under either policy are identical") {
    for (FiniteAlgebra alg : {fixtures::zn_ring(6), fixtures::b4_lattice()}) {
        ConLattice serial = con_lattice(alg, Exec::Serial);
        ConLattice parallel = con_lattice(alg, Exec::Parallel);
        CHECK(serial.members == parallel.members);
        CHECK(serial.principal == parallel.principal);
        CHECK(serial.delta == parallel.delta);
        CHECK(serial.nabla == parallel.nabla);
        CommutatorTable ts = commutator_table(alg, serial, Exec::Serial);
        CommutatorTable tp = commutator_table(alg, parallel, Exec::Parallel);
        CHECK(ts.entry == tp.entry);
    }
}
