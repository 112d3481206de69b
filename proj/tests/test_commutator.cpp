#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ualg/context.hpp"
#include "ualg/errors.hpp"
#include "ualg/fixtures.hpp"

#include "gen.hpp"

using namespace ualg;

namespace {

Congruence z6_theta2() {
    return cg(fixtures::zn_ring(6), std::vector<ElementPair>{{0, 2}});
}
Congruence z6_theta3() {
    return cg(fixtures::zn_ring(6), std::vector<ElementPair>{{0, 3}});
}

/// Least witness of the term condition, scanned over the whole lattice.
Congruence commutator_by_definition(const AlgebraContext& cx, const Congruence& alpha,
                                    const Congruence& beta) {
    MatrixSet m = matrix_algebra(cx.alg, alpha, beta);
    Congruence acc = Congruence::full(cx.alg.size());
    for (const Congruence& mu : cx.lat.members)
        if (term_condition_holds(m, mu)) acc = pmeet(acc, mu);
    return acc;
}

} // namespace

TEST_CASE("term condition examples") {
    FiniteAlgebra z6 = fixtures::zn_ring(6);
    Congruence delta6 = Congruence::identity(6);
    CHECK(term_condition_holds(z6, delta6, z6_theta3(), delta6)); // alpha = delta degenerates
    CHECK(term_condition_holds(z6, z6_theta2(), z6_theta3(), delta6));

    FiniteAlgebra z4 = fixtures::zn_ring(4);
    CHECK(!term_condition_holds(z4, Congruence::full(4), Congruence::full(4),
                                Congruence::identity(4)));
}

TEST_CASE("commutator fixpoint on the worked examples") {
    FiniteAlgebra z6 = fixtures::zn_ring(6);
    CHECK(commutator(z6, z6_theta2(), z6_theta3()) == Congruence::identity(6));
    CHECK(commutator(z6, Congruence::identity(6), z6_theta3()) == Congruence::identity(6));

    FiniteAlgebra z4g = fixtures::zn_group(4);
    CHECK(commutator(z4g, Congruence::full(4), Congruence::full(4)) == Congruence::identity(4));

    // congruence-distributive case: commutator is the intersection
    FiniteAlgebra b4 = fixtures::b4_lattice();
    Congruence ta = cg(b4, std::vector<ElementPair>{{0, 1}});
    Congruence tb = cg(b4, std::vector<ElementPair>{{0, 2}});
    CHECK(commutator(b4, ta, tb) == pmeet(ta, tb));
}

TEST_CASE("commutator equals the definitional least witness on every fixture pair") {
    for (FiniteAlgebra alg : {fixtures::zn_ring(6), fixtures::zn_ring(4), fixtures::s3_group(),
                              fixtures::n5_lattice()}) {
        AlgebraContext cx = make_algebra_context(alg);
        for (const Congruence& a : cx.lat.members)
            for (const Congruence& b : cx.lat.members)
                CHECK(commutator(cx.alg, a, b) == commutator_by_definition(cx, a, b));
    }
}

TEST_CASE("commutator is below the meet and monotone") {
    Rng rng(5);
    for (int trial = 0; trial < 15; ++trial) {
        FiniteAlgebra alg = gen::random_algebra(rng, 4);
        AlgebraContext cx = make_algebra_context(alg);
        for (int i = 0; i < cx.lat.size(); ++i)
            for (int j = 0; j < cx.lat.size(); ++j) {
                CHECK(cx.lat.leq(cx.comm.at(i, j), cx.lat.meet(i, j)));
                for (int k = 0; k < cx.lat.size(); ++k) {
                    if (cx.lat.leq(i, k)) CHECK(cx.lat.leq(cx.comm.at(i, j), cx.comm.at(k, j)));
                    if (cx.lat.leq(j, k)) CHECK(cx.lat.leq(cx.comm.at(i, j), cx.comm.at(i, k)));
                }
            }
    }
}

TEST_CASE("iterated commutator chains") {
    FiniteAlgebra z4 = fixtures::zn_ring(4);
    Congruence theta2 = cg(z4, std::vector<ElementPair>{{0, 2}});
    CHECK(iterated_commutator(z4, theta2, theta2, 1) == Congruence::identity(4));
    CHECK(iterated_commutator(z4, theta2, theta2, 2) == Congruence::identity(4));

    FiniteAlgebra z6 = fixtures::zn_ring(6);
    for (int n = 1; n <= 4; ++n)
        CHECK(iterated_commutator(z6, Congruence::full(6), Congruence::full(6), n) ==
              Congruence::full(6));
    CHECK(iterated_commutator(z6, Congruence::identity(6), Congruence::identity(6), 3) ==
          Congruence::identity(6));
    CHECK_THROWS_AS(iterated_commutator(z6, Congruence::full(6), Congruence::full(6), 0),
                    input_error);

    // s3: [nabla,nabla] drops to the normal-subgroup congruence, then to delta
    FiniteAlgebra s3 = fixtures::s3_group();
    std::vector<Congruence> chain = commutator_chain(s3, Congruence::full(6), Congruence::full(6));
    CHECK(chain.size() == 2);
    CHECK(chain.back() == Congruence::identity(6));
}

TEST_CASE("residuum on z6") {
    AlgebraContext cx = make_algebra_context(fixtures::zn_ring(6));
    Congruence theta2 = z6_theta2(), theta3 = z6_theta3();
    CHECK(residuum(cx.alg, cx.lat, cx.comm, theta2, theta3) == theta3);
    CHECK(residuum(cx.alg, cx.lat, cx.comm, theta2, Congruence::full(6)) == Congruence::full(6));
    CHECK(residuum(cx.alg, cx.lat, cx.comm, theta2, Congruence::identity(6)) == theta3);
}

TEST_CASE("residuum equals the direct maximum scan") {
    for (FiniteAlgebra alg : {fixtures::zn_ring(6), fixtures::zn_ring(4), fixtures::s3_group(),
                              fixtures::n5_lattice(), fixtures::zn_group(4)}) {
        AlgebraContext cx = make_algebra_context(alg);
        for (int b = 0; b < cx.lat.size(); ++b)
            for (int g = 0; g < cx.lat.size(); ++g) {
                int best = -1;
                for (int a = 0; a < cx.lat.size(); ++a)
                    if (cx.lat.leq(cx.comm.at(a, b), g) && (best < 0 || cx.lat.leq(best, a)))
                        best = a;
                CHECK(residuum_index(cx.lat, cx.comm, b, g) == best);
            }
    }
}

TEST_CASE("perp on the fixtures") {
    AlgebraContext z6 = make_algebra_context(fixtures::zn_ring(6));
    CHECK(perp(z6.alg, z6.lat, z6.comm, Congruence::identity(6)) == Congruence::full(6));
    CHECK(perp(z6.alg, z6.lat, z6.comm, z6_theta2()) == z6_theta3());

    AlgebraContext z4 = make_algebra_context(fixtures::zn_ring(4));
    Congruence theta2 = cg(z4.alg, std::vector<ElementPair>{{0, 2}});
    CHECK(perp(z4.alg, z4.lat, z4.comm, theta2) == theta2);

    // perp of a pair set goes through the generated congruence
    std::vector<ElementPair> x{{0, 2}, {2, 4}};
    CHECK(perp_set(z6.alg, z6.lat, z6.comm, x) == z6_theta3());
}

TEST_CASE("annihilator sets") {
    AlgebraContext z6 = make_algebra_context(fixtures::zn_ring(6));
    int t2 = z6.lat.index_of(z6_theta2()), t3 = z6.lat.index_of(z6_theta3());
    std::vector<int> expected{std::min(z6.lat.delta, t3), std::max(z6.lat.delta, t3)};
    CHECK(annihilator(z6.lat, z6.comm, t2) == expected);

    std::vector<int> all(z6.lat.size());
    for (int i = 0; i < z6.lat.size(); ++i) all[i] = i;
    CHECK(annihilator(z6.lat, z6.comm, z6.lat.delta) == all);

    AlgebraContext z4 = make_algebra_context(fixtures::zn_ring(4));
    Congruence theta2 = cg(z4.alg, std::vector<ElementPair>{{0, 2}});
    int i2 = z4.lat.index_of(theta2);
    std::vector<int> expect4{std::min(z4.lat.delta, i2), std::max(z4.lat.delta, i2)};
    CHECK(annihilator(z4.lat, z4.comm, i2) == expect4); // z4 is not semiprime; raw set anyway
}

TEST_CASE("perp of a pair set matches the elementwise characterization") {
    Rng rng(83);
    for (int trial = 0; trial < 20; ++trial) {
        FiniteAlgebra alg = gen::random_algebra(rng, 4);
        AlgebraContext cx = make_algebra_context(alg);
        if (!cx.flags.commutative || !cx.flags.join_distributive) continue;
        std::vector<ElementPair> x;
        for (int i = 0; i < 2; ++i)
            x.emplace_back(static_cast<Element>(rng.below(alg.size())),
                           static_cast<Element>(rng.below(alg.size())));
        Congruence via_cg = perp_set(cx.alg, cx.lat, cx.comm, x);

        // (a,b) belongs iff every generator pair's principal congruence
        // centralizes the principal congruence of (a,b)
        std::vector<int> grid = pair_congruence_grid(cx.alg, cx.lat);
        for (Element a = 0; a < alg.size(); ++a)
            for (Element b = 0; b < alg.size(); ++b) {
                bool everywhere = true;
                for (auto [c, d] : x) {
                    int comm = cx.comm.at(grid[a * alg.size() + b], grid[c * alg.size() + d]);
                    if (comm != cx.lat.delta) everywhere = false;
                }
                CHECK(via_cg.related(a, b) == everywhere);
            }
    }
}

TEST_CASE("nested terms evaluate inside out") {
    FiniteAlgebra z6 = fixtures::zn_ring(6);
    const int add = z6.signature().index_of("add");
    const int mul = z6.signature().index_of("mul");
    // (x0 + x1) * x2
    Term t = Term::apply(mul, {Term::apply(add, {Term::variable(0), Term::variable(1)}),
                               Term::variable(2)});
    std::vector<Element> env{2, 3, 4};
    CHECK(eval_term(z6, t, env) == ((2 + 3) * 4) % 6);
}

TEST_CASE("annihilator of a semiprime algebra is the ideal below perp") {
    for (FiniteAlgebra alg : {fixtures::zn_ring(6), fixtures::b4_lattice(),
                              fixtures::n5_lattice()}) {
        AlgebraContext cx = make_algebra_context(alg);
        REQUIRE(cx.spec.semiprime);
        for (int b = 0; b < cx.lat.size(); ++b) {
            std::vector<int> ideal;
            for (int a = 0; a < cx.lat.size(); ++a)
                if (cx.lat.leq(a, cx.perps[b])) ideal.push_back(a);
            CHECK(annihilator(cx.lat, cx.comm, b) == ideal);
        }
    }
}

TEST_CASE("hypothesis flags on the fixtures") {
    AlgebraContext z6 = make_algebra_context(fixtures::zn_ring(6));
    CHECK(z6.flags.commutative);
    CHECK(z6.flags.join_distributive);
    CHECK(z6.flags.meets_intersection);
    CHECK(z6.flags.top_neutral);
    CHECK(z6.flags.top_compact);
    CHECK(z6.flags.top_idempotent);

    AlgebraContext z4g = make_algebra_context(fixtures::zn_group(4));
    CHECK(!z4g.flags.top_idempotent); // [nabla,nabla] collapses in an abelian group
    CHECK(!z4g.flags.top_neutral);
    CHECK(z4g.flags.commutative);

    AlgebraContext one = make_algebra_context(fixtures::one_element());
    CHECK(one.flags.commutative);
    CHECK(one.flags.join_distributive);
    CHECK(one.flags.meets_intersection);
    CHECK(one.flags.top_neutral);
    CHECK(one.flags.top_idempotent);
}

TEST_CASE("a non-commutative commutator is detected") {
    // found by seeded search over binary tables
    FiniteAlgebra alg("noncomm", 3, Signature({{"f", 2}}), {{1, 1, 2, 0, 0, 2, 2, 2, 2}});
    AlgebraContext cx = make_algebra_context(alg);
    CHECK(!cx.flags.commutative);
}

TEST_CASE("adjunction holds whenever the flags do") {
    Rng rng(71);
    int flagged = 0;
    for (int trial = 0; trial < 30; ++trial) {
        FiniteAlgebra alg = gen::random_algebra(rng, 4);
        AlgebraContext cx = make_algebra_context(alg);
        if (!cx.flags.commutative || !cx.flags.join_distributive) continue;
        ++flagged;
        for (int a = 0; a < cx.lat.size(); ++a)
            for (int b = 0; b < cx.lat.size(); ++b)
                for (int g = 0; g < cx.lat.size(); ++g)
                    CHECK(cx.lat.leq(cx.comm.at(a, b), g) ==
                          cx.lat.leq(a, residuum_index(cx.lat, cx.comm, b, g)));
    }
    CHECK(flagged > 0);
}

TEST_CASE("residuum reports a hypothesis violation on an inconsistent table") {
    // v4 has a non-principal top, so a forged table can make a non-principal
    // congruence the only witness and the principal join miss the maximum.
    AlgebraContext v4 = make_algebra_context(fixtures::v4_group());
    REQUIRE(v4.lat.size() == 5);
    CHECK(!std::binary_search(v4.lat.principal.begin(), v4.lat.principal.end(), v4.lat.nabla));

    CommutatorTable forged = v4.comm;
    for (int j = 0; j < forged.size; ++j) {
        for (int i = 0; i < forged.size; ++i)
            forged.entry[static_cast<std::size_t>(i) * forged.size + j] =
                i == v4.lat.nabla ? v4.lat.delta : i;
    }
    // With [alpha,beta] = alpha except [nabla,beta] = delta, only nabla
    // satisfies the bound for gamma = delta, and it is not a principal join
    // of qualifying congruences.
    bool threw = false;
    for (int b = 0; b < forged.size && !threw; ++b)
        for (int g = 0; g < forged.size; ++g) {
            try {
                residuum_index(v4.lat, forged, b, g);
            } catch (const hypothesis_violation&) {
                threw = true;
                break;
            }
        }
    CHECK(threw);
}
