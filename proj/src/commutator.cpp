#include "ualg/commutator.hpp"

#include <algorithm>

#include "ualg/errors.hpp"
#include "ualg/kernels.hpp"

namespace ualg {

bool term_condition_holds(const MatrixSet& m, const Congruence& delta) {
    for (const auto& quad : m.members) {
        if (delta.related(quad[0], quad[1]) != delta.related(quad[2], quad[3])) return false;
    }
    return true;
}

bool term_condition_holds(const FiniteAlgebra& alg, const Congruence& alpha,
                          const Congruence& beta, const Congruence& delta) {
    return term_condition_holds(matrix_algebra(alg, alpha, beta), delta);
}

Congruence commutator(const FiniteAlgebra& alg, const Congruence& alpha, const Congruence& beta) {
    MatrixSet m = matrix_algebra(alg, alpha, beta);
    Congruence delta = Congruence::identity(alg.size());
    // The condition is an iff, so a violation forces both pairs together.
    // The matrix set is closed under swapping its row pair with its column
    // pair, which makes this the same closure as the one-directional rule.
    while (true) {
        std::vector<ElementPair> forced;
        for (const auto& quad : m.members) {
            bool top = delta.related(quad[0], quad[1]);
            bool bottom = delta.related(quad[2], quad[3]);
            if (top != bottom) {
                forced.emplace_back(quad[0], quad[1]);
                forced.emplace_back(quad[2], quad[3]);
            }
        }
        if (forced.empty()) break;
        delta = cg_extend(alg, delta, forced);
    }
    return delta;
}

std::vector<Congruence> commutator_chain(const FiniteAlgebra& alg, const Congruence& alpha,
                                         const Congruence& beta) {
    std::vector<Congruence> chain;
    chain.push_back(commutator(alg, alpha, beta));
    while (true) {
        Congruence next = commutator(alg, chain.back(), chain.back());
        if (next == chain.back()) break;
        chain.push_back(std::move(next));
    }
    return chain;
}

Congruence iterated_commutator(const FiniteAlgebra& alg, const Congruence& alpha,
                               const Congruence& beta, int n) {
    if (n < 1) throw input_error("iterated commutator needs n >= 1");
    std::vector<Congruence> chain = commutator_chain(alg, alpha, beta);
    std::size_t idx = std::min<std::size_t>(static_cast<std::size_t>(n) - 1, chain.size() - 1);
    return chain[idx];
}

CommutatorTable commutator_table(const FiniteAlgebra& alg, const ConLattice& lat, Exec exec) {
    CommutatorTable table;
    table.size = lat.size();
    table.entry = exec_is_parallel(exec) ? commutator_grid_parallel(alg, lat)
                                         : commutator_grid_serial(alg, lat);
    return table;
}

HypothesisFlags hypothesis_flags(const ConLattice& lat, const CommutatorTable& table) {
    const int m = lat.size();
    HypothesisFlags flags;
    flags.commutative = true;
    flags.join_distributive = true;
    flags.meets_intersection = true;
    flags.top_neutral = true;
    flags.top_compact = true; // nabla is compact in any finite algebra

    for (int i = 0; i < m && flags.commutative; ++i)
        for (int j = 0; j < m; ++j)
            if (table.at(i, j) != table.at(j, i)) {
                flags.commutative = false;
                break;
            }

    for (int i = 0; i < m && flags.meets_intersection; ++i)
        for (int j = 0; j < m; ++j)
            if (table.at(i, j) != lat.meet(i, j)) {
                flags.meets_intersection = false;
                break;
            }

    for (int i = 0; i < m; ++i)
        if (table.at(i, lat.nabla) != i) {
            flags.top_neutral = false;
            break;
        }

    flags.top_idempotent = table.at(lat.nabla, lat.nabla) == lat.nabla;

    // Binary joins suffice: finite joins follow by induction, and every join
    // in a finite lattice is finite.
    for (int i = 0; i < m && flags.join_distributive; ++i)
        for (int j = 0; j < m && flags.join_distributive; ++j)
            for (int k = 0; k < m; ++k) {
                int jk = lat.join(j, k);
                if (table.at(i, jk) != lat.join(table.at(i, j), table.at(i, k)) ||
                    table.at(jk, i) != lat.join(table.at(j, i), table.at(k, i))) {
                    flags.join_distributive = false;
                    break;
                }
            }
    return flags;
}

int residuum_index(const ConLattice& lat, const CommutatorTable& table, int beta, int gamma) {
    Congruence acc = lat.members[lat.delta];
    for (int p : lat.principal)
        if (lat.leq(table.at(p, beta), gamma)) acc = pjoin(acc, lat.members[p]);
    int result = lat.index_of(acc);

    // Postcondition: the join must itself qualify and dominate every
    // qualifying congruence; otherwise the maximum is not attained here.
    if (!lat.leq(table.at(result, beta), gamma))
        throw hypothesis_violation("residuum join does not satisfy the commutator bound; "
                                   "commutativity/join-distributivity fail on this algebra");
    for (int a = 0; a < lat.size(); ++a)
        if (lat.leq(table.at(a, beta), gamma) && !lat.leq(a, result))
            throw hypothesis_violation("residuum maximum not attained; "
                                       "commutativity/join-distributivity fail on this algebra");
    return result;
}

Congruence residuum(const FiniteAlgebra& alg, const ConLattice& lat, const CommutatorTable& table,
                    const Congruence& beta, const Congruence& gamma) {
    (void)alg;
    int b = lat.index_of(beta), g = lat.index_of(gamma);
    if (b < 0 || g < 0) throw input_error("residuum arguments are not congruences of the algebra");
    return lat.members[residuum_index(lat, table, b, g)];
}

int perp_index(const ConLattice& lat, const CommutatorTable& table, int beta) {
    return residuum_index(lat, table, beta, lat.delta);
}

Congruence perp(const FiniteAlgebra& alg, const ConLattice& lat, const CommutatorTable& table,
                const Congruence& beta) {
    return residuum(alg, lat, table, beta, lat.members[lat.delta]);
}

std::vector<int> perp_all(const ConLattice& lat, const CommutatorTable& table) {
    std::vector<int> out(lat.size());
    for (int i = 0; i < lat.size(); ++i) out[i] = perp_index(lat, table, i);
    return out;
}

Congruence perp_set(const FiniteAlgebra& alg, const ConLattice& lat, const CommutatorTable& table,
                    std::span<const ElementPair> x) {
    return perp(alg, lat, table, cg(alg, x));
}

std::vector<int> annihilator(const ConLattice& lat, const CommutatorTable& table, int beta) {
    std::vector<int> out;
    for (int a = 0; a < lat.size(); ++a)
        if (table.at(a, beta) == lat.delta) out.push_back(a);
    return out;
}

} // namespace ualg
