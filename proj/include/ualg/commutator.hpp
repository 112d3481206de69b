#ifndef UALG_COMMUTATOR_HPP
#define UALG_COMMUTATOR_HPP

#include <span>
#include <vector>

#include "ualg/congruences.hpp"

namespace ualg {

/// The centralization condition: every quadruple (p,q,r,s) in the matrix
/// algebra of (alpha,beta) satisfies (p,q) in delta iff (r,s) in delta.
bool term_condition_holds(const MatrixSet& m, const Congruence& delta);
bool term_condition_holds(const FiniteAlgebra& alg, const Congruence& alpha,
                          const Congruence& beta, const Congruence& delta);

/// Least congruence delta satisfying the term condition for (alpha, beta).
/// Computed as a fixpoint: start from the identity, and while some quadruple
/// violates the iff-condition, extend delta by cg with both offending pairs.
Congruence commutator(const FiniteAlgebra& alg, const Congruence& alpha, const Congruence& beta);

/// Descending chain c1 = [a,b], c_{k+1} = [c_k, c_k], listed until it
/// repeats; the last entry is the stable value.
std::vector<Congruence> commutator_chain(const FiniteAlgebra& alg, const Congruence& alpha,
                                         const Congruence& beta);

/// n-th iterate (n >= 1); n past the stabilization index returns the stable
/// value.
Congruence iterated_commutator(const FiniteAlgebra& alg, const Congruence& alpha,
                               const Congruence& beta, int n);

/// Per-algebra surrogates for variety-level assumptions, each established by
/// exhaustive quantification over the enumerated lattice. Join distributivity
/// is checked over binary joins, which suffices for all finite joins.
struct HypothesisFlags {
    bool commutative = false;
    bool join_distributive = false;
    bool meets_intersection = false;
    bool top_neutral = false;     // [theta, nabla] = theta for every theta
    bool top_compact = true;      // always true for a finite algebra
    bool top_idempotent = false;  // [nabla, nabla] = nabla
};

struct CommutatorTable {
    int size = 0;
    std::vector<int> entry; // entry[i*size+j] = lattice index of [member i, member j]
    int at(int i, int j) const { return entry[static_cast<std::size_t>(i) * size + j]; }
};

CommutatorTable commutator_table(const FiniteAlgebra& alg, const ConLattice& lat,
                                 Exec exec = Exec::Auto);

HypothesisFlags hypothesis_flags(const ConLattice& lat, const CommutatorTable& table);

/// Residuum beta -> gamma: the largest alpha with [alpha, beta] <= gamma,
/// computed as the join of qualifying principal congruences. The result is
/// verified against the direct maximum; if the maximum is not attained (the
/// commutative / join-distributive flags fail), throws hypothesis_violation.
int residuum_index(const ConLattice& lat, const CommutatorTable& table, int beta, int gamma);
Congruence residuum(const FiniteAlgebra& alg, const ConLattice& lat, const CommutatorTable& table,
                    const Congruence& beta, const Congruence& gamma);

/// beta -> delta.
int perp_index(const ConLattice& lat, const CommutatorTable& table, int beta);
Congruence perp(const FiniteAlgebra& alg, const ConLattice& lat, const CommutatorTable& table,
                const Congruence& beta);

/// perp of every lattice member.
std::vector<int> perp_all(const ConLattice& lat, const CommutatorTable& table);

/// Annihilating congruence of a pair set: perp(cg(X)).
Congruence perp_set(const FiniteAlgebra& alg, const ConLattice& lat, const CommutatorTable& table,
                    std::span<const ElementPair> x);

/// {alpha : [alpha, beta] = delta}, as sorted lattice indices. When the
/// algebra is semiprime this is the principal ideal below perp(beta).
std::vector<int> annihilator(const ConLattice& lat, const CommutatorTable& table, int beta);

} // namespace ualg

#endif
