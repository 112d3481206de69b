#ifndef UALG_SPECTRA_HPP
#define UALG_SPECTRA_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "ualg/commutator.hpp"

namespace ualg {

/// phi is prime when it is proper and [alpha,beta] <= phi forces alpha <= phi
/// or beta <= phi; quantifying over principal congruences suffices.
bool is_prime(const ConLattice& lat, const CommutatorTable& table, int phi);

struct SpectrumReport {
    std::vector<int> spec;        // all prime congruences, sorted lattice indices
    std::vector<int> min;         // inclusion-minimal primes
    std::vector<int> max;         // maximal proper congruences
    int radical_of_delta = -1;    // intersection of spec (empty intersection = nabla)
    bool semiprime = false;       // radical_of_delta == delta
};

SpectrumReport spectrum(const ConLattice& lat, const CommutatorTable& table);

/// V(theta): primes above theta, as positions into report.spec.
std::vector<int> vset(const ConLattice& lat, const SpectrumReport& report, int theta);
/// D(theta): complement of V in spec.
std::vector<int> dset(const ConLattice& lat, const SpectrumReport& report, int theta);

/// Intersection of V(theta); empty intersection is nabla.
int radical_index(const ConLattice& lat, const SpectrumReport& report, int theta);

/// Radical through iterated self-commutators of principal congruences:
/// the join of the principals whose chain eventually drops below theta.
/// Must agree with radical_index; disagreement (flags too weak for this
/// algebra) throws hypothesis_violation rather than returning silently.
int radical_via_commutators_index(const FiniteAlgebra& alg, const ConLattice& lat,
                                  const CommutatorTable& table, const SpectrumReport& report,
                                  int theta);

enum class SpectrumPoints { Spec, Min, Max };

/// Stone-style open-set family on the chosen point set: opens are the sets
/// D(theta) restricted to the points, with the pair sets D(a,b) as basis.
/// Requesting Max points while Max is not contained in Spec is an error.
struct Topology {
    std::vector<int> points;                      // lattice indices
    std::vector<std::vector<int>> opens;          // sorted positions into points, deduplicated
    std::vector<std::vector<int>> basis;          // one per (a,b), positions into points
    std::vector<ElementPair> basis_pairs;
};

Topology stone_topology(const FiniteAlgebra& alg, const ConLattice& lat,
                        const SpectrumReport& report, SpectrumPoints which);

bool topology_closed_family(const Topology& t);   // unions and intersections stay inside
bool topology_hausdorff(const Topology& t);       // separation by basis sets
bool topology_all_clopen(const Topology& t);

/// Pair masks: bit a*n+b set when (a,b) lies in the member congruence.
std::vector<std::vector<std::uint64_t>> pair_masks(const ConLattice& lat);

/// S is an m-system when the commutator of the principal congruences of any
/// two members meets S.
bool is_m_system(const FiniteAlgebra& alg, const ConLattice& lat, const CommutatorTable& table,
                 std::span<const ElementPair> s);

/// Maximal congruences containing alpha and disjoint from S (as pair sets).
/// Errors when alpha itself meets S (empty candidate set).
std::vector<int> maximal_disjoint_congruences(const ConLattice& lat,
                                              std::span<const ElementPair> s, int alpha);

/// Minimal elements of V(theta); their intersection equals the radical.
std::vector<int> min_over(const ConLattice& lat, const SpectrumReport& report, int theta);

/// The annihilator criterion for minimal primes: every alpha <= phi has
/// perp(alpha) not below phi. Coincides with Min membership exactly on
/// semiprime algebras; the raw value is returned regardless.
bool minimal_prime_check_perp(const ConLattice& lat, std::span<const int> perps, int phi);

/// Blocks of the lattice under equal radical.
std::vector<std::vector<int>> radical_equiv_classes(const ConLattice& lat,
                                                    const SpectrumReport& report);

} // namespace ualg

#endif
