#ifndef UALG_CLASSIFY_HPP
#define UALG_CLASSIFY_HPP

#include <vector>

#include "ualg/spectra.hpp"

namespace ualg {

/// Complemented members of the congruence lattice. complement[i] holds the
/// witness for members of the center (-1 elsewhere); when several
/// complements exist the least one is recorded and unique_complement is
/// cleared for that member.
struct BooleanCenter {
    std::vector<int> members;            // sorted lattice indices
    std::vector<int> complement;         // per lattice index
    std::vector<bool> unique_complement; // per lattice index
    bool contains(int i) const { return complement[i] >= 0; }
};

BooleanCenter boolean_center(const ConLattice& lat);

bool is_abelian(const ConLattice& lat, const CommutatorTable& table);

/// Every principal congruence has some iterated self-commutator inside the
/// Boolean center. The identity congruence is itself in the center, so
/// chains that collapse to it qualify.
bool is_hyperarchimedean(const FiniteAlgebra& alg, const ConLattice& lat,
                         const CommutatorTable& table, const BooleanCenter& center);

bool is_baer(const ConLattice& lat, std::span<const int> perps, const BooleanCenter& center);
bool is_strongly_baer(const ConLattice& lat, std::span<const int> perps,
                      const BooleanCenter& center);

struct ClassificationReport {
    bool abelian = false;
    bool semiprime = false;
    bool hyperarchimedean = false;
    bool baer = false;
    bool strongly_baer = false;
    std::vector<int> boolean_center_members;
    HypothesisFlags flags;

    // In a finite algebra every congruence is finitely generated, which
    // collapses several distinctions; stated explicitly in the report.
    bool compact_equals_all = true;       // K(A) = Con(A)
    bool principal_commutators = false;   // PCon closed under the commutator
    bool compact_commutators = true;      // K closed; trivial given the collapse

    // Implication checks recorded alongside the verdicts, under the flags
    // each link needs (the hyperarchimedean-to-Baer link also needs
    // semiprimeness).
    bool implications_checked = false;
    bool implications_hold = false;
};

ClassificationReport classification_report(const FiniteAlgebra& alg, const ConLattice& lat,
                                           const CommutatorTable& table);

} // namespace ualg

#endif
