#ifndef UALG_CONGRUENCES_HPP
#define UALG_CONGRUENCES_HPP

#include <cstddef>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/partition.hpp"

namespace ualg {

/// Execution policy for the data-parallel kernels. Auto picks Parallel when
/// the build has OpenMP, Serial otherwise. Results are identical either way.
enum class Exec { Auto, Serial, Parallel };

using ElementPair = std::pair<Element, Element>;

/// Congruence generated by a pair set: union-find worklist that merges the
/// given pairs and propagates single-coordinate substitution instances
/// f(..a..) ~ f(..b..) for every merged pair until stable. Single-coordinate
/// substitution suffices because the result is transitively closed.
Congruence cg(const FiniteAlgebra& alg, std::span<const ElementPair> pairs);

/// cg starting from an existing congruence plus extra pairs.
Congruence cg_extend(const FiniteAlgebra& alg, const Congruence& base,
                     std::span<const ElementPair> pairs);

/// Exhaustive single-substitution compatibility check.
bool is_congruence(const FiniteAlgebra& alg, const Congruence& part);

/// Enumeration cap, overridable via the CSPEC_MAX_CON environment variable.
std::size_t enumeration_cap();

/// Hash for canonical rep arrays.
struct CongruenceHash {
    std::size_t operator()(const Congruence& c) const noexcept;
};

/// The full congruence lattice: members sorted lexicographically by rep
/// array (a total canonical order), the principal members, and delta/nabla.
/// Closed under pairwise join and meet.
struct ConLattice {
    int universe = 0;
    std::vector<Congruence> members;
    std::vector<int> principal; // sorted indices; contains delta
    int delta = -1;
    int nabla = -1;

    int size() const { return static_cast<int>(members.size()); }
    const Congruence& at(int i) const { return members[i]; }

    int index_of(const Congruence& c) const; // -1 if absent
    bool leq(int i, int j) const;
    int join(int i, int j) const;
    int meet(int i, int j) const;

    std::unordered_map<Congruence, int, CongruenceHash> index;
    std::vector<int> join_tab, meet_tab; // filled when the lattice is small
};

/// {Cg(a,b) : a < b} with delta, deduplicated and sorted.
std::vector<Congruence> principal_congruences(const FiniteAlgebra& alg, Exec exec = Exec::Auto);

/// Join-closure of the principal congruences (every congruence of a finite
/// algebra is a join of principal ones). Throws enumeration_limit_error
/// instead of truncating when the cap is exceeded.
ConLattice con_lattice(const FiniteAlgebra& alg, Exec exec = Exec::Auto,
                       std::size_t cap = enumeration_cap());

/// Grid of Cg(a,b) lattice indices: entry a*n+b.
std::vector<int> pair_congruence_grid(const FiniteAlgebra& alg, const ConLattice& lat);

} // namespace ualg

#endif
