#include "ualg/kernels.hpp"

#include "ualg/commutator.hpp"

namespace ualg {

bool exec_is_parallel(Exec exec) {
    switch (exec) {
        case Exec::Serial: return false;
        case Exec::Parallel: return true;
        case Exec::Auto:
#ifdef _OPENMP
            return true;
#else
            return false;
#endif
    }
    return false;
}

// --- principal congruence grid ---------------------------------------------
// One cg call per unordered pair; the calls are independent, so the parallel
// kernel slices the flattened pair list across threads and writes each result
// into its own slot. The merged output is identical to the serial one.

std::vector<Congruence> principal_congruence_grid_serial(const FiniteAlgebra& alg) {
    const int n = alg.size();
    std::vector<Congruence> out;
    out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (Element a = 0; a < n; ++a)
        for (Element b = a + 1; b < n; ++b) {
            ElementPair p{a, b};
            out.push_back(cg(alg, {&p, 1}));
        }
    return out;
}

std::vector<Congruence> principal_congruence_grid_parallel(const FiniteAlgebra& alg) {
    const int n = alg.size();
    std::vector<ElementPair> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (Element a = 0; a < n; ++a)
        for (Element b = a + 1; b < n; ++b) pairs.emplace_back(a, b);

    std::vector<Congruence> out(pairs.size());
    const std::int64_t count = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) out[i] = cg(alg, {&pairs[i], 1});
    return out;
}

// --- commutator grid --------------------------------------------------------

std::vector<int> commutator_grid_serial(const FiniteAlgebra& alg, const ConLattice& lat) {
    const std::size_t m = lat.members.size();
    std::vector<int> grid(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            grid[i * m + j] = lat.index_of(commutator(alg, lat.members[i], lat.members[j]));
    return grid;
}

std::vector<int> commutator_grid_parallel(const FiniteAlgebra& alg, const ConLattice& lat) {
    const std::size_t m = lat.members.size();
    std::vector<int> grid(m * m);
    const std::int64_t total = static_cast<std::int64_t>(m * m);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t cell = 0; cell < total; ++cell) {
        std::size_t i = static_cast<std::size_t>(cell) / m, j = static_cast<std::size_t>(cell) % m;
        grid[cell] = lat.index_of(commutator(alg, lat.members[i], lat.members[j]));
    }
    return grid;
}

} // namespace ualg
