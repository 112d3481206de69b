#include "ualg/congruences.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

#include "ualg/errors.hpp"
#include "ualg/kernels.hpp"

namespace ualg {

namespace {

/// Core worklist: merge the queued pairs and, for every pair that actually
/// joins two classes, queue each single-coordinate substitution instance.
/// Substituting only the merged pair is enough: any two related elements are
/// linked by a chain of processed merges, and applying the operation along
/// that chain stays inside the relation.
Congruence cg_worklist(const FiniteAlgebra& alg, UnionFind uf,
                       std::deque<ElementPair> work) {
    const int n = alg.size();
    const Signature& sig = alg.signature();

    struct OpInfo {
        const Element* table;
        int arity;
        std::vector<std::size_t> stride; // stride[i] for argument i
    };
    std::vector<OpInfo> ops;
    for (int op = 0; op < sig.count(); ++op) {
        const int k = sig.arity(op);
        if (k == 0) continue;
        OpInfo info{alg.table(op).data(), k, std::vector<std::size_t>(k)};
        std::size_t s = 1;
        for (int i = k - 1; i >= 0; --i) {
            info.stride[i] = s;
            s *= static_cast<std::size_t>(n);
        }
        ops.push_back(std::move(info));
    }

    while (!work.empty()) {
        auto [a, b] = work.front();
        work.pop_front();
        if (!uf.unite(a, b)) continue;
        for (const OpInfo& info : ops) {
            const int k = info.arity;
            for (int slot = 0; slot < k; ++slot) {
                // Enumerate the other k-1 arguments; the slot argument is a or b.
                std::vector<int> other(k - 1, 0);
                while (true) {
                    std::size_t base = 0;
                    int oi = 0;
                    for (int i = 0; i < k; ++i) {
                        if (i == slot) continue;
                        base += static_cast<std::size_t>(other[oi++]) * info.stride[i];
                    }
                    Element fa = info.table[base + static_cast<std::size_t>(a) * info.stride[slot]];
                    Element fb = info.table[base + static_cast<std::size_t>(b) * info.stride[slot]];
                    if (uf.find(fa) != uf.find(fb)) work.emplace_back(fa, fb);
                    int i = k - 2;
                    while (i >= 0 && ++other[i] == n) other[i--] = 0;
                    if (i < 0) break;
                }
                if (k == 1) break; // no other arguments to vary
            }
        }
    }
    return Congruence::from_union_find(uf);
}

} // namespace

Congruence cg(const FiniteAlgebra& alg, std::span<const ElementPair> pairs) {
    const int n = alg.size();
    std::deque<ElementPair> work;
    for (auto [a, b] : pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw input_error("pair element out of range");
        work.emplace_back(a, b);
    }
    return cg_worklist(alg, UnionFind(n), std::move(work));
}

Congruence cg_extend(const FiniteAlgebra& alg, const Congruence& base,
                     std::span<const ElementPair> pairs) {
    const int n = alg.size();
    if (base.size() != n) throw input_error("congruence size does not match algebra");
    UnionFind uf(n);
    for (int x = 0; x < n; ++x) uf.unite(x, base.rep(x));
    std::deque<ElementPair> work;
    for (auto [a, b] : pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw input_error("pair element out of range");
        work.emplace_back(a, b);
    }
    return cg_worklist(alg, std::move(uf), std::move(work));
}

bool is_congruence(const FiniteAlgebra& alg, const Congruence& part) {
    const int n = alg.size();
    if (part.size() != n) return false;
    const Signature& sig = alg.signature();
    std::vector<Element> args;
    for (int op = 0; op < sig.count(); ++op) {
        const int k = sig.arity(op);
        if (k == 0) continue;
        args.assign(k, 0);
        std::vector<std::size_t> pos(k, 0);
        while (true) {
            for (int i = 0; i < k; ++i) args[i] = static_cast<Element>(pos[i]);
            Element base = alg.apply(op, args);
            for (int slot = 0; slot < k; ++slot) {
                Element orig = args[slot];
                for (Element y = 0; y < n; ++y) {
                    if (!part.related(orig, y)) continue;
                    args[slot] = y;
                    if (!part.related(base, alg.apply(op, args))) return false;
                }
                args[slot] = orig;
            }
            int i = k - 1;
            while (i >= 0 && ++pos[i] == static_cast<std::size_t>(n)) pos[i--] = 0;
            if (i < 0) break;
        }
    }
    return true;
}

std::size_t enumeration_cap() {
    if (const char* env = std::getenv("CSPEC_MAX_CON")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 20000;
}

std::size_t CongruenceHash::operator()(const Congruence& c) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Element x : c.data()) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

int ConLattice::index_of(const Congruence& c) const {
    auto it = index.find(c);
    return it == index.end() ? -1 : it->second;
}

bool ConLattice::leq(int i, int j) const { return pleq(members[i], members[j]); }

int ConLattice::join(int i, int j) const {
    if (!join_tab.empty()) return join_tab[static_cast<std::size_t>(i) * members.size() + j];
    return index_of(pjoin(members[i], members[j]));
}

int ConLattice::meet(int i, int j) const {
    if (!meet_tab.empty()) return meet_tab[static_cast<std::size_t>(i) * members.size() + j];
    return index_of(pmeet(members[i], members[j]));
}

std::vector<Congruence> principal_congruences(const FiniteAlgebra& alg, Exec exec) {
    std::vector<Congruence> grid = exec_is_parallel(exec)
                                       ? principal_congruence_grid_parallel(alg)
                                       : principal_congruence_grid_serial(alg);
    grid.push_back(Congruence::identity(alg.size()));
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

ConLattice con_lattice(const FiniteAlgebra& alg, Exec exec, std::size_t cap) {
    std::vector<Congruence> principal = principal_congruences(alg, exec);

    // Join-closure by BFS: every member popped is joined with everything
    // currently known, so all pairwise joins get covered.
    std::unordered_map<Congruence, int, CongruenceHash> seen;
    std::vector<Congruence> members;
    auto push = [&](const Congruence& c) {
        if (seen.emplace(c, static_cast<int>(members.size())).second) {
            members.push_back(c);
            if (members.size() > cap)
                throw enumeration_limit_error(
                    "congruence enumeration exceeded cap of " + std::to_string(cap) +
                    " (set CSPEC_MAX_CON to raise it); partial enumeration refused");
        }
    };
    for (const Congruence& p : principal) push(p);
    for (std::size_t head = 0; head < members.size(); ++head) {
        Congruence current = members[head];
        for (std::size_t other = 0; other < members.size(); ++other)
            push(pjoin(current, members[other]));
    }

    ConLattice lat;
    lat.universe = alg.size();
    std::sort(members.begin(), members.end());
    lat.members = std::move(members);
    lat.index.clear();
    for (int i = 0; i < lat.size(); ++i) lat.index.emplace(lat.members[i], i);
    for (const Congruence& p : principal) lat.principal.push_back(lat.index_of(p));
    std::sort(lat.principal.begin(), lat.principal.end());
    lat.delta = lat.index_of(Congruence::identity(alg.size()));
    lat.nabla = lat.index_of(Congruence::full(alg.size()));

    if (lat.size() <= 512) {
        const std::size_t m = lat.members.size();
        lat.join_tab.resize(m * m);
        lat.meet_tab.resize(m * m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j <= i; ++j) {
                int jn = lat.index_of(pjoin(lat.members[i], lat.members[j]));
                int mt = lat.index_of(pmeet(lat.members[i], lat.members[j]));
                lat.join_tab[i * m + j] = lat.join_tab[j * m + i] = jn;
                lat.meet_tab[i * m + j] = lat.meet_tab[j * m + i] = mt;
            }
    }
    return lat;
}

std::vector<int> pair_congruence_grid(const FiniteAlgebra& alg, const ConLattice& lat) {
    const int n = alg.size();
    std::vector<int> grid(static_cast<std::size_t>(n) * n);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            ElementPair p{a, b};
            grid[static_cast<std::size_t>(a) * n + b] = lat.index_of(cg(alg, {&p, 1}));
        }
    return grid;
}

} // namespace ualg
