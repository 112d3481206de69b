#ifndef UALG_TEST_ORACLES_HPP
#define UALG_TEST_ORACLES_HPP

// Independent brute-force oracles for the closure computations. These use
// relation matrices and full-rescan passes, deliberately sharing no code
// with the union-find / frontier implementations they check.

#include <array>
#include <set>
#include <vector>

#include "ualg/algebra.hpp"

namespace oracles {

using ualg::Element;
using ualg::FiniteAlgebra;

/// Least congruence containing the pairs, via boolean relation matrices:
/// symmetrize, transitively close, substitute in every coordinate of every
/// operation for every related pair, repeat to fixpoint.
inline ualg::Congruence naive_cg(const FiniteAlgebra& alg,
                                 const std::vector<std::pair<Element, Element>>& pairs) {
    const int n = alg.size();
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) rel[i][i] = true;
    for (auto [a, b] : pairs) rel[a][b] = rel[b][a] = true;

    const ualg::Signature& sig = alg.signature();
    bool changed = true;
    while (changed) {
        changed = false;
        // transitive closure
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (rel[i][k] && rel[k][j] && !rel[i][j]) {
                        rel[i][j] = true;
                        changed = true;
                    }
        // operation substitution, one coordinate at a time, all tuples
        for (int op = 0; op < sig.count(); ++op) {
            const int k = sig.arity(op);
            if (k == 0) continue;
            std::vector<Element> args(k, 0);
            while (true) {
                Element base = alg.apply(op, args);
                for (int slot = 0; slot < k; ++slot) {
                    Element orig = args[slot];
                    for (Element y = 0; y < n; ++y) {
                        if (!rel[orig][y]) continue;
                        args[slot] = y;
                        Element other = alg.apply(op, args);
                        if (!rel[base][other]) {
                            rel[base][other] = rel[other][base] = true;
                            changed = true;
                        }
                    }
                    args[slot] = orig;
                }
                int i = k - 1;
                while (i >= 0 && ++args[i] == n) args[i--] = 0;
                if (i < 0) break;
            }
        }
    }

    std::vector<Element> rep(n);
    for (int x = 0; x < n; ++x) {
        int least = x;
        for (int y = 0; y < n; ++y)
            if (rel[x][y]) {
                least = std::min(least, y);
            }
        rep[x] = least;
    }
    return ualg::Congruence(rep);
}

/// Full-rescan closure of a quadruple set under coordinatewise operations.
inline std::set<std::array<Element, 4>> naive_quadruple_closure(
    const FiniteAlgebra& alg, std::set<std::array<Element, 4>> current) {
    const ualg::Signature& sig = alg.signature();
    bool changed = true;
    while (changed) {
        changed = false;
        std::set<std::array<Element, 4>> next = current;
        for (int op = 0; op < sig.count(); ++op) {
            const int k = sig.arity(op);
            if (k == 0) {
                Element c = alg.table(op)[0];
                if (next.insert({c, c, c, c}).second) changed = true;
                continue;
            }
            std::vector<std::array<Element, 4>> list(current.begin(), current.end());
            std::vector<std::size_t> pos(k, 0);
            std::vector<Element> args(k);
            if (list.empty()) continue;
            while (true) {
                std::array<Element, 4> value{};
                for (int coord = 0; coord < 4; ++coord) {
                    for (int i = 0; i < k; ++i) args[i] = list[pos[i]][coord];
                    value[coord] = alg.apply(op, args);
                }
                if (next.insert(value).second) changed = true;
                int i = k - 1;
                while (i >= 0 && ++pos[i] == list.size()) pos[i--] = 0;
                if (i < 0) break;
            }
        }
        current = std::move(next);
    }
    return current;
}

/// Full-rescan subalgebra closure.
inline std::vector<Element> naive_subalgebra(const FiniteAlgebra& alg,
                                             std::vector<Element> seed) {
    const ualg::Signature& sig = alg.signature();
    std::set<Element> current(seed.begin(), seed.end());
    for (int op = 0; op < sig.count(); ++op)
        if (sig.arity(op) == 0) current.insert(alg.table(op)[0]);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Element> list(current.begin(), current.end());
        for (int op = 0; op < sig.count(); ++op) {
            const int k = sig.arity(op);
            if (k == 0 || list.empty()) continue;
            std::vector<std::size_t> pos(k, 0);
            std::vector<Element> args(k);
            while (true) {
                for (int i = 0; i < k; ++i) args[i] = list[pos[i]];
                if (current.insert(alg.apply(op, args)).second) changed = true;
                int i = k - 1;
                while (i >= 0 && ++pos[i] == list.size()) pos[i--] = 0;
                if (i < 0) break;
            }
        }
    }
    return {current.begin(), current.end()};
}

} // namespace oracles

#endif
