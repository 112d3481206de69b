#include "ualg/spectra.hpp"

#include <algorithm>
#include <stdexcept>

#include "ualg/errors.hpp"

namespace ualg {

bool is_prime(const ConLattice& lat, const CommutatorTable& table, int phi) {
    if (phi == lat.nabla) return false; // prime congruences are proper
    for (int a : lat.principal)
        for (int b : lat.principal)
            if (lat.leq(table.at(a, b), phi) && !lat.leq(a, phi) && !lat.leq(b, phi))
                return false;
    return true;
}

namespace {

std::vector<int> minimal_of(const ConLattice& lat, const std::vector<int>& set) {
    std::vector<int> out;
    for (int x : set) {
        bool minimal = true;
        for (int y : set)
            if (y != x && lat.leq(y, x)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(x);
    }
    return out;
}

int intersect_all(const ConLattice& lat, const std::vector<int>& set) {
    Congruence acc = lat.members[lat.nabla]; // empty intersection convention
    for (int x : set) acc = pmeet(acc, lat.members[x]);
    return lat.index_of(acc);
}

} // namespace

SpectrumReport spectrum(const ConLattice& lat, const CommutatorTable& table) {
    SpectrumReport report;
    for (int i = 0; i < lat.size(); ++i)
        if (is_prime(lat, table, i)) report.spec.push_back(i);
    report.min = minimal_of(lat, report.spec);

    for (int i = 0; i < lat.size(); ++i) {
        if (i == lat.nabla) continue;
        bool maximal = true;
        for (int j = 0; j < lat.size(); ++j)
            if (j != i && j != lat.nabla && lat.leq(i, j)) {
                maximal = false;
                break;
            }
        if (maximal) report.max.push_back(i);
    }

    report.radical_of_delta = intersect_all(lat, report.spec);
    report.semiprime = report.radical_of_delta == lat.delta;
    return report;
}

std::vector<int> vset(const ConLattice& lat, const SpectrumReport& report, int theta) {
    std::vector<int> out;
    for (int pos = 0; pos < static_cast<int>(report.spec.size()); ++pos)
        if (lat.leq(theta, report.spec[pos])) out.push_back(pos);
    return out;
}

std::vector<int> dset(const ConLattice& lat, const SpectrumReport& report, int theta) {
    std::vector<int> out;
    for (int pos = 0; pos < static_cast<int>(report.spec.size()); ++pos)
        if (!lat.leq(theta, report.spec[pos])) out.push_back(pos);
    return out;
}

int radical_index(const ConLattice& lat, const SpectrumReport& report, int theta) {
    Congruence acc = lat.members[lat.nabla];
    for (int phi : report.spec)
        if (lat.leq(theta, phi)) acc = pmeet(acc, lat.members[phi]);
    return lat.index_of(acc);
}

int radical_via_commutators_index(const FiniteAlgebra& alg, const ConLattice& lat,
                                  const CommutatorTable& table, const SpectrumReport& report,
                                  int theta) {
    (void)alg;
    Congruence acc = lat.members[lat.delta];
    for (int p : lat.principal) {
        // Walk the iterated self-commutator chain of the principal; it
        // qualifies as soon as some iterate drops below theta.
        int current = p;
        bool qualifies = false;
        while (true) {
            int next = table.at(current, current);
            if (lat.leq(next, theta)) {
                qualifies = true;
                break;
            }
            if (next == current) break;
            current = next;
        }
        if (qualifies) acc = pjoin(acc, lat.members[p]);
    }
    int result = lat.index_of(acc);
    int direct = radical_index(lat, report, theta);
    if (result != direct)
        throw hypothesis_violation(
            "radical via iterated self-commutators disagrees with the prime intersection; "
            "hypothesis flags are insufficient for this algebra");
    return result;
}

Topology stone_topology(const FiniteAlgebra& alg, const ConLattice& lat,
                        const SpectrumReport& report, SpectrumPoints which) {
    Topology t;
    switch (which) {
        case SpectrumPoints::Spec: t.points = report.spec; break;
        case SpectrumPoints::Min: t.points = report.min; break;
        case SpectrumPoints::Max:
            for (int m : report.max)
                if (std::find(report.spec.begin(), report.spec.end(), m) == report.spec.end())
                    throw hypothesis_violation(
                        "maximal congruences are not all prime on this algebra; "
                        "no Stone topology on Max");
            t.points = report.max;
            break;
    }

    auto restricted_dset = [&](int theta) {
        std::vector<int> open;
        for (int pos = 0; pos < static_cast<int>(t.points.size()); ++pos)
            if (!lat.leq(theta, t.points[pos])) open.push_back(pos);
        return open;
    };

    std::vector<std::vector<int>> opens;
    for (int theta = 0; theta < lat.size(); ++theta) opens.push_back(restricted_dset(theta));
    std::sort(opens.begin(), opens.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    t.opens = std::move(opens);

    const int n = alg.size();
    for (Element a = 0; a < n; ++a)
        for (Element b = a; b < n; ++b) {
            ElementPair p{a, b};
            int idx = lat.index_of(cg(alg, {&p, 1}));
            t.basis_pairs.push_back(p);
            t.basis.push_back(restricted_dset(idx));
        }
    return t;
}

bool topology_closed_family(const Topology& t) {
    std::vector<std::vector<int>> sorted = t.opens;
    std::sort(sorted.begin(), sorted.end());
    auto has = [&](const std::vector<int>& s) {
        return std::binary_search(sorted.begin(), sorted.end(), s);
    };
    std::vector<int> full(t.points.size());
    for (int i = 0; i < static_cast<int>(t.points.size()); ++i) full[i] = i;
    if (!has({}) || !has(full)) return false;
    for (const auto& a : t.opens)
        for (const auto& b : t.opens) {
            std::vector<int> u, i;
            std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(i));
            if (!has(u) || !has(i)) return false;
        }
    return true;
}

bool topology_hausdorff(const Topology& t) {
    const int count = static_cast<int>(t.points.size());
    for (int x = 0; x < count; ++x)
        for (int y = x + 1; y < count; ++y) {
            bool separated = false;
            for (const auto& u : t.basis) {
                if (!std::binary_search(u.begin(), u.end(), x)) continue;
                for (const auto& v : t.basis) {
                    if (!std::binary_search(v.begin(), v.end(), y)) continue;
                    std::vector<int> meet;
                    std::set_intersection(u.begin(), u.end(), v.begin(), v.end(),
                                          std::back_inserter(meet));
                    if (meet.empty()) {
                        separated = true;
                        break;
                    }
                }
                if (separated) break;
            }
            if (!separated) return false;
        }
    return true;
}

bool topology_all_clopen(const Topology& t) {
    std::vector<std::vector<int>> sorted = t.opens;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& open : t.opens) {
        std::vector<int> complement;
        for (int i = 0; i < static_cast<int>(t.points.size()); ++i)
            if (!std::binary_search(open.begin(), open.end(), i)) complement.push_back(i);
        if (!std::binary_search(sorted.begin(), sorted.end(), complement)) return false;
    }
    return true;
}

std::vector<std::vector<std::uint64_t>> pair_masks(const ConLattice& lat) {
    const int n = lat.universe;
    const std::size_t words = (static_cast<std::size_t>(n) * n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> masks(lat.size(),
                                                  std::vector<std::uint64_t>(words, 0));
    for (int i = 0; i < lat.size(); ++i)
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b)
                if (lat.members[i].related(a, b)) {
                    std::size_t bit = static_cast<std::size_t>(a) * n + b;
                    masks[i][bit >> 6] |= 1ull << (bit & 63);
                }
    return masks;
}

bool is_m_system(const FiniteAlgebra& alg, const ConLattice& lat, const CommutatorTable& table,
                 std::span<const ElementPair> s) {
    if (s.empty()) return true;
    const int n = alg.size();
    std::vector<int> grid = pair_congruence_grid(alg, lat);
    auto masks = pair_masks(lat);
    const std::size_t words = masks.empty() ? 0 : masks[0].size();
    std::vector<std::uint64_t> smask(words, 0);
    for (auto [a, b] : s) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw input_error("pair element out of range");
        std::size_t bit = static_cast<std::size_t>(a) * n + b;
        smask[bit >> 6] |= 1ull << (bit & 63);
    }
    for (auto [a, b] : s)
        for (auto [c, d] : s) {
            int comm = table.at(grid[static_cast<std::size_t>(a) * n + b],
                                grid[static_cast<std::size_t>(c) * n + d]);
            bool meets = false;
            for (std::size_t w = 0; w < words; ++w)
                if (masks[comm][w] & smask[w]) {
                    meets = true;
                    break;
                }
            if (!meets) return false;
        }
    return true;
}

std::vector<int> maximal_disjoint_congruences(const ConLattice& lat,
                                              std::span<const ElementPair> s, int alpha) {
    const int n = lat.universe;
    auto disjoint = [&](const Congruence& c) {
        for (auto [a, b] : s) {
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw input_error("pair element out of range");
            if (c.related(a, b)) return false;
        }
        return true;
    };
    if (!disjoint(lat.members[alpha]))
        throw input_error("alpha meets the pair set; no disjoint congruence above it exists");

    std::vector<int> candidates;
    for (int i = 0; i < lat.size(); ++i)
        if (lat.leq(alpha, i) && disjoint(lat.members[i])) candidates.push_back(i);

    std::vector<int> out;
    for (int x : candidates) {
        bool maximal = true;
        for (int y : candidates)
            if (y != x && lat.leq(x, y)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(x);
    }
    return out;
}

std::vector<int> min_over(const ConLattice& lat, const SpectrumReport& report, int theta) {
    std::vector<int> above;
    for (int phi : report.spec)
        if (lat.leq(theta, phi)) above.push_back(phi);
    std::vector<int> mins = minimal_of(lat, above);

    // Unconditional in the finite case: every prime above theta contains a
    // minimal one, so both intersections coincide.
    Congruence acc = lat.members[lat.nabla];
    for (int phi : mins) acc = pmeet(acc, lat.members[phi]);
    if (lat.index_of(acc) != radical_index(lat, report, theta))
        throw std::logic_error("minimal primes over theta do not intersect to the radical");
    return mins;
}

bool minimal_prime_check_perp(const ConLattice& lat, std::span<const int> perps, int phi) {
    for (int a = 0; a < lat.size(); ++a)
        if (lat.leq(a, phi) && lat.leq(perps[a], phi)) return false;
    return true;
}

std::vector<std::vector<int>> radical_equiv_classes(const ConLattice& lat,
                                                    const SpectrumReport& report) {
    std::vector<int> radical(lat.size());
    for (int i = 0; i < lat.size(); ++i) radical[i] = radical_index(lat, report, i);
    std::vector<std::vector<int>> classes;
    std::vector<int> slot(lat.size(), -1);
    for (int i = 0; i < lat.size(); ++i) {
        int r = radical[i];
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(classes.size());
            classes.emplace_back();
        }
        classes[slot[r]].push_back(i);
    }
    return classes;
}

} // namespace ualg
