#include "ualg/verify.hpp"

#include <algorithm>
#include <optional>

#include "ualg/context.hpp"
#include "ualg/errors.hpp"
#include "ualg/fixtures.hpp"
#include "ualg/rng.hpp"

namespace ualg {

namespace {

struct Suite {
    std::string name;
    long checks = 0;
    long skipped = 0;
    long violation_count = 0;
    std::vector<std::string> violations; // first few, for the report
    Json extra = Json::object();

    void check(bool ok, const std::string& label) {
        ++checks;
        if (!ok) {
            ++violation_count;
            if (violations.size() < 32) violations.push_back(label);
        }
    }
    void skip(long count = 1) { skipped += count; }

    Json to_json() const {
        Json j;
        j["name"] = name;
        j["checks"] = checks;
        j["skipped"] = skipped;
        j["violation_count"] = violation_count;
        j["violations"] = violations;
        if (!extra.empty()) j["details"] = extra;
        return j;
    }
};

std::vector<FiniteAlgebra> core_fixtures() {
    std::vector<FiniteAlgebra> out;
    out.push_back(fixtures::zn_ring(4));
    out.push_back(fixtures::zn_ring(6));
    out.push_back(fixtures::zn_group(4));
    out.push_back(fixtures::s3_group());
    out.push_back(fixtures::b4_lattice());
    out.push_back(fixtures::chain_lattice(3));
    out.push_back(fixtures::one_element());
    out.push_back(fixtures::n5_lattice());
    return out;
}

bool contains(const std::vector<int>& v, int x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

// --- commutator against the definitional oracle ------------------------------

void suite_commutator_oracle(Suite& s, const std::vector<AlgebraContext>& ctxs) {
    for (const AlgebraContext& cx : ctxs) {
        for (int i = 0; i < cx.lat.size(); ++i)
            for (int j = 0; j < cx.lat.size(); ++j) {
                MatrixSet m = matrix_algebra(cx.alg, cx.lat.members[i], cx.lat.members[j]);
                Congruence oracle = cx.lat.members[cx.lat.nabla];
                for (const Congruence& mu : cx.lat.members)
                    if (term_condition_holds(m, mu)) oracle = pmeet(oracle, mu);
                s.check(cx.lat.index_of(oracle) == cx.comm.at(i, j),
                        cx.alg.name() + ": commutator fixpoint differs from least-witness "
                        "intersection at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            }
    }
}

void suite_meet_collapse(Suite& s, const std::vector<AlgebraContext>& ctxs) {
    for (const AlgebraContext& cx : ctxs) {
        if (cx.alg.signature().index_of("meet") < 0) continue; // lattice fixtures only
        for (int i = 0; i < cx.lat.size(); ++i)
            for (int j = 0; j < cx.lat.size(); ++j)
                s.check(cx.comm.at(i, j) == cx.lat.meet(i, j),
                        cx.alg.name() + ": commutator differs from intersection at (" +
                            std::to_string(i) + "," + std::to_string(j) + ")");
    }
}

// --- random algebras ---------------------------------------------------------

FiniteAlgebra random_algebra(Rng& rng, int max_size) {
    const int n = rng.range(2, max_size);
    const int family = rng.range(0, 2);
    std::vector<OpSymbol> ops;
    if (family == 0)
        ops = {{"add", 2}, {"neg", 1}, {"zero", 0}, {"mul", 2}};
    else if (family == 1)
        ops = {{"op", 2}, {"inv", 1}, {"e", 0}};
    else
        ops = {{"meet", 2}, {"join", 2}};
    std::vector<std::vector<Element>> tables;
    for (const OpSymbol& op : ops) {
        std::size_t len = 1;
        for (int i = 0; i < op.arity; ++i) len *= static_cast<std::size_t>(n);
        std::vector<Element> table(len);
        for (Element& v : table) v = static_cast<Element>(rng.below(n));
        tables.push_back(std::move(table));
    }
    return FiniteAlgebra("random", n, Signature(std::move(ops)), std::move(tables));
}

/// Random algebra whose congruence lattice stays below the cap; oversized
/// draws are discarded and redrawn (counted for the report).
FiniteAlgebra random_algebra_capped(Rng& rng, int max_size, std::size_t con_cap, long& redraws) {
    while (true) {
        FiniteAlgebra alg = random_algebra(rng, max_size);
        try {
            con_lattice(alg, Exec::Serial, con_cap);
            return alg;
        } catch (const enumeration_limit_error&) {
            ++redraws;
        }
    }
}

// --- quotient identity (congruence generation commutes with quotients) -------

void suite_quotient_cg(Suite& s, const VerifyOptions& options, Exec exec) {
    Rng rng(options.seed * 0x9e3779b97f4a7c15ull + 1);
    long redraws = 0;
    for (int trial = 0; trial < options.quotient_triples; ++trial) {
        FiniteAlgebra alg = random_algebra_capped(rng, options.max_size, 256, redraws);
        ConLattice lat = con_lattice(alg, exec, 256);
        const Congruence& theta = lat.members[static_cast<int>(rng.below(lat.size()))];
        std::vector<ElementPair> x;
        const int count = rng.range(0, 3);
        for (int i = 0; i < count; ++i)
            x.emplace_back(static_cast<Element>(rng.below(alg.size())),
                           static_cast<Element>(rng.below(alg.size())));

        QuotientResult q = quotient(alg, theta);
        Congruence lhs = project_congruence(q, pjoin(cg(alg, x), theta));
        std::vector<ElementPair> projected;
        for (auto [a, b] : x) projected.emplace_back(q.projection[a], q.projection[b]);
        Congruence rhs = cg(q.algebra, projected);
        s.check(lhs == rhs, "quotient of generated congruence differs from generation in the "
                            "quotient (trial " + std::to_string(trial) + ")");
    }
    s.extra["redraws"] = redraws;
}

// --- residuation -------------------------------------------------------------

void suite_residuation(Suite& s, const std::vector<AlgebraContext>& ctxs, Exec exec) {
    for (const AlgebraContext& cx : ctxs) {
        const std::string& name = cx.alg.name();
        if (!cx.flags.commutative || !cx.flags.join_distributive) {
            s.skip();
            continue;
        }
        const int m = cx.lat.size();
        std::vector<int> residuum(static_cast<std::size_t>(m) * m);
        for (int b = 0; b < m; ++b)
            for (int g = 0; g < m; ++g)
                residuum[static_cast<std::size_t>(b) * m + g] =
                    residuum_index(cx.lat, cx.comm, b, g);
        auto res = [&](int b, int g) { return residuum[static_cast<std::size_t>(b) * m + g]; };

        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                for (int g = 0; g < m; ++g)
                    s.check(cx.lat.leq(cx.comm.at(a, b), g) == cx.lat.leq(a, res(b, g)),
                            name + ": adjunction fails");
                s.check(cx.lat.leq(b, res(a, b)), name + ": beta below alpha->beta fails");
                s.check(cx.comm.at(b, cx.perps[b]) == cx.lat.delta,
                        name + ": [beta, perp(beta)] is not trivial");
            }
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                for (int t = 0; t < m; ++t)
                    s.check(res(cx.lat.join(a, t), cx.lat.join(b, t)) ==
                                res(a, cx.lat.join(b, t)),
                            name + ": residuation join-absorption fails");

        // perp calculus
        s.check(cx.perps[cx.lat.delta] == cx.lat.nabla, name + ": perp(delta) != nabla");
        if (cx.flags.top_neutral)
            s.check(cx.perps[cx.lat.nabla] == cx.lat.delta, name + ": perp(nabla) != delta");
        for (int a = 0; a < m; ++a) {
            s.check(cx.lat.leq(a, cx.perps[cx.perps[a]]), name + ": alpha not below perp^2");
            s.check(cx.perps[cx.perps[cx.perps[a]]] == cx.perps[a],
                    name + ": perp^3 != perp");
            for (int b = 0; b < m; ++b)
                s.check(cx.perps[cx.lat.join(a, b)] == cx.lat.meet(cx.perps[a], cx.perps[b]),
                        name + ": perp of join is not meet of perps");
        }
        if (cx.spec.semiprime) {
            for (int a = 0; a < m; ++a) {
                s.check(cx.lat.leq(a, cx.perps[a]) == (a == cx.lat.delta),
                        name + ": alpha below its perp off delta");
                s.check(radical_index(cx.lat, cx.spec, cx.perps[a]) == cx.perps[a],
                        name + ": perp is not a radical congruence");
                for (int b = 0; b < m; ++b) {
                    s.check(cx.perps[cx.comm.at(a, b)] == cx.perps[cx.lat.meet(a, b)],
                            name + ": perp of commutator differs from perp of meet");
                    s.check(cx.perps[cx.perps[cx.lat.meet(a, b)]] ==
                                cx.lat.meet(cx.perps[cx.perps[a]], cx.perps[cx.perps[b]]),
                            name + ": double perp of meet fails");
                }
            }
        } else {
            s.skip();
        }

        // Quotient transfer of residuation and perp.
        for (int t = 0; t < m; ++t) {
            QuotientResult q = quotient(cx.alg, cx.lat.members[t]);
            AlgebraContext qc = make_algebra_context(q.algebra, exec);
            auto down = [&](int idx) {
                return qc.lat.index_of(project_congruence(q, cx.lat.members[idx]));
            };
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) {
                    int a_t = cx.lat.join(a, t), b_t = cx.lat.join(b, t);
                    int lhs = residuum_index(qc.lat, qc.comm, down(a_t), down(b_t));
                    s.check(lhs == down(res(a_t, b_t)),
                            name + ": residuation does not project to the quotient");
                    s.check(lhs == down(res(a, b_t)),
                            name + ": join-absorbed residuation does not project");
                }
            for (int a = 0; a < m; ++a)
                s.check(qc.perps[down(cx.lat.join(a, t))] == down(res(a, t)),
                        name + ": quotient perp differs from projected residuum");
        }
        if (cx.flags.top_neutral) {
            bool all_perp_quotients_semiprime = true;
            for (int t = 0; t < m; ++t) {
                QuotientResult q = quotient(cx.alg, cx.lat.members[cx.perps[t]]);
                AlgebraContext qc = make_algebra_context(q.algebra, exec);
                if (!qc.spec.semiprime) all_perp_quotients_semiprime = false;
            }
            s.check(all_perp_quotients_semiprime == cx.spec.semiprime,
                    name + ": perp-quotient semiprimeness does not match the algebra");
        } else {
            s.skip();
        }
    }
}

void suite_radical_characterization(Suite& s, const std::vector<AlgebraContext>& ctxs) {
    for (const AlgebraContext& cx : ctxs) {
        if (!cx.flags.commutative || !cx.flags.join_distributive) {
            s.skip(cx.lat.size());
            continue;
        }
        for (int t = 0; t < cx.lat.size(); ++t) {
            try {
                int via = radical_via_commutators_index(cx.alg, cx.lat, cx.comm, cx.spec, t);
                s.check(via == radical_index(cx.lat, cx.spec, t),
                        cx.alg.name() + ": radical characterizations disagree");
            } catch (const hypothesis_violation& e) {
                s.check(false, cx.alg.name() + ": " + e.what());
            }
        }
    }
}

// --- spectrum identities ------------------------------------------------------

void suite_spectrum_identities(Suite& s, const std::vector<AlgebraContext>& ctxs) {
    for (const AlgebraContext& cx : ctxs) {
        const std::string& name = cx.alg.name();
        const int m = cx.lat.size();

        // Primality via principal pairs must match the all-congruence form.
        for (int i = 0; i < m; ++i) {
            bool full = i != cx.lat.nabla;
            for (int a = 0; a < m && full; ++a)
                for (int b = 0; b < m; ++b)
                    if (cx.lat.leq(cx.comm.at(a, b), i) && !cx.lat.leq(a, i) &&
                        !cx.lat.leq(b, i)) {
                        full = false;
                        break;
                    }
            s.check(is_prime(cx.lat, cx.comm, i) == full,
                    name + ": principal primality test differs from the full test");
        }

        for (int phi : cx.spec.spec) {
            std::vector<ElementPair> complement;
            for (Element a = 0; a < cx.alg.size(); ++a)
                for (Element b = 0; b < cx.alg.size(); ++b)
                    if (!cx.lat.members[phi].related(a, b)) complement.emplace_back(a, b);
            s.check(is_m_system(cx.alg, cx.lat, cx.comm, complement),
                    name + ": complement of a prime is not an m-system");
        }

        for (int t = 0; t < m; ++t) {
            std::vector<int> mins = min_over(cx.lat, cx.spec, t); // asserts the intersection
            (void)mins;
        }
        s.check(true, name + ": minimal primes over theta intersect to the radical");

        if (!cx.flags.commutative || !cx.flags.join_distributive) {
            s.skip();
            continue;
        }

        // Spec = meet-irreducible radical congruences.
        std::vector<int> radical(m);
        for (int i = 0; i < m; ++i) radical[i] = radical_index(cx.lat, cx.spec, i);
        for (int i = 0; i < m; ++i) {
            bool mi = i != cx.lat.nabla;
            if (mi) {
                for (int a = 0; a < m && mi; ++a)
                    for (int b = 0; b < m; ++b)
                        if (a != i && b != i && cx.lat.leq(i, a) && cx.lat.leq(i, b) &&
                            cx.lat.meet(a, b) == i) {
                            mi = false;
                            break;
                        }
            }
            bool expected = mi && radical[i] == i;
            s.check(contains(cx.spec.spec, i) == expected,
                    name + ": Spec differs from meet-irreducible radicals at " +
                        std::to_string(i));
        }

        // Radical congruences are exactly the semiprime ones.
        for (int t = 0; t < m; ++t) {
            bool semi = true;
            for (int a = 0; a < m; ++a)
                if (cx.lat.leq(cx.comm.at(a, a), t) && !cx.lat.leq(a, t)) {
                    semi = false;
                    break;
                }
            s.check((radical[t] == t) == semi,
                    name + ": radical and semiprime congruences differ at " + std::to_string(t));
        }

        // D/V/radical calculus.
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                auto da = dset(cx.lat, cx.spec, a), db = dset(cx.lat, cx.spec, b);
                std::vector<int> d_and, d_or;
                std::set_intersection(da.begin(), da.end(), db.begin(), db.end(),
                                      std::back_inserter(d_and));
                std::set_union(da.begin(), da.end(), db.begin(), db.end(),
                               std::back_inserter(d_or));
                s.check(dset(cx.lat, cx.spec, cx.comm.at(a, b)) == d_and &&
                            dset(cx.lat, cx.spec, cx.lat.meet(a, b)) == d_and,
                        name + ": D of commutator/meet is not the intersection");
                s.check(dset(cx.lat, cx.spec, cx.lat.join(a, b)) == d_or,
                        name + ": D of join is not the union");
                s.check(radical[cx.lat.join(a, b)] == cx.lat.join(radical[a], radical[b]),
                        name + ": radical of join fails");
                s.check(radical[cx.comm.at(a, b)] == cx.lat.meet(radical[a], radical[b]) &&
                            radical[cx.comm.at(a, b)] == radical[cx.lat.meet(a, b)],
                        name + ": radical of commutator fails");
            }

        // Maximal congruences disjoint from an m-system are prime. Congruences
        // themselves and prime complements provide the m-systems; skip the
        // empty system, whose maximal disjoint congruence is nabla.
        std::vector<std::vector<ElementPair>> systems;
        for (int i = 0; i < m; ++i) {
            std::vector<ElementPair> pairs;
            for (Element a = 0; a < cx.alg.size(); ++a)
                for (Element b = 0; b < cx.alg.size(); ++b)
                    if (cx.lat.members[i].related(a, b)) pairs.emplace_back(a, b);
            systems.push_back(std::move(pairs));
        }
        for (int phi : cx.spec.spec) {
            std::vector<ElementPair> pairs;
            for (Element a = 0; a < cx.alg.size(); ++a)
                for (Element b = 0; b < cx.alg.size(); ++b)
                    if (!cx.lat.members[phi].related(a, b)) pairs.emplace_back(a, b);
            systems.push_back(std::move(pairs));
        }
        for (const auto& sys : systems) {
            if (sys.empty()) continue;
            if (!is_m_system(cx.alg, cx.lat, cx.comm, sys)) continue;
            for (int alpha = 0; alpha < m; ++alpha) {
                bool meets = false;
                for (auto [a, b] : sys)
                    if (cx.lat.members[alpha].related(a, b)) {
                        meets = true;
                        break;
                    }
                if (meets) continue;
                for (int top : maximal_disjoint_congruences(cx.lat, sys, alpha))
                    s.check(contains(cx.spec.spec, top),
                            name + ": maximal congruence disjoint from an m-system is not prime");
            }
        }
    }
}

// --- minimal prime characterizations -----------------------------------------

/// Fast m-system oracle over pair bitmasks; universes up to 8 elements.
struct MSystemOracle {
    int n = 0;
    std::vector<std::uint64_t> member_mask;                 // per lattice member
    std::vector<int> grid;                                  // pair code -> lattice index
    const ConLattice* lat = nullptr;
    const CommutatorTable* comm = nullptr;

    explicit MSystemOracle(const AlgebraContext& cx) {
        n = cx.alg.size();
        lat = &cx.lat;
        comm = &cx.comm;
        member_mask.resize(cx.lat.size(), 0);
        for (int i = 0; i < cx.lat.size(); ++i)
            for (Element a = 0; a < n; ++a)
                for (Element b = 0; b < n; ++b)
                    if (cx.lat.members[i].related(a, b))
                        member_mask[i] |= 1ull << (a * n + b);
        grid = pair_congruence_grid(cx.alg, cx.lat);
    }

    std::uint64_t mask_of(int member) const { return member_mask[member]; }

    bool is_m_system_mask(std::uint64_t mask) const {
        for (int p = 0; p < n * n; ++p) {
            if (!(mask & (1ull << p))) continue;
            for (int q = 0; q < n * n; ++q) {
                if (!(mask & (1ull << q))) continue;
                if (!(member_mask[comm->at(grid[p], grid[q])] & mask)) return false;
            }
        }
        return true;
    }
};

void suite_minimal_primes(Suite& s, const std::vector<AlgebraContext>& ctxs,
                          const VerifyOptions& options) {
    Rng rng(options.seed * 0x9e3779b97f4a7c15ull + 3);
    for (const AlgebraContext& cx : ctxs) {
        const std::string& name = cx.alg.name();

        // Annihilator criterion for minimal primes (semiprime algebras).
        if (cx.spec.semiprime && cx.flags.commutative && cx.flags.join_distributive) {
            for (int phi : cx.spec.spec)
                s.check(minimal_prime_check_perp(cx.lat, cx.perps, phi) ==
                            contains(cx.spec.min, phi),
                        name + ": perp criterion differs from Min membership at " +
                            std::to_string(phi));
        } else {
            s.skip(static_cast<long>(cx.spec.spec.size()));
        }

        if (cx.flags.commutative && cx.flags.join_distributive) {
            int rad0 = cx.spec.radical_of_delta;
            for (int phi : cx.spec.spec) {
                bool rhs = true;
                for (int a = 0; a < cx.lat.size() && rhs; ++a)
                    if (cx.lat.leq(a, phi) &&
                        cx.lat.leq(residuum_index(cx.lat, cx.comm, a, rad0), phi))
                        rhs = false;
                s.check(rhs == contains(cx.spec.min, phi),
                        name + ": residuum-to-radical criterion differs from Min at " +
                            std::to_string(phi));
            }
        }

        // Minimality over theta matches maximality of the complement among
        // m-systems avoiding theta: exhaustive for universes up to 4,
        // sampled (with the deterministic refuters always included) above.
        if (!cx.flags.join_distributive || cx.alg.size() > 8) {
            s.skip();
            continue;
        }
        MSystemOracle oracle(cx);
        const std::uint64_t all_pairs = (cx.alg.size() * cx.alg.size() >= 64)
                                            ? ~0ull
                                            : (1ull << (cx.alg.size() * cx.alg.size())) - 1;
        for (int t = 0; t < cx.lat.size(); ++t) {
            std::uint64_t theta_mask = oracle.mask_of(t);
            std::vector<int> v = vset(cx.lat, cx.spec, t);
            std::vector<int> min_v = min_over(cx.lat, cx.spec, t);
            for (int pos : v) {
                int phi = cx.spec.spec[pos];
                std::uint64_t s_mask = all_pairs & ~oracle.mask_of(phi);
                bool lhs = contains(min_v, phi);

                bool maximal = true;
                std::uint64_t slack = oracle.mask_of(phi) & ~theta_mask; // pairs addable
                int slack_bits = static_cast<int>(__builtin_popcountll(slack));
                std::vector<int> slack_pos;
                for (int bit = 0; bit < 64; ++bit)
                    if (slack & (1ull << bit)) slack_pos.push_back(bit);

                if (cx.alg.size() <= 4) {
                    for (std::uint64_t pick = 1; pick < (1ull << slack_bits) && maximal; ++pick) {
                        std::uint64_t candidate = s_mask;
                        for (int i = 0; i < slack_bits; ++i)
                            if (pick & (1ull << i)) candidate |= 1ull << slack_pos[i];
                        if (oracle.is_m_system_mask(candidate)) maximal = false;
                    }
                } else {
                    // Deterministic refuters first: complements of smaller
                    // primes over theta.
                    for (int pos2 : v) {
                        int psi = cx.spec.spec[pos2];
                        if (psi == phi || !cx.lat.leq(psi, phi)) continue;
                        std::uint64_t candidate = all_pairs & ~oracle.mask_of(psi);
                        if ((candidate & ~s_mask) && !(candidate & theta_mask) &&
                            oracle.is_m_system_mask(candidate))
                            maximal = false;
                    }
                    for (int trial = 0; trial < options.msystem_samples && maximal; ++trial) {
                        std::uint64_t candidate = s_mask;
                        bool added = false;
                        for (int i = 0; i < slack_bits; ++i)
                            if (rng.chance(1, 3)) {
                                candidate |= 1ull << slack_pos[i];
                                added = true;
                            }
                        if (!added && slack_bits > 0) {
                            candidate |= 1ull << slack_pos[static_cast<int>(
                                              rng.below(static_cast<std::uint64_t>(slack_bits)))];
                        }
                        if (candidate != s_mask && oracle.is_m_system_mask(candidate))
                            maximal = false;
                    }
                }
                s.check(lhs == maximal,
                        name + ": minimality over theta " + std::to_string(t) +
                            " differs from m-system maximality at prime " + std::to_string(phi));
            }
        }
    }
    s.extra["msystem_samples"] = options.msystem_samples;
}

// --- topology on the minimal spectrum ----------------------------------------

void suite_min_topology(Suite& s, const std::vector<AlgebraContext>& ctxs) {
    for (const AlgebraContext& cx : ctxs) {
        const std::string& name = cx.alg.name();
        if (!cx.flags.join_distributive) {
            s.skip();
            continue;
        }
        Topology topo = stone_topology(cx.alg, cx.lat, cx.spec, SpectrumPoints::Min);
        s.check(topology_closed_family(topo), name + ": Min opens not closed under set ops");

        auto v_min = [&](int theta) {
            std::vector<int> out;
            for (int pos = 0; pos < static_cast<int>(cx.spec.min.size()); ++pos)
                if (cx.lat.leq(theta, cx.spec.min[pos])) out.push_back(pos);
            return out;
        };
        auto d_min = [&](int theta) {
            std::vector<int> out;
            for (int pos = 0; pos < static_cast<int>(cx.spec.min.size()); ++pos)
                if (!cx.lat.leq(theta, cx.spec.min[pos])) out.push_back(pos);
            return out;
        };
        const int m = cx.lat.size();
        for (int a = 0; a < m; ++a)
            s.check(d_min(a).empty() == cx.lat.leq(a, cx.spec.radical_of_delta),
                    name + ": empty Min open differs from radical bound");

        if (!cx.spec.semiprime) {
            s.skip();
            continue;
        }

        s.check(topology_hausdorff(topo), name + ": Min topology is not Hausdorff");
        s.check(topology_all_clopen(topo), name + ": some Min open is not clopen");

        for (int t = 0; t < m; ++t) {
            Congruence acc = cx.lat.members[cx.lat.nabla];
            for (int pos : v_min(cx.perps[t]))
                acc = pmeet(acc, cx.lat.members[cx.spec.min[pos]]);
            s.check(cx.lat.index_of(acc) == cx.perps[t],
                    name + ": perp is not the meet of its minimal closure");
        }
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                s.check((cx.perps[a] == cx.perps[b]) ==
                            (v_min(cx.perps[a]) == v_min(cx.perps[b])),
                        name + ": perp equality differs from closed-set equality on Min");

        for (int a = 0; a < m; ++a) {
            s.check(v_min(a) == v_min(cx.perps[cx.perps[a]]) && v_min(a) == d_min(cx.perps[a]),
                    name + ": V/D perp exchange fails on Min");
            s.check(d_min(a) == d_min(cx.perps[cx.perps[a]]) && d_min(a) == v_min(cx.perps[a]),
                    name + ": D/V perp exchange fails on Min");
        }
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                for (int g = 0; g < m; ++g) {
                    std::vector<int> lhs, va = v_min(a), vb = v_min(b);
                    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(),
                                          std::back_inserter(lhs));
                    bool set_eq = lhs == v_min(g);
                    bool perp_eq = cx.lat.meet(cx.perps[a], cx.perps[b]) == cx.perps[g];
                    s.check(set_eq == perp_eq,
                            name + ": perp-meet equality differs from V-set equality on Min");
                }
                bool one = cx.perps[cx.perps[a]] == cx.perps[b];
                bool two = cx.perps[a] == cx.perps[cx.perps[b]];
                bool three = v_min(a) == v_min(cx.perps[b]);
                bool four = v_min(a) == d_min(b);
                bool five = d_min(cx.perps[a]) == d_min(b);
                s.check(one == two && two == three && three == four && four == five,
                        name + ": double-perp equivalences fail on Min");
            }
    }
}

// --- classification -----------------------------------------------------------

void suite_classification(Suite& s, const std::vector<AlgebraContext>& ctxs) {
    for (const AlgebraContext& cx : ctxs) {
        const std::string& name = cx.alg.name();
        ClassificationReport report = classification_report(cx.alg, cx.lat, cx.comm);
        BooleanCenter center = boolean_center(cx.lat);

        s.check(center.contains(cx.lat.delta) && center.contains(cx.lat.nabla),
                name + ": center misses delta or nabla");

        if (report.flags.top_neutral && report.flags.commutative &&
            report.flags.join_distributive) {
            for (int e : center.members) {
                for (int a = 0; a < cx.lat.size(); ++a)
                    s.check(cx.comm.at(e, a) == cx.lat.meet(e, a),
                            name + ": commutator with a central congruence is not the meet");
                s.check(center.contains(cx.perps[e]) &&
                            cx.lat.meet(e, cx.perps[e]) == cx.lat.delta &&
                            cx.lat.join(e, cx.perps[e]) == cx.lat.nabla,
                        name + ": perp is not the central complement");
            }
            for (int e : center.members)
                for (int f : center.members) {
                    s.check(center.contains(cx.lat.join(e, f)) &&
                                center.contains(cx.lat.meet(e, f)),
                            name + ": center is not a sublattice");
                }
            s.check(report.implications_checked && report.implications_hold,
                    name + ": classification implications fail");
        } else {
            s.skip();
        }
    }
}

// --- extensions ---------------------------------------------------------------

void run_extension_suite_on(Suite& s, const AlgebraContext& big_ctx, Exec exec,
                            long& extensions_analyzed) {
    std::vector<std::vector<Element>> subs = all_subuniverses(big_ctx.alg);
    for (const auto& sub : subs) {
        ExtensionContext cx =
            extension_context(make_extension(big_ctx.alg, sub), big_ctx, exec);
        ExtensionAnalysis a = analyze_extension(cx);
        ++extensions_analyzed;
        for (const TheoremOutcome& o : a.theorems) {
            if (o.verdict == Verdict::Skipped) {
                s.skip();
                continue;
            }
            s.check(o.verdict == Verdict::Pass,
                    big_ctx.alg.name() + " sub of size " + std::to_string(sub.size()) + ": " +
                        o.name + ": " + o.detail);
        }
        if (sub.size() == static_cast<std::size_t>(big_ctx.alg.size())) {
            s.check(a.rigid && a.quasirigid && a.weak_rigid,
                    big_ctx.alg.name() + ": identity extension is not rigid");
            s.check(a.admissible && a.m_extension,
                    big_ctx.alg.name() + ": identity extension is not an m-extension");
            s.check(a.gamma.homeomorphism.value_or(false),
                    big_ctx.alg.name() + ": identity contraction is not a homeomorphism");
        }
    }
}

void suite_extensions(Suite& s, const VerifyOptions& options, Exec exec) {
    long analyzed = 0;

    // Pinned verdicts.
    {
        AlgebraContext b = make_algebra_context(fixtures::z2z2_ring(), exec);
        ExtensionContext cx =
            extension_context(make_extension(b.alg, {0, 3}), b, exec); // diagonal
        ExtensionAnalysis a = analyze_extension(cx);
        s.check(a.admissible, "diagonal in z2xz2: not admissible");
        s.check(a.m_extension, "diagonal in z2xz2: not an m-extension");
        s.check(a.gamma.surjective.value_or(false), "diagonal in z2xz2: gamma not surjective");
        s.check(!a.gamma.injective.value_or(true), "diagonal in z2xz2: gamma injective");
        for (const TheoremOutcome& o : a.theorems)
            s.check(o.verdict != Verdict::Violation,
                    std::string("diagonal in z2xz2: ") + o.name + ": " + o.detail);
    }
    {
        AlgebraContext b = make_algebra_context(fixtures::zn_ring(6), exec);
        ExtensionContext cx = extension_context(make_extension(b.alg, {0, 3}), b, exec);
        ExtensionAnalysis a = analyze_extension(cx);
        s.check(!a.admissible, "0,3 in z6: unexpectedly admissible");
        bool some_skip = false;
        for (const TheoremOutcome& o : a.theorems) {
            if (o.verdict == Verdict::Skipped && o.detail == "extension not admissible")
                some_skip = true;
            s.check(o.verdict != Verdict::Violation,
                    std::string("0,3 in z6: ") + o.name + ": " + o.detail);
        }
        s.check(some_skip, "0,3 in z6: admissibility-gated statements were not skipped");
    }

    // Catalog of small algebras over the three fixture signatures.
    std::vector<FiniteAlgebra> catalog;
    for (int n = 2; n <= 5; ++n) catalog.push_back(fixtures::zn_ring(n));
    catalog.push_back(fixtures::z2z2_ring());
    for (int n = 2; n <= 5; ++n) catalog.push_back(fixtures::zn_group(n));
    catalog.push_back(fixtures::v4_group());
    for (int n = 2; n <= 5; ++n) catalog.push_back(fixtures::chain_lattice(n));
    catalog.push_back(fixtures::b4_lattice());
    catalog.push_back(fixtures::n5_lattice());
    catalog.push_back(fixtures::m3_lattice());
    catalog.push_back(fixtures::one_element());
    for (const FiniteAlgebra& alg : catalog)
        run_extension_suite_on(s, make_algebra_context(alg, exec), exec, analyzed);

    // Seeded random algebras.
    Rng rng(options.seed * 0x9e3779b97f4a7c15ull + 4);
    long redraws = 0;
    for (int i = 0; i < options.random_algebras; ++i) {
        FiniteAlgebra alg = random_algebra_capped(rng, options.max_size, 24, redraws);
        run_extension_suite_on(s, make_algebra_context(alg, exec), exec, analyzed);
    }
    s.extra["extensions_analyzed"] = analyzed;
    s.extra["catalog_size"] = static_cast<long>(catalog.size());
    s.extra["random_redraws"] = redraws;
}

// --- ring sanity (pinned values) ----------------------------------------------

void suite_ring_sanity(Suite& s, Exec exec) {
    {
        AlgebraContext cx = make_algebra_context(fixtures::zn_ring(6), exec);
        s.check(cx.lat.size() == 4, "z6: |Con| != 4");
        Congruence theta2 = cg(cx.alg, std::vector<ElementPair>{{0, 2}});
        Congruence theta3 = cg(cx.alg, std::vector<ElementPair>{{0, 3}});
        int i2 = cx.lat.index_of(theta2), i3 = cx.lat.index_of(theta3);
        std::vector<int> expected{std::min(i2, i3), std::max(i2, i3)};
        s.check(cx.spec.spec == expected && cx.spec.min == expected && cx.spec.max == expected,
                "z6: Spec/Min/Max differ from the two mod-congruences");
        s.check(cx.spec.semiprime, "z6: not semiprime");
        s.check(cx.perps[i2] == i3 && cx.perps[i3] == i2, "z6: perp exchange fails");
        ClassificationReport cls = classification_report(cx.alg, cx.lat, cx.comm);
        s.check(cls.baer && cls.hyperarchimedean && cls.strongly_baer, "z6: classification");
        s.check(!cls.abelian, "z6: abelian");
    }
    {
        AlgebraContext cx = make_algebra_context(fixtures::zn_ring(4), exec);
        s.check(cx.lat.size() == 3, "z4: |Con| != 3");
        bool chain = true;
        for (int i = 0; i < cx.lat.size(); ++i)
            for (int j = 0; j < cx.lat.size(); ++j)
                if (!cx.lat.leq(i, j) && !cx.lat.leq(j, i)) chain = false;
        s.check(chain, "z4: Con is not a chain");
        Congruence theta2 = cg(cx.alg, std::vector<ElementPair>{{0, 2}});
        int i2 = cx.lat.index_of(theta2);
        s.check(cx.spec.spec == std::vector<int>{i2}, "z4: Spec != {theta2}");
        s.check(cx.spec.radical_of_delta == i2, "z4: radical of delta != theta2");
        s.check(!cx.spec.semiprime, "z4: semiprime");
        ClassificationReport cls = classification_report(cx.alg, cx.lat, cx.comm);
        s.check(!cls.baer, "z4: Baer");
        s.check(cx.perps[i2] == i2, "z4: perp(theta2) != theta2");
    }
}

} // namespace

VerifyResult run_verify(const VerifyOptions& raw_options, Exec exec) {
    VerifyOptions options = raw_options;
    options.max_size = std::max(2, options.max_size);

    std::vector<AlgebraContext> ctxs;
    for (FiniteAlgebra& alg : core_fixtures()) ctxs.push_back(make_algebra_context(std::move(alg), exec));

    std::vector<Suite> suites;
    auto wanted = [&](const char* name) {
        if (options.suites.empty()) return true;
        for (const std::string& s : options.suites)
            if (s == name) return true;
        return false;
    };
    auto run = [&](const char* name, auto&& body) {
        if (!wanted(name)) return;
        Suite s;
        s.name = name;
        body(s);
        suites.push_back(std::move(s));
    };

    run("commutator-oracle", [&](Suite& s) { suite_commutator_oracle(s, ctxs); });
    run("distributive-meet-collapse", [&](Suite& s) { suite_meet_collapse(s, ctxs); });
    run("ring-sanity", [&](Suite& s) { suite_ring_sanity(s, exec); });
    run("quotient-congruence-generation",
        [&](Suite& s) { suite_quotient_cg(s, options, exec); });
    run("residuation-identities", [&](Suite& s) { suite_residuation(s, ctxs, exec); });
    run("radical-characterization",
        [&](Suite& s) { suite_radical_characterization(s, ctxs); });
    run("spectrum-identities", [&](Suite& s) { suite_spectrum_identities(s, ctxs); });
    run("minimal-prime-characterizations",
        [&](Suite& s) { suite_minimal_primes(s, ctxs, options); });
    run("min-topology", [&](Suite& s) { suite_min_topology(s, ctxs); });
    run("classification", [&](Suite& s) { suite_classification(s, ctxs); });
    run("extension-theorems", [&](Suite& s) { suite_extensions(s, options, exec); });

    VerifyResult result;
    long total = 0;
    Json suite_list = Json::array();
    for (const Suite& s : suites) {
        total += s.violation_count;
        suite_list.push_back(s.to_json());
    }
    result.report["schema"] = kSchemaVersion;
    result.report["report"] = "verify";
    result.report["seed"] = options.seed;
    result.report["max_size"] = options.max_size;
    result.report["random_algebras"] = options.random_algebras;
    result.report["quotient_triples"] = options.quotient_triples;
    result.report["suites"] = std::move(suite_list);
    result.report["violation_total"] = total;
    result.report["result"] = total == 0 ? "ok" : "violation";
    result.violation = total != 0;
    return result;
}

} // namespace ualg
