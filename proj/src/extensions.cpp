#include "ualg/extensions.hpp"

#include <algorithm>

#include "ualg/errors.hpp"

namespace ualg {

Extension make_extension(const FiniteAlgebra& big, std::vector<Element> sub) {
    std::sort(sub.begin(), sub.end());
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    if (sub.empty()) throw input_error("subalgebra universe is empty");
    for (Element x : sub)
        if (x < 0 || x >= big.size()) throw input_error("subalgebra element out of range");
    if (subalgebra_generate(big, sub) != sub)
        throw input_error("subset is not closed under the operations");

    const int m = static_cast<int>(sub.size());
    std::vector<int> position(big.size(), -1);
    for (int i = 0; i < m; ++i) position[sub[i]] = i;

    const Signature& sig = big.signature();
    std::vector<std::vector<Element>> tables(sig.count());
    std::vector<Element> args;
    for (int op = 0; op < sig.count(); ++op) {
        const int k = sig.arity(op);
        std::size_t len = 1;
        for (int i = 0; i < k; ++i) len *= static_cast<std::size_t>(m);
        tables[op].resize(len);
        std::vector<std::size_t> pos(k, 0);
        std::size_t idx = 0;
        while (true) {
            args.resize(k);
            for (int i = 0; i < k; ++i) args[i] = sub[pos[i]];
            tables[op][idx++] = position[big.apply(op, args)];
            int i = k - 1;
            while (i >= 0 && ++pos[i] == static_cast<std::size_t>(m)) pos[i--] = 0;
            if (i < 0) break;
        }
    }
    FiniteAlgebra induced(big.name() + ".sub", m, sig, std::move(tables));
    return Extension{big, std::move(sub), std::move(induced)};
}

Congruence contract(const Extension& ext, const Congruence& beta) {
    const int m = static_cast<int>(ext.sub.size());
    if (beta.size() != ext.big.size())
        throw input_error("congruence size does not match the big algebra");
    UnionFind uf(m);
    for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y)
            if (beta.related(ext.sub[x], ext.sub[y])) uf.unite(x, y);
    return Congruence::from_union_find(uf);
}

ExtensionContext extension_context(Extension ext, Exec exec) {
    AlgebraContext big = make_algebra_context(ext.big, exec);
    return extension_context(std::move(ext), big, exec);
}

ExtensionContext extension_context(Extension ext, const AlgebraContext& big, Exec exec) {
    ExtensionContext cx;
    cx.ext = std::move(ext);
    cx.lat_b = big.lat;
    cx.comm_b = big.comm;
    cx.flags_b = big.flags;
    cx.spec_b = big.spec;
    cx.perp_b = big.perps;
    if (cx.ext.sub.size() == static_cast<std::size_t>(cx.ext.big.size())) {
        // Identity extension: the induced algebra has the same tables.
        cx.lat_a = big.lat;
        cx.comm_a = big.comm;
        cx.flags_a = big.flags;
        cx.spec_a = big.spec;
        cx.perp_a = big.perps;
    } else {
        cx.lat_a = con_lattice(cx.ext.induced, exec);
        cx.comm_a = commutator_table(cx.ext.induced, cx.lat_a, exec);
        cx.flags_a = hypothesis_flags(cx.lat_a, cx.comm_a);
        cx.spec_a = spectrum(cx.lat_a, cx.comm_a);
        cx.perp_a = perp_all(cx.lat_a, cx.comm_a);
    }

    cx.up.resize(cx.lat_a.size());
    for (int i = 0; i < cx.lat_a.size(); ++i) {
        std::vector<ElementPair> pairs;
        for (auto [x, y] : cx.lat_a.members[i].pairs())
            pairs.emplace_back(cx.ext.sub[x], cx.ext.sub[y]);
        cx.up[i] = cx.lat_b.index_of(cg(cx.ext.big, pairs));
    }
    cx.down.resize(cx.lat_b.size());
    for (int j = 0; j < cx.lat_b.size(); ++j)
        cx.down[j] = cx.lat_a.index_of(contract(cx.ext, cx.lat_b.members[j]));
    return cx;
}

bool contained_in_big(const ExtensionContext& cx, int alpha_a, int mu_b) {
    // alpha <= mu iff alpha <= contraction of mu.
    return cx.lat_a.leq(alpha_a, cx.down[mu_b]);
}

bool is_admissible(const ExtensionContext& cx) {
    for (int phi : cx.spec_b.spec) {
        int c = cx.down[phi];
        if (!std::binary_search(cx.spec_a.spec.begin(), cx.spec_a.spec.end(), c)) return false;
    }
    return true;
}

bool is_m_extension(const ExtensionContext& cx) {
    for (int mu : cx.spec_b.min) {
        int c = cx.down[mu];
        if (std::find(cx.spec_a.min.begin(), cx.spec_a.min.end(), c) == cx.spec_a.min.end())
            return false;
    }
    return true;
}

namespace {

const std::vector<int>& alpha_range(const ExtensionContext& cx, RigidKind kind,
                                    std::vector<int>& scratch) {
    // Quasirigid ranges over the compact congruences, which in a finite
    // algebra are all of them, same as the weak variant.
    if (kind == RigidKind::Rigid) return cx.lat_a.principal;
    scratch.resize(cx.lat_a.size());
    for (int i = 0; i < cx.lat_a.size(); ++i) scratch[i] = i;
    return scratch;
}

} // namespace

bool rigidity_check(const ExtensionContext& cx, RigidKind kind) {
    std::vector<int> scratch;
    const std::vector<int>& range = alpha_range(cx, kind, scratch);
    for (int beta : cx.lat_b.principal) {
        bool found = false;
        for (int alpha : range)
            if (cx.perp_b[cx.up[alpha]] == cx.perp_b[beta]) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

bool r_family_check(const ExtensionContext& cx, RigidKind kind, bool star) {
    std::vector<int> scratch;
    const std::vector<int>& range = alpha_range(cx, kind, scratch);
    for (int mu : cx.spec_b.min)
        for (int beta : cx.lat_b.principal) {
            if (star != cx.lat_b.leq(beta, mu)) continue;
            bool found = false;
            for (int alpha : range) {
                if (star) {
                    if (contained_in_big(cx, alpha, mu) &&
                        cx.lat_b.leq(cx.perp_b[cx.up[alpha]], cx.perp_b[beta])) {
                        found = true;
                        break;
                    }
                } else {
                    if (!contained_in_big(cx, alpha, mu) &&
                        cx.lat_b.leq(cx.perp_b[beta], cx.perp_b[cx.up[alpha]])) {
                        found = true;
                        break;
                    }
                }
            }
            if (!found) return false;
        }
    return true;
}

GammaAnalysis gamma_analysis(const ExtensionContext& cx) {
    GammaAnalysis g;
    g.map.resize(cx.spec_b.min.size(), -1);
    for (std::size_t i = 0; i < cx.spec_b.min.size(); ++i) {
        int c = cx.down[cx.spec_b.min[i]];
        auto it = std::find(cx.spec_a.min.begin(), cx.spec_a.min.end(), c);
        if (it != cx.spec_a.min.end()) g.map[i] = static_cast<int>(it - cx.spec_a.min.begin());
    }
    g.total = std::all_of(g.map.begin(), g.map.end(), [](int v) { return v >= 0; });
    if (!g.total) return g; // partial map, verdicts suppressed

    std::vector<bool> hit(cx.spec_a.min.size(), false);
    bool injective = true;
    for (int v : g.map) {
        if (hit[v]) injective = false;
        hit[v] = true;
    }
    g.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    g.injective = injective;

    Topology ta = stone_topology(cx.ext.induced, cx.lat_a, cx.spec_a, SpectrumPoints::Min);
    Topology tb = stone_topology(cx.ext.big, cx.lat_b, cx.spec_b, SpectrumPoints::Min);
    std::vector<std::vector<int>> opens_a = ta.opens, opens_b = tb.opens;
    std::sort(opens_a.begin(), opens_a.end());
    std::sort(opens_b.begin(), opens_b.end());

    bool continuous = true;
    for (const auto& open : ta.opens) {
        std::vector<int> pre;
        for (int i = 0; i < static_cast<int>(g.map.size()); ++i)
            if (std::binary_search(open.begin(), open.end(), g.map[i])) pre.push_back(i);
        if (!std::binary_search(opens_b.begin(), opens_b.end(), pre)) {
            continuous = false;
            break;
        }
    }
    g.continuous = continuous;

    bool open_map = true;
    for (const auto& open : tb.opens) {
        std::vector<int> image;
        for (int i : open) image.push_back(g.map[i]);
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        if (!std::binary_search(opens_a.begin(), opens_a.end(), image)) {
            open_map = false;
            break;
        }
    }
    g.homeomorphism = continuous && injective && *g.surjective && open_map;
    return g;
}

ExtensionAnalysis analyze_extension(const ExtensionContext& cx) {
    ExtensionAnalysis a;
    a.admissible = is_admissible(cx);
    a.m_extension = is_m_extension(cx);
    a.gamma = gamma_analysis(cx);
    a.rigid = rigidity_check(cx, RigidKind::Rigid);
    a.quasirigid = rigidity_check(cx, RigidKind::Quasirigid);
    a.weak_rigid = rigidity_check(cx, RigidKind::Weak);
    a.r_ext = r_family_check(cx, RigidKind::Rigid, false);
    a.quasi_r = r_family_check(cx, RigidKind::Quasirigid, false);
    a.weak_r = r_family_check(cx, RigidKind::Weak, false);
    a.r_star = r_family_check(cx, RigidKind::Rigid, true);
    a.quasi_r_star = r_family_check(cx, RigidKind::Quasirigid, true);
    a.weak_r_star = r_family_check(cx, RigidKind::Weak, true);
    a.semiprime_a = cx.spec_a.semiprime;
    a.semiprime_b = cx.spec_b.semiprime;

    const bool blanket = a.semiprime_a && a.semiprime_b && cx.flags_a.commutative &&
                         cx.flags_a.join_distributive && cx.flags_b.commutative &&
                         cx.flags_b.join_distributive;
    std::string blanket_why;
    if (!a.semiprime_a) blanket_why = "subalgebra not semiprime";
    else if (!a.semiprime_b) blanket_why = "big algebra not semiprime";
    else if (!cx.flags_a.commutative || !cx.flags_a.join_distributive)
        blanket_why = "subalgebra commutator flags fail";
    else if (!cx.flags_b.commutative || !cx.flags_b.join_distributive)
        blanket_why = "big algebra commutator flags fail";

    auto run = [&](const char* name, bool hyps, const std::string& why, auto&& conclusion) {
        TheoremOutcome o{name, Verdict::Skipped, why};
        if (hyps) {
            std::string witness;
            bool ok = conclusion(witness);
            o.verdict = ok ? Verdict::Pass : Verdict::Violation;
            o.detail = ok ? std::string() : witness;
        }
        a.theorems.push_back(std::move(o));
    };
    auto hyp_why = [&](bool extra, const char* extra_why) {
        if (!blanket) return blanket_why;
        if (!extra) return std::string(extra_why);
        return std::string();
    };

    const bool adm = a.admissible;
    run("minimal-contraction-annihilator-criterion", blanket && adm,
        hyp_why(adm, "extension not admissible"), [&](std::string& w) {
            bool s2 = true, s3 = true;
            for (int alpha = 0; alpha < cx.lat_a.size(); ++alpha)
                for (int mu : cx.spec_b.min) {
                    bool in = contained_in_big(cx, alpha, mu);
                    bool perp_in = contained_in_big(cx, cx.perp_a[alpha], mu);
                    if (in && perp_in) s2 = false;
                    if (in == perp_in) s3 = false;
                }
            if ((a.m_extension != s2) || (s2 != s3)) {
                w = "equivalence broke: m-extension=" + std::to_string(a.m_extension) +
                    " implication-form=" + std::to_string(s2) + " iff-form=" + std::to_string(s3);
                return false;
            }
            return true;
        });

    run("prime-contraction-cover", blanket && adm, hyp_why(adm, "extension not admissible"),
        [&](std::string& w) {
            for (int psi : cx.spec_a.spec) {
                bool found = false;
                for (int mu : cx.spec_b.min)
                    if (cx.lat_a.leq(cx.down[mu], psi)) {
                        found = true;
                        break;
                    }
                if (!found) {
                    w = "no minimal prime of B contracts below prime " + std::to_string(psi);
                    return false;
                }
            }
            return true;
        });

    run("minimal-contraction-surjective", blanket && adm, hyp_why(adm, "extension not admissible"),
        [&](std::string& w) {
            for (int psi : cx.spec_a.min) {
                bool found = false;
                for (int mu : cx.spec_b.min)
                    if (cx.down[mu] == psi) {
                        found = true;
                        break;
                    }
                if (!found) {
                    w = "minimal prime " + std::to_string(psi) + " of A is not a contraction";
                    return false;
                }
            }
            return true;
        });

    const bool mex = a.m_extension;
    const bool adm_mex = adm && mex;
    auto adm_mex_why = [&]() {
        return std::string(!adm ? "extension not admissible" : "not an m-extension");
    };
    run("trivial-commutator-transfer", blanket && adm_mex, hyp_why(adm_mex, adm_mex_why().c_str()),
        [&](std::string& w) {
            for (int i = 0; i < cx.lat_a.size(); ++i)
                for (int j = 0; j < cx.lat_a.size(); ++j) {
                    bool below = cx.comm_a.at(i, j) == cx.lat_a.delta;
                    bool above = cx.comm_b.at(cx.up[i], cx.up[j]) == cx.lat_b.delta;
                    if (below != above) {
                        w = "commutator triviality differs at pair (" + std::to_string(i) + "," +
                            std::to_string(j) + ")";
                        return false;
                    }
                }
            return true;
        });

    // The B-side annihilator restricts to the A-side one, and is generated
    // by it up to closure under the minimal primes of B. (The closure is
    // needed: a subalgebra whose top congruence generates a proper
    // congruence of B can leave Cg_B(theta^perpA) strictly below
    // theta^perpB while both sit under the same minimal primes.)
    run("annihilator-restriction-and-generation", blanket && adm_mex,
        hyp_why(adm_mex, adm_mex_why().c_str()), [&](std::string& w) {
            for (int i = 0; i < cx.lat_a.size(); ++i) {
                int perp_up = cx.perp_b[cx.up[i]];
                int generated = cx.up[cx.perp_a[i]];
                if (cx.down[perp_up] != cx.perp_a[i]) {
                    w = "annihilator restriction fails at congruence " + std::to_string(i);
                    return false;
                }
                if (!cx.lat_b.leq(generated, perp_up)) {
                    w = "generated annihilator escapes at congruence " + std::to_string(i);
                    return false;
                }
                Congruence closure = cx.lat_b.members[cx.lat_b.nabla];
                for (int mu : cx.spec_b.min)
                    if (cx.lat_b.leq(generated, mu))
                        closure = pmeet(closure, cx.lat_b.members[mu]);
                if (cx.lat_b.index_of(closure) != perp_up) {
                    w = "annihilator generation fails at congruence " + std::to_string(i);
                    return false;
                }
            }
            return true;
        });

    run("annihilator-equality-transfer", blanket && adm_mex,
        hyp_why(adm_mex, adm_mex_why().c_str()),
        [&](std::string& w) {
            for (int i = 0; i < cx.lat_a.size(); ++i)
                for (int j = 0; j < cx.lat_a.size(); ++j) {
                    bool down_eq = cx.perp_a[i] == cx.perp_a[j];
                    bool up_eq = cx.perp_b[cx.up[i]] == cx.perp_b[cx.up[j]];
                    if (down_eq != up_eq) {
                        w = "annihilator equality differs at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")";
                        return false;
                    }
                }
            return true;
        });

    run("rigidity-implies-r-families", blanket && mex, hyp_why(mex, "not an m-extension"),
        [&](std::string& w) {
            if (a.weak_rigid && !(a.weak_r && a.weak_r_star)) {
                w = "weak rigid without weak r / weak r*";
                return false;
            }
            if (a.quasirigid && !(a.quasi_r && a.quasi_r_star)) {
                w = "quasirigid without quasi r / quasi r*";
                return false;
            }
            if (a.rigid && !(a.r_ext && a.r_star)) {
                w = "rigid without r / r*";
                return false;
            }
            return true;
        });

    run("contraction-map-continuous", blanket && adm_mex,
        hyp_why(adm_mex, adm_mex_why().c_str()),
        [&](std::string& w) {
            if (!a.gamma.continuous.value_or(false)) {
                w = "contraction map is not continuous";
                return false;
            }
            return true;
        });

    const bool inj = adm_mex && a.gamma.injective.value_or(false);
    run("injective-contraction-is-homeomorphism", blanket && inj,
        hyp_why(inj, adm_mex ? "contraction map not injective" : adm_mex_why().c_str()),
        [&](std::string& w) {
            if (!a.gamma.homeomorphism.value_or(false)) {
                w = "injective contraction map is not a homeomorphism";
                return false;
            }
            if (!a.weak_rigid) {
                w = "injective contraction map without weak rigidity";
                return false;
            }
            return true;
        });

    run("weak-r-upgrade", blanket && adm && a.weak_r,
        hyp_why(adm && a.weak_r, adm ? "not a weak r-extension" : "extension not admissible"),
        [&](std::string& w) {
            if (!a.m_extension) {
                w = "weak r-extension is not an m-extension";
                return false;
            }
            if (!a.r_ext) {
                w = "weak r-extension is not an r-extension";
                return false;
            }
            if (!a.gamma.homeomorphism.value_or(false)) {
                w = "weak r-extension without contraction homeomorphism";
                return false;
            }
            return true;
        });

    run("weak-r-star-upgrade", blanket && adm && a.weak_r_star,
        hyp_why(adm && a.weak_r_star,
                adm ? "not a weak r*-extension" : "extension not admissible"),
        [&](std::string& w) {
            if (!a.m_extension) {
                w = "weak r*-extension is not an m-extension";
                return false;
            }
            if (!a.r_star) {
                w = "weak r*-extension is not an r*-extension";
                return false;
            }
            if (!a.gamma.homeomorphism.value_or(false)) {
                w = "weak r*-extension without contraction homeomorphism";
                return false;
            }
            return true;
        });

    run("admissible-weak-family-collapse", blanket && adm,
        hyp_why(adm, "extension not admissible"), [&](std::string& w) {
            bool v = a.weak_rigid;
            if (a.weak_r != v || a.weak_r_star != v || a.r_ext != v || a.r_star != v) {
                w = "weak rigid / weak r / weak r* / r / r* verdicts disagree";
                return false;
            }
            return true;
        });

    return a;
}

std::vector<std::vector<Element>> all_subuniverses(const FiniteAlgebra& alg) {
    const int n = alg.size();
    if (n > 20) throw input_error("subuniverse enumeration limited to 20 elements");
    std::vector<std::vector<Element>> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<Element> subset;
        for (int x = 0; x < n; ++x)
            if (mask & (1u << x)) subset.push_back(x);
        if (subalgebra_generate(alg, subset) == subset) out.push_back(std::move(subset));
    }
    return out;
}

} // namespace ualg
