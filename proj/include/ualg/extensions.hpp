#ifndef UALG_EXTENSIONS_HPP
#define UALG_EXTENSIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "ualg/classify.hpp"
#include "ualg/context.hpp"

namespace ualg {

/// A subalgebra extension: the big algebra, the closed subset of its
/// universe, and the induced algebra rebuilt on a dense universe. The
/// inclusion map is sub itself (induced index -> big element).
struct Extension {
    FiniteAlgebra big;
    std::vector<Element> sub; // sorted, closed under all operations
    FiniteAlgebra induced;
};

/// Validates closure (subalgebra_generate(sub) == sub, which also forces all
/// constants in) and builds the induced algebra.
Extension make_extension(const FiniteAlgebra& big, std::vector<Element> sub);

/// Restriction of a congruence of the big algebra to the subalgebra; always
/// a congruence of the induced algebra.
Congruence contract(const Extension& ext, const Congruence& beta);

enum class RigidKind { Rigid, Quasirigid, Weak };

enum class Verdict { Pass, Skipped, Violation };

struct TheoremOutcome {
    std::string name;
    Verdict verdict = Verdict::Skipped;
    std::string detail; // failing hypothesis for Skipped, witness for Violation
};

/// Everything computed once per extension: lattices, commutator tables,
/// spectra and perps on both sides, plus the two translation tables between
/// them (congruence generation upward, contraction downward).
struct ExtensionContext {
    Extension ext;
    ConLattice lat_a, lat_b;
    CommutatorTable comm_a, comm_b;
    HypothesisFlags flags_a, flags_b;
    SpectrumReport spec_a, spec_b;
    std::vector<int> perp_a, perp_b;
    std::vector<int> up;   // Con(A) index -> Con(B) index of Cg_B(alpha)
    std::vector<int> down; // Con(B) index -> Con(A) index of the contraction
};

ExtensionContext extension_context(Extension ext, Exec exec = Exec::Auto);

/// Same, but reusing an already-built context of the big algebra; with the
/// full universe as subset the context is reused for both sides.
ExtensionContext extension_context(Extension ext, const AlgebraContext& big, Exec exec = Exec::Auto);

/// Does alpha (a congruence of A) sit inside mu (a congruence of B) once
/// pushed through the inclusion?
bool contained_in_big(const ExtensionContext& cx, int alpha_a, int mu_b);

bool is_admissible(const ExtensionContext& cx);
bool is_m_extension(const ExtensionContext& cx);

bool rigidity_check(const ExtensionContext& cx, RigidKind kind);
bool r_family_check(const ExtensionContext& cx, RigidKind kind, bool star);

struct GammaAnalysis {
    std::vector<int> map;       // per Min(B) position: position in Min(A), or -1
    bool total = false;         // the extension is an m-extension
    // Verdicts are only meaningful when total; otherwise left unset.
    std::optional<bool> surjective, injective, continuous, homeomorphism;
};

GammaAnalysis gamma_analysis(const ExtensionContext& cx);

struct ExtensionAnalysis {
    bool admissible = false;
    bool m_extension = false;
    GammaAnalysis gamma;
    bool rigid = false, quasirigid = false, weak_rigid = false;
    bool r_ext = false, quasi_r = false, weak_r = false;
    bool r_star = false, quasi_r_star = false, weak_r_star = false;
    bool semiprime_a = false, semiprime_b = false;
    std::vector<TheoremOutcome> theorems;
};

/// Full verdict suite. Statement hypotheses are evaluated first; failures
/// are reported as Skipped with the failing hypothesis named, conclusion
/// failures as Violation. Violations are surfaced, never suppressed.
ExtensionAnalysis analyze_extension(const ExtensionContext& cx);

/// All subuniverses of the algebra (nonempty, containing constants), sorted.
std::vector<std::vector<Element>> all_subuniverses(const FiniteAlgebra& alg);

} // namespace ualg

#endif
