#ifndef UALG_IO_HPP
#define UALG_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ualg/classify.hpp"
#include "ualg/extensions.hpp"

namespace ualg {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "cspec/1";

/// Line-oriented algebra file:
///   algebra <name>
///   size <n>
///   elements a b c ...           (optional; exactly n names)
///   op <name> <arity>
///   <n^arity entries, whitespace separated, leftmost argument slowest>
/// Table entries are indices or declared element names.
struct AlgebraFile {
    FiniteAlgebra algebra;
    std::vector<std::string> element_names; // empty when not declared
};

/// Throws input_error with line:column diagnostics.
AlgebraFile parse_algebra_file(std::string_view text);
AlgebraFile load_algebra_file(const std::string& path);

/// Canonical form: one table row per leading argument, entries as indices.
/// parse(serialize(f)) == f, and serialize(parse(text)) is the
/// whitespace-normalized form of text.
std::string serialize_algebra(const AlgebraFile& file);

std::string format_blocks(const Congruence& c);

/// "0-2,1-3" -> {(0,2),(1,3)}; validated against the universe size.
std::vector<ElementPair> parse_pair_list(std::string_view text, int universe);

Json con_report(const AlgebraFile& file, const ConLattice& lat);
Json commutator_report(const AlgebraFile& file, const ConLattice& lat,
                       const Congruence& alpha, const Congruence& beta,
                       const Congruence& value);
Json spectrum_report(const AlgebraFile& file, const ConLattice& lat, const CommutatorTable& table,
                     const SpectrumReport& spec);
Json classification_json(const AlgebraFile& file, const ConLattice& lat,
                         const ClassificationReport& report);
Json extension_report(const AlgebraFile& file, const ExtensionContext& cx,
                      const ExtensionAnalysis& analysis);

/// Plain-text rendering of a report object: stable "key: value" lines.
std::string render_text(const Json& report);

/// Hasse diagram of the lattice with Spec / Min / Max / Boolean-center
/// decorations. Node order follows the lattice's canonical member order, so
/// output is identical across runs and platforms.
std::string export_dot_con(const ConLattice& lat, const SpectrumReport* spec,
                           const BooleanCenter* center);

/// Point diagram of a topology (no edges; finite Stone spaces on Min are
/// discrete whenever they are Hausdorff).
std::string export_dot_topology(const ConLattice& lat, const Topology& topo,
                                const std::string& title);

} // namespace ualg

#endif
