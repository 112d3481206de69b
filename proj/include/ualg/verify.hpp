#ifndef UALG_VERIFY_HPP
#define UALG_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ualg/io.hpp"

namespace ualg {

struct VerifyOptions {
    std::uint64_t seed = 0;
    int max_size = 5;             // universe bound for generated algebras
    int random_algebras = 100;    // extension suite budget
    int quotient_triples = 200;   // quotient identity suite budget
    int msystem_samples = 1000;   // sampled maximality refuters per check
    std::vector<std::string> suites; // run only these when nonempty
};

struct VerifyResult {
    Json report;
    bool violation = false;
};

/// Runs every property suite on the built-in fixtures and on seeded random
/// algebras and extensions. Identities whose hypotheses fail on an instance
/// are counted as skipped; failed conclusions are violations and are listed
/// in the report verbatim. Output is deterministic for a fixed seed.
VerifyResult run_verify(const VerifyOptions& options, Exec exec = Exec::Auto);

} // namespace ualg

#endif
