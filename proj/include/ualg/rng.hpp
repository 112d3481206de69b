#ifndef UALG_RNG_HPP
#define UALG_RNG_HPP

#include <cstdint>

namespace ualg {

/// splitmix64: deterministic across platforms and standard libraries, which
/// the seeded suites rely on for byte-identical reports.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, n); modulo bias is irrelevant at these sizes.
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::uint64_t state_;
};

} // namespace ualg

#endif
