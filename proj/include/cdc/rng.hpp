#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace cdc {

/// Deterministic RNG wrapper. mt19937_64 is fully specified by the standard,
/// and below()/shuffle() avoid std::uniform_int_distribution (whose output is
/// implementation-defined), so streams are identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform value in [0, n). Modulo bias is irrelevant at desk scale.
    std::uint64_t below(std::uint64_t n) { return n <= 1 ? 0 : eng_() % n; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace cdc
