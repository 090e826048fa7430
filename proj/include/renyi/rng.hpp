#pragma once

#include <cstdint>

#include "renyi/common.hpp"

namespace renyi {

/// Counter-based random stream: every draw is a pure function of
/// (key, counter), so independent substreams can be generated in parallel
/// and adding columns/trials never reshuffles earlier ones.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t key) : key_(key) {}

    /// Substream derived from a tag; stable under unrelated code changes.
    RandomStream derive(std::uint64_t tag) const;

    std::uint64_t next_u64();
    /// Uniform in [0, 1).
    double next_uniform();
    /// Standard normal via Box-Muller (platform-independent, no libm state).
    double next_gaussian();

    /// Fill a vector/matrix with i.i.d. standard normals.
    void fill_gaussian(Vector& v);
    void fill_gaussian(Matrix& m);

    std::uint64_t key() const noexcept { return key_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// 64-bit mix used both for stream derivation and hashing names/content.
std::uint64_t mix64(std::uint64_t x);

/// Combine a seed with a label (e.g. a term name) into a substream key.
std::uint64_t derive_key(std::uint64_t seed, std::uint64_t tag);
std::uint64_t hash_name(const char* name);

} // namespace renyi
