#include "renyi/rng.hpp"

#include <cmath>
#include <numbers>

namespace renyi {

std::uint64_t mix64(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_key(std::uint64_t seed, std::uint64_t tag) {
    return mix64(seed ^ mix64(tag + 0x6a09e667f3bcc909ULL));
}

std::uint64_t hash_name(const char* name) {
    // FNV-1a
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char* p = name; *p; ++p) {
        h ^= static_cast<unsigned char>(*p);
        h *= 0x100000001b3ULL;
    }
    return h;
}

RandomStream RandomStream::derive(std::uint64_t tag) const {
    return RandomStream(derive_key(key_, tag));
}

std::uint64_t RandomStream::next_u64() { return mix64(key_ ^ mix64(counter_++)); }

double RandomStream::next_uniform() {
    // 53-bit mantissa in [0, 1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::next_gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = next_uniform();
    while (u1 <= 0.0) u1 = next_uniform();
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

void RandomStream::fill_gaussian(Vector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = next_gaussian();
}

void RandomStream::fill_gaussian(Matrix& m) {
    // column-wise so an n x k fill is prefix-stable in k
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, j) = next_gaussian();
}

} // namespace renyi
