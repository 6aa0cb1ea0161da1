#include "hkens/rng.hpp"

#include <cmath>
#include <numbers>

#include "hkens/errors.hpp"

namespace hkens {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed), state_(seed) {
    // one warm-up step so seed 0 does not start at state 0
    splitmix64(state_);
}

Rng Rng::stream(std::uint64_t stream_id) const {
    std::uint64_t s = seed_ ^ (0xD1B54A32D192ED03ULL * (stream_id + 1));
    splitmix64(s);
    return Rng(s);
}

std::uint64_t Rng::next_u64() {
    return splitmix64(state_);
}

double Rng::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::size_t Rng::next_below(std::size_t n) {
    if (n == 0) {
        throw InternalError("next_below(0)");
    }
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = next_u64();
    while (x >= limit) {
        x = next_u64();
    }
    return static_cast<std::size_t>(x % bound);
}

double Rng::next_normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_normal_;
    }
    // Box-Muller on (0,1] x [0,1)
    double u1 = 1.0 - next_unit();
    double u2 = next_unit();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * std::numbers::pi * u2;
    spare_normal_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

std::vector<std::size_t> Rng::sample_without_replacement(std::size_t n, std::size_t k) {
    if (k > n) {
        throw ConfigError("cannot sample " + std::to_string(k) + " distinct values from " +
                          std::to_string(n));
    }
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) {
        pool[i] = i;
    }
    // partial Fisher-Yates; first k slots are the draws in order
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = i + next_below(n - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

}  // namespace hkens
