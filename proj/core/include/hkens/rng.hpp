#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hkens {

// Deterministic generator (splitmix64 core). All sampling goes through
// explicit reductions, so a given seed reproduces the same stream on any
// platform or compiler. Every run derives its stage generators from one
// seed via fixed stream ids.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    // Independent generator for a pipeline stage; fixed map of (seed, id).
    Rng stream(std::uint64_t stream_id) const;

    std::uint64_t next_u64();
    double next_unit();                      // [0, 1)
    std::size_t next_below(std::size_t n);   // unbiased uniform in [0, n)
    double next_normal();                    // standard normal (Box-Muller)

    // k distinct values from {0..n-1}, in draw order.
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k);

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = next_below(i);
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::uint64_t seed_;
    std::uint64_t state_;
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace hkens
