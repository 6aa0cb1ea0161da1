#pragma once

#include <cstddef>

#include "hkens/rng.hpp"
#include "hkens/types.hpp"

namespace hkens {

// Labeled Gaussian blobs. The first `informative` dimensions carry the blob
// structure (centers separated by at least sep_scale times the within-blob
// RMS radius); the remaining dimensions are shared noise with
// noise_sigma_ratio times the informative sigma.
struct SynthSpec {
    std::size_t n_points = 300;
    std::size_t dims = 15;
    std::size_t informative = 5;
    std::size_t blobs = 4;
    double sigma = 1.0;
    double noise_sigma_ratio = 3.0;
    double sep_scale = 4.0;
};

Dataset make_blobs(const SynthSpec& spec, Rng& rng);

}  // namespace hkens
