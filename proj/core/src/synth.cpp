#include "hkens/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hkens/errors.hpp"
#include "hkens/geometry.hpp"

namespace hkens {

Dataset make_blobs(const SynthSpec& spec, Rng& rng) {
    if (spec.blobs < 1 || spec.n_points < spec.blobs) {
        throw ConfigError("make_blobs: need at least one point per blob");
    }
    if (spec.informative < 1 || spec.informative > spec.dims) {
        throw ConfigError("make_blobs: informative dimensions must lie in 1..dims");
    }
    if (!(spec.sigma > 0.0) || spec.noise_sigma_ratio < 0.0 || !(spec.sep_scale > 0.0)) {
        throw ConfigError("make_blobs: sigma and sep_scale must be positive");
    }

    const std::size_t noise_dims = spec.dims - spec.informative;
    const double noise_sigma = spec.noise_sigma_ratio * spec.sigma;
    const double within_rms =
        std::sqrt(static_cast<double>(spec.informative) * spec.sigma * spec.sigma +
                  static_cast<double>(noise_dims) * noise_sigma * noise_sigma);
    const double min_sep = spec.sep_scale * within_rms;

    // rejection-sample centers in the informative subspace; widen the box if
    // the separation constraint starves
    std::vector<Point> centers;
    double box = std::max(min_sep, 1.0) * 1.5;
    std::size_t attempts = 0;
    while (centers.size() < spec.blobs) {
        Point c(spec.informative);
        for (double& v : c) {
            v = (2.0 * rng.next_unit() - 1.0) * box;
        }
        bool ok = true;
        for (const Point& other : centers) {
            if (euclidean_distance(c, other) < min_sep) {
                ok = false;
                break;
            }
        }
        if (ok) {
            centers.push_back(std::move(c));
        } else if (++attempts % 1000 == 0) {
            box *= 1.5;
        }
    }

    Dataset data;
    data.dim = spec.dims;
    data.name = "synth";
    data.points.reserve(spec.n_points);
    data.labels.reserve(spec.n_points);

    for (std::size_t i = 0; i < spec.n_points; ++i) {
        const std::size_t blob = i % spec.blobs;  // balanced sizes
        Point p(spec.dims);
        for (std::size_t d = 0; d < spec.informative; ++d) {
            p[d] = centers[blob][d] + spec.sigma * rng.next_normal();
        }
        for (std::size_t d = spec.informative; d < spec.dims; ++d) {
            p[d] = noise_sigma * rng.next_normal();
        }
        data.points.push_back(std::move(p));
        data.labels.push_back("blob" + std::to_string(blob));
    }

    // deterministic shuffle so blob order carries no signal
    std::vector<std::size_t> order(spec.n_points);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    Dataset shuffled;
    shuffled.dim = data.dim;
    shuffled.name = data.name;
    shuffled.points.reserve(spec.n_points);
    shuffled.labels.reserve(spec.n_points);
    for (std::size_t idx : order) {
        shuffled.points.push_back(std::move(data.points[idx]));
        shuffled.labels.push_back(std::move(data.labels[idx]));
    }
    shuffled.validate();
    return shuffled;
}

}  // namespace hkens
