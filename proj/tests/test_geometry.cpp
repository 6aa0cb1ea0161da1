#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "hkens/errors.hpp"
#include "hkens/geometry.hpp"
#include "hkens/rng.hpp"

using namespace hkens;
using namespace testutil;

TEST_CASE("euclidean distance basics") {
    CHECK(euclidean_distance({0, 0}, {3, 4}) == doctest::Approx(5.0));
    CHECK(euclidean_distance({1.5, -2, 7}, {1.5, -2, 7}) == 0.0);
    CHECK_THROWS_AS(euclidean_distance({1, 2}, {1, 2, 3}), InternalError);
}

TEST_CASE("euclidean distance matches per-coordinate recomputation") {
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        Point a(9);
        Point b(9);
        for (std::size_t i = 0; i < 9; ++i) {
            a[i] = rng.next_normal() * 5.0;
            b[i] = rng.next_normal() * 5.0;
        }
        CHECK(euclidean_distance(a, b) == doctest::Approx(oracle_distance(a, b)).epsilon(1e-12));
    }
}

TEST_CASE("triangle inequality on random triples") {
    Rng rng(12);
    for (int t = 0; t < 300; ++t) {
        const std::size_t dim = 1 + rng.next_below(12);
        Point a(dim);
        Point b(dim);
        Point c(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            a[i] = rng.next_normal() * 3.0;
            b[i] = rng.next_normal() * 3.0;
            c[i] = rng.next_normal() * 3.0;
        }
        CHECK(euclidean_distance(a, c) <=
              euclidean_distance(a, b) + euclidean_distance(b, c) + 1e-12);
    }
}

TEST_CASE("centroid") {
    CHECK(centroid({{2.0, -1.0}}) == Point{2.0, -1.0});
    CHECK(centroid({{0, 0}, {2, 2}}) == Point{1.0, 1.0});
    CHECK_THROWS_AS(centroid({}), InternalError);

    Rng rng(13);
    std::vector<Point> pts;
    for (int i = 0; i < 5; ++i) {
        Point p(4);
        for (double& v : p) {
            v = rng.next_normal();
        }
        pts.push_back(p);
    }
    const Point mean = centroid(pts);
    const Point expect = oracle_mean(pts);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(mean[i] == doctest::Approx(expect[i]).epsilon(1e-12));
    }
}

TEST_CASE("cluster SSE") {
    const Dataset data = dataset_from({{0, 0}, {2, 0}, {5, 5}});
    const Cluster singleton = cluster_of(data, {2});
    CHECK(cluster_sse(singleton, data, data.points[2]) == 0.0);

    const Cluster pair = cluster_of(data, {0, 1});
    CHECK(cluster_sse(pair, data, {1.0, 0.0}) == doctest::Approx(2.0));

    Cluster bad;
    bad.members = {7};
    CHECK_THROWS_AS(cluster_sse(bad, data, {0.0, 0.0}), InternalError);
}

TEST_CASE("the mean minimizes SSE over random alternative centers") {
    Rng rng(14);
    const Dataset data = random_dataset(rng, 30, 5);
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < 30; i += 2) {
        members.push_back(i);
    }
    const Cluster cl = cluster_of(data, members);
    const double at_mean = cluster_sse(cl, data, cl.centroid);
    for (int t = 0; t < 100; ++t) {
        Point alt(5);
        for (double& v : alt) {
            v = (2.0 * rng.next_unit() - 1.0) * 12.0;
        }
        CHECK(at_mean <= cluster_sse(cl, data, alt) + 1e-9);
    }
}

TEST_CASE("partition objective") {
    const Dataset data = dataset_from({{0, 0}, {2, 0}});

    Partition singletons;
    singletons.n_points = 2;
    singletons.clusters = {cluster_of(data, {0}), cluster_of(data, {1})};
    CHECK(partition_objective(singletons, data) == 0.0);

    Partition one;
    one.n_points = 2;
    one.clusters = {cluster_of(data, {0, 1})};
    CHECK(partition_objective(one, data) == doctest::Approx(2.0));
}

TEST_CASE("objective is invariant under cluster reordering and equals the SSE sum") {
    Rng rng(15);
    const Dataset data = random_dataset(rng, 24, 3);
    Partition part;
    part.n_points = 24;
    part.clusters = {cluster_of(data, {0, 3, 6, 9, 12, 15, 18, 21}),
                     cluster_of(data, {1, 4, 7, 10, 13, 16, 19, 22}),
                     cluster_of(data, {2, 5, 8, 11, 14, 17, 20, 23})};
    const double j = partition_objective(part, data);

    double sse_sum = 0.0;
    for (const Cluster& cl : part.clusters) {
        sse_sum += cluster_sse(cl, data, cl.centroid);
    }
    CHECK(j == doctest::Approx(sse_sum).epsilon(1e-9));

    std::reverse(part.clusters.begin(), part.clusters.end());
    CHECK(partition_objective(part, data) == doctest::Approx(j).epsilon(1e-12));
}

TEST_CASE("per-point MSE") {
    const Dataset data = dataset_from({{0, 0}, {2, 0}, {3, 3}, {3, 3}});
    CHECK(mse(cluster_of(data, {2}), data) == 0.0);
    CHECK(mse(cluster_of(data, {0, 1}), data) == doctest::Approx(1.0));
    CHECK(mse(cluster_of(data, {2, 3}), data) == 0.0);
}

TEST_CASE("partition validation catches structural breaks") {
    const Dataset data = dataset_from({{0.0}, {1.0}, {2.0}});

    Partition overlap;
    overlap.n_points = 3;
    overlap.clusters = {cluster_of(data, {0, 1}), cluster_of(data, {1, 2})};
    CHECK_THROWS_AS(overlap.validate(), InternalError);

    Partition gap;
    gap.n_points = 3;
    gap.clusters = {cluster_of(data, {0, 1})};
    CHECK_THROWS_AS(gap.validate(), InternalError);

    Partition good;
    good.n_points = 3;
    good.clusters = {cluster_of(data, {0, 2}), cluster_of(data, {1})};
    CHECK_NOTHROW(good.validate());
    const auto asg = good.assignments();
    CHECK(asg == std::vector<std::size_t>{0, 1, 0});
}
