#include "doctest.h"

#include <tuple>

#include "finegeo/frechet.hpp"
#include "finegeo/generate.hpp"
#include "finegeo/proximity.hpp"

using namespace finegeo;

namespace {

// Plain double loop; first strict improvement wins, so ties keep the smallest pair.
template <class T, class Dist>
BcpResult scan_bcp(const std::vector<T>& p, const std::vector<T>& q, Dist dist)
{
    BcpResult best{0, 0, dist(p[0], q[0])};
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < q.size(); ++j) {
            const auto v = dist(p[i], q[j]);
            if (v < best.sq_value) best = {i, j, v};
        }
    }
    return best;
}

template <class T, class Dist>
NnHit scan_nn(const std::vector<T>& items, const T& q, Dist dist)
{
    NnHit best{0, dist(items[0], q)};
    for (std::size_t i = 1; i < items.size(); ++i) {
        const auto v = dist(items[i], q);
        if (v < best.sq_value) best = {i, v};
    }
    return best;
}

SqDist euclid(const PointD& a, const PointD& b) { return squared_euclidean(a, b); }
SqDist frechet(const Curve2& a, const Curve2& b) { return brute_force_frechet_sq(a, b); }

std::vector<PointD> random_points(SplitMix64& rng, std::size_t n, std::size_t dim, std::int64_t range)
{
    std::vector<PointD> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(random_point(rng, dim, range));
    return out;
}

} // namespace

TEST_CASE("bcp_euclid examples")
{
    const std::vector<PointD> p{{0, 0}, {10, 10}};
    const std::vector<PointD> q{{9, 9}, {1, 0}};
    CHECK(bcp_euclid(p, q) == BcpResult{0, 1, SqDist(1)});
    // Tie between (0,0) and (1,1): smallest pair wins.
    const std::vector<PointD> p2{{0}, {2}};
    const std::vector<PointD> q2{{1}, {1}};
    CHECK(bcp_euclid(p2, q2) == BcpResult{0, 0, SqDist(1)});
    CHECK_THROWS_AS(bcp_euclid(std::vector<PointD>{}, q2), InvalidInput);
    CHECK_THROWS_AS(bcp_euclid(std::vector<PointD>{{1, 2}}, q2), InvalidInput);
}

TEST_CASE("bcp_frechet example")
{
    const std::vector<Curve2> p{Curve2{{0, 0}, {4, 0}}, Curve2{{0, 1}, {4, 1}}};
    const std::vector<Curve2> q{Curve2{{0, 3}, {4, 3}}};
    CHECK(bcp_frechet(p, q) == BcpResult{1, 0, SqDist(4)});
}

TEST_CASE("bcp kernels match plain scans; serial and parallel agree (property)")
{
    SplitMix64 rng(31);
    for (int k = 0; k < 60; ++k) {
        const std::size_t dim = 1 + rng.below(5);
        const auto p = random_points(rng, 1 + rng.below(20), dim, 3);
        const auto q = random_points(rng, 1 + rng.below(20), dim, 3);
        const auto want = scan_bcp(p, q, euclid);
        CHECK(bcp_euclid(p, q) == want);
        CHECK(serial::bcp_euclid(p, q) == want);
    }
    for (int k = 0; k < 40; ++k) {
        std::vector<Curve2> p, q;
        for (std::size_t i = 0, n = 1 + rng.below(5); i < n; ++i) p.push_back(random_curve(rng, 1 + rng.below(5), 3));
        for (std::size_t i = 0, n = 1 + rng.below(5); i < n; ++i) q.push_back(random_curve(rng, 1 + rng.below(5), 3));
        const auto want = scan_bcp(p, q, frechet);
        CHECK(bcp_frechet(p, q) == want);
        CHECK(serial::bcp_frechet(p, q) == want);
    }
}

TEST_CASE("nearest neighbour examples")
{
    const std::vector<PointD> pts{{0, 0}, {2, 0}};
    for (auto metric : {NnMetric::euclid_linear, NnMetric::euclid_kdtree}) {
        const auto index = nn_build(pts, metric);
        CHECK(index.size() == 2);
        CHECK(nn_query(index, PointD{Rat(9, 10), 0}) == NnHit{0, SqDist(Rat(81, 100))});
        CHECK(nn_query(index, PointD{1, 0}) == NnHit{0, SqDist(1)}); // tie
        CHECK(nn_query(index, PointD{3, 1}) == NnHit{1, SqDist(2)});
        CHECK_THROWS_AS(nn_query(index, PointD{1}), InvalidInput);
        CHECK_THROWS_AS(nn_query(index, Curve2{{0, 0}}), InvalidInput);
    }
    const auto curves = nn_build(std::vector<Curve2>{Curve2{{0, 0}}, Curve2{{5, 5}, {6, 6}}}, NnMetric::frechet_linear);
    CHECK(nn_query(curves, Curve2{{5, 4}, {6, 6}}) == NnHit{1, SqDist(1)});
    CHECK_THROWS_AS(nn_query(curves, PointD{0, 0}), InvalidInput);
}

TEST_CASE("nn_build rejects empty sets and mismatched metrics")
{
    CHECK_THROWS_AS(nn_build(std::vector<PointD>{}, NnMetric::euclid_kdtree), InvalidInput);
    CHECK_THROWS_AS(nn_build(std::vector<Curve2>{}, NnMetric::frechet_linear), InvalidInput);
    CHECK_THROWS_AS(nn_build(std::vector<PointD>{{1}}, NnMetric::frechet_linear), InvalidInput);
    CHECK_THROWS_AS(nn_build(std::vector<Curve2>{Curve2{{0, 0}}}, NnMetric::euclid_kdtree), InvalidInput);
    CHECK_THROWS_AS(nn_build(std::vector<PointD>{{1}, {1, 2}}, NnMetric::euclid_linear), InvalidInput);
    CHECK_THROWS_AS(parse_nn_metric("manhattan"), InvalidInput);
    CHECK(parse_nn_metric(to_string(NnMetric::euclid_kdtree)) == NnMetric::euclid_kdtree);
}

TEST_CASE("kd-tree agrees with a linear scan, including duplicates and ties (property)")
{
    SplitMix64 rng(99);
    for (int k = 0; k < 80; ++k) {
        const std::size_t dim = 1 + rng.below(4);
        // Small coordinate range forces many duplicates and equal distances.
        const auto pts = random_points(rng, 1 + rng.below(60), dim, 2);
        const auto tree = nn_build(pts, NnMetric::euclid_kdtree);
        const auto linear = nn_build(pts, NnMetric::euclid_linear);
        const auto queries = random_points(rng, 25, dim, 3);
        for (const auto& q : queries) {
            const auto want = scan_nn(pts, q, euclid);
            CHECK(nn_query(tree, q) == want);
            CHECK(nn_query(linear, q) == want);
        }
        const auto all = nn_query_all(tree, queries);
        CHECK(all == serial::nn_query_all(tree, queries));
        for (std::size_t i = 0; i < queries.size(); ++i) CHECK(all[i] == nn_query(tree, queries[i]));
    }
}

TEST_CASE("moved index keeps answering")
{
    SplitMix64 rng(4);
    const auto pts = random_points(rng, 40, 3, 5);
    auto index = nn_build(pts, NnMetric::euclid_kdtree);
    const PointD q{1, 2, 3};
    const auto before = nn_query(index, q);
    NnIndex moved = std::move(index);
    CHECK(nn_query(moved, q) == before);
    auto other = nn_build(std::vector<PointD>{{0, 0, 0}}, NnMetric::euclid_kdtree);
    other = std::move(moved);
    CHECK(nn_query(other, q) == before);
}

TEST_CASE("BCP from per-query nearest neighbours equals direct BCP (property)")
{
    SplitMix64 rng(12);
    for (int k = 0; k < 50; ++k) {
        const std::size_t dim = 1 + rng.below(4);
        const auto p = random_points(rng, 1 + rng.below(30), dim, 3);
        const auto q = random_points(rng, 1 + rng.below(30), dim, 3);
        const auto index = nn_build(p, NnMetric::euclid_kdtree);
        const auto hits = nn_query_all(index, q);
        BcpResult best{hits[0].index, 0, hits[0].sq_value};
        for (std::size_t j = 1; j < hits.size(); ++j) {
            const BcpResult cand{hits[j].index, j, hits[j].sq_value};
            if (std::tie(cand.sq_value, cand.index_p, cand.index_q) < std::tie(best.sq_value, best.index_p, best.index_q)) best = cand;
        }
        CHECK(best == bcp_euclid(p, q));
    }
}
