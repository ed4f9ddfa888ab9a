#include "doctest.h"

#include <algorithm>

#include "finegeo/frechet.hpp"
#include "finegeo/generate.hpp"

using namespace finegeo;

TEST_CASE("frechet_sq examples")
{
    const Curve2 c{{0, 0}, {1, 2}, {3, 1}, {Rat(1, 2), -4}};
    const auto self = frechet_sq(c, c);
    CHECK(self.sq_value == SqDist(0));
    CHECK(self.traversal.steps == std::vector<IndexPair>{{0, 0}, {1, 1}, {2, 2}, {3, 3}});

    const auto single = frechet_sq(Curve2{{0, 0}}, Curve2{{3, 4}});
    CHECK(single.sq_value == SqDist(25));
    CHECK(single.traversal.steps == std::vector<IndexPair>{{0, 0}});
}

TEST_CASE("frechet_decide examples")
{
    const Curve2 c{{0, 0}, {5, 5}, {Rat(1, 3), 2}};
    CHECK(frechet_decide(c, c, SqDist(0)));
    CHECK_FALSE(frechet_decide(Curve2{{0, 0}}, Curve2{{3, 4}}, SqDist(24)));
    CHECK(frechet_decide(Curve2{{0, 0}}, Curve2{{3, 4}}, SqDist(25)));
}

TEST_CASE("brute force examples")
{
    CHECK(brute_force_frechet_sq(Curve2{{1, 1}}, Curve2{{2, 3}}) == SqDist(5));
    // One traversal only: (1,1), (2,1).
    CHECK(brute_force_frechet_sq(Curve2{{0, 0}, {6, 0}}, Curve2{{1, 0}}) == SqDist(25));
    CHECK(brute_force_frechet_sq(Curve2{{6, 0}, {0, 0}}, Curve2{{1, 0}}) == SqDist(25));
}

TEST_CASE("brute force refuses inputs over the cap")
{
    SplitMix64 rng(1);
    const auto a = random_curve(rng, 9, 3);
    const auto b = random_curve(rng, 8, 3);
    CHECK_THROWS_AS(brute_force_frechet_sq(a, b), InvalidInput);
    CHECK_NOTHROW(brute_force_frechet_sq(a, b, 17));
    CHECK_THROWS_AS(brute_force_frechet_sq(random_curve(rng, 3, 3), random_curve(rng, 3, 3), 5), InvalidInput);
}

TEST_CASE("hand-computed value with a non-diagonal optimum")
{
    // pi = (0,0),(2,0),(4,0); sigma = (0,1),(4,1).
    // Pairing (2,0) with either sigma vertex costs 4 + 1 = 5; every traversal
    // must visit pi_2, so the value is 5.
    const Curve2 pi{{0, 0}, {2, 0}, {4, 0}};
    const Curve2 sigma{{0, 1}, {4, 1}};
    const auto res = frechet_sq(pi, sigma);
    CHECK(res.sq_value == SqDist(5));
    CHECK(brute_force_frechet_sq(pi, sigma) == SqDist(5));
    // Tie at (2,1) vs (2,2): backtracking from (3,2) prefers the diagonal (2,1).
    CHECK(res.traversal.steps == std::vector<IndexPair>{{0, 0}, {1, 0}, {2, 1}});
}

TEST_CASE("DP matches the enumeration oracle and yields a valid optimal traversal (property)")
{
    SplitMix64 rng(2024);
    for (int k = 0; k < 400; ++k) {
        const std::size_t n = 1 + rng.below(6);
        const std::size_t m = 1 + rng.below(6);
        const auto pi = random_curve(rng, n, 4);
        const auto sigma = random_curve(rng, m, 4);
        const auto res = frechet_sq(pi, sigma);
        CHECK(res.sq_value == brute_force_frechet_sq(pi, sigma));
        REQUIRE(is_valid_traversal(res.traversal, n, m));
        CHECK(traversal_cost(pi, sigma, res.traversal) == res.sq_value);
    }
}

TEST_CASE("symmetry, endpoint bound and decision consistency (property)")
{
    SplitMix64 rng(77);
    for (int k = 0; k < 300; ++k) {
        const auto pi = random_curve(rng, 1 + rng.below(10), 5);
        const auto sigma = random_curve(rng, 1 + rng.below(10), 5);
        const auto v = frechet_sq(pi, sigma).sq_value;
        CHECK(v == frechet_sq(sigma, pi).sq_value);
        CHECK(v >= squared_euclidean(pi[0], sigma[0]));
        CHECK(v >= squared_euclidean(pi[pi.size() - 1], sigma[sigma.size() - 1]));

        CHECK(frechet_decide(pi, sigma, v));
        if (v.value().sign() > 0) {
            CHECK_FALSE(frechet_decide(pi, sigma, SqDist(v.value() - Rat(1, 1000))));
        }
        const SqDist t(static_cast<long>(rng.below(60)));
        const bool at_t = frechet_decide(pi, sigma, t);
        CHECK(at_t == (v <= t));
        if (at_t) {
            CHECK(frechet_decide(pi, sigma, SqDist(t.value() + Rat(1, 2))));
        }
    }
}

TEST_CASE("traversal validity checks")
{
    CHECK(is_valid_traversal(Traversal{{{0, 0}, {1, 1}, {1, 2}}}, 2, 3));
    CHECK_FALSE(is_valid_traversal(Traversal{{{0, 0}, {1, 2}}}, 2, 3));  // jump
    CHECK_FALSE(is_valid_traversal(Traversal{{{0, 0}, {1, 1}}}, 2, 3));  // wrong end
    CHECK_FALSE(is_valid_traversal(Traversal{{{0, 1}, {1, 2}}}, 2, 3));  // wrong start
    CHECK_FALSE(is_valid_traversal(Traversal{{{0, 0}, {0, 0}, {1, 2}}}, 2, 3)); // stall
    CHECK_FALSE(is_valid_traversal(Traversal{}, 1, 1));
}
