#pragma once

// Discrete Fréchet distance between planar curves, in squared form.

#include <cstddef>
#include <vector>

#include "finegeo/core_model.hpp"

namespace finegeo {

/// One step of a traversal: vertex positions (0-based) on the two curves.
struct IndexPair {
    std::size_t i = 0;
    std::size_t j = 0;

    friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// Monotone walk from (0,0) to (n-1,m-1) with unit steps right, up or diagonal.
struct Traversal {
    std::vector<IndexPair> steps;

    friend bool operator==(const Traversal&, const Traversal&) = default;
};

struct FrechetResult {
    SqDist sq_value;
    Traversal traversal;
};

/// Largest total vertex count the enumeration oracle accepts by default.
inline constexpr std::size_t kDefaultOracleCap = 16;

/// Exact squared discrete Fréchet distance plus one optimal traversal.
///
/// Fills the prefix table value(i,j) = max(|pi_i - sigma_j|^2,
/// min(value(i-1,j), value(i,j-1), value(i-1,j-1))) and backtracks with
/// preference diagonal, then (i-1,j), then (i,j-1).
FrechetResult frechet_sq(const Curve2& pi, const Curve2& sigma);

/// True iff the squared distance is at most tau_sq. Runs a boolean
/// reachability sweep over the free cells instead of the min-max table.
bool frechet_decide(const Curve2& pi, const Curve2& sigma, const SqDist& tau_sq);

/// Enumerates every traversal. Refuses inputs with more than `cap` vertices
/// in total (the number of traversals grows like the Delannoy numbers).
SqDist brute_force_frechet_sq(const Curve2& pi, const Curve2& sigma, std::size_t cap = kDefaultOracleCap);

bool is_valid_traversal(const Traversal& t, std::size_t n, std::size_t m);

/// Largest squared step distance along t.
SqDist traversal_cost(const Curve2& pi, const Curve2& sigma, const Traversal& t);

} // namespace finegeo
