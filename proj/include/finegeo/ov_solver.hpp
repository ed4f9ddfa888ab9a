#pragma once

// Orthogonal Vectors reference solvers. The unqualified entry points run
// OpenMP-parallel kernels; finegeo::serial keeps the plain nested-loop
// versions that the tests use as oracles.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "finegeo/core_model.hpp"

namespace finegeo {

/// Positions (0-based) of an orthogonal pair in A and B.
struct OvWitness {
    std::size_t index_a = 0;
    std::size_t index_b = 0;

    friend bool operator==(const OvWitness&, const OvWitness&) = default;
    friend auto operator<=>(const OvWitness&, const OvWitness&) = default;
};

/// Half-open range [begin, end) of positions in B.
struct BlockRange {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const { return end - begin; }
    friend bool operator==(const BlockRange&, const BlockRange&) = default;
};

/// Split of B into consecutive blocks of at most ceil(|B|^alpha) vectors.
struct UnbalancedPlan {
    Rat alpha;
    std::size_t block_size = 0;
    std::vector<BlockRange> blocks;
};

/// Lexicographically smallest orthogonal pair, or nothing.
std::optional<OvWitness> ov_decide(const OvInstance& inst);

/// Number of orthogonal pairs in A x B.
std::uint64_t ov_count(const OvInstance& inst);

/// ceil(n^alpha) by exact integer root extraction; alpha must lie in (0,1).
std::size_t ceil_rational_power(std::size_t n, const Rat& alpha);

UnbalancedPlan plan_unbalanced(std::size_t n, const Rat& alpha);

/// Decides each (A, B_block) sub-instance separately and combines the
/// answers. Throws InvalidInput if the plan does not partition B.
std::optional<OvWitness> ov_decide_blocked(const OvInstance& inst, const UnbalancedPlan& plan);

namespace serial {

std::optional<OvWitness> ov_decide(const OvInstance& inst);
std::uint64_t ov_count(const OvInstance& inst);
std::optional<OvWitness> ov_decide_blocked(const OvInstance& inst, const UnbalancedPlan& plan);

} // namespace serial

} // namespace finegeo
