#pragma once

// Deterministic OV instance and curve generators.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "finegeo/core_model.hpp"
#include "finegeo/rng.hpp"

namespace finegeo {

enum class Family { uniform_random, planted_orthogonal, no_orthogonal, unbalanced };

Family parse_family(std::string_view name);
std::string_view to_string(Family family);

struct GenSpec {
    std::size_t n = 0;
    std::size_t d = 0;
    Family family = Family::uniform_random;
    Rat alpha = Rat(1, 2); // only read by Family::unbalanced
    std::uint64_t seed = 0;
};

/// uniform-random: |A| = |B| = n, fair bits. planted-orthogonal: as uniform,
/// then one B vector is masked against one A vector. no-orthogonal: every
/// orthogonal pair gets a shared 1 bit. unbalanced: |B| = n, |A| = ceil(n^alpha).
OvInstance generate(const GenSpec& spec);

/// Instance for sweeps: |A|, |B| in [1, max_n], d in [1, max_d], bit density
/// drawn from {1/4, 1/2, 3/4}.
OvInstance random_small_instance(SplitMix64& rng, std::size_t max_n, std::size_t max_d);

/// Decodes bit pattern `code` (A rows first, lowest bit first) into an instance.
OvInstance instance_from_code(std::size_t n_a, std::size_t n_b, std::size_t d, std::uint64_t code);

/// Curve with integer coordinates drawn from [-range, range].
Curve2 random_curve(SplitMix64& rng, std::size_t length, std::int64_t range);

/// Point with integer coordinates drawn from [-range, range].
PointD random_point(SplitMix64& rng, std::size_t dim, std::int64_t range);

} // namespace finegeo
