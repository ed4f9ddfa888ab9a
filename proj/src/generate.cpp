#include "finegeo/generate.hpp"

#include <string>

#include "finegeo/ov_solver.hpp"

namespace finegeo {

namespace {

BitVector random_vector(SplitMix64& rng, std::size_t d, std::uint64_t num, std::uint64_t den)
{
    BitVector v(d);
    for (std::size_t i = 0; i < d; ++i) {
        v.set(i, rng.chance(num, den));
    }
    return v;
}

std::vector<BitVector> random_side(SplitMix64& rng, std::size_t count, std::size_t d)
{
    std::vector<BitVector> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        out.push_back(random_vector(rng, d, 1, 2));
    }
    return out;
}

} // namespace

Family parse_family(std::string_view name)
{
    if (name == "uniform-random") {
        return Family::uniform_random;
    }
    if (name == "planted-orthogonal") {
        return Family::planted_orthogonal;
    }
    if (name == "no-orthogonal") {
        return Family::no_orthogonal;
    }
    if (name == "unbalanced") {
        return Family::unbalanced;
    }
    throw InvalidInput("unknown instance family '" + std::string(name) + "'");
}

std::string_view to_string(Family family)
{
    switch (family) {
    case Family::uniform_random:
        return "uniform-random";
    case Family::planted_orthogonal:
        return "planted-orthogonal";
    case Family::no_orthogonal:
        return "no-orthogonal";
    case Family::unbalanced:
        return "unbalanced";
    }
    return "?";
}

OvInstance generate(const GenSpec& spec)
{
    if (spec.n == 0 || spec.d == 0) {
        throw InvalidInput("generator needs n >= 1 and d >= 1");
    }
    SplitMix64 rng(spec.seed);
    switch (spec.family) {
    case Family::uniform_random: {
        auto a = random_side(rng, spec.n, spec.d);
        auto b = random_side(rng, spec.n, spec.d);
        return OvInstance(std::move(a), std::move(b));
    }
    case Family::planted_orthogonal: {
        auto a = random_side(rng, spec.n, spec.d);
        auto b = random_side(rng, spec.n, spec.d);
        const auto i = rng.below(spec.n);
        const auto j = rng.below(spec.n);
        for (std::size_t k = 0; k < spec.d; ++k) {
            if (a[i].get(k)) {
                b[j].set(k, false);
            }
        }
        return OvInstance(std::move(a), std::move(b));
    }
    case Family::no_orthogonal: {
        auto a = random_side(rng, spec.n, spec.d);
        auto b = random_side(rng, spec.n, spec.d);
        // Setting bits never lowers an inner product, so one pass suffices.
        for (auto& u : a) {
            for (auto& v : b) {
                if (inner_product(u, v) == 0) {
                    const auto k = rng.below(spec.d);
                    u.set(k, true);
                    v.set(k, true);
                }
            }
        }
        OvInstance inst(std::move(a), std::move(b));
        if (ov_count(inst) != 0) {
            throw std::logic_error("no-orthogonal generator produced an orthogonal pair");
        }
        return inst;
    }
    case Family::unbalanced: {
        const std::size_t small = ceil_rational_power(spec.n, spec.alpha);
        auto a = random_side(rng, small, spec.d);
        auto b = random_side(rng, spec.n, spec.d);
        return OvInstance(std::move(a), std::move(b));
    }
    }
    throw InvalidInput("unknown instance family");
}

OvInstance random_small_instance(SplitMix64& rng, std::size_t max_n, std::size_t max_d)
{
    const auto n_a = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(max_n)));
    const auto n_b = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(max_n)));
    const auto d = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(max_d)));
    const auto num = rng.between(1, 3);
    std::vector<BitVector> a;
    std::vector<BitVector> b;
    for (std::size_t k = 0; k < n_a; ++k) {
        a.push_back(random_vector(rng, d, static_cast<std::uint64_t>(num), 4));
    }
    for (std::size_t k = 0; k < n_b; ++k) {
        b.push_back(random_vector(rng, d, static_cast<std::uint64_t>(num), 4));
    }
    return OvInstance(std::move(a), std::move(b));
}

OvInstance instance_from_code(std::size_t n_a, std::size_t n_b, std::size_t d, std::uint64_t code)
{
    auto take = [&](std::size_t count) {
        std::vector<BitVector> side;
        for (std::size_t k = 0; k < count; ++k) {
            BitVector v(d);
            for (std::size_t i = 0; i < d; ++i) {
                v.set(i, (code & 1U) != 0);
                code >>= 1U;
            }
            side.push_back(std::move(v));
        }
        return side;
    };
    auto a = take(n_a);
    auto b = take(n_b);
    return OvInstance(std::move(a), std::move(b));
}

Curve2 random_curve(SplitMix64& rng, std::size_t length, std::int64_t range)
{
    std::vector<Point2> pts;
    pts.reserve(length);
    for (std::size_t k = 0; k < length; ++k) {
        const long x = static_cast<long>(rng.between(-range, range));
        const long y = static_cast<long>(rng.between(-range, range));
        pts.push_back({Rat(x), Rat(y)});
    }
    return Curve2(std::move(pts));
}

PointD random_point(SplitMix64& rng, std::size_t dim, std::int64_t range)
{
    std::vector<Rat> c;
    c.reserve(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        c.emplace_back(static_cast<long>(rng.between(-range, range)));
    }
    return PointD(std::move(c));
}

} // namespace finegeo
