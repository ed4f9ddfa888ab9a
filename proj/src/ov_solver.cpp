#include "finegeo/ov_solver.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#include <omp.h>

namespace finegeo {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// First B position in [begin, end) orthogonal to a, or kNone.
std::size_t first_orthogonal(const BitVector& a, const std::vector<BitVector>& b, std::size_t begin,
                             std::size_t end)
{
    for (std::size_t j = begin; j < end; ++j) {
        if (inner_product(a, b[j]) == 0) {
            return j;
        }
    }
    return kNone;
}

std::optional<OvWitness> decide_range_serial(const OvInstance& inst, std::size_t begin, std::size_t end)
{
    const auto& a = inst.a();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (auto j = first_orthogonal(a[i], inst.b(), begin, end); j != kNone) {
            return OvWitness{i, j};
        }
    }
    return std::nullopt;
}

// Rows are scanned in parallel; a row is skipped once a smaller row has a
// witness, so the result is the lexicographic minimum regardless of schedule.
std::optional<OvWitness> decide_range_parallel(const OvInstance& inst, std::size_t begin, std::size_t end)
{
    const auto& a = inst.a();
    const auto rows = static_cast<std::int64_t>(a.size());
    std::atomic<std::size_t> best_row{kNone};
    std::vector<std::size_t> hit(a.size(), kNone);

#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t r = 0; r < rows; ++r) {
        const auto i = static_cast<std::size_t>(r);
        if (i > best_row.load(std::memory_order_relaxed)) {
            continue;
        }
        const std::size_t j = first_orthogonal(a[i], inst.b(), begin, end);
        if (j == kNone) {
            continue;
        }
        hit[i] = j;
        std::size_t cur = best_row.load(std::memory_order_relaxed);
        while (i < cur && !best_row.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
        }
    }
    const std::size_t i = best_row.load();
    if (i == kNone) {
        return std::nullopt;
    }
    return OvWitness{i, hit[i]};
}

void check_plan(const OvInstance& inst, const UnbalancedPlan& plan)
{
    std::size_t expected = 0;
    for (const auto& block : plan.blocks) {
        if (block.begin != expected || block.end <= block.begin || block.size() > plan.block_size) {
            throw InvalidInput("unbalanced plan does not partition B into consecutive blocks");
        }
        expected = block.end;
    }
    if (expected != inst.b().size()) {
        throw InvalidInput("unbalanced plan does not cover B exactly");
    }
}

template <typename Decide>
std::optional<OvWitness> blocked(const OvInstance& inst, const UnbalancedPlan& plan, Decide decide)
{
    check_plan(inst, plan);
    std::optional<OvWitness> best;
    for (const auto& block : plan.blocks) {
        auto w = decide(inst, block.begin, block.end);
        if (w && (!best || *w < *best)) {
            best = w;
        }
    }
    return best;
}

} // namespace

std::optional<OvWitness> ov_decide(const OvInstance& inst)
{
    return decide_range_parallel(inst, 0, inst.b().size());
}

std::uint64_t ov_count(const OvInstance& inst)
{
    const auto& a = inst.a();
    const auto& b = inst.b();
    const auto rows = static_cast<std::int64_t>(a.size());
    std::uint64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static)
    for (std::int64_t r = 0; r < rows; ++r) {
        for (const auto& v : b) {
            total += inner_product(a[static_cast<std::size_t>(r)], v) == 0 ? 1U : 0U;
        }
    }
    return total;
}

std::size_t ceil_rational_power(std::size_t n, const Rat& alpha)
{
    if (alpha.sign() <= 0 || alpha >= Rat(1)) {
        throw InvalidInput("alpha must lie strictly between 0 and 1");
    }
    if (n == 0) {
        throw InvalidInput("n must be at least 1");
    }
    const mpz_class num = alpha.numerator();
    const mpz_class den = alpha.denominator();
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), mpz_class(static_cast<unsigned long>(n)).get_mpz_t(), num.get_ui());
    mpz_class root;
    const int exact = mpz_root(root.get_mpz_t(), power.get_mpz_t(), den.get_ui());
    if (exact == 0) {
        root += 1;
    }
    return static_cast<std::size_t>(root.get_ui());
}

UnbalancedPlan plan_unbalanced(std::size_t n, const Rat& alpha)
{
    UnbalancedPlan plan{alpha, ceil_rational_power(n, alpha), {}};
    for (std::size_t begin = 0; begin < n; begin += plan.block_size) {
        plan.blocks.push_back({begin, std::min(n, begin + plan.block_size)});
    }
    return plan;
}

std::optional<OvWitness> ov_decide_blocked(const OvInstance& inst, const UnbalancedPlan& plan)
{
    return blocked(inst, plan, decide_range_parallel);
}

namespace serial {

std::optional<OvWitness> ov_decide(const OvInstance& inst)
{
    return decide_range_serial(inst, 0, inst.b().size());
}

std::uint64_t ov_count(const OvInstance& inst)
{
    std::uint64_t total = 0;
    for (const auto& u : inst.a()) {
        for (const auto& v : inst.b()) {
            total += inner_product(u, v) == 0 ? 1U : 0U;
        }
    }
    return total;
}

std::optional<OvWitness> ov_decide_blocked(const OvInstance& inst, const UnbalancedPlan& plan)
{
    return blocked(inst, plan, decide_range_serial);
}

} // namespace serial

} // namespace finegeo
