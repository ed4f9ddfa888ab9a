// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "finegeo/formats.hpp"
#include "finegeo/frechet.hpp"
#include "finegeo/generate.hpp"
#include "finegeo/harness.hpp"
#include "finegeo/ov_solver.hpp"
#include "finegeo/proximity.hpp"
#include "finegeo/reductions.hpp"

using namespace finegeo;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void run(int id, const char* title, double limit_s, const std::function<Outcome()>& body)
{
    const auto start = Clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    bool pass = out.pass;
    std::string detail = out.detail;
    if (limit_s > 0 && secs >= limit_s) {
        pass = false;
        detail += "; over time limit";
    }
    if (!pass) ++failures;
    std::printf("criterion %2d: %s  %s [%s] (%.2f s", id, pass ? "PASS" : "FAIL", title, detail.c_str(), secs);
    if (limit_s > 0) std::printf(", limit %.0f s", limit_s);
    std::printf(")\n");
    std::fflush(stdout);
}

std::size_t naive_inner(const BitVector& a, const BitVector& b)
{
    std::size_t s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += (a.get(i) && b.get(i)) ? 1 : 0;
    return s;
}

BitVector random_bits(SplitMix64& rng, std::size_t d)
{
    BitVector v(d);
    for (std::size_t i = 0; i < d; ++i) v.set(i, rng.chance(1, 2));
    return v;
}

// Biased toward sparse vectors so that both orthogonal and non-orthogonal pairs show up at every d.
BitVector sparse_bits(SplitMix64& rng, std::size_t d)
{
    const std::uint64_t num = 1 + rng.below(3);
    BitVector v(d);
    for (std::size_t i = 0; i < d; ++i) v.set(i, rng.chance(num, 8));
    return v;
}

bool naive_orthogonal_exists(const OvInstance& inst)
{
    for (const auto& a : inst.a())
        for (const auto& b : inst.b())
            if (naive_inner(a, b) == 0) return true;
    return false;
}

std::string counts(std::size_t total, std::size_t bad, std::size_t positives)
{
    std::ostringstream os;
    os << total << " cases, " << bad << " mismatches, " << positives << " orthogonal";
    return os.str();
}

} // namespace

int main()
{
    const std::uint64_t seed = 20261018;

    // Criteria 1 and 2 share one sweep.
    std::size_t c1_bad = 0, c1_pos = 0, c2_bad = 0;
    run(1, "point embedding exactness", 5, [&] {
        SplitMix64 rng(seed);
        for (int k = 0; k < 1000; ++k) {
            const std::size_t d = 1 + rng.below(64);
            const auto a = sparse_bits(rng, d);
            const auto b = sparse_bits(rng, d);
            const std::size_t ip = naive_inner(a, b);
            const auto sq = squared_euclidean(embed_point_a(a), embed_point_b(b));
            const Rat want = Rat(static_cast<long>(d)) + Rat(8) * Rat(static_cast<long>(ip));
            const bool within = sq <= SqDist(static_cast<long>(d));
            if (sq.value() != want || within != (ip == 0)) ++c1_bad;
            if (sq > SqDist(static_cast<long>(d)) && sq < SqDist(static_cast<long>(d + 8))) ++c2_bad;
            c1_pos += ip == 0 ? 1 : 0;
        }
        return Outcome{c1_bad == 0, counts(1000, c1_bad, c1_pos)};
    });
    run(2, "Euclidean gap", 0, [&] {
        return Outcome{c2_bad == 0, std::to_string(c2_bad) + " of 1000 pairs strictly inside (d, d+8)"};
    });

    run(3, "Frechet DP vs enumeration oracle", 30, [&] {
        SplitMix64 rng(seed + 3);
        std::size_t bad = 0;
        for (int k = 0; k < 2000; ++k) {
            const std::size_t n = 1 + rng.below(11);
            const std::size_t m = 1 + rng.below(12 - n);
            const auto pi = random_curve(rng, n, 5);
            const auto sigma = random_curve(rng, m, 5);
            const auto res = frechet_sq(pi, sigma);
            if (res.sq_value != brute_force_frechet_sq(pi, sigma, 12) ||
                !is_valid_traversal(res.traversal, n, m) ||
                traversal_cost(pi, sigma, res.traversal) != res.sq_value) {
                ++bad;
            }
        }
        return Outcome{bad == 0, std::to_string(bad) + " of 2000 pairs differ"};
    });

    run(4, "curve embedding equivalence and gap", 0, [&] {
        SplitMix64 rng(seed + 4);
        std::size_t bad = 0, pos = 0;
        for (int k = 0; k < 1000; ++k) {
            const std::size_t d = 1 + rng.below(12);
            const auto a = sparse_bits(rng, d);
            const auto b = sparse_bits(rng, d);
            const bool orth = naive_inner(a, b) == 0;
            const auto pi = embed_curve_a(a);
            const auto sigma = embed_curve_b(b);
            const auto v = frechet_sq(pi, sigma).sq_value;
            const bool decided = frechet_decide(pi, sigma, SqDist(1));
            const bool in_gap_set = v == SqDist(1) || v >= SqDist(9);
            if (decided != orth || !in_gap_set || (v == SqDist(1)) != orth) ++bad;
            pos += orth ? 1 : 0;
        }
        return Outcome{bad == 0, counts(1000, bad, pos)};
    });

    run(5, "OR gadget end to end", 60, [&] {
        const auto& cfg = validated_default_gadget();
        std::size_t bad = 0, checked = 0, size_bad = 0, pos = 0;
        std::string first_size_miss;
        auto check = [&](const OvInstance& inst) {
            const auto out = or_gadget(inst, cfg);
            const bool got = frechet_decide(out.pi, out.sigma, out.tau_sq);
            const bool want = naive_orthogonal_exists(inst);
            bad += got != want ? 1 : 0;
            pos += want ? 1 : 0;
            ++checked;
            const std::size_t d = inst.dim();
            if (out.pi.size() != inst.a().size() * (d + 2) || out.sigma.size() != inst.b().size() * d + 4) {
                if (size_bad++ == 0) {
                    std::ostringstream os;
                    os << "first at |A|=" << inst.a().size() << " |B|=" << inst.b().size() << " d=" << d
                       << ": got " << out.pi.size() << "/" << out.sigma.size() << ", expected "
                       << inst.a().size() * (d + 2) << "/" << inst.b().size() * d + 4;
                    first_size_miss = os.str();
                }
            }
        };
        for (std::size_t n = 1; n <= 2; ++n)
            for (std::size_t d = 1; d <= 2; ++d)
                for (std::uint64_t code = 0; code < (std::uint64_t{1} << (2 * n * d)); ++code)
                    check(instance_from_code(n, n, d, code));
        SplitMix64 rng(seed + 5);
        for (int k = 0; k < 500; ++k) check(random_small_instance(rng, 8, 6));

        const auto summary = run_verify(all_reduction_kinds(), {}, {500, seed + 5, true});
        std::ostringstream os;
        os << counts(checked, bad, pos) << "; verify exit " << summary.exit_status() << "; " << size_bad
           << " size mismatches";
        if (size_bad > 0) os << " (" << first_size_miss << ")";
        return Outcome{bad == 0 && summary.exit_status() == 0 && size_bad == 0, os.str()};
    });

    run(6, "unbalanced block decomposition", 0, [&] {
        SplitMix64 rng(seed + 6);
        const Rat alphas[] = {Rat(1, 4), Rat(1, 2), Rat(3, 4)};
        std::size_t bad = 0, pos = 0;
        for (int k = 0; k < 200; ++k) {
            const std::size_t nb = 1 + rng.below(64);
            const Rat& alpha = alphas[rng.below(3)];
            const std::size_t d = 4 + rng.below(16);
            const auto inst = generate({nb, d, Family::unbalanced, alpha, rng.next()});
            const auto plan = plan_unbalanced(nb, alpha);
            const bool blocked = ov_decide_blocked(inst, plan).has_value();
            const bool direct = ov_decide(inst).has_value();
            if (blocked != direct || direct != naive_orthogonal_exists(inst)) ++bad;
            pos += direct ? 1 : 0;
        }
        return Outcome{bad == 0, counts(200, bad, pos)};
    });

    run(7, "proximity solvers vs full sweeps", 0, [&] {
        SplitMix64 rng(seed + 7);
        std::size_t bcp_bad = 0, nn_bad = 0, queries = 0;
        for (int k = 0; k < 200; ++k) {
            const std::size_t dim = 1 + rng.below(6);
            std::vector<PointD> p, q;
            for (std::size_t i = 0, n = 1 + rng.below(40); i < n; ++i) p.push_back(random_point(rng, dim, 4));
            for (std::size_t i = 0, n = 1 + rng.below(40); i < n; ++i) q.push_back(random_point(rng, dim, 4));
            BcpResult best{0, 0, squared_euclidean(p[0], q[0])};
            for (std::size_t i = 0; i < p.size(); ++i)
                for (std::size_t j = 0; j < q.size(); ++j)
                    if (const auto v = squared_euclidean(p[i], q[j]); v < best.sq_value) best = {i, j, v};
            bcp_bad += bcp_euclid(p, q) == best ? 0 : 1;

            std::vector<Curve2> cp, cq;
            for (std::size_t i = 0, n = 1 + rng.below(5); i < n; ++i) cp.push_back(random_curve(rng, 1 + rng.below(6), 4));
            for (std::size_t i = 0, n = 1 + rng.below(5); i < n; ++i) cq.push_back(random_curve(rng, 1 + rng.below(6), 4));
            BcpResult cbest{0, 0, brute_force_frechet_sq(cp[0], cq[0])};
            for (std::size_t i = 0; i < cp.size(); ++i)
                for (std::size_t j = 0; j < cq.size(); ++j)
                    if (const auto v = brute_force_frechet_sq(cp[i], cq[j]); v < cbest.sq_value) cbest = {i, j, v};
            bcp_bad += bcp_frechet(cp, cq) == cbest ? 0 : 1;

            const auto tree = nn_build(p, NnMetric::euclid_kdtree);
            for (int t = 0; t < 10; ++t) {
                const auto x = random_point(rng, dim, 5);
                NnHit want{0, squared_euclidean(p[0], x)};
                for (std::size_t i = 1; i < p.size(); ++i)
                    if (const auto v = squared_euclidean(p[i], x); v < want.sq_value) want = {i, v};
                nn_bad += nn_query(tree, x) == want ? 0 : 1;
                ++queries;
            }
        }
        std::ostringstream os;
        os << "400 closest-pair checks, " << bcp_bad << " mismatches; " << queries << " kd-tree queries, " << nn_bad
           << " mismatches";
        return Outcome{bcp_bad == 0 && nn_bad == 0, os.str()};
    });

    run(8, "nearest-neighbour composition equals closest pair", 0, [&] {
        SplitMix64 rng(seed + 8);
        std::size_t bad = 0;
        for (int k = 0; k < 100; ++k) {
            const auto inst = random_small_instance(rng, 16, 24);
            const auto emb = embed_euclid(inst);
            const auto index = nn_build(emb.p, NnMetric::euclid_kdtree);
            std::optional<SqDist> best;
            for (const auto& q : emb.q) {
                const auto hit = nn_query(index, q);
                if (!best || hit.sq_value < *best) best = hit.sq_value;
            }
            bad += *best == bcp_euclid(emb.p, emb.q).sq_value ? 0 : 1;
        }
        return Outcome{bad == 0, std::to_string(bad) + " of 100 instances differ"};
    });

    run(9, "Frechet pair scaling", 120, [&] {
        const std::vector<std::size_t> sizes{256, 512, 1024};
        const auto recs = run_bench(BenchProblem::frechet_pair, sizes, 1, 16, seed);
        const double t256 = static_cast<double>(recs.front().wall_time.count());
        const double t1024 = static_cast<double>(recs.back().wall_time.count());
        const double ratio = t1024 / t256;
        std::ostringstream os;
        os << "t(256)=" << t256 / 1e6 << " ms, t(1024)=" << t1024 / 1e6 << " ms, ratio " << ratio << " (need >= 8)";
        return Outcome{ratio >= 8.0, os.str()};
    });

    run(10, "serialization round trip", 0, [&] {
        SplitMix64 rng(seed + 10);
        std::size_t bad = 0;
        for (int k = 0; k < 100; ++k) {
            const auto inst = random_small_instance(rng, 12, 80);
            std::stringstream is;
            write_instance(is, inst, "round trip");
            bad += read_instance(is) == inst ? 0 : 1;

            std::vector<Curve2> curves;
            for (std::size_t c = 0, n = 1 + rng.below(5); c < n; ++c) {
                std::vector<Point2> pts;
                for (std::size_t v = 0, m = 1 + rng.below(8); v < m; ++v) {
                    pts.push_back({Rat(rng.between(-99, 99), static_cast<long>(1 + rng.below(16))),
                                   Rat(rng.between(-99, 99), static_cast<long>(1 + rng.below(16)))});
                }
                curves.emplace_back(std::move(pts));
            }
            std::stringstream cs;
            write_curves(cs, curves, "round trip");
            bad += read_curves(cs) == curves ? 0 : 1;
        }
        return Outcome{bad == 0, std::to_string(bad) + " of 200 objects changed"};
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
