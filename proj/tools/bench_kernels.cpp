// Serial vs OpenMP timings for the parallel kernels.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"
#include "finegeo/generate.hpp"
#include "finegeo/ov_solver.hpp"
#include "finegeo/proximity.hpp"
#include "finegeo/reductions.hpp"

using namespace finegeo;

namespace {

template <class F>
double time_ms(F&& f)
{
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void row(const char* kernel, std::size_t n, double serial_ms, double parallel_ms, bool same)
{
    std::printf("%-14s %8zu %12.3f %12.3f %8.2fx %s\n", kernel, n, serial_ms, parallel_ms, serial_ms / parallel_ms,
                same ? "same" : "DIFFERENT");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"bench_kernels"};
    std::size_t n = 1024;
    std::size_t d = 32;
    std::uint64_t seed = 1;
    app.add_option("--n", n, "set size")->check(CLI::PositiveNumber);
    app.add_option("--d", d, "dimension")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed);
    CLI11_PARSE(app, argc, argv);

    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-14s %8s %12s %12s %9s\n", "kernel", "n", "serial_ms", "omp_ms", "speedup");

    const auto inst = generate({n, d, Family::no_orthogonal, Rat(1, 2), seed});
    {
        std::uint64_t s = 0, p = 0;
        const double ts = time_ms([&] { s = serial::ov_count(inst); });
        const double tp = time_ms([&] { p = ov_count(inst); });
        row("ov_count", n, ts, tp, s == p);
    }
    {
        std::optional<OvWitness> s, p;
        const double ts = time_ms([&] { s = serial::ov_decide(inst); });
        const double tp = time_ms([&] { p = ov_decide(inst); });
        row("ov_decide", n, ts, tp, s == p);
    }

    const std::size_t small = std::max<std::size_t>(n / 8, 1);
    const auto emb = embed_euclid(generate({small, d, Family::uniform_random, Rat(1, 2), seed}));
    {
        BcpResult s, p;
        const double ts = time_ms([&] { s = serial::bcp_euclid(emb.p, emb.q); });
        const double tp = time_ms([&] { p = bcp_euclid(emb.p, emb.q); });
        row("bcp_euclid", small, ts, tp, s == p);
    }
    {
        const auto curves = embed_frechet(generate({small, d, Family::uniform_random, Rat(1, 2), seed}));
        BcpResult s, p;
        const double ts = time_ms([&] { s = serial::bcp_frechet(curves.p, curves.q); });
        const double tp = time_ms([&] { p = bcp_frechet(curves.p, curves.q); });
        row("bcp_frechet", small, ts, tp, s == p);
    }
    {
        SplitMix64 rng(seed);
        std::vector<PointD> pts, queries;
        for (std::size_t i = 0; i < n; ++i) pts.push_back(random_point(rng, 4, 1000));
        for (std::size_t i = 0; i < n; ++i) queries.push_back(random_point(rng, 4, 1000));
        const auto index = nn_build(pts, NnMetric::euclid_kdtree);
        std::vector<NnHit> s, p;
        const double ts = time_ms([&] { s = serial::nn_query_all(index, queries); });
        const double tp = time_ms([&] { p = nn_query_all(index, queries); });
        row("nn_query_all", n, ts, tp, s == p);
    }
    {
        // The validation sweep has no serial twin; run it on one thread for the baseline.
        GadgetConfig a = GadgetConfig::with_default_delta();
        GadgetConfig b = GadgetConfig::with_default_delta();
        bool ok_s = false, ok_p = false;
        const int threads = omp_get_max_threads();
        omp_set_num_threads(1);
        const double ts = time_ms([&] { ok_s = validate_gadget_config(a, 200, 6, 6).ok; });
        omp_set_num_threads(threads);
        const double tp = time_ms([&] { ok_p = validate_gadget_config(b, 200, 6, 6).ok; });
        row("gadget_sweep", 200, ts, tp, ok_s == ok_p);
    }
    return 0;
}
