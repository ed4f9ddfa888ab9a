#include "finegeo/harness.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "json.hpp"
#include <omp.h>

#include "finegeo/frechet.hpp"
#include "finegeo/generate.hpp"
#include "finegeo/ov_solver.hpp"
#include "finegeo/proximity.hpp"

namespace finegeo {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t size_seed(std::uint64_t seed, std::size_t n)
{
    SplitMix64 mix(seed ^ (0x9E3779B97F4A7C15ULL * (n + 1)));
    return mix.next();
}

} // namespace

bool VerifySummary::all_agree() const
{
    return std::all_of(tallies.begin(), tallies.end(), [](const KindTally& t) { return t.agreed == t.total; });
}

VerifySummary run_verify(std::span<const ReductionKind> kinds, const VerifyOptions& options, const VerifyPlan& plan)
{
    std::vector<std::pair<std::string, OvInstance>> instances;
    if (plan.exhaustive_small) {
        for (std::size_t d = 1; d <= std::min<std::size_t>(2, options.caps.max_d); ++d) {
            for (std::size_t n_a = 1; n_a <= std::min<std::size_t>(2, options.caps.max_n); ++n_a) {
                for (std::size_t n_b = 1; n_b <= std::min<std::size_t>(2, options.caps.max_n); ++n_b) {
                    const std::uint64_t patterns = std::uint64_t{1} << ((n_a + n_b) * d);
                    for (std::uint64_t code = 0; code < patterns; ++code) {
                        std::string id = "exhaustive/" + std::to_string(n_a) + "x" + std::to_string(n_b) + "/d" +
                                         std::to_string(d) + "/" + std::to_string(code);
                        instances.emplace_back(std::move(id), instance_from_code(n_a, n_b, d, code));
                    }
                }
            }
        }
    }
    SplitMix64 rng(plan.seed);
    for (std::size_t k = 0; k < plan.trials; ++k) {
        instances.emplace_back("random/" + std::to_string(k),
                               random_small_instance(rng, options.caps.max_n, options.caps.max_d));
    }

    // Resolve the gadget once, outside the parallel region.
    VerifyOptions resolved = options;
    if (!resolved.gadget && std::find(kinds.begin(), kinds.end(), ReductionKind::ov_to_frechet) != kinds.end()) {
        resolved.gadget = validated_default_gadget();
    }

    const std::size_t jobs = kinds.size() * instances.size();
    std::vector<ReductionReport> reports(jobs);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t r = 0; r < static_cast<std::int64_t>(jobs); ++r) {
        const auto job = static_cast<std::size_t>(r);
        const auto& [id, inst] = instances[job % instances.size()];
        reports[job] = verify_reduction(kinds[job / instances.size()], inst, resolved, id);
    }

    VerifySummary summary;
    for (std::size_t k = 0; k < kinds.size(); ++k) {
        KindTally tally;
        tally.kind = kinds[k];
        for (std::size_t i = 0; i < instances.size(); ++i) {
            const auto& rep = reports[k * instances.size() + i];
            ++tally.total;
            tally.agreed += rep.agree ? 1 : 0;
            tally.positives += rep.oracle_answer ? 1 : 0;
            tally.oracle_time += rep.oracle_time;
            tally.reduced_time += rep.reduced_time;
            if (!rep.agree && !tally.first_disagreement) {
                tally.first_disagreement = rep;
            }
        }
        summary.tallies.push_back(std::move(tally));
    }
    return summary;
}

void print_verify_table(std::ostream& os, const VerifySummary& summary)
{
    os << std::left << std::setw(16) << "kind" << std::right << std::setw(8) << "total" << std::setw(8) << "agree"
       << std::setw(8) << "ov=yes" << std::setw(14) << "oracle_ms" << std::setw(14) << "reduced_ms" << '\n';
    for (const auto& t : summary.tallies) {
        os << std::left << std::setw(16) << to_string(t.kind) << std::right << std::setw(8) << t.total
           << std::setw(8) << t.agreed << std::setw(8) << t.positives << std::setw(14) << std::fixed
           << std::setprecision(3) << static_cast<double>(t.oracle_time.count()) / 1e6 << std::setw(14)
           << static_cast<double>(t.reduced_time.count()) / 1e6 << '\n';
        if (t.first_disagreement) {
            os << "  first disagreement: " << t.first_disagreement->instance_id
               << " (oracle=" << t.first_disagreement->oracle_answer
               << ", reduced=" << t.first_disagreement->reduced_answer << ")\n";
        }
    }
}

std::string verify_json(const VerifySummary& summary)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& t : summary.tallies) {
        nlohmann::json row{{"kind", std::string(to_string(t.kind))},
                           {"total", t.total},
                           {"agreed", t.agreed},
                           {"oracle_positive", t.positives},
                           {"oracle_ns", t.oracle_time.count()},
                           {"reduced_ns", t.reduced_time.count()}};
        if (t.first_disagreement) {
            row["first_disagreement"] = t.first_disagreement->instance_id;
        }
        out.push_back(std::move(row));
    }
    return nlohmann::json{{"agree", summary.all_agree()}, {"kinds", out}}.dump(2);
}

BenchProblem parse_bench_problem(std::string_view name)
{
    for (auto p : {BenchProblem::ov, BenchProblem::bcp_euclid, BenchProblem::bcp_frechet, BenchProblem::frechet_pair,
                   BenchProblem::nn_query}) {
        if (to_string(p) == name) {
            return p;
        }
    }
    throw InvalidInput("unknown benchmark problem '" + std::string(name) + "'");
}

std::string_view to_string(BenchProblem problem)
{
    switch (problem) {
    case BenchProblem::ov:
        return "ov";
    case BenchProblem::bcp_euclid:
        return "bcp-euclid";
    case BenchProblem::bcp_frechet:
        return "bcp-frechet";
    case BenchProblem::frechet_pair:
        return "frechet-pair";
    case BenchProblem::nn_query:
        return "nn-query";
    }
    return "?";
}

std::vector<BenchRecord> run_bench(BenchProblem problem, std::span<const std::size_t> sizes, std::size_t repeats,
                                   std::size_t d, std::uint64_t seed)
{
    if (!std::is_sorted(sizes.begin(), sizes.end())) {
        throw InvalidInput("benchmark sizes must be ascending");
    }
    if (d == 0) {
        throw InvalidInput("benchmark dimension must be at least 1");
    }
    std::vector<BenchRecord> records;
    for (const std::size_t n : sizes) {
        if (n == 0) {
            throw InvalidInput("benchmark sizes must be positive");
        }
        const std::uint64_t input_seed = size_seed(seed, n);
        const std::size_t record_d = problem == BenchProblem::frechet_pair ? 2 : d;
        for (std::size_t rep = 0; rep < repeats; ++rep) {
            std::string answer;
            std::chrono::nanoseconds wall{0};
            auto measure = [&](auto&& work) {
                const auto start = Clock::now();
                answer = work();
                wall = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
            };
            switch (problem) {
            case BenchProblem::ov: {
                const auto inst = generate({n, d, Family::uniform_random, Rat(1, 2), input_seed});
                measure([&] { return std::to_string(serial::ov_count(inst)); });
                break;
            }
            case BenchProblem::bcp_euclid: {
                const auto emb = embed_euclid(generate({n, d, Family::uniform_random, Rat(1, 2), input_seed}));
                measure([&] { return serial::bcp_euclid(emb.p, emb.q).sq_value.to_string(); });
                break;
            }
            case BenchProblem::bcp_frechet: {
                const auto emb = embed_frechet(generate({n, d, Family::uniform_random, Rat(1, 2), input_seed}));
                measure([&] { return serial::bcp_frechet(emb.p, emb.q).sq_value.to_string(); });
                break;
            }
            case BenchProblem::frechet_pair: {
                SplitMix64 rng(input_seed);
                const Curve2 pi = random_curve(rng, n, 1000);
                const Curve2 sigma = random_curve(rng, n, 1000);
                measure([&] { return frechet_sq(pi, sigma).sq_value.to_string(); });
                break;
            }
            case BenchProblem::nn_query: {
                SplitMix64 rng(input_seed);
                std::vector<PointD> points;
                std::vector<PointD> queries;
                for (std::size_t k = 0; k < n; ++k) {
                    points.push_back(random_point(rng, d, 1000));
                }
                for (std::size_t k = 0; k < n; ++k) {
                    queries.push_back(random_point(rng, d, 1000));
                }
                measure([&] {
                    const NnIndex index = nn_build(points, NnMetric::euclid_kdtree);
                    const auto hits = serial::nn_query_all(index, queries);
                    const auto best = std::min_element(hits.begin(), hits.end(), [](const NnHit& x, const NnHit& y) {
                        return x.sq_value < y.sq_value;
                    });
                    return best->sq_value.to_string();
                });
                break;
            }
            }
            records.push_back({std::string(to_string(problem)), n, record_d, seed, rep, wall, std::move(answer)});
        }
    }
    return records;
}

void write_bench_csv(std::ostream& os, std::span<const BenchRecord> records)
{
    os << kBenchCsvHeader << '\n';
    for (const auto& r : records) {
        os << r.problem << ',' << r.n << ',' << r.d << ',' << r.seed << ',' << r.repeat << ',' << r.wall_time.count()
           << ',' << r.answer << '\n';
    }
}

} // namespace finegeo
