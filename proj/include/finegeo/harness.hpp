#pragma once

// Verification sweeps and scaling benchmarks behind the CLI.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "finegeo/reductions.hpp"

namespace finegeo {

struct KindTally {
    ReductionKind kind = ReductionKind::euclid_embed;
    std::size_t total = 0;
    std::size_t agreed = 0;
    std::size_t positives = 0; // instances whose oracle answer was true
    std::chrono::nanoseconds oracle_time{0};
    std::chrono::nanoseconds reduced_time{0};
    std::optional<ReductionReport> first_disagreement;
};

struct VerifySummary {
    std::vector<KindTally> tallies;

    bool all_agree() const;
    /// 0 when every report agreed, 1 otherwise.
    int exit_status() const { return all_agree() ? 0 : 1; }
};

struct VerifyPlan {
    std::size_t trials = 0;
    std::uint64_t seed = 1;
    bool exhaustive_small = false; // add every instance with |A|,|B| <= 2, d <= 2
};

/// Runs every kind on the same instance list (random instances up to the
/// caps, plus the exhaustive set when requested). Instances are checked in
/// parallel; tallies do not depend on the schedule.
VerifySummary run_verify(std::span<const ReductionKind> kinds, const VerifyOptions& options, const VerifyPlan& plan);

void print_verify_table(std::ostream& os, const VerifySummary& summary);
std::string verify_json(const VerifySummary& summary);

enum class BenchProblem { ov, bcp_euclid, bcp_frechet, frechet_pair, nn_query };

BenchProblem parse_bench_problem(std::string_view name);
std::string_view to_string(BenchProblem problem);

struct BenchRecord {
    std::string problem;
    std::size_t n = 0;
    std::size_t d = 0;
    std::uint64_t seed = 0;
    std::size_t repeat = 0;
    std::chrono::nanoseconds wall_time{0};
    std::string answer;
};

/// One record per (size, repeat), timed sequentially on the calling thread
/// with the serial kernels. The input depends on (seed, size) only, so
/// repeats measure the same work. Sizes must be ascending.
std::vector<BenchRecord> run_bench(BenchProblem problem, std::span<const std::size_t> sizes, std::size_t repeats,
                                   std::size_t d, std::uint64_t seed);

inline constexpr const char* kBenchCsvHeader = "problem,n,d,seed,repeat,wall_ns,answer";

void write_bench_csv(std::ostream& os, std::span<const BenchRecord> records);

} // namespace finegeo
