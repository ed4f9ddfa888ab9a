// finegeo: command-line front end for the OV reductions, solvers and benchmarks.
//
// Exit codes: 0 success / full agreement, 1 disagreement found, 2 usage or IO error.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "finegeo/formats.hpp"
#include "finegeo/frechet.hpp"
#include "finegeo/generate.hpp"
#include "finegeo/harness.hpp"
#include "finegeo/ov_solver.hpp"
#include "finegeo/proximity.hpp"
#include "finegeo/reductions.hpp"

namespace {

using namespace finegeo;

constexpr int kUsageError = 2;

struct Globals {
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "text";
};

// Writes to --out when given, stdout otherwise.
class Output {
public:
    explicit Output(const std::string& path)
    {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) {
                throw InvalidInput("cannot open '" + path + "' for writing");
            }
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

std::string one_based(const OvWitness& w)
{
    return "(" + std::to_string(w.index_a + 1) + "," + std::to_string(w.index_b + 1) + ")";
}

std::string traversal_text(const Traversal& t)
{
    std::string out;
    for (const auto& s : t.steps) {
        out += (out.empty() ? "" : " ") + std::string("(") + std::to_string(s.i + 1) + "," + std::to_string(s.j + 1) + ")";
    }
    return out;
}

std::vector<ReductionKind> parse_kinds(const std::string& list)
{
    if (list == "all") {
        return all_reduction_kinds();
    }
    std::vector<ReductionKind> kinds;
    std::istringstream in(list);
    std::string name;
    while (std::getline(in, name, ',')) {
        if (!name.empty()) {
            kinds.push_back(parse_reduction_kind(name));
        }
    }
    return kinds;
}

GadgetConfig gadget_from(const std::string& delta)
{
    if (delta.empty()) {
        return validated_default_gadget();
    }
    GadgetConfig cfg(Rat::parse(delta));
    const auto check = validate_gadget_config(cfg, 200, 6, 6);
    if (!check.ok) {
        std::ostringstream msg;
        write_instance(msg, *check.counterexample);
        throw InvalidInput("delta " + delta + " failed gadget validation; counterexample:\n" + msg.str());
    }
    return cfg;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Orthogonal Vectors reductions to closest pair, nearest neighbour and Fréchet distance"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--seed", g.seed, "PRNG seed (splitmix64)")->capture_default_str();
    app.add_option("--out", g.out, "output file (default: stdout)");
    app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    // gen
    auto* gen = app.add_subcommand("gen", "generate an OV instance");
    std::string family = "uniform-random";
    std::size_t gen_n = 8;
    std::size_t gen_d = 8;
    std::string alpha = "1/2";
    gen->add_option("--family", family, "uniform-random | planted-orthogonal | no-orthogonal | unbalanced")
        ->capture_default_str();
    gen->add_option("--n", gen_n, "vectors per side (|B| for unbalanced)")->capture_default_str();
    gen->add_option("--d", gen_d, "dimension")->capture_default_str();
    gen->add_option("--alpha", alpha, "unbalanced exponent p/q in (0,1)")->capture_default_str();

    // solve
    auto* solve = app.add_subcommand("solve", "solve a problem on an input file");
    std::string solve_problem;
    std::string solve_in;
    solve->add_option("problem", solve_problem, "ov | bcp-euclid | bcp-frechet | frechet")
        ->required()
        ->check(CLI::IsMember({"ov", "bcp-euclid", "bcp-frechet", "frechet"}));
    solve->add_option("--in", solve_in, "OV instance file (curve set file for 'frechet')")->required();

    // reduce
    auto* reduce = app.add_subcommand("reduce", "write the reduced instance of an OV instance");
    std::string reduce_kind;
    std::string reduce_in;
    std::string reduce_delta;
    reduce->add_option("kind", reduce_kind, "euclid-embed | frechet-embed | ov-to-bcp | ov-to-frechet")
        ->required()
        ->check(CLI::IsMember({"euclid-embed", "frechet-embed", "ov-to-bcp", "ov-to-frechet"}));
    reduce->add_option("--in", reduce_in, "OV instance file")->required();
    reduce->add_option("--delta", reduce_delta, "gadget delta as p/q (validated before use)");

    // verify
    auto* verify = app.add_subcommand("verify", "check reductions against the OV oracle");
    std::string kinds_list = "all";
    VerifyOptions vopts;
    VerifyPlan vplan;
    vplan.trials = 500;
    vopts.caps = {8, 6};
    verify->add_option("--kinds", kinds_list, "comma-separated kinds or 'all'")->capture_default_str();
    verify->add_option("--trials", vplan.trials, "random instances")->capture_default_str();
    verify->add_option("--max-n", vopts.caps.max_n, "largest side")->capture_default_str()->check(
        CLI::Range(std::size_t{1}, kMaxOracleSide));
    verify->add_option("--max-d", vopts.caps.max_d, "largest dimension")->capture_default_str()->check(
        CLI::Range(std::size_t{1}, kMaxOracleDim));
    verify->add_flag("--exhaustive", vplan.exhaustive_small, "also sweep every instance with |A|,|B| <= 2, d <= 2");
    verify->add_flag("--inject-fault", vopts.inject_threshold_fault, "harness self-test: loosen every threshold");

    // bench
    auto* bench = app.add_subcommand("bench", "time a solver over growing sizes (CSV)");
    std::string bench_problem;
    std::vector<std::size_t> sizes{256, 512, 1024};
    std::size_t repeats = 1;
    std::size_t bench_d = 16;
    bench->add_option("problem", bench_problem, "ov | bcp-euclid | bcp-frechet | frechet-pair | nn-query")
        ->required()
        ->check(CLI::IsMember({"ov", "bcp-euclid", "bcp-frechet", "frechet-pair", "nn-query"}));
    bench->add_option("--sizes", sizes, "ascending sizes")->delimiter(',')->capture_default_str();
    bench->add_option("--repeats", repeats, "runs per size")->capture_default_str();
    bench->add_option("--d", bench_d, "dimension")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (gen->parsed()) {
            GenSpec spec{gen_n, gen_d, parse_family(family), Rat::parse(alpha), g.seed};
            const auto inst = generate(spec);
            std::ostringstream comment;
            comment << "generator=" << kGeneratorName << " family=" << family << " n=" << gen_n << " d=" << gen_d
                    << " seed=" << g.seed;
            if (spec.family == Family::unbalanced) {
                comment << " alpha=" << alpha;
            }
            Output out(g.out);
            write_instance(out.stream(), inst, comment.str());
            return 0;
        }

        if (solve->parsed()) {
            Output out(g.out);
            nlohmann::json js;
            std::ostringstream text;
            if (solve_problem == "frechet") {
                const auto curves = load_curves(solve_in);
                if (curves.size() < 2) {
                    throw InvalidInput("curve set needs at least two curves");
                }
                const auto res = frechet_sq(curves[0], curves[1]);
                js = {{"sq_value", res.sq_value.to_string()}, {"traversal", traversal_text(res.traversal)}};
                text << "sq_value " << res.sq_value << "\ntraversal " << traversal_text(res.traversal) << '\n';
            } else {
                const auto inst = load_instance(solve_in);
                if (solve_problem == "ov") {
                    const auto w = ov_decide(inst);
                    const auto count = ov_count(inst);
                    js = {{"orthogonal", w.has_value()}, {"count", count}};
                    text << "orthogonal " << (w ? "yes" : "no") << "\ncount " << count << '\n';
                    if (w) {
                        js["witness"] = one_based(*w);
                        text << "witness " << one_based(*w) << '\n';
                    }
                } else {
                    BcpResult r;
                    SqDist tau;
                    if (solve_problem == "bcp-euclid") {
                        const auto emb = reduce_ov_to_bcp(inst);
                        r = bcp_euclid(emb.p, emb.q);
                        tau = emb.tau_sq;
                    } else {
                        const auto emb = embed_frechet(inst);
                        r = bcp_frechet(emb.p, emb.q);
                        tau = emb.tau_sq;
                    }
                    const std::string pair = "(" + std::to_string(r.index_p + 1) + "," + std::to_string(r.index_q + 1) + ")";
                    js = {{"pair", pair}, {"sq_value", r.sq_value.to_string()}, {"within_threshold", r.sq_value <= tau}};
                    text << "pair " << pair << "\nsq_value " << r.sq_value << "\nwithin_threshold "
                         << (r.sq_value <= tau ? "yes" : "no") << '\n';
                }
            }
            out.stream() << (g.format == "json" ? js.dump(2) + "\n" : text.str());
            return 0;
        }

        if (reduce->parsed()) {
            const auto inst = load_instance(reduce_in);
            const auto kind = parse_reduction_kind(reduce_kind);
            Output out(g.out);
            switch (kind) {
            case ReductionKind::euclid_embed:
            case ReductionKind::ov_to_bcp: {
                const auto emb = embed_euclid(inst);
                std::vector<PointD> all = emb.p;
                all.insert(all.end(), emb.q.begin(), emb.q.end());
                write_points(out.stream(), all,
                             "first " + std::to_string(emb.p.size()) + " points: A side; rest: B side\ntau_sq=" +
                                 emb.tau_sq.to_string());
                break;
            }
            case ReductionKind::frechet_embed: {
                const auto emb = embed_frechet(inst);
                std::vector<Curve2> all = emb.p;
                all.insert(all.end(), emb.q.begin(), emb.q.end());
                write_curves(out.stream(), all,
                             "first " + std::to_string(emb.p.size()) + " curves: A side; rest: B side\ntau_sq=1/1");
                break;
            }
            case ReductionKind::ov_to_frechet: {
                const GadgetConfig cfg = gadget_from(reduce_delta);
                const auto res = or_gadget(inst, cfg);
                write_curves(out.stream(), {res.pi, res.sigma},
                             "OR gadget: curve 1 = pi, curve 2 = sigma\ndelta=" + cfg.delta().to_string() +
                                 " gadget_dim=" + std::to_string(res.gadget_dim) + " tau_sq=1/1");
                break;
            }
            case ReductionKind::unbalanced_nn:
                break;
            }
            return 0;
        }

        if (verify->parsed()) {
            const auto kinds = parse_kinds(kinds_list);
            vplan.seed = g.seed;
            const auto summary = run_verify(kinds, vopts, vplan);
            Output out(g.out);
            if (g.format == "json") {
                out.stream() << verify_json(summary) << '\n';
            } else {
                print_verify_table(out.stream(), summary);
            }
            return summary.exit_status();
        }

        if (bench->parsed()) {
            const auto records = run_bench(parse_bench_problem(bench_problem), sizes, repeats, bench_d, g.seed);
            Output out(g.out);
            write_bench_csv(out.stream(), records);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}
