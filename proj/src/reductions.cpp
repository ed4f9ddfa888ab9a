#include "finegeo/reductions.hpp"

#include <algorithm>
#include <stdexcept>

#include <omp.h>

#include "finegeo/frechet.hpp"
#include "finegeo/generate.hpp"
#include "finegeo/ov_solver.hpp"
#include "finegeo/proximity.hpp"
#include "finegeo/rng.hpp"

namespace finegeo {

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
auto timed(std::chrono::nanoseconds& out, F&& f)
{
    const auto start = Clock::now();
    auto result = f();
    out = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
    return result;
}

long bit(const BitVector& z, std::size_t i) { return z.get(i) ? 1 : 0; }

OrGadgetOutput build_or_gadget(const OvInstance& inst, const GadgetConfig& cfg)
{
    const OvInstance encoded = cfg.alignment_padding() ? pad_for_alignment(inst) : inst;
    const auto anchors = or_gadget_anchors();

    std::vector<Point2> pi;
    pi.reserve(encoded.a().size() * (encoded.dim() + 2));
    for (const auto& a : encoded.a()) {
        pi.push_back(anchors.s);
        const Curve2 g = vector_gadget(a, Side::a, cfg);
        pi.insert(pi.end(), g.begin(), g.end());
        pi.push_back(anchors.t);
    }

    std::vector<Point2> sigma;
    sigma.reserve(encoded.b().size() * encoded.dim() + 4);
    sigma.push_back(anchors.s);
    sigma.push_back(anchors.s_star);
    for (const auto& b : encoded.b()) {
        const Curve2 g = vector_gadget(b, Side::b, cfg);
        sigma.insert(sigma.end(), g.begin(), g.end());
    }
    sigma.push_back(anchors.t_star);
    sigma.push_back(anchors.t);

    return {Curve2(std::move(pi)), Curve2(std::move(sigma)), SqDist(1), encoded.dim()};
}

bool gadget_agrees(const OvInstance& inst, const GadgetConfig& cfg)
{
    const auto out = build_or_gadget(inst, cfg);
    return frechet_decide(out.pi, out.sigma, out.tau_sq) == serial::ov_decide(inst).has_value();
}

void check_caps(const OvInstance& inst, const VerifyCaps& caps)
{
    if (inst.a().size() > caps.max_n || inst.b().size() > caps.max_n || inst.dim() > caps.max_d) {
        throw InvalidInput("instance exceeds the verification caps (n <= " + std::to_string(caps.max_n) +
                           ", d <= " + std::to_string(caps.max_d) + ")");
    }
}

} // namespace

PointD embed_point_a(const BitVector& a)
{
    std::vector<Rat> c;
    c.reserve(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        c.emplace_back(1 + 2 * bit(a, i));
    }
    return PointD(std::move(c));
}

PointD embed_point_b(const BitVector& b)
{
    std::vector<Rat> c;
    c.reserve(b.dim());
    for (std::size_t i = 0; i < b.dim(); ++i) {
        c.emplace_back(2 - 2 * bit(b, i));
    }
    return PointD(std::move(c));
}

Curve2 embed_curve_a(const BitVector& a)
{
    std::vector<Point2> pts;
    pts.reserve(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        pts.push_back({Rat(3 * static_cast<long>(i + 1)), Rat(1 + 2 * bit(a, i))});
    }
    return Curve2(std::move(pts));
}

Curve2 embed_curve_b(const BitVector& b)
{
    std::vector<Point2> pts;
    pts.reserve(b.dim());
    for (std::size_t i = 0; i < b.dim(); ++i) {
        pts.push_back({Rat(3 * static_cast<long>(i + 1)), Rat(2 - 2 * bit(b, i))});
    }
    return Curve2(std::move(pts));
}

EuclidEmbedding embed_euclid(const OvInstance& inst)
{
    EuclidEmbedding out{{}, {}, SqDist(static_cast<long>(inst.dim()))};
    for (const auto& a : inst.a()) {
        out.p.push_back(embed_point_a(a));
    }
    for (const auto& b : inst.b()) {
        out.q.push_back(embed_point_b(b));
    }
    return out;
}

FrechetEmbedding embed_frechet(const OvInstance& inst)
{
    FrechetEmbedding out{{}, {}, SqDist(1)};
    for (const auto& a : inst.a()) {
        out.p.push_back(embed_curve_a(a));
    }
    for (const auto& b : inst.b()) {
        out.q.push_back(embed_curve_b(b));
    }
    return out;
}

EuclidEmbedding reduce_ov_to_bcp(const OvInstance& inst) { return embed_euclid(inst); }

GadgetConfig::GadgetConfig(Rat delta, bool alignment_padding)
    : delta_(std::move(delta)), alignment_padding_(alignment_padding)
{
    if (delta_.sign() <= 0 || !(delta_ * delta_ < delta_)) {
        throw InvalidInput("gadget delta must satisfy 0 < delta and delta^2 < delta");
    }
}

Curve2 vector_gadget(const BitVector& z, Side side, const GadgetConfig& cfg)
{
    const Rat& delta = cfg.delta();
    const Rat delta_sq = delta * delta;
    const Rat half(1, 2);
    std::vector<Point2> pts;
    pts.reserve(z.dim());
    for (std::size_t k = 0; k < z.dim(); ++k) {
        const bool odd = (k + 1) % 2 == 1; // 1-based index i = k + 1
        Rat x = odd ? -delta : delta;
        // (-1)^{z_i} delta^2
        const Rat wobble = z.get(k) ? -delta_sq : delta_sq;
        Rat y = side == Side::a ? half - wobble : -half + wobble;
        pts.push_back({std::move(x), std::move(y)});
    }
    return Curve2(std::move(pts));
}

OrGadgetAnchors or_gadget_anchors()
{
    return {{Rat(-1, 2), Rat(0)}, {Rat(1, 2), Rat(0)}, {Rat(-1, 2), Rat(-1)}, {Rat(1, 2), Rat(-1)}};
}

AlignmentLayout alignment_layout(std::size_t d)
{
    AlignmentLayout layout;
    if (d <= 3) {
        layout.dim = d;
        for (std::size_t i = 0; i < d; ++i) {
            layout.data.push_back(i);
        }
        return layout;
    }
    // Smallest D = 2km + 2 leaving at least d free positions; k <= m suffices
    // by symmetry of the cost, smaller k wins ties.
    std::size_t best_dim = 0;
    std::size_t best_k = 0;
    std::size_t best_m = 0;
    for (std::size_t k = 1; k <= d; ++k) {
        for (std::size_t m = 1; m <= d; ++m) {
            const std::size_t dim = 2 * k * m + 2;
            if (dim - k - m >= d && (best_dim == 0 || dim < best_dim)) {
                best_dim = dim;
                best_k = k;
                best_m = m;
            }
        }
    }
    layout.dim = best_dim;
    std::vector<char> used(best_dim, 0);
    for (std::size_t i = 0; i < best_k; ++i) {
        layout.a_markers.push_back(2 * i);
        used[2 * i] = 1;
    }
    for (std::size_t j = 1; j <= best_m; ++j) {
        layout.b_markers.push_back(2 * best_k * j);
        used[2 * best_k * j] = 1;
    }
    for (std::size_t p = 0; p < best_dim && layout.data.size() < d; ++p) {
        if (used[p] == 0) {
            layout.data.push_back(p);
        }
    }
    return layout;
}

OvInstance pad_for_alignment(const OvInstance& inst)
{
    const AlignmentLayout layout = alignment_layout(inst.dim());
    if (layout.dim == inst.dim()) {
        return inst;
    }
    auto encode = [&](const BitVector& z, const std::vector<std::size_t>& markers) {
        BitVector out(layout.dim);
        for (auto p : markers) {
            out.set(p, true);
        }
        for (std::size_t i = 0; i < z.dim(); ++i) {
            out.set(layout.data[i], z.get(i));
        }
        return out;
    };
    std::vector<BitVector> a;
    std::vector<BitVector> b;
    for (const auto& v : inst.a()) {
        a.push_back(encode(v, layout.a_markers));
    }
    for (const auto& v : inst.b()) {
        b.push_back(encode(v, layout.b_markers));
    }
    return OvInstance(std::move(a), std::move(b));
}

OrGadgetOutput or_gadget(const OvInstance& inst, const GadgetConfig& cfg)
{
    if (!cfg.validated()) {
        throw InvalidInput("gadget config has not been validated; run validate_gadget_config first");
    }
    return build_or_gadget(inst, cfg);
}

std::pair<std::size_t, std::size_t> or_gadget_sizes(std::size_t n_a, std::size_t n_b, std::size_t d,
                                                    const GadgetConfig& cfg)
{
    const std::size_t dim = cfg.alignment_padding() ? alignment_layout(d).dim : d;
    return {n_a * (dim + 2), n_b * dim + 4};
}

GadgetValidation validate_gadget_config(GadgetConfig& cfg, std::size_t trials, std::size_t max_n,
                                        std::size_t max_d, std::uint64_t seed)
{
    if (max_n == 0 || max_d == 0 || max_n > kMaxOracleSide || max_d > kMaxOracleDim) {
        throw InvalidInput("validation caps must lie within the oracle limits");
    }
    std::vector<OvInstance> sweep;
    for (std::size_t d = 1; d <= 2; ++d) {
        for (std::size_t n_a = 1; n_a <= 2; ++n_a) {
            for (std::size_t n_b = 1; n_b <= 2; ++n_b) {
                const std::uint64_t patterns = std::uint64_t{1} << ((n_a + n_b) * d);
                for (std::uint64_t code = 0; code < patterns; ++code) {
                    sweep.push_back(instance_from_code(n_a, n_b, d, code));
                }
            }
        }
    }
    SplitMix64 rng(seed);
    for (std::size_t k = 0; k < trials; ++k) {
        sweep.push_back(random_small_instance(rng, max_n, max_d));
    }

    std::vector<char> agree(sweep.size(), 0);
    const auto count = static_cast<std::int64_t>(sweep.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t r = 0; r < count; ++r) {
        agree[static_cast<std::size_t>(r)] = gadget_agrees(sweep[static_cast<std::size_t>(r)], cfg) ? 1 : 0;
    }

    GadgetValidation result;
    result.instances_checked = sweep.size();
    const auto bad = std::find(agree.begin(), agree.end(), 0);
    if (bad != agree.end()) {
        result.counterexample = sweep[static_cast<std::size_t>(bad - agree.begin())];
        return result;
    }
    result.ok = true;
    cfg.validated_ = true;
    return result;
}

const GadgetConfig& validated_default_gadget()
{
    static const GadgetConfig cfg = [] {
        GadgetConfig c = GadgetConfig::with_default_delta();
        if (!validate_gadget_config(c, 200, 6, 6).ok) {
            throw std::logic_error("default gadget delta failed validation");
        }
        return c;
    }();
    return cfg;
}

ReductionKind parse_reduction_kind(std::string_view name)
{
    for (auto kind : all_reduction_kinds()) {
        if (to_string(kind) == name) {
            return kind;
        }
    }
    throw InvalidInput("unknown reduction kind '" + std::string(name) + "'");
}

std::string_view to_string(ReductionKind kind)
{
    switch (kind) {
    case ReductionKind::euclid_embed:
        return "euclid-embed";
    case ReductionKind::frechet_embed:
        return "frechet-embed";
    case ReductionKind::ov_to_bcp:
        return "ov-to-bcp";
    case ReductionKind::ov_to_frechet:
        return "ov-to-frechet";
    case ReductionKind::unbalanced_nn:
        return "unbalanced-nn";
    }
    return "?";
}

const std::vector<ReductionKind>& all_reduction_kinds()
{
    static const std::vector<ReductionKind> kinds{ReductionKind::euclid_embed, ReductionKind::frechet_embed,
                                                  ReductionKind::ov_to_bcp, ReductionKind::ov_to_frechet,
                                                  ReductionKind::unbalanced_nn};
    return kinds;
}

ReductionReport verify_reduction(ReductionKind kind, const OvInstance& inst, const VerifyOptions& options,
                                 std::string instance_id)
{
    check_caps(inst, options.caps);
    const GadgetConfig& gadget = options.gadget ? *options.gadget : validated_default_gadget();
    const bool fault = options.inject_threshold_fault;

    ReductionReport report;
    report.instance_id = std::move(instance_id);
    report.kind = kind;
    report.oracle_answer = timed(report.oracle_time, [&] { return serial::ov_decide(inst).has_value(); });

    report.reduced_answer = timed(report.reduced_time, [&] {
        switch (kind) {
        case ReductionKind::euclid_embed: {
            const auto emb = embed_euclid(inst);
            const SqDist tau = fault ? SqDist(emb.tau_sq.value() + Rat(8)) : emb.tau_sq;
            for (const auto& p : emb.p) {
                for (const auto& q : emb.q) {
                    if (squared_euclidean(p, q) <= tau) {
                        return true;
                    }
                }
            }
            return false;
        }
        case ReductionKind::frechet_embed: {
            const auto emb = embed_frechet(inst);
            const SqDist tau = fault ? SqDist(9) : emb.tau_sq;
            for (const auto& p : emb.p) {
                for (const auto& q : emb.q) {
                    if (frechet_decide(p, q, tau)) {
                        return true;
                    }
                }
            }
            return false;
        }
        case ReductionKind::ov_to_bcp: {
            const auto emb = reduce_ov_to_bcp(inst);
            const SqDist tau = fault ? SqDist(emb.tau_sq.value() + Rat(8)) : emb.tau_sq;
            return serial::bcp_euclid(emb.p, emb.q).sq_value <= tau;
        }
        case ReductionKind::ov_to_frechet: {
            const auto out = or_gadget(inst, gadget);
            return frechet_decide(out.pi, out.sigma, fault ? SqDist(9) : out.tau_sq);
        }
        case ReductionKind::unbalanced_nn: {
            auto emb = embed_euclid(inst);
            const SqDist tau = fault ? SqDist(emb.tau_sq.value() + Rat(8)) : emb.tau_sq;
            const NnIndex index = nn_build(std::move(emb.p), NnMetric::euclid_kdtree);
            const auto hits = serial::nn_query_all(index, emb.q);
            return std::any_of(hits.begin(), hits.end(), [&](const NnHit& h) { return h.sq_value <= tau; });
        }
        }
        return false;
    });
    report.agree = report.oracle_answer == report.reduced_answer;
    return report;
}

} // namespace finegeo
