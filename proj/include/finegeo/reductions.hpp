#pragma once

// Executable reductions from Orthogonal Vectors to the geometric problems,
// and the harness that checks each reduced answer against the OV oracle.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "finegeo/core_model.hpp"

namespace finegeo {

// --- Euclidean and curve embeddings -----------------------------------------

/// p_i = 1 + 2 a_i.
PointD embed_point_a(const BitVector& a);
/// q_i = 2 - 2 b_i.
PointD embed_point_b(const BitVector& b);
/// pi_i = (3i, 1 + 2 a_i), i counted from 1.
Curve2 embed_curve_a(const BitVector& a);
/// sigma_i = (3i, 2 - 2 b_i), i counted from 1.
Curve2 embed_curve_b(const BitVector& b);

/// |p - q|^2 = d + 8<a,b>; the threshold is d.
struct EuclidEmbedding {
    std::vector<PointD> p;
    std::vector<PointD> q;
    SqDist tau_sq;
};

/// Fréchet distance 1 for orthogonal pairs, at least 3 otherwise.
struct FrechetEmbedding {
    std::vector<Curve2> p;
    std::vector<Curve2> q;
    SqDist tau_sq;
};

EuclidEmbedding embed_euclid(const OvInstance& inst);
FrechetEmbedding embed_frechet(const OvInstance& inst);

/// Same sets as embed_euclid; the closest pair is within tau iff some pair is orthogonal.
EuclidEmbedding reduce_ov_to_bcp(const OvInstance& inst);

// --- Vector and OR gadgets --------------------------------------------------

enum class Side { a, b };

class GadgetConfig;
struct GadgetValidation;

/// Compares the OR gadget against ov_decide on every instance with
/// |A|, |B| <= 2 and d <= 2, then on `trials` random instances up to
/// (max_n, max_d). Marks cfg validated on success; on failure returns the
/// first disagreeing instance in sweep order. Throws InvalidInput when the
/// caps exceed the oracle limits.
GadgetValidation validate_gadget_config(GadgetConfig& cfg, std::size_t trials, std::size_t max_n,
                                        std::size_t max_d, std::uint64_t seed = 0x5eed);

/// Gadget scale delta in (0,1). Usable by or_gadget only once
/// validate_gadget_config has accepted it.
class GadgetConfig {
public:
    explicit GadgetConfig(Rat delta, bool alignment_padding = true);

    static GadgetConfig with_default_delta() { return GadgetConfig(Rat(1, 4)); }

    const Rat& delta() const { return delta_; }
    bool alignment_padding() const { return alignment_padding_; }
    bool validated() const { return validated_; }

private:
    friend GadgetValidation validate_gadget_config(GadgetConfig& cfg, std::size_t trials, std::size_t max_n,
                                                   std::size_t max_d, std::uint64_t seed);
    Rat delta_;
    bool alignment_padding_;
    bool validated_ = false;
};

/// Point i (from 1) is ((-1)^i delta, 1/2 - (-1)^{z_i} delta^2) on side A
/// and ((-1)^i delta, -1/2 + (-1)^{z_i} delta^2) on side B.
Curve2 vector_gadget(const BitVector& z, Side side, const GadgetConfig& cfg);

/// Auxiliary vertices of the OR gadget.
struct OrGadgetAnchors {
    Point2 s;
    Point2 t;
    Point2 s_star;
    Point2 t_star;
};

/// s = (-1/2, 0), t = (1/2, 0), s* = (-1/2, -1), t* = (1/2, -1).
/// t* sits below the B-side band so that no A-side gadget point is within
/// distance 1 of it.
OrGadgetAnchors or_gadget_anchors();

/// Coordinate layout used before gadget assembly. For d <= 3 this is the
/// identity. For larger d the vectors are widened to an even dimension
/// D = 2km + 2: A vectors get ones at {0, 2, ..., 2k-2}, B vectors at
/// {2k, 4k, ..., 2km}, and the original bits fill the remaining positions
/// (extra ones are zero). Marker sets are disjoint, so orthogonality is
/// unchanged, while every nonzero even cyclic shift of a B marker set hits an
/// A marker. Consecutive B gadgets then cannot be matched off their own
/// boundaries.
struct AlignmentLayout {
    std::size_t dim = 0;
    std::vector<std::size_t> a_markers;
    std::vector<std::size_t> b_markers;
    std::vector<std::size_t> data; // position of original coordinate i
};

AlignmentLayout alignment_layout(std::size_t d);
OvInstance pad_for_alignment(const OvInstance& inst);

struct OrGadgetOutput {
    Curve2 pi;
    Curve2 sigma;
    SqDist tau_sq;
    std::size_t gadget_dim = 0; // dimension of the encoded (possibly padded) vectors
};

/// pi = (s, VG(a), t) for each a in input order; sigma = (s, s*, VG(b_1), ...,
/// VG(b_n), t*, t). frechet_decide(pi, sigma, 1) iff inst has an orthogonal
/// pair. Throws InvalidInput for an unvalidated config.
OrGadgetOutput or_gadget(const OvInstance& inst, const GadgetConfig& cfg);

/// Expected (|pi|, |sigma|) for the given input sizes under `cfg`.
std::pair<std::size_t, std::size_t> or_gadget_sizes(std::size_t n_a, std::size_t n_b, std::size_t d,
                                                    const GadgetConfig& cfg);

struct GadgetValidation {
    bool ok = false;
    std::size_t instances_checked = 0;
    std::optional<OvInstance> counterexample;
};

inline constexpr std::size_t kMaxOracleSide = 16;
inline constexpr std::size_t kMaxOracleDim = 16;

/// delta = 1/4, validated once per process (200 random trials, n <= 6, d <= 6).
const GadgetConfig& validated_default_gadget();

// --- Verification harness ---------------------------------------------------

enum class ReductionKind { euclid_embed, frechet_embed, ov_to_bcp, ov_to_frechet, unbalanced_nn };

ReductionKind parse_reduction_kind(std::string_view name);
std::string_view to_string(ReductionKind kind);
const std::vector<ReductionKind>& all_reduction_kinds();

struct VerifyCaps {
    std::size_t max_n = kMaxOracleSide;
    std::size_t max_d = kMaxOracleDim;
};

struct VerifyOptions {
    VerifyCaps caps;
    std::optional<GadgetConfig> gadget; // validated default when empty
    /// Test hook: evaluates every reduced instance at a loosened threshold
    /// (d + 8 for Euclidean, 9 for Fréchet) so the harness must flag it.
    bool inject_threshold_fault = false;
};

struct ReductionReport {
    std::string instance_id;
    ReductionKind kind = ReductionKind::euclid_embed;
    bool oracle_answer = false;
    bool reduced_answer = false;
    bool agree = false;
    std::chrono::nanoseconds oracle_time{0};
    std::chrono::nanoseconds reduced_time{0};
};

/// Reduces inst, solves the target with its native solver and compares with
/// ov_decide. Throws InvalidInput when inst exceeds the caps.
ReductionReport verify_reduction(ReductionKind kind, const OvInstance& inst, const VerifyOptions& options = {},
                                 std::string instance_id = {});

} // namespace finegeo
