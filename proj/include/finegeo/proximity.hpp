#pragma once

// Target-problem solvers: bichromatic closest pair under the Euclidean and
// discrete Fréchet distance, and exact nearest-neighbour indices.

#include <cstddef>
#include <memory>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "finegeo/core_model.hpp"

namespace finegeo {

/// Closest pair, positions 0-based. Ties go to the smallest (index_p, index_q).
struct BcpResult {
    std::size_t index_p = 0;
    std::size_t index_q = 0;
    SqDist sq_value;

    friend bool operator==(const BcpResult&, const BcpResult&) = default;
};

BcpResult bcp_euclid(std::span<const PointD> p, std::span<const PointD> q);
BcpResult bcp_frechet(std::span<const Curve2> p, std::span<const Curve2> q);

enum class NnMetric { euclid_linear, euclid_kdtree, frechet_linear };

NnMetric parse_nn_metric(std::string_view name);
std::string_view to_string(NnMetric metric);

struct NnHit {
    std::size_t index = 0;
    SqDist sq_value;

    friend bool operator==(const NnHit&, const NnHit&) = default;
};

class KdTree;

/// Immutable nearest-neighbour index over points or curves.
class NnIndex {
public:
    NnIndex(NnIndex&&) noexcept;
    NnIndex& operator=(NnIndex&&) noexcept;
    ~NnIndex();

    NnMetric metric() const { return metric_; }
    std::size_t size() const;

    friend NnIndex nn_build(std::vector<PointD> points, NnMetric metric);
    friend NnIndex nn_build(std::vector<Curve2> curves, NnMetric metric);
    friend NnHit nn_query(const NnIndex& index, const PointD& q);
    friend NnHit nn_query(const NnIndex& index, const Curve2& q);

private:
    NnIndex(std::variant<std::vector<PointD>, std::vector<Curve2>> items, NnMetric metric);

    std::variant<std::vector<PointD>, std::vector<Curve2>> items_;
    NnMetric metric_;
    std::unique_ptr<KdTree> tree_;
};

/// Throws InvalidInput for an empty set or a metric that does not fit the items.
NnIndex nn_build(std::vector<PointD> points, NnMetric metric);
NnIndex nn_build(std::vector<Curve2> curves, NnMetric metric);

/// Exact nearest stored item; ties go to the smallest position.
NnHit nn_query(const NnIndex& index, const PointD& q);
NnHit nn_query(const NnIndex& index, const Curve2& q);

/// Answers every query; queries are independent and run in parallel.
std::vector<NnHit> nn_query_all(const NnIndex& index, std::span<const PointD> queries);

namespace serial {

BcpResult bcp_euclid(std::span<const PointD> p, std::span<const PointD> q);
BcpResult bcp_frechet(std::span<const Curve2> p, std::span<const Curve2> q);
std::vector<NnHit> nn_query_all(const NnIndex& index, std::span<const PointD> queries);

} // namespace serial

} // namespace finegeo
