#include "finegeo/proximity.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

#include <omp.h>

#include "finegeo/frechet.hpp"

namespace finegeo {

namespace {

void check_nonempty(std::size_t p, std::size_t q)
{
    if (p == 0 || q == 0) {
        throw InvalidInput("closest pair needs two nonempty sets");
    }
}

void check_dims(std::span<const PointD> p, std::span<const PointD> q)
{
    check_nonempty(p.size(), q.size());
    const std::size_t d = p.front().dim();
    for (auto set : {p, q}) {
        for (const auto& x : set) {
            if (x.dim() != d) {
                throw InvalidInput("closest pair over points of different dimensions");
            }
        }
    }
}

bool better(const BcpResult& x, const BcpResult& y)
{
    if (x.sq_value != y.sq_value) {
        return x.sq_value < y.sq_value;
    }
    return std::tie(x.index_p, x.index_q) < std::tie(y.index_p, y.index_q);
}

template <typename Item, typename Dist>
BcpResult bcp_serial(std::span<const Item> p, std::span<const Item> q, Dist dist)
{
    std::optional<BcpResult> best;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < q.size(); ++j) {
            SqDist d = dist(p[i], q[j]);
            if (!best || d < best->sq_value) {
                best = BcpResult{i, j, std::move(d)};
            }
        }
    }
    return *best;
}

// Each row of P is solved independently, then rows are merged under the
// shared (distance, index_p, index_q) order, so the answer is schedule-free.
template <typename Item, typename Dist>
BcpResult bcp_parallel(std::span<const Item> p, std::span<const Item> q, Dist dist)
{
    std::vector<BcpResult> rows(p.size());
    const auto n = static_cast<std::int64_t>(p.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t r = 0; r < n; ++r) {
        const auto i = static_cast<std::size_t>(r);
        rows[i] = bcp_serial(p.subspan(i, 1), q, dist);
        rows[i].index_p = i;
    }
    return *std::min_element(rows.begin(), rows.end(), better);
}

SqDist euclid(const PointD& x, const PointD& y) { return squared_euclidean(x, y); }
SqDist frechet(const Curve2& x, const Curve2& y) { return frechet_sq(x, y).sq_value; }

bool improves(const NnHit& best, const SqDist& d, std::size_t idx)
{
    return d < best.sq_value || (d == best.sq_value && idx < best.index);
}

template <typename Item, typename Dist>
NnHit linear_scan(const std::vector<Item>& items, const Item& q, Dist dist)
{
    NnHit best{0, dist(items.front(), q)};
    for (std::size_t i = 1; i < items.size(); ++i) {
        SqDist d = dist(items[i], q);
        if (d < best.sq_value) {
            best = {i, std::move(d)};
        }
    }
    return best;
}

} // namespace

// k-d tree: axis round-robin by depth, split at the lower median, points on
// the splitting plane go left. Leaves hold up to kLeafSize items.
class KdTree {
public:
    KdTree(const std::vector<PointD>& points) : points_(points), order_(points.size())
    {
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        root_ = build(0, order_.size(), 0);
    }

    NnHit query(const PointD& q) const
    {
        NnHit best{order_.front(), squared_euclidean(points_[order_.front()], q)};
        search(root_, q, best);
        return best;
    }

private:
    static constexpr std::size_t kLeafSize = 4;
    static constexpr std::size_t kNoChild = static_cast<std::size_t>(-1);

    struct Node {
        std::size_t begin = 0;
        std::size_t end = 0;
        std::size_t axis = 0;
        Rat split;
        std::size_t left = kNoChild;
        std::size_t right = kNoChild;

        bool leaf() const { return left == kNoChild; }
    };

    std::size_t build(std::size_t begin, std::size_t end, std::size_t depth)
    {
        const std::size_t id = nodes_.size();
        nodes_.push_back({begin, end, 0, Rat(0), kNoChild, kNoChild});
        const std::size_t count = end - begin;
        if (count <= kLeafSize) {
            return id;
        }
        const std::size_t axis = depth % points_.front().dim();
        auto first = order_.begin() + static_cast<std::ptrdiff_t>(begin);
        auto last = order_.begin() + static_cast<std::ptrdiff_t>(end);
        std::sort(first, last, [&](std::size_t x, std::size_t y) {
            const auto c = points_[x][axis] <=> points_[y][axis];
            return c < 0 || (c == 0 && x < y);
        });
        Rat split = points_[order_[begin + (count - 1) / 2]][axis];
        auto mid = std::partition_point(first, last, [&](std::size_t x) { return points_[x][axis] <= split; });
        const auto cut = static_cast<std::size_t>(mid - order_.begin());
        if (cut == end) {
            return id;
        }
        const std::size_t left = build(begin, cut, depth + 1);
        const std::size_t right = build(cut, end, depth + 1);
        Node& node = nodes_[id];
        node.axis = axis;
        node.split = std::move(split);
        node.left = left;
        node.right = right;
        return id;
    }

    void search(std::size_t id, const PointD& q, NnHit& best) const
    {
        const Node& node = nodes_[id];
        if (node.leaf()) {
            for (std::size_t k = node.begin; k < node.end; ++k) {
                const std::size_t idx = order_[k];
                SqDist d = squared_euclidean(points_[idx], q);
                if (improves(best, d, idx)) {
                    best = {idx, std::move(d)};
                }
            }
            return;
        }
        const Rat gap = q[node.axis] - node.split;
        const bool go_left = gap.sign() <= 0;
        search(go_left ? node.left : node.right, q, best);
        if (SqDist(gap * gap) <= best.sq_value) {
            search(go_left ? node.right : node.left, q, best);
        }
    }

    const std::vector<PointD>& points_;
    std::vector<std::size_t> order_;
    std::vector<Node> nodes_;
    std::size_t root_ = 0;
};

BcpResult bcp_euclid(std::span<const PointD> p, std::span<const PointD> q)
{
    check_dims(p, q);
    return bcp_parallel(p, q, euclid);
}

BcpResult bcp_frechet(std::span<const Curve2> p, std::span<const Curve2> q)
{
    check_nonempty(p.size(), q.size());
    return bcp_parallel(p, q, frechet);
}

NnMetric parse_nn_metric(std::string_view name)
{
    if (name == "euclid-linear") {
        return NnMetric::euclid_linear;
    }
    if (name == "euclid-kdtree") {
        return NnMetric::euclid_kdtree;
    }
    if (name == "frechet-linear") {
        return NnMetric::frechet_linear;
    }
    throw InvalidInput("unknown nearest-neighbour metric '" + std::string(name) + "'");
}

std::string_view to_string(NnMetric metric)
{
    switch (metric) {
    case NnMetric::euclid_linear:
        return "euclid-linear";
    case NnMetric::euclid_kdtree:
        return "euclid-kdtree";
    case NnMetric::frechet_linear:
        return "frechet-linear";
    }
    return "?";
}

NnIndex::NnIndex(std::variant<std::vector<PointD>, std::vector<Curve2>> items, NnMetric metric)
    : items_(std::move(items)), metric_(metric)
{
    if (metric_ == NnMetric::euclid_kdtree) {
        tree_ = std::make_unique<KdTree>(std::get<std::vector<PointD>>(items_));
    }
}

NnIndex::NnIndex(NnIndex&& other) noexcept
    : items_(std::move(other.items_)), metric_(other.metric_)
{
    // The tree refers to the stored points; rebuild it over the moved storage.
    if (metric_ == NnMetric::euclid_kdtree) {
        tree_ = std::make_unique<KdTree>(std::get<std::vector<PointD>>(items_));
    }
}

NnIndex& NnIndex::operator=(NnIndex&& other) noexcept
{
    items_ = std::move(other.items_);
    metric_ = other.metric_;
    tree_.reset();
    if (metric_ == NnMetric::euclid_kdtree) {
        tree_ = std::make_unique<KdTree>(std::get<std::vector<PointD>>(items_));
    }
    return *this;
}

NnIndex::~NnIndex() = default;

std::size_t NnIndex::size() const
{
    return std::visit([](const auto& v) { return v.size(); }, items_);
}

NnIndex nn_build(std::vector<PointD> points, NnMetric metric)
{
    if (points.empty()) {
        throw InvalidInput("nearest-neighbour index over an empty set");
    }
    if (metric == NnMetric::frechet_linear) {
        throw InvalidInput("frechet-linear index needs curves, not points");
    }
    const std::size_t d = points.front().dim();
    if (d == 0 || std::any_of(points.begin(), points.end(), [&](const PointD& p) { return p.dim() != d; })) {
        throw InvalidInput("nearest-neighbour points must share a positive dimension");
    }
    return NnIndex(std::move(points), metric);
}

NnIndex nn_build(std::vector<Curve2> curves, NnMetric metric)
{
    if (curves.empty()) {
        throw InvalidInput("nearest-neighbour index over an empty set");
    }
    if (metric != NnMetric::frechet_linear) {
        throw InvalidInput("curves can only be indexed with frechet-linear");
    }
    return NnIndex(std::move(curves), metric);
}

NnHit nn_query(const NnIndex& index, const PointD& q)
{
    const auto* points = std::get_if<std::vector<PointD>>(&index.items_);
    if (points == nullptr) {
        throw InvalidInput("point query against a curve index");
    }
    if (q.dim() != points->front().dim()) {
        throw InvalidInput("query dimension does not match the index");
    }
    if (index.tree_) {
        return index.tree_->query(q);
    }
    return linear_scan(*points, q, euclid);
}

NnHit nn_query(const NnIndex& index, const Curve2& q)
{
    const auto* curves = std::get_if<std::vector<Curve2>>(&index.items_);
    if (curves == nullptr) {
        throw InvalidInput("curve query against a point index");
    }
    return linear_scan(*curves, q, frechet);
}

std::vector<NnHit> nn_query_all(const NnIndex& index, std::span<const PointD> queries)
{
    // Validate up front; exceptions must not leave the parallel region.
    for (const auto& q : queries) {
        if (index.metric() == NnMetric::frechet_linear || q.dim() != queries.front().dim()) {
            throw InvalidInput("batched point queries need a Euclidean index and one dimension");
        }
    }
    if (!queries.empty()) {
        (void)nn_query(index, queries.front());
    }
    std::vector<NnHit> hits(queries.size());
    const auto n = static_cast<std::int64_t>(queries.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t r = 0; r < n; ++r) {
        hits[static_cast<std::size_t>(r)] = nn_query(index, queries[static_cast<std::size_t>(r)]);
    }
    return hits;
}

namespace serial {

BcpResult bcp_euclid(std::span<const PointD> p, std::span<const PointD> q)
{
    check_dims(p, q);
    return bcp_serial(p, q, euclid);
}

BcpResult bcp_frechet(std::span<const Curve2> p, std::span<const Curve2> q)
{
    check_nonempty(p.size(), q.size());
    return bcp_serial(p, q, frechet);
}

std::vector<NnHit> nn_query_all(const NnIndex& index, std::span<const PointD> queries)
{
    std::vector<NnHit> hits;
    hits.reserve(queries.size());
    for (const auto& q : queries) {
        hits.push_back(nn_query(index, q));
    }
    return hits;
}

} // namespace serial

} // namespace finegeo
