#include "finegeo/frechet.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>

namespace finegeo {

namespace {

void sq_dist_into(mpq_class& out, mpq_class& tmp, const Point2& p, const Point2& q)
{
    out = p.x.raw() - q.x.raw();
    out *= out;
    tmp = p.y.raw() - q.y.raw();
    tmp *= tmp;
    out += tmp;
}

} // namespace

FrechetResult frechet_sq(const Curve2& pi, const Curve2& sigma)
{
    const std::size_t n = pi.size();
    const std::size_t m = sigma.size();
    std::vector<mpq_class> dist(n * m);
    mpq_class tmp;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            sq_dist_into(dist[i * m + j], tmp, pi[i], sigma[j]);
        }
    }

    // value[c] names the cell whose distance is the prefix value of cell c;
    // values are always one of the pairwise distances, so no copies are made.
    std::vector<std::size_t> value(n * m);
    auto val = [&](std::size_t c) -> const mpq_class& { return dist[value[c]]; };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const std::size_t c = i * m + j;
            if (i == 0 && j == 0) {
                value[c] = c;
                continue;
            }
            std::size_t best = 0;
            bool have = false;
            auto consider = [&](std::size_t p) {
                if (!have || val(p) < val(best)) {
                    best = p;
                    have = true;
                }
            };
            if (i > 0 && j > 0) {
                consider(c - m - 1);
            }
            if (i > 0) {
                consider(c - m);
            }
            if (j > 0) {
                consider(c - 1);
            }
            value[c] = dist[c] >= val(best) ? c : value[best];
        }
    }

    std::vector<IndexPair> rev;
    rev.reserve(n + m);
    std::size_t i = n - 1;
    std::size_t j = m - 1;
    rev.push_back({i, j});
    while (i > 0 || j > 0) {
        const mpq_class* best = nullptr;
        IndexPair next{};
        auto consider = [&](std::size_t pi_idx, std::size_t sj_idx) {
            const mpq_class& v = val(pi_idx * m + sj_idx);
            if (best == nullptr || v < *best) {
                best = &v;
                next = {pi_idx, sj_idx};
            }
        };
        if (i > 0 && j > 0) {
            consider(i - 1, j - 1);
        }
        if (i > 0) {
            consider(i - 1, j);
        }
        if (j > 0) {
            consider(i, j - 1);
        }
        i = next.i;
        j = next.j;
        rev.push_back(next);
    }
    std::reverse(rev.begin(), rev.end());
    return {SqDist(Rat(val(n * m - 1))), Traversal{std::move(rev)}};
}

bool frechet_decide(const Curve2& pi, const Curve2& sigma, const SqDist& tau_sq)
{
    const std::size_t n = pi.size();
    const std::size_t m = sigma.size();
    const mpq_class& tau = tau_sq.value().raw();
    std::vector<char> prev(m, 0);
    std::vector<char> cur(m, 0);
    mpq_class d;
    mpq_class tmp;
    for (std::size_t i = 0; i < n; ++i) {
        bool any = false;
        for (std::size_t j = 0; j < m; ++j) {
            bool reach = false;
            if (i == 0 && j == 0) {
                reach = true;
            } else {
                reach = (i > 0 && prev[j]) || (j > 0 && cur[j - 1]) || (i > 0 && j > 0 && prev[j - 1]);
            }
            if (reach) {
                sq_dist_into(d, tmp, pi[i], sigma[j]);
                reach = d <= tau;
            }
            cur[j] = reach ? 1 : 0;
            any = any || reach;
        }
        if (!any) {
            return false;
        }
        std::swap(prev, cur);
    }
    return prev[m - 1] != 0;
}

SqDist brute_force_frechet_sq(const Curve2& pi, const Curve2& sigma, std::size_t cap)
{
    const std::size_t n = pi.size();
    const std::size_t m = sigma.size();
    if (n + m > cap) {
        throw InvalidInput("curves exceed the enumeration oracle cap of " + std::to_string(cap) +
                           " vertices");
    }
    std::vector<SqDist> dist;
    dist.reserve(n * m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            dist.push_back(squared_euclidean(pi[i], sigma[j]));
        }
    }

    std::optional<SqDist> best;
    std::function<void(std::size_t, std::size_t, const SqDist&)> walk =
        [&](std::size_t i, std::size_t j, const SqDist& running) {
            const SqDist& here = dist[i * m + j];
            const SqDist& worst = here > running ? here : running;
            if (i == n - 1 && j == m - 1) {
                if (!best || worst < *best) {
                    best = worst;
                }
                return;
            }
            if (i + 1 < n) {
                walk(i + 1, j, worst);
            }
            if (j + 1 < m) {
                walk(i, j + 1, worst);
            }
            if (i + 1 < n && j + 1 < m) {
                walk(i + 1, j + 1, worst);
            }
        };
    walk(0, 0, dist[0]);
    return *best;
}

bool is_valid_traversal(const Traversal& t, std::size_t n, std::size_t m)
{
    const auto& s = t.steps;
    if (s.empty() || s.front() != IndexPair{0, 0} || s.back() != IndexPair{n - 1, m - 1}) {
        return false;
    }
    for (std::size_t k = 1; k < s.size(); ++k) {
        const auto di = s[k].i - s[k - 1].i;
        const auto dj = s[k].j - s[k - 1].j;
        const bool ok = s[k].i >= s[k - 1].i && s[k].j >= s[k - 1].j && di <= 1 && dj <= 1 && di + dj >= 1;
        if (!ok) {
            return false;
        }
    }
    return true;
}

SqDist traversal_cost(const Curve2& pi, const Curve2& sigma, const Traversal& t)
{
    SqDist worst;
    for (const auto& step : t.steps) {
        worst = std::max(worst, squared_euclidean(pi[step.i], sigma[step.j]));
    }
    return worst;
}

} // namespace finegeo
