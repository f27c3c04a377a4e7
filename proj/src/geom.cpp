#include "patternforge/geom.hpp"

#include "parallel.hpp"
#include "patternforge/modular.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace patternforge {

PointSet::PointSet(int order, std::vector<CycloNum> points) : order_(order)
{
    points_.reserve(points.size());
    for (auto &p : points) {
        if (p.order() != order_)
            throw std::invalid_argument("PointSet: point " + p.to_string() + " has conductor " +
                                        std::to_string(p.order()) + ", expected " + std::to_string(order_));
        if (!insert(std::move(p)))
            throw std::invalid_argument("PointSet: repeated point");
    }
}

PointSet PointSet::union_of(int order, std::span<const CycloNum> points)
{
    PointSet s(order);
    for (const auto &p : points) {
        if (p.order() != order)
            throw std::invalid_argument("PointSet::union_of: conductor mismatch");
        s.insert(p);
    }
    return s;
}

std::optional<std::size_t> PointSet::find(const CycloNum &p) const
{
    if (p.order() != order_)
        return std::nullopt;
    auto it = index_.find(p);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

bool PointSet::insert(CycloNum p)
{
    if (p.order() != order_)
        throw std::invalid_argument("PointSet::insert: conductor mismatch");
    auto [it, fresh] = index_.emplace(p, points_.size());
    if (!fresh)
        return false;
    points_.push_back(std::move(p));
    return true;
}

PointSet PointSet::lift(int new_order) const
{
    if (new_order == order_)
        return *this;
    std::vector<CycloNum> lifted;
    lifted.reserve(points_.size());
    for (const auto &p : points_)
        lifted.push_back(p.lift(new_order));
    return PointSet(new_order, std::move(lifted));
}

PointSet PointSet::affine(const CycloNum &scale, const CycloNum &shift) const
{
    if (scale.is_zero())
        throw std::invalid_argument("PointSet::affine: zero scale");
    std::vector<CycloNum> out;
    out.reserve(points_.size());
    for (const auto &p : points_)
        out.push_back(scale * p + shift);
    return PointSet(order_, std::move(out));
}

bool operator==(const PointSet &a, const PointSet &b)
{
    if (a.size() != b.size())
        return false;
    return std::all_of(a.begin(), a.end(), [&b](const CycloNum &p) { return b.contains(p); });
}

PointSet minkowski_sum(const PointSet &a, const PointSet &b)
{
    if (a.order() != b.order()) {
        int common = std::lcm(a.order(), b.order());
        return minkowski_sum(a.lift(common), b.lift(common));
    }
    PointSet out(a.order());
    for (const auto &x : a)
        for (const auto &y : b)
            out.insert(x + y);
    return out;
}

bool collinear(const CycloNum &a, const CycloNum &b, const CycloNum &c)
{
    if (a == b || a == c || b == c)
        throw std::invalid_argument("collinear: coincident points");
    return ((c - a) * (b - a).conj()).is_real();
}

namespace {

// Exact test that segment direction u is parallel to v (both nonzero).
bool parallel(const CycloNum &u, const CycloNum &v) { return (u * v.conj()).is_real(); }

constexpr std::uint64_t kDegenerate = ~std::uint64_t{0};

// Projective slope keys of the directions from point `from` to each point in
// `targets`.  A direction d is keyed by [image(d) : image(conj d)] for both
// embeddings; real multiples of d share the key unless the multiplier maps to
// zero, in which case the key is kDegenerate and the caller falls back to
// exact comparison.
class SlopeKeyer {
public:
    explicit SlopeKeyer(const DualImages &img) : img_(img) {}

    void keys(std::size_t from, std::size_t begin, std::size_t end, std::vector<std::uint64_t> &out)
    {
        const std::size_t n = end - begin;
        out.assign(n, 0);
        for (int k = 0; k < 2; ++k) {
            const auto &m = img_.embedding(k).modulus();
            const std::uint32_t p = m.p;
            auto x = img_.values(k).subspan(begin, n);
            auto y = img_.conj_values(k).subspan(begin, n);
            dx_.resize(n);
            dy_.resize(n);
            simd::axpy_mod(m, 1, (p - img_.values(k)[from]) % p, x, dx_);
            simd::axpy_mod(m, 1, (p - img_.conj_values(k)[from]) % p, y, dy_);
            // batch inversion of the nonzero dy entries
            inv_.assign(n, 1);
            prefix_.resize(n);
            std::uint32_t acc = 1;
            for (std::size_t i = 0; i < n; ++i) {
                prefix_[i] = acc;
                if (dy_[i] != 0)
                    acc = simd::mulmod(acc, dy_[i], p);
            }
            std::uint32_t inv_acc = simd::invmod(acc, p);
            for (std::size_t i = n; i-- > 0;) {
                if (dy_[i] == 0)
                    continue;
                inv_[i] = simd::mulmod(inv_acc, prefix_[i], p);
                inv_acc = simd::mulmod(inv_acc, dy_[i], p);
            }
            ratio_.resize(n);
            simd::mul_mod(m, dx_, inv_, ratio_);
            for (std::size_t i = 0; i < n; ++i) {
                if (out[i] == kDegenerate)
                    continue;
                std::uint64_t r;
                if (dy_[i] != 0)
                    r = ratio_[i];
                else if (dx_[i] != 0)
                    r = p;  // point at infinity
                else {
                    out[i] = kDegenerate;
                    continue;
                }
                out[i] = k == 0 ? r * (simd::kMaxModulus + 1) : out[i] + r;
            }
        }
    }

private:
    const DualImages &img_;
    std::vector<std::uint32_t> dx_, dy_, inv_, prefix_, ratio_;
};

}  // namespace

std::size_t max_collinear(const PointSet &s)
{
    const std::size_t n = s.size();
    if (n == 0)
        throw std::invalid_argument("max_collinear: empty point set");
    if (n <= 2)
        return n;
    const auto pts = s.points();
    DualImages img(s.order(), pts, {}, true);

    const std::size_t blocks = detail::block_count(n, 8);
    std::vector<std::size_t> block_best(blocks, 2);
    detail::parallel_blocks(
        n,
        [&](std::size_t block, std::size_t lo, std::size_t hi) {
            SlopeKeyer keyer(img);
            std::vector<std::uint64_t> keys;
            std::vector<std::pair<std::uint64_t, std::size_t>> order;
            std::size_t best = 2;
            for (std::size_t a = lo; a < hi; ++a) {
                keyer.keys(a, 0, n, keys);
                order.clear();
                std::vector<std::size_t> degenerate;
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == a)
                        continue;
                    if (keys[j] == kDegenerate)
                        degenerate.push_back(j);
                    else
                        order.emplace_back(keys[j], j);
                }
                std::sort(order.begin(), order.end());
                std::vector<std::size_t> remaining, rest;
                for (std::size_t r = 0; r < order.size();) {
                    std::size_t e = r;
                    while (e < order.size() && order[e].first == order[r].first)
                        ++e;
                    if (e - r >= 2) {
                        remaining.clear();
                        for (std::size_t t = r; t < e; ++t)
                            remaining.push_back(order[t].second);
                        while (remaining.size() >= 2) {
                            const CycloNum d = pts[remaining[0]] - pts[a];
                            std::size_t cluster = 1;
                            rest.clear();
                            for (std::size_t t = 1; t < remaining.size(); ++t) {
                                if (parallel(pts[remaining[t]] - pts[a], d))
                                    ++cluster;
                                else
                                    rest.push_back(remaining[t]);
                            }
                            best = std::max(best, cluster + 1);
                            remaining.swap(rest);
                        }
                    }
                    r = e;
                }
                for (std::size_t j : degenerate) {
                    const CycloNum d = pts[j] - pts[a];
                    std::size_t count = 2;
                    for (std::size_t c = 0; c < n; ++c)
                        if (c != a && c != j && parallel(pts[c] - pts[a], d))
                            ++count;
                    best = std::max(best, count);
                }
            }
            block_best[block] = best;
        },
        8);
    return *std::max_element(block_best.begin(), block_best.end());
}

std::optional<Parallelogram> find_parallelogram(const PointSet &s)
{
    const std::size_t n = s.size();
    if (n < 4)
        return std::nullopt;
    const auto pts = s.points();
    DualImages img(s.order(), pts);
    const std::uint32_t p0 = img.embedding(0).prime(), p1 = img.embedding(1).prime();
    auto v0 = img.values(0), v1 = img.values(1);

    std::vector<std::tuple<std::uint64_t, std::size_t, std::size_t>> sums;
    sums.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            sums.emplace_back(DualImages::key(simd::addmod(v0[i], v0[j], p0), simd::addmod(v1[i], v1[j], p1)), i, j);
    std::sort(sums.begin(), sums.end());

    std::optional<std::array<std::size_t, 4>> best;  // (i, j, k, l): p_i + p_j = p_k + p_l
    for (std::size_t r = 0; r < sums.size();) {
        std::size_t e = r;
        while (e < sums.size() && std::get<0>(sums[e]) == std::get<0>(sums[r]))
            ++e;
        if (e - r >= 2) {
            std::unordered_map<CycloNum, std::pair<std::size_t, std::size_t>> seen;
            for (std::size_t t = r; t < e; ++t) {
                auto [key, i, j] = sums[t];
                CycloNum sum = pts[i] + pts[j];
                auto [it, fresh] = seen.emplace(std::move(sum), std::make_pair(i, j));
                if (fresh)
                    continue;
                // pairs with equal exact sums are disjoint; first-seen pair is lexicographically smaller
                std::array<std::size_t, 4> quad{it->second.first, it->second.second, i, j};
                if (!best || quad < *best)
                    best = quad;
            }
        }
        r = e;
    }
    if (!best)
        return std::nullopt;
    auto [i, j, k, l] = *best;
    return Parallelogram{{i, k, j, l}};
}

bool has_parallel_segments(const PointSet &s)
{
    const std::size_t n = s.size();
    if (n < 4)
        throw std::invalid_argument("has_parallel_segments: needs at least 4 points, got " + std::to_string(n));
    const auto pts = s.points();
    DualImages img(s.order(), pts, {}, true);
    SlopeKeyer keyer(img);

    struct Segment {
        std::uint64_t key;
        std::size_t i, j;
        bool operator<(const Segment &o) const { return std::tie(key, i, j) < std::tie(o.key, o.i, o.j); }
    };
    std::vector<Segment> segs;
    std::vector<Segment> degenerate;
    std::vector<std::uint64_t> keys;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        keyer.keys(i, i + 1, n, keys);
        for (std::size_t t = 0; t < keys.size(); ++t) {
            Segment seg{keys[t], i, i + 1 + t};
            (keys[t] == kDegenerate ? degenerate : segs).push_back(seg);
        }
    }
    std::sort(segs.begin(), segs.end());
    auto disjoint = [](const Segment &a, const Segment &b) {
        return a.i != b.i && a.i != b.j && a.j != b.i && a.j != b.j;
    };
    auto dir = [&pts](const Segment &a) { return pts[a.j] - pts[a.i]; };

    for (std::size_t r = 0; r < segs.size();) {
        std::size_t e = r;
        while (e < segs.size() && segs[e].key == segs[r].key)
            ++e;
        for (std::size_t a = r; a < e; ++a)
            for (std::size_t b = a + 1; b < e; ++b)
                if (disjoint(segs[a], segs[b]) && parallel(dir(segs[a]), dir(segs[b])))
                    return true;
        r = e;
    }
    for (const auto &d : degenerate) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                Segment other{0, i, j};
                if ((i != d.i || j != d.j) && disjoint(d, other) && parallel(dir(d), dir(other)))
                    return true;
            }
    }
    return false;
}

}  // namespace patternforge
