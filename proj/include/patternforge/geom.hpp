#pragma once

#include "patternforge/exactnum.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace patternforge {

/// Finite set of pairwise distinct points of Q(zeta_M), in insertion order.
class PointSet {
public:
    explicit PointSet(int order = 4) : order_(order) {}

    /// Throws std::invalid_argument on a repeated point or a conductor mismatch.
    PointSet(int order, std::vector<CycloNum> points);

    /// Like the constructor, but silently drops repeats (first occurrence wins).
    static PointSet union_of(int order, std::span<const CycloNum> points);

    int order() const { return order_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const CycloNum &operator[](std::size_t i) const { return points_[i]; }
    std::span<const CycloNum> points() const { return points_; }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    /// Index of `p` if present (exact lookup on the canonical form).
    std::optional<std::size_t> find(const CycloNum &p) const;
    bool contains(const CycloNum &p) const { return find(p).has_value(); }

    /// Appends `p`; returns false (and leaves the set unchanged) if present.
    bool insert(CycloNum p);

    PointSet lift(int new_order) const;

    /// Image under z -> scale * z + shift.
    PointSet affine(const CycloNum &scale, const CycloNum &shift) const;

    friend bool operator==(const PointSet &a, const PointSet &b);

private:
    int order_;
    std::vector<CycloNum> points_;
    std::unordered_map<CycloNum, std::size_t> index_;
};

/// Minkowski sum {a + b}, duplicates merged.
PointSet minkowski_sum(const PointSet &a, const PointSet &b);

/// True iff (c - a) / (b - a) is real.  Throws on coincident inputs.
bool collinear(const CycloNum &a, const CycloNum &b, const CycloNum &c);

/// Largest number of points of `s` on one line.  Throws on an empty set.
std::size_t max_collinear(const PointSet &s);

/// Indices (a, b, c, d) into the set with p_a + p_c = p_b + p_d.
struct Parallelogram {
    std::array<std::size_t, 4> index;
};

std::optional<Parallelogram> find_parallelogram(const PointSet &s);

/// True iff two disjoint point pairs span parallel segments.  Requires at
/// least four points.
bool has_parallel_segments(const PointSet &s);

}  // namespace patternforge
