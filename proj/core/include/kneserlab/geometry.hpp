#ifndef KNESERLAB_GEOMETRY_HPP
#define KNESERLAB_GEOMETRY_HPP

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "kneserlab/topology.hpp"

namespace kneserlab {

// Exactness carrier for every geometric predicate. No floating point.
using Rational = mpq_class;

/// Ordered sequence of exact rational points in R^d.
struct PointConfig {
    int d = 0;
    std::vector<std::vector<Rational>> points;

    void validate() const;
    int size() const { return (int)points.size(); }
};

/// Partition of a support (strictly increasing point indices, 0-based)
/// into r disjoint nonempty blocks of point indices.
struct BlockPartition {
    std::vector<int> support;
    std::vector<std::vector<int>> blocks;

    bool operator==(const BlockPartition&) const = default;
};

/// Points gamma(t_i) = (t_i, t_i^2, ..., t_i^d) for strictly increasing ts.
PointConfig moment_curve_config(int d, const std::vector<Rational>& ts);

/// Moment-curve points with parameters t_i = B^(2^i), i = 1..count.
/// The schedule is a candidate; validate with verify_colorful_property.
PointConfig stretched_config(int d, int count, const Rational& base);

/// Decide exactly whether the convex hulls of the given index blocks have
/// a common point (rational LP feasibility, exact-pivot simplex with
/// Bland's rule). Returns a common point when feasible.
std::optional<std::vector<Rational>> hulls_intersect(const PointConfig& config,
                                                     const std::vector<std::vector<int>>& blocks);

/// All partitions of supports of size (r-1)(d+1)+1 into r nonempty blocks
/// whose hulls share a point.
std::vector<BlockPartition> enumerate_tverberg_partitions(const PointConfig& config, int r);

/// Window test: positions Y_k = {(r-1)(k-1)+1, ..., (r-1)k+1} within the
/// support must meet every block exactly once.
bool is_colorful(const BlockPartition& bp, int r, int d);

struct ColorfulReport {
    bool ok = true;
    std::vector<BlockPartition> occurring_not_colorful;
    std::vector<BlockPartition> colorful_not_occurring;
};

/// Checks {occurring Tverberg partitions} == {colorful partitions} over
/// all supports of the config.
ColorfulReport verify_colorful_property(const PointConfig& config, int r);

/// stretched_config validated by verify_colorful_property, squaring the
/// base and retrying on failure (at most 8 escalations).
PointConfig validated_stretched_config(int d, int count, int r, const Rational& base = 2);

struct IntersectionWitness {
    std::vector<Mask> faces;        // the violating r-tuple
    std::vector<Rational> point;    // a common point of the hulls
};

struct NoIntersectionReport {
    bool ok = true;
    std::size_t checked_tuples = 0; // hull-intersection LP decisions made
    std::optional<IntersectionWitness> witness;
};

/// True iff no r pairwise disjoint nonempty faces of K have intersecting
/// convex hulls under vertex i -> config point i. Only inclusion-maximal
/// tuples are solved; hull intersection is monotone under face enlargement.
NoIntersectionReport no_rfold_intersection_on_complex(const SimplicialComplex& K,
                                                      const PointConfig& config, int r);

Rational parse_rational(const std::string& s); // "num/den" or "num"
std::string format_rational(const Rational& q);

} // namespace kneserlab

#endif
