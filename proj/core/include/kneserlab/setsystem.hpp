#ifndef KNESERLAB_SETSYSTEM_HPP
#define KNESERLAB_SETSYSTEM_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "kneserlab/errors.hpp"

namespace kneserlab {

using Mask = std::uint64_t;

// Hard cap on the ground set; all sets are machine-word bitmasks.
inline constexpr int kMaxGround = 64;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask bit_of(int element_1based) { return Mask{1} << (element_1based - 1); }

/// A family of distinct nonempty subsets of {1..n}, bitmask-encoded,
/// kept in canonical (colexicographic, i.e. ascending mask) order.
struct SetSystem {
    int n = 0;
    std::vector<Mask> sets;

    SetSystem() = default;
    SetSystem(int ground, std::vector<Mask> members);

    bool operator==(const SetSystem&) const = default;
    std::size_t size() const { return sets.size(); }
    bool contains(Mask m) const;
};

/// Partition of {1..n} into pairwise disjoint blocks.
struct GroundPartition {
    int n = 0;
    std::vector<Mask> blocks;

    GroundPartition() = default;
    GroundPartition(int ground, std::vector<Mask> blks);
};

/// Decode a mask into its 1-based elements, ascending.
std::vector<int> mask_elements(Mask m);
Mask mask_from_elements(const std::vector<int>& elems, int n);

/// All k-element subsets of [n] in canonical order.
SetSystem k_subsets(int n, int k);

/// Keep the sets in which every pair of elements is at cyclic distance >= s in [n].
SetSystem filter_s_stable(const SetSystem& F, int s);

/// Keep sets with no two successive elements in the linear order of [n];
/// {1, n} together is allowed.
SetSystem filter_almost_2_stable(const SetSystem& F);

/// Keep sets meeting each block of P in at most one element.
SetSystem filter_transversal(const SetSystem& F, const GroundPartition& P);

/// Remove every set that strictly contains another member.
SetSystem inclusion_minimal(const SetSystem& F);

} // namespace kneserlab

#endif
