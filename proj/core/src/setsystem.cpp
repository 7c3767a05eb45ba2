#include "kneserlab/setsystem.hpp"

#include <algorithm>

namespace kneserlab {

namespace {

void check_ground(int n) {
    if (n < 0 || n > kMaxGround)
        throw InvalidArgument("ground-set size out of range: " + std::to_string(n));
}

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

} // namespace

SetSystem::SetSystem(int ground, std::vector<Mask> members) : n(ground), sets(std::move(members)) {
    check_ground(n);
    for (Mask m : sets) {
        if (m == 0) throw InvalidArgument("empty set not admitted as a member");
        if (m & ~full_mask(n)) throw InvalidArgument("member set exceeds ground set");
    }
    std::sort(sets.begin(), sets.end());
    if (std::adjacent_find(sets.begin(), sets.end()) != sets.end())
        throw InvalidArgument("duplicate member sets");
}

bool SetSystem::contains(Mask m) const {
    return std::binary_search(sets.begin(), sets.end(), m);
}

GroundPartition::GroundPartition(int ground, std::vector<Mask> blks) : n(ground), blocks(std::move(blks)) {
    check_ground(n);
    Mask seen = 0;
    for (Mask b : blocks) {
        if (b & seen) throw InvalidArgument("partition blocks not disjoint");
        seen |= b;
    }
    if (seen != full_mask(n)) throw InvalidArgument("partition blocks do not cover {1..n}");
}

std::vector<int> mask_elements(Mask m) {
    std::vector<int> out;
    while (m) {
        int b = std::countr_zero(m);
        out.push_back(b + 1);
        m &= m - 1;
    }
    return out;
}

Mask mask_from_elements(const std::vector<int>& elems, int n) {
    Mask m = 0;
    for (int e : elems) {
        if (e < 1 || e > n) throw InvalidArgument("element out of range: " + std::to_string(e));
        Mask b = bit_of(e);
        if (m & b) throw InvalidArgument("repeated element: " + std::to_string(e));
        m |= b;
    }
    return m;
}

SetSystem k_subsets(int n, int k) {
    check_ground(n);
    if (k < 1 || k > n) throw InvalidArgument("invalid range: need 1 <= k <= n");
    std::vector<Mask> out;
    // Gosper's hack walks k-bit masks in ascending (colex) order.
    Mask m = full_mask(k);
    Mask limit = full_mask(n);
    while (m <= limit) {
        out.push_back(m);
        Mask c = m & -m;
        Mask r = m + c;
        if (r > limit || r == 0) break;
        m = (((r ^ m) >> 2) / c) | r;
    }
    return SetSystem(n, std::move(out));
}

namespace {

int cyclic_distance(int i, int j, int n) {
    int d = j - i; // assumes i < j
    return std::min(d, n - d);
}

bool is_s_stable(Mask m, int n, int s) {
    auto elems = mask_elements(m);
    for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = a + 1; b < elems.size(); ++b)
            if (cyclic_distance(elems[a], elems[b], n) < s) return false;
    return true;
}

bool is_almost_2_stable(Mask m) {
    // i and i+1 both present (linear order) is forbidden.
    return (m & (m >> 1)) == 0;
}

template <typename Pred>
SetSystem filtered(const SetSystem& F, Pred keep) {
    std::vector<Mask> out;
    for (Mask m : F.sets)
        if (keep(m)) out.push_back(m);
    return SetSystem(F.n, std::move(out));
}

} // namespace

SetSystem filter_s_stable(const SetSystem& F, int s) {
    if (s < 2) throw InvalidArgument("stability parameter must be >= 2");
    return filtered(F, [&](Mask m) { return is_s_stable(m, F.n, s); });
}

SetSystem filter_almost_2_stable(const SetSystem& F) {
    return filtered(F, [](Mask m) { return is_almost_2_stable(m); });
}

SetSystem filter_transversal(const SetSystem& F, const GroundPartition& P) {
    if (P.n != F.n) throw InvalidArgument("partition ground set does not match family");
    return filtered(F, [&](Mask m) {
        for (Mask b : P.blocks)
            if (popcount(m & b) > 1) return false;
        return true;
    });
}

SetSystem inclusion_minimal(const SetSystem& F) {
    std::vector<Mask> out;
    for (Mask m : F.sets) {
        bool minimal = true;
        for (Mask other : F.sets) {
            if (other != m && (other & m) == other) { minimal = false; break; }
        }
        if (minimal) out.push_back(m);
    }
    return SetSystem(F.n, std::move(out));
}

} // namespace kneserlab
