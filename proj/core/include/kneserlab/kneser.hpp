#ifndef KNESERLAB_KNESER_HPP
#define KNESERLAB_KNESER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "kneserlab/setsystem.hpp"

namespace kneserlab {

/// r-uniform hypergraph. Hyperedges are strictly increasing r-tuples of
/// vertex indices (0-based). `labels`, when present, carries the member
/// sets of the originating SetSystem, one mask per vertex.
struct Hypergraph {
    int num_vertices = 0;
    int r = 2;
    std::vector<std::vector<int>> hyperedges;
    std::vector<Mask> labels; // empty or size num_vertices
    int label_ground = 0;     // ground-set size the labels refer to

    void validate() const;
};

/// Vertex color assignment; colors are 1-based, c = number of colors used.
struct Coloring {
    std::vector<int> colors;
    int c = 0;
};

/// Vertices = members of F in canonical order; hyperedges = all r-subsets
/// of pairwise disjoint members.
Hypergraph build_kneser(const SetSystem& F, int r);

/// Weak properness: every hyperedge sees at least two colors.
bool is_proper(const Hypergraph& H, const Coloring& col);

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct ChiResult {
    int chi = 0;          // valid when !budget_exceeded
    int lower = 0;        // bracketing interval found so far
    int upper = -1;       // -1: no proper coloring found yet
    std::uint64_t nodes = 0;
    bool budget_exceeded = false;
    std::optional<Coloring> witness; // a proper chi-coloring when available
};

/// Exact weak chromatic number by incremental-c backtracking with
/// first-fail vertex selection and color-symmetry breaking. `chi_hint`
/// is a known lower bound to start the upward scan from.
ChiResult chromatic_number_exact(const Hypergraph& H,
                                 std::uint64_t budget = kDefaultNodeBudget,
                                 int chi_hint = 0);

/// As above but throws BudgetExceeded instead of reporting it.
int chromatic_number(const Hypergraph& H,
                     std::uint64_t budget = kDefaultNodeBudget,
                     int chi_hint = 0);

/// ceil((n - r(k-1)) / (r-1)), the chromatic number of KG^r(k,n) for n >= rk.
int afl_formula(int r, int k, int n);

/// The optimal coloring of KG^r(k,n) witnessing afl_formula: a k-set is
/// colored by the block of r-1 consecutive integers containing its minimum,
/// with one overflow color for the suffix.
Coloring greedy_coloring(int r, int k, int n);

/// ceil(cd^r(F) / (r-1)), clamped below at 0.
int kriz_bound(const SetSystem& F, int r);

} // namespace kneserlab

#endif
