#include <doctest.h>

#include <algorithm>
#include <random>

#include "kneserlab/kneser.hpp"

using namespace kneserlab;

namespace {

// Independent oracle: smallest c such that some of the c^nv colorings is
// proper. Only for tiny instances.
int chi_brute_force(const Hypergraph& H, int max_c) {
    if (H.num_vertices == 0) return 0;
    for (int c = 1; c <= max_c; ++c) {
        std::vector<int> col(H.num_vertices, 1);
        while (true) {
            Coloring coloring{col, c};
            if (is_proper(H, coloring)) return c;
            int i = 0;
            while (i < H.num_vertices && col[i] == c) col[i++] = 1;
            if (i == H.num_vertices) break;
            ++col[i];
        }
    }
    return -1;
}

Hypergraph induced(const Hypergraph& H, const std::vector<int>& verts) {
    std::vector<int> idx(H.num_vertices, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = (int)i;
    Hypergraph out;
    out.num_vertices = (int)verts.size();
    out.r = H.r;
    for (const auto& e : H.hyperedges) {
        std::vector<int> f;
        for (int v : e)
            if (idx[v] >= 0) f.push_back(idx[v]);
        if ((int)f.size() == H.r) {
            std::sort(f.begin(), f.end());
            out.hyperedges.push_back(f);
        }
    }
    return out;
}

Hypergraph relabeled(const Hypergraph& H, const std::vector<int>& perm) {
    Hypergraph out;
    out.num_vertices = H.num_vertices;
    out.r = H.r;
    for (const auto& e : H.hyperedges) {
        std::vector<int> f;
        for (int v : e) f.push_back(perm[v]);
        std::sort(f.begin(), f.end());
        out.hyperedges.push_back(f);
    }
    return out;
}

} // namespace

TEST_CASE("build_kneser produces the Petersen graph from KG(2,5)") {
    Hypergraph H = build_kneser(k_subsets(5, 2), 2);
    CHECK(H.num_vertices == 10);
    CHECK(H.hyperedges.size() == 15);
    // 3-regular
    std::vector<int> deg(10, 0);
    for (const auto& e : H.hyperedges)
        for (int v : e) ++deg[v];
    for (int v = 0; v < 10; ++v) CHECK(deg[v] == 3);
}

TEST_CASE("build_kneser edge cases") {
    CHECK(build_kneser(k_subsets(5, 2), 3).hyperedges.empty());
    SetSystem singles(3, {0b001, 0b010, 0b100});
    CHECK(build_kneser(singles, 3).hyperedges.size() == 1);
}

TEST_CASE("is_proper") {
    Hypergraph H = build_kneser(k_subsets(5, 2), 2);
    std::vector<int> distinct(10);
    for (int i = 0; i < 10; ++i) distinct[i] = i + 1;
    CHECK(is_proper(H, Coloring{distinct, 10}));
    CHECK_FALSE(is_proper(H, Coloring{std::vector<int>(10, 1), 1}));
    Hypergraph edgeless;
    edgeless.num_vertices = 4;
    CHECK(is_proper(edgeless, Coloring{std::vector<int>(4, 1), 1}));
    CHECK_THROWS_AS(is_proper(H, Coloring{std::vector<int>(3, 1), 1}), InvalidArgument);
}

TEST_CASE("chromatic number of the Petersen graph is 3 (vs brute force)") {
    Hypergraph H = build_kneser(k_subsets(5, 2), 2);
    CHECK(chi_brute_force(H, 4) == 3);
    ChiResult res = chromatic_number_exact(H);
    CHECK(res.chi == 3);
    REQUIRE(res.witness);
    CHECK(is_proper(H, *res.witness));
    CHECK(res.witness->c == 3);
}

TEST_CASE("chromatic number degenerate hypergraphs") {
    Hypergraph empty;
    CHECK(chromatic_number(empty) == 0);
    Hypergraph edgeless;
    edgeless.num_vertices = 7;
    CHECK(chromatic_number(edgeless) == 1);
    // the 2-stable 5-cycle family gives an empty Kneser graph
    SetSystem F(5, {});
    CHECK(chromatic_number(build_kneser(F, 2)) == 0);
}

TEST_CASE("solver agrees with brute force on random small hypergraphs") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 5 + (int)(rng() % 4);
        SetSystem F = k_subsets(n, 2);
        std::vector<Mask> subset;
        for (Mask m : F.sets)
            if (rng() % 2) subset.push_back(m);
        Hypergraph H = build_kneser(SetSystem(n, subset), 2 + (int)(rng() % 2));
        if (H.num_vertices > 9) continue;
        CHECK(chromatic_number(H) == chi_brute_force(H, H.num_vertices == 0 ? 0 : H.num_vertices));
    }
}

TEST_CASE("budget exhaustion reports a bracket") {
    Hypergraph H = build_kneser(k_subsets(7, 2), 2); // chi = 5
    ChiResult res = chromatic_number_exact(H, 10);
    CHECK(res.budget_exceeded);
    CHECK(res.lower >= 2);
    CHECK(res.upper == -1);
    CHECK_THROWS_AS(chromatic_number(H, 10), BudgetExceeded);
}

TEST_CASE("afl_formula") {
    CHECK(afl_formula(2, 2, 5) == 3);
    CHECK(afl_formula(3, 2, 7) == 2);
    for (int r = 2; r <= 6; ++r)
        for (int k = 1; k <= 4; ++k)
            CHECK(afl_formula(r, k, r * k) == 2);
    CHECK_THROWS_AS(afl_formula(2, 2, 3), InvalidArgument);
}

TEST_CASE("greedy coloring is proper and uses exactly the formula count") {
    for (auto [r, k, n] : {std::tuple{2, 2, 5}, {3, 2, 7}, {2, 3, 8}, {3, 3, 11}, {4, 2, 9}}) {
        Coloring col = greedy_coloring(r, k, n);
        Hypergraph H = build_kneser(k_subsets(n, k), r);
        CHECK(is_proper(H, col));
        int used = *std::max_element(col.colors.begin(), col.colors.end());
        CHECK(used == afl_formula(r, k, n));
        CHECK(col.c == used);
    }
}

TEST_CASE("greedy coloring restricted to stable vertices stays proper") {
    SetSystem F = k_subsets(5, 2);
    SetSystem stab = filter_s_stable(F, 2);
    Coloring col = greedy_coloring(2, 2, 5);
    // restrict by label
    std::vector<int> restricted;
    for (std::size_t i = 0; i < F.sets.size(); ++i)
        if (stab.contains(F.sets[i])) restricted.push_back(col.colors[i]);
    Hypergraph Hs = build_kneser(stab, 2);
    CHECK(is_proper(Hs, Coloring{restricted, col.c}));
}

TEST_CASE("kriz_bound examples") {
    CHECK(kriz_bound(k_subsets(7, 2), 3) == 2);
    SetSystem cycle(5, {0b00011, 0b00110, 0b01100, 0b11000, 0b10001});
    CHECK(kriz_bound(cycle, 2) == 1);
    SetSystem singles(4, {1, 2, 4, 8});
    CHECK(kriz_bound(singles, 5) == 1); // cd = 4, ceil(4/4)
}

TEST_CASE("kriz_bound never exceeds the exact chromatic number") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 5 + (int)(rng() % 4);
        std::vector<Mask> masks;
        for (int i = 0; i < 10; ++i) {
            Mask m = 1 + rng() % ((Mask{1} << n) - 1);
            if (std::find(masks.begin(), masks.end(), m) == masks.end()) masks.push_back(m);
        }
        SetSystem F = inclusion_minimal(SetSystem(n, masks));
        for (int r = 2; r <= 3; ++r) {
            Hypergraph H = build_kneser(F, r);
            if (H.num_vertices == 0) continue;
            CHECK(kriz_bound(F, r) <= chromatic_number(H));
        }
    }
}

TEST_CASE("chromatic number is monotone under vertex restriction and relabeling") {
    std::mt19937_64 rng(37);
    Hypergraph H = build_kneser(k_subsets(6, 2), 2);
    int chi = chromatic_number(H);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<int> verts;
        for (int v = 0; v < H.num_vertices; ++v)
            if (rng() % 2) verts.push_back(v);
        CHECK(chromatic_number(induced(H, verts)) <= chi);
        std::vector<int> perm(H.num_vertices);
        for (int v = 0; v < H.num_vertices; ++v) perm[v] = v;
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(chromatic_number(relabeled(H, perm)) == chi);
    }
}
