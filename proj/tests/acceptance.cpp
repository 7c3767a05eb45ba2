// Acceptance harness: each criterion is one self-contained check printing
// a single [PASS]/[FAIL] line. Run with a criterion number 1..10, or "all".
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "kneserlab/defect.hpp"
#include "kneserlab/geometry.hpp"
#include "kneserlab/kneser.hpp"
#include "kneserlab/setsystem.hpp"
#include "kneserlab/topology.hpp"

using namespace kneserlab;

namespace {

bool g_verbose = true;

int exact_chi(const SetSystem& F, int r) {
    return chromatic_number(build_kneser(F, r));
}

void note(const char* fmt, ...) {
    if (!g_verbose) return;
    va_list ap;
    va_start(ap, fmt);
    std::vprintf(fmt, ap);
    va_end(ap);
    std::printf("\n");
    std::fflush(stdout);
}

// ---- criterion 1: chi(KG^r(k,n)) equals the ceiling formula ----------------

bool criterion1() {
    bool ok = true;
    std::vector<std::array<int, 3>> cells;
    for (int r : {2, 3})
        for (int k : {2, 3})
            for (int n = r * k; n <= r * k + 3; ++n) cells.push_back({r, k, n});
    for (int n : {8, 9, 10}) cells.push_back({4, 2, n});
    for (auto [r, k, n] : cells) {
        int chi = exact_chi(k_subsets(n, k), r);
        int want = afl_formula(r, k, n);
        note("  r=%d k=%d n=%d: chi=%d formula=%d", r, k, n, chi, want);
        ok = ok && chi == want;
    }
    return ok;
}

// ---- criterion 2: same formula on the 2-stable subfamily -------------------

bool criterion2() {
    bool ok = true;
    for (int r : {2, 3})
        for (int k : {2, 3})
            for (int n = r * k; n <= r * k + 3; ++n) {
                SetSystem F = filter_s_stable(k_subsets(n, k), 2);
                int chi = exact_chi(F, r);
                int want = afl_formula(r, k, n);
                note("  r=%d k=%d n=%d (2-stab, %zu sets): chi=%d formula=%d",
                     r, k, n, F.size(), chi, want);
                ok = ok && chi == want;
            }
    return ok;
}

// ---- criterion 3: 4-uniform 3-stable pairs -------------------------------

bool criterion3() {
    bool ok = true;
    for (int n : {8, 10}) {
        SetSystem F = filter_s_stable(k_subsets(n, 2), 3);
        int chi = exact_chi(F, 4);
        int want = (n - 4 + 2) / 3; // ceil((n-4)/3)
        note("  n=%d (3-stab, %zu sets): chi=%d want=%d", n, F.size(), chi, want);
        ok = ok && chi == want;
    }
    return ok;
}

// ---- criterion 4: the 5-cycle worked example ------------------------------

bool criterion4() {
    SetSystem F(5, {0b00011, 0b00110, 0b01100, 0b11000, 0b10001});
    int cd = colorability_defect(F, 2).value;
    int chi_stab = exact_chi(filter_s_stable(F, 2), 2);
    note("  cd^2=%d (want 1), chi of 2-stable part=%d (want 0)", cd, chi_stab);
    return cd == 1 && chi_stab == 0;
}

// ---- criterion 5: cd of complete k-subset families ------------------------

int cd_oracle(const SetSystem& F, int r) {
    int best_used = 0;
    std::vector<int> assign(F.n, 0);
    while (true) {
        std::vector<Mask> parts(r, 0);
        int used = 0;
        for (int e = 0; e < F.n; ++e)
            if (assign[e] > 0) {
                parts[assign[e] - 1] |= bit_of(e + 1);
                ++used;
            }
        bool valid = true;
        for (Mask p : parts) {
            for (Mask m : F.sets)
                if ((m & p) == m) {
                    valid = false;
                    break;
                }
            if (!valid) break;
        }
        if (valid && used > best_used) best_used = used;
        int i = 0;
        while (i < F.n && assign[i] == r) assign[i++] = 0;
        if (i == F.n) break;
        ++assign[i];
    }
    return F.n - best_used;
}

bool criterion5() {
    bool ok = true;
    for (int r = 2; r <= 4; ++r)
        for (int k = 1; k <= 3; ++k)
            for (int n = k; n <= 10; ++n) {
                SetSystem F = k_subsets(n, k);
                int cd = colorability_defect(F, r).value;
                int want = std::max(0, n - r * (k - 1));
                if (cd != want) {
                    note("  MISMATCH r=%d k=%d n=%d: cd=%d formula=%d", r, k, n, cd, want);
                    ok = false;
                }
                if (n <= 8 && cd != cd_oracle(F, r)) {
                    note("  ORACLE MISMATCH r=%d k=%d n=%d", r, k, n);
                    ok = false;
                }
            }
    if (ok) note("  all cells match the formula; n<=8 cells match the exhaustive oracle");
    return ok;
}

// ---- criterion 6: Kriz-type lower bounds never exceed exact chi -----------

SetSystem random_antichain(std::mt19937_64& rng, int n) {
    std::vector<Mask> masks;
    int want = 4 + (int)(rng() % 8);
    for (int i = 0; i < want; ++i) {
        Mask m = 1 + rng() % ((Mask{1} << n) - 1);
        if (std::find(masks.begin(), masks.end(), m) == masks.end()) masks.push_back(m);
    }
    return inclusion_minimal(SetSystem(n, masks));
}

bool criterion6() {
    std::mt19937_64 rng(2026);
    int violations = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int n = 5 + (int)(rng() % 5); // n <= 9
        SetSystem F = random_antichain(rng, n);
        for (int r : {2, 3}) {
            int lb = kriz_bound(F, r);
            Hypergraph H = build_kneser(F, r);
            if (H.num_vertices > 0 && lb > chromatic_number(H)) ++violations;
        }
        SetSystem Fs = filter_s_stable(F, 2);
        Hypergraph Hs = build_kneser(Fs, 3);
        if (Hs.num_vertices > 0 && kriz_bound(F, 3) > chromatic_number(Hs)) ++violations;
    }
    note("  200 antichains, violations: %d", violations);
    return violations == 0;
}

// ---- criterion 7: occurring Tverberg partitions == colorful partitions ----

// Literal window statement, written independently of is_colorful: block of
// each support position, windows of r consecutive positions starting at
// multiples of r-1, each window sees every block exactly once.
bool window_law(const BlockPartition& bp, int r, int d) {
    int S = (int)bp.support.size();
    std::vector<int> block_of(S, -1);
    for (int b = 0; b < (int)bp.blocks.size(); ++b)
        for (int p : bp.blocks[b]) {
            auto it = std::find(bp.support.begin(), bp.support.end(), p);
            if (it == bp.support.end()) return false;
            block_of[it - bp.support.begin()] = b;
        }
    for (int k = 1; k <= d + 1; ++k) {
        int lo = (r - 1) * (k - 1); // 0-based window start
        std::vector<int> seen(r, 0);
        for (int pos = lo; pos <= (r - 1) * k; ++pos) {
            if (pos >= S || block_of[pos] < 0) return false;
            ++seen[block_of[pos]];
        }
        for (int b = 0; b < r; ++b)
            if (seen[b] != 1) return false;
    }
    return true;
}

long colorful_count_oracle(int r, int d) {
    long f = 1;
    for (int i = 2; i < r; ++i) f *= i; // (r-1)!
    long out = 1;
    for (int i = 0; i < d; ++i) out *= f;
    return out;
}

bool criterion7() {
    bool ok = true;
    for (auto [r, d] : {std::pair{2, 1}, {2, 2}, {3, 1}}) {
        int S = (r - 1) * (d + 1) + 1;
        PointConfig cfg = validated_stretched_config(d, S + 1, r);
        ColorfulReport rep = verify_colorful_property(cfg, r);
        auto occurring = enumerate_tverberg_partitions(cfg, r);
        long colorful = 0;
        for (const auto& bp : occurring)
            if (window_law(bp, r, d)) ++colorful;
        long supports = S + 1; // choose S of S+1 points
        long want = supports * colorful_count_oracle(r, d);
        note("  r=%d d=%d: sets equal=%s, occurring=%zu, colorful=%ld, oracle=%ld",
             r, d, rep.ok ? "yes" : "no", occurring.size(), colorful, want);
        ok = ok && rep.ok && colorful == (long)occurring.size() && colorful == want;
    }
    return ok;
}

// ---- criterion 8: cd <= certified tcd -------------------------------------

bool criterion8() {
    bool ok = true;
    std::vector<SetSystem> families;
    families.emplace_back(5, std::vector<Mask>{0b00011, 0b00110, 0b01100, 0b11000, 0b10001});
    for (int k = 1; k <= 3; ++k)
        for (int n = k; n <= 10; ++n) families.push_back(k_subsets(n, k));
    int checked = 0, passed = 0;
    for (const SetSystem& F : families)
        for (int r = 2; r <= 4; ++r) {
            CdTcdReport rep = cd_le_tcd_check(F, r);
            ++checked;
            if (rep.ok && rep.certificate.value >= rep.cd.value) ++passed;
            else note("  FAIL n=%d |F|=%zu r=%d: cd=%d cert=%d",
                      F.n, F.size(), r, rep.cd.value, rep.certificate.value);
        }
    note("  %d/%d (family, r) pairs certified", passed, checked);
    return ok && passed == checked;
}

// ---- criterion 9: box complex of small complete hypergraphs ---------------

bool criterion9() {
    bool ok = true;
    for (auto [r, c] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
        int m = (r - 1) * (c - 1) + 1;
        Hypergraph H = build_kneser(k_subsets(m, 1), r);
        SimplicialComplex B = box_complex(H);
        SimplicialComplex DJ = deleted_join(SimplicialComplex::full_simplex(m), r, 2);
        auto fvec = [](const SimplicialComplex& K) {
            std::vector<int> f;
            for (Mask s : K.all_faces()) {
                if (s == 0) continue;
                int dim = popcount(s) - 1;
                if ((int)f.size() <= dim) f.resize(dim + 1, 0);
                ++f[dim];
            }
            return f;
        };
        bool fv = fvec(B) == fvec(DJ);
        ConnectivityBound bound = equivariant_chi_bound(H);
        bool concentrated = true;
        for (std::size_t i = 0; i + 1 < bound.betti.betti.size(); ++i)
            concentrated = concentrated && bound.betti.betti[i] == 0;
        concentrated = concentrated && !bound.betti.betti.empty() &&
                       bound.betti.betti.back() > 0;
        int chi = chromatic_number(H);
        note("  r=%d c=%d: fvec=%s, top-concentrated=%s, bound=%d, chi=%d",
             r, c, fv ? "eq" : "NEQ", concentrated ? "yes" : "no", bound.chi_bound, chi);
        ok = ok && fv && concentrated && bound.chi_bound == c && chi == c;
    }
    return ok;
}

// ---- criterion 10: greedy coloring optimality -----------------------------

bool criterion10() {
    bool ok = true;
    std::vector<std::array<int, 3>> cells;
    for (int r : {2, 3})
        for (int k : {2, 3})
            for (int n = r * k; n <= r * k + 3; ++n) cells.push_back({r, k, n});
    for (int n : {8, 9, 10}) cells.push_back({4, 2, n});
    for (auto [r, k, n] : cells) {
        SetSystem F = k_subsets(n, k);
        Coloring col = greedy_coloring(r, k, n);
        Hypergraph H = build_kneser(F, r);
        int used = *std::max_element(col.colors.begin(), col.colors.end());
        bool cell = is_proper(H, col) && used == afl_formula(r, k, n);
        // restriction to 2-stable vertices
        SetSystem stab = filter_s_stable(F, 2);
        std::vector<int> restricted;
        for (std::size_t i = 0; i < F.sets.size(); ++i)
            if (stab.contains(F.sets[i])) restricted.push_back(col.colors[i]);
        cell = cell && is_proper(build_kneser(stab, r), Coloring{restricted, col.c});
        if (!cell) note("  FAIL r=%d k=%d n=%d", r, k, n);
        ok = ok && cell;
    }
    if (ok) note("  greedy proper with exactly the formula count on every cell");
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    using Fn = bool (*)();
    const Fn crits[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                        criterion6, criterion7, criterion8, criterion9, criterion10};
    const char* names[] = {
        "chromatic formula on complete k-subset grids",
        "chromatic formula on 2-stable subfamilies",
        "4-uniform 3-stable instances",
        "5-cycle worked example",
        "colorability defect formula and exhaustive oracle",
        "defect lower bound soundness on random antichains",
        "colorful partition law on stretched configs",
        "cd <= certified tcd",
        "box complexes of small complete hypergraphs",
        "greedy coloring optimality"};

    int lo = 1, hi = 10;
    if (argc > 1 && std::strcmp(argv[1], "all") != 0) {
        lo = hi = std::atoi(argv[1]);
        if (lo < 1 || lo > 10) {
            std::fprintf(stderr, "usage: %s [1..10|all]\n", argv[0]);
            return 2;
        }
    }
    bool all_ok = true;
    for (int i = lo; i <= hi; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = crits[i - 1]();
        } catch (const std::exception& e) {
            note("  exception: %s", e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] criterion %d — %s (%.1fs)\n", ok ? "PASS" : "FAIL", i,
                    names[i - 1], secs);
        std::fflush(stdout);
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
