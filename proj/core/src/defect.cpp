#include "kneserlab/defect.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace kneserlab {

DefectWitness colorability_defect(const SetSystem& F, int r, int cap) {
    if (r < 2) throw InvalidArgument("need r >= 2");
    if (F.n < 1) throw InvalidArgument("empty ground set");
    if (F.n > cap) throw SizeLimit("ground set exceeds defect search cap");
    SetSystem M = inclusion_minimal(F);

    // elements in many members first (fail-first pruning)
    std::vector<int> order(M.n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> degree(M.n, 0);
    for (Mask m : M.sets)
        for (int e : mask_elements(m)) ++degree[e - 1];
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return degree[a] > degree[b]; });

    std::vector<Mask> parts(r, 0);
    std::vector<Mask> best_parts(r, 0);
    int best_unused = M.n; // all-empty parts are always admissible
    int unused = 0;

    auto part_clean = [&](Mask part) {
        for (Mask m : M.sets)
            if ((m & part) == m) return false;
        return true;
    };

    auto rec = [&](auto&& self, int idx, int opened) -> void {
        if (unused >= best_unused) return;
        if (idx == M.n) {
            best_unused = unused;
            best_parts = parts;
            return;
        }
        Mask bit = Mask{1} << order[idx];
        int limit = std::min(opened + 1, r);
        for (int j = 0; j < limit; ++j) { // one new part at most (symmetry)
            parts[j] |= bit;
            if (part_clean(parts[j])) self(self, idx + 1, std::max(opened, j + 1));
            parts[j] &= ~bit;
        }
        ++unused;
        self(self, idx + 1, opened);
        --unused;
    };
    rec(rec, 0, 0);

    return DefectWitness{best_unused, best_parts};
}

CertifiedBound tcd_certificate(const SetSystem& F, int extra_vertices,
                               const PointConfig& config, int r) {
    if (extra_vertices < 0) throw InvalidArgument("negative extra vertex count");
    int N = F.n + extra_vertices;
    if (config.size() != N)
        throw InvalidArgument("dimension mismatch: config must have n + extra points");
    SetSystem M = inclusion_minimal(F);

    // K = {sigma in [n] : no member inside}, joined with a full simplex on
    // the extra vertices. Vertices killed by singleton members stay as
    // unused point slots.
    std::size_t total = std::size_t{1} << F.n;
    if (F.n > 24) throw SizeLimit("ground set too large for face enumeration");
    std::vector<bool> face(total, false);
    for (std::size_t s = 0; s < total; ++s) {
        bool ok = true;
        for (Mask m : M.sets)
            if ((s & m) == m) { ok = false; break; }
        face[s] = ok;
    }
    std::vector<Mask> facets;
    Mask extra_mask = extra_vertices == 0 ? 0 : (((Mask{1} << extra_vertices) - 1) << F.n);
    for (std::size_t s = 0; s < total; ++s) {
        if (!face[s]) continue;
        bool maximal = true;
        for (int v = 0; v < F.n; ++v)
            if (!(s >> v & 1) && face[s | (Mask{1} << v)]) { maximal = false; break; }
        if (maximal) facets.push_back((Mask)s | extra_mask);
    }
    SimplicialComplex K = SimplicialComplex::make_unchecked(N, std::move(facets));

    NoIntersectionReport rep = no_rfold_intersection_on_complex(K, config, r);
    if (!rep.ok)
        throw VerificationFailure("r-fold hull coincidence among disjoint faces",
                                  std::move(*rep.witness));
    CertifiedBound out;
    out.value = N - (r - 1) * (config.d + 1);
    out.config = config;
    out.checked_tuples = rep.checked_tuples;
    return out;
}

CdTcdReport cd_le_tcd_check(const SetSystem& F, int r, int trials, std::uint64_t seed) {
    CdTcdReport rep;
    rep.cd = colorability_defect(F, r);
    int M = F.n - rep.cd.value;
    int d = 0;
    while ((r - 1) * (d + 1) + 1 <= M) ++d;
    int m = (r - 1) * (d + 1) + 1 - M;
    rep.dimension = d;
    rep.extra_vertices = m - 1;
    int N = F.n + m - 1;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-1'000'000, 1'000'000);
    std::uniform_int_distribution<long> den(1, 1000);
    for (int t = 0; t < trials; ++t) {
        PointConfig cfg;
        cfg.d = d;
        for (int i = 0; i < N; ++i) {
            std::vector<Rational> p(d);
            for (int j = 0; j < d; ++j) p[j] = Rational(num(rng)) / Rational(den(rng));
            cfg.points.push_back(std::move(p));
        }
        rep.trials_used = t + 1;
        try {
            rep.certificate = tcd_certificate(F, m - 1, cfg, r);
        } catch (const VerificationFailure&) {
            continue; // degenerate draw, reroll
        }
        rep.ok = rep.certificate.value >= rep.cd.value;
        return rep;
    }
    rep.ok = false; // exhausted trials; reported, not fatal
    return rep;
}

} // namespace kneserlab
