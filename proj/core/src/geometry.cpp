#include "kneserlab/geometry.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace kneserlab {

void PointConfig::validate() const {
    if (d < 0) throw InvalidArgument("negative dimension");
    for (const auto& p : points)
        if ((int)p.size() != d) throw InvalidArgument("point of wrong dimension");
}

PointConfig moment_curve_config(int d, const std::vector<Rational>& ts) {
    if (d < 0) throw InvalidArgument("negative dimension");
    for (std::size_t i = 1; i < ts.size(); ++i)
        if (ts[i] <= ts[i - 1]) throw InvalidArgument("moment-curve parameters not increasing");
    PointConfig cfg;
    cfg.d = d;
    for (const Rational& t : ts) {
        std::vector<Rational> p(d);
        Rational pw = 1;
        for (int i = 0; i < d; ++i) {
            pw *= t;
            p[i] = pw;
        }
        cfg.points.push_back(std::move(p));
    }
    return cfg;
}

PointConfig stretched_config(int d, int count, const Rational& base) {
    if (count < 1) throw InvalidArgument("need at least one point");
    if (count > 20) throw SizeLimit("stretch schedule too long");
    if (base < 2) throw InvalidArgument("stretch base must be >= 2");
    std::vector<Rational> ts;
    Rational t = base * base; // B^(2^1)
    for (int i = 0; i < count; ++i) {
        ts.push_back(t);
        t *= t;
    }
    return moment_curve_config(d, ts);
}

namespace {

// Phase-1 simplex over Q with Bland's anti-cycling rule.
// Decides whether {x >= 0 : A x = b} is nonempty; returns a point if so.
std::optional<std::vector<Rational>> lp_feasible_point(std::vector<std::vector<Rational>> A,
                                                       std::vector<Rational> b) {
    const int m = (int)A.size();
    const int n = m ? (int)A[0].size() : 0;
    for (int i = 0; i < m; ++i)
        if (b[i] < 0) {
            b[i] = -b[i];
            for (auto& v : A[i]) v = -v;
        }
    // tableau columns: n structural + m artificial + rhs
    std::vector<std::vector<Rational>> T(m, std::vector<Rational>(n + m + 1, 0));
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) T[i][j] = A[i][j];
        T[i][n + i] = 1;
        T[i][n + m] = b[i];
        basis[i] = n + i;
    }
    // reduced costs for objective = sum of artificials
    std::vector<Rational> red(n + m, 0);
    Rational obj = 0;
    for (int j = 0; j < n + m; ++j) {
        Rational s = j >= n ? 1 : 0;
        for (int i = 0; i < m; ++i)
            if (basis[i] >= n) s -= T[i][j];
        red[j] = s;
    }
    for (int i = 0; i < m; ++i) obj -= T[i][n + m];

    while (true) {
        int enter = -1;
        for (int j = 0; j < n + m; ++j)
            if (red[j] < 0) { enter = j; break; } // Bland: smallest index
        if (enter < 0) break;
        int leave = -1;
        for (int i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            if (leave < 0) { leave = i; continue; }
            Rational cur = T[i][n + m] / T[i][enter];
            Rational best = T[leave][n + m] / T[leave][enter];
            if (cur < best || (cur == best && basis[i] < basis[leave])) leave = i;
        }
        if (leave < 0) throw Error("phase-1 simplex unbounded"); // cannot happen
        Rational piv = T[leave][enter];
        for (auto& v : T[leave]) v /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            Rational f = T[i][enter];
            for (int j = 0; j <= n + m; ++j) T[i][j] -= f * T[leave][j];
        }
        Rational rf = red[enter];
        for (int j = 0; j < n + m; ++j) red[j] -= rf * T[leave][j];
        obj -= rf * T[leave][n + m];
        basis[leave] = enter;
    }
    if (obj != 0) return std::nullopt;
    std::vector<Rational> x(n, 0);
    for (int i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = T[i][n + m];
    return x;
}

} // namespace

std::optional<std::vector<Rational>> hulls_intersect(const PointConfig& config,
                                                     const std::vector<std::vector<int>>& blocks) {
    config.validate();
    if (blocks.empty()) throw InvalidArgument("no blocks");
    for (const auto& blk : blocks) {
        if (blk.empty()) throw InvalidArgument("empty block");
        for (int p : blk)
            if (p < 0 || p >= config.size()) throw InvalidArgument("point index out of range");
    }
    const int m = (int)blocks.size();
    const int d = config.d;
    // variables: one convex weight per (block, point); constraints: each
    // block's weights sum to 1, and all barycenters agree with block 0's.
    int nvars = 0;
    std::vector<int> offset(m);
    for (int j = 0; j < m; ++j) {
        offset[j] = nvars;
        nvars += (int)blocks[j].size();
    }
    int nrows = m + (m - 1) * d;
    std::vector<std::vector<Rational>> A(nrows, std::vector<Rational>(nvars, 0));
    std::vector<Rational> b(nrows, 0);
    for (int j = 0; j < m; ++j) {
        for (std::size_t t = 0; t < blocks[j].size(); ++t) A[j][offset[j] + t] = 1;
        b[j] = 1;
    }
    int row = m;
    for (int j = 1; j < m; ++j)
        for (int i = 0; i < d; ++i, ++row) {
            for (std::size_t t = 0; t < blocks[0].size(); ++t)
                A[row][offset[0] + t] = config.points[blocks[0][t]][i];
            for (std::size_t t = 0; t < blocks[j].size(); ++t)
                A[row][offset[j] + t] = -config.points[blocks[j][t]][i];
        }
    auto x = lp_feasible_point(std::move(A), std::move(b));
    if (!x) return std::nullopt;
    std::vector<Rational> witness(d, 0);
    for (std::size_t t = 0; t < blocks[0].size(); ++t)
        for (int i = 0; i < d; ++i)
            witness[i] += (*x)[offset[0] + t] * config.points[blocks[0][t]][i];
    return witness;
}

namespace {

// Partitions of {0..s-1} into exactly r nonempty unordered blocks
// (restricted growth strings).
void for_each_partition(int s, int r, const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
    std::vector<int> block_of(s);
    auto rec = [&](auto&& self, int pos, int used) -> void {
        if (s - pos < r - used) return;
        if (pos == s) {
            if (used != r) return;
            std::vector<std::vector<int>> blocks(r);
            for (int i = 0; i < s; ++i) blocks[block_of[i]].push_back(i);
            fn(blocks);
            return;
        }
        for (int j = 0; j < std::min(used + 1, r); ++j) {
            block_of[pos] = j;
            self(self, pos + 1, std::max(used, j + 1));
        }
    };
    rec(rec, 0, 0);
}

void for_each_support(int n, int s, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> sup(s);
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == s) { fn(sup); return; }
        for (int i = start; i <= n - (s - pos); ++i) {
            sup[pos] = i;
            self(self, pos + 1, i + 1);
        }
    };
    rec(rec, 0, 0);
}

} // namespace

std::vector<BlockPartition> enumerate_tverberg_partitions(const PointConfig& config, int r) {
    config.validate();
    if (r < 2) throw InvalidArgument("need r >= 2");
    int s = (r - 1) * (config.d + 1) + 1;
    if (config.size() < s)
        throw InvalidArgument("too few points: need at least " + std::to_string(s));
    std::vector<BlockPartition> out;
    for_each_support(config.size(), s, [&](const std::vector<int>& sup) {
        for_each_partition(s, r, [&](const std::vector<std::vector<int>>& pos_blocks) {
            std::vector<std::vector<int>> blocks(pos_blocks.size());
            for (std::size_t j = 0; j < pos_blocks.size(); ++j)
                for (int p : pos_blocks[j]) blocks[j].push_back(sup[p]);
            if (hulls_intersect(config, blocks))
                out.push_back(BlockPartition{sup, blocks});
        });
    });
    return out;
}

bool is_colorful(const BlockPartition& bp, int r, int d) {
    int s = (r - 1) * (d + 1) + 1;
    if ((int)bp.support.size() != s) throw InvalidArgument("wrong support size");
    // translate point indices to 1-based positions within the support
    std::unordered_map<int, int> pos;
    for (int i = 0; i < s; ++i) pos[bp.support[i]] = i + 1;
    for (int k = 1; k <= d + 1; ++k) {
        int lo = (r - 1) * (k - 1) + 1, hi = (r - 1) * k + 1;
        for (const auto& blk : bp.blocks) {
            int hits = 0;
            for (int p : blk) {
                auto it = pos.find(p);
                if (it == pos.end()) throw InvalidArgument("block element outside support");
                if (it->second >= lo && it->second <= hi) ++hits;
            }
            if (hits != 1) return false;
        }
    }
    return true;
}

ColorfulReport verify_colorful_property(const PointConfig& config, int r) {
    config.validate();
    if (r < 2) throw InvalidArgument("need r >= 2");
    int d = config.d;
    int s = (r - 1) * (d + 1) + 1;
    if (config.size() < s)
        throw InvalidArgument("too few points: need at least " + std::to_string(s));
    ColorfulReport rep;
    for_each_support(config.size(), s, [&](const std::vector<int>& sup) {
        for_each_partition(s, r, [&](const std::vector<std::vector<int>>& pos_blocks) {
            std::vector<std::vector<int>> blocks(pos_blocks.size());
            for (std::size_t j = 0; j < pos_blocks.size(); ++j)
                for (int p : pos_blocks[j]) blocks[j].push_back(sup[p]);
            BlockPartition bp{sup, blocks};
            bool occurs = hulls_intersect(config, blocks).has_value();
            bool colorful = is_colorful(bp, r, d);
            if (occurs && !colorful) { rep.ok = false; rep.occurring_not_colorful.push_back(bp); }
            if (!occurs && colorful) { rep.ok = false; rep.colorful_not_occurring.push_back(bp); }
        });
    });
    return rep;
}

PointConfig validated_stretched_config(int d, int count, int r, const Rational& base) {
    Rational B = base;
    for (int attempt = 0; attempt <= 8; ++attempt) {
        PointConfig cfg = stretched_config(d, count, B);
        int s = (r - 1) * (d + 1) + 1;
        if (count < s || verify_colorful_property(cfg, r).ok) return cfg;
        B *= B;
    }
    throw Error("stretch schedule failed colorful validation after 8 escalations");
}

NoIntersectionReport no_rfold_intersection_on_complex(const SimplicialComplex& K,
                                                      const PointConfig& config, int r) {
    config.validate();
    if (config.size() != K.n)
        throw InvalidArgument("config point count must equal vertex count");
    if (r < 2) throw InvalidArgument("need r >= 2");

    std::vector<Mask> faces;
    for (Mask f : K.all_faces())
        if (f != 0) faces.push_back(f);
    const int nf = (int)faces.size();
    if ((std::size_t)nf * nf > 16'000'000)
        throw SizeLimit("face-tuple cap exceeded: " + std::to_string(nf) + " faces");

    auto blocks_of = [&](const std::vector<int>& chosen) {
        std::vector<std::vector<int>> blocks;
        for (int idx : chosen) {
            std::vector<int> blk;
            for (int e : mask_elements(faces[idx])) blk.push_back(e - 1);
            blocks.push_back(std::move(blk));
        }
        return blocks;
    };

    NoIntersectionReport rep;
    // pairwise intersection memo: 0 unknown, 1 intersect, 2 disjoint hulls
    std::vector<std::uint8_t> pair_memo((std::size_t)nf * nf, 0);
    auto pair_intersects = [&](int a, int b) {
        std::uint8_t& slot = pair_memo[(std::size_t)a * nf + b];
        if (slot == 0) {
            bool hit = hulls_intersect(config, blocks_of({a, b})).has_value();
            slot = hit ? 1 : 2;
            pair_memo[(std::size_t)b * nf + a] = slot;
            ++rep.checked_tuples;
        }
        return slot == 1;
    };

    std::vector<int> chosen;
    auto rec = [&](auto&& self, int start, Mask used) -> bool {
        if ((int)chosen.size() == r) {
            // skip non-maximal tuples: some face strictly extends a chosen
            // one while staying disjoint from the others
            for (int i = 0; i < r; ++i) {
                Mask others = used & ~faces[chosen[i]];
                for (int g = 0; g < nf; ++g)
                    if (faces[g] != faces[chosen[i]] &&
                        (faces[g] & faces[chosen[i]]) == faces[chosen[i]] &&
                        !(faces[g] & others))
                        return true; // the enlarged tuple covers this one
            }
            ++rep.checked_tuples;
            auto pt = hulls_intersect(config, blocks_of(chosen));
            if (pt) {
                rep.ok = false;
                IntersectionWitness w;
                for (int idx : chosen) w.faces.push_back(faces[idx]);
                w.point = std::move(*pt);
                rep.witness = std::move(w);
                return false;
            }
            return true;
        }
        for (int i = start; i < nf; ++i) {
            if (faces[i] & used) continue;
            bool ok = true;
            for (int j : chosen)
                if (!pair_intersects(j, i)) { ok = false; break; }
            if (!ok) continue;
            chosen.push_back(i);
            bool cont = self(self, i + 1, used | faces[i]);
            chosen.pop_back();
            if (!cont) return false;
        }
        return true;
    };
    rec(rec, 0, 0);
    return rep;
}

Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw InvalidArgument("bad rational: " + s);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) {
    return q.get_str();
}

} // namespace kneserlab
