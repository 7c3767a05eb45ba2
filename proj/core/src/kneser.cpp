#include "kneserlab/kneser.hpp"

#include <algorithm>

#include "kneserlab/defect.hpp"

namespace kneserlab {

void Hypergraph::validate() const {
    if (num_vertices < 0 || r < 2) throw InvalidArgument("bad hypergraph parameters");
    for (const auto& e : hyperedges) {
        if ((int)e.size() != r) throw InvalidArgument("hyperedge of wrong cardinality");
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] >= num_vertices) throw InvalidArgument("hyperedge vertex out of range");
            if (i > 0 && e[i] <= e[i - 1]) throw InvalidArgument("hyperedge not strictly increasing");
        }
    }
    if (!labels.empty() && (int)labels.size() != num_vertices)
        throw InvalidArgument("label list size mismatch");
}

Hypergraph build_kneser(const SetSystem& F, int r) {
    if (r < 2) throw InvalidArgument("uniformity must be >= 2");
    Hypergraph H;
    H.num_vertices = (int)F.sets.size();
    H.r = r;
    H.labels = F.sets;
    H.label_ground = F.n;

    // DFS over index-increasing tuples with a running union mask.
    std::vector<int> tuple;
    auto rec = [&](auto&& self, int start, Mask used) -> void {
        if ((int)tuple.size() == r) {
            H.hyperedges.push_back(tuple);
            return;
        }
        for (int i = start; i < H.num_vertices; ++i) {
            if (F.sets[i] & used) continue;
            tuple.push_back(i);
            self(self, i + 1, used | F.sets[i]);
            tuple.pop_back();
        }
    };
    rec(rec, 0, 0);
    return H;
}

bool is_proper(const Hypergraph& H, const Coloring& col) {
    if ((int)col.colors.size() != H.num_vertices)
        throw InvalidArgument("coloring size mismatch");
    for (const auto& e : H.hyperedges) {
        int first = col.colors[e[0]];
        bool mono = true;
        for (int v : e)
            if (col.colors[v] != first) { mono = false; break; }
        if (mono) return false;
    }
    return true;
}

namespace {

// Decision procedure: is H weakly c-colorable?  Backtracking with
// first-fail vertex selection (most forbidden colors, then highest degree)
// and symmetry breaking (a vertex may only open one new color).
class DecideColorable {
public:
    DecideColorable(const Hypergraph& H, int c, std::uint64_t budget)
        : edges_(H.hyperedges), c_(c), nv_(H.num_vertices), budget_(budget) {
        edges_of_.resize(nv_);
        for (int e = 0; e < (int)edges_.size(); ++e)
            for (int v : edges_[e]) edges_of_[v].push_back(e);
        degree_.resize(nv_);
        for (int v = 0; v < nv_; ++v) degree_[v] = (int)edges_of_[v].size();
        color_of_.assign(nv_, -1);
        mono_.assign(edges_.size(), -1); // -1 none assigned, -2 mixed, else the shared color
        cnt_.assign(edges_.size(), 0);
        forbid_.assign((std::size_t)nv_ * c_, 0);
        forbid_cnt_.assign(nv_, 0);
    }

    bool run(Coloring* out) {
        bool ok = dfs(0, 0);
        if (ok && out) {
            out->colors.assign(nv_, 0);
            int used = 0;
            for (int v = 0; v < nv_; ++v) {
                out->colors[v] = color_of_[v] + 1;
                used = std::max(used, color_of_[v] + 1);
            }
            out->c = used;
        }
        return ok;
    }

    std::uint64_t nodes() const { return nodes_; }
    bool exceeded() const { return exceeded_; }

private:
    struct Undo {
        std::vector<std::pair<int, int>> mono_changes; // (edge, previous mono)
        std::vector<std::pair<int, int>> forbids;      // (vertex, color)
    };

    bool add_forbid(int v, int x, Undo& u) {
        if (forbid_[(std::size_t)v * c_ + x]++ == 0) {
            u.forbids.emplace_back(v, x);
            if (++forbid_cnt_[v] == c_ && color_of_[v] == -1) return false;
        } else {
            u.forbids.emplace_back(v, x);
        }
        return true;
    }

    bool assign(int v, int x, Undo& u) {
        color_of_[v] = x;
        bool ok = true;
        for (int e : edges_of_[v]) {
            ++cnt_[e];
            if (mono_[e] == -1) {
                u.mono_changes.emplace_back(e, -1);
                mono_[e] = x;
            } else if (mono_[e] >= 0 && mono_[e] != x) {
                u.mono_changes.emplace_back(e, mono_[e]);
                mono_[e] = -2;
            }
            if (mono_[e] >= 0) {
                int sz = (int)edges_[e].size();
                if (cnt_[e] == sz) {
                    ok = false; // monochromatic hyperedge
                } else if (cnt_[e] == sz - 1) {
                    for (int w : edges_[e])
                        if (color_of_[w] == -1) {
                            if (!add_forbid(w, mono_[e], u)) ok = false;
                            break;
                        }
                }
            }
        }
        return ok;
    }

    void unassign(int v, const Undo& u) {
        color_of_[v] = -1;
        for (int e : edges_of_[v]) --cnt_[e];
        for (auto it = u.forbids.rbegin(); it != u.forbids.rend(); ++it)
            if (--forbid_[(std::size_t)it->first * c_ + it->second] == 0)
                --forbid_cnt_[it->first];
        for (auto it = u.mono_changes.rbegin(); it != u.mono_changes.rend(); ++it)
            mono_[it->first] = it->second;
    }

    int pick_vertex() const {
        int best = -1;
        long best_key = -1;
        for (int v = 0; v < nv_; ++v) {
            if (color_of_[v] != -1) continue;
            long key = (long)forbid_cnt_[v] * 1000000 + degree_[v];
            if (key > best_key) { best_key = key; best = v; }
        }
        return best;
    }

    bool dfs(int assigned, int max_used) {
        if (assigned == nv_) return true;
        if (++nodes_ > budget_) { exceeded_ = true; return false; }
        int v = pick_vertex();
        int cap = std::min(c_, max_used + 1);
        for (int x = 0; x < cap; ++x) {
            if (forbid_[(std::size_t)v * c_ + x]) continue;
            Undo u;
            if (assign(v, x, u) && dfs(assigned + 1, std::max(max_used, x + 1))) return true;
            unassign(v, u);
            if (exceeded_) return false;
        }
        return false;
    }

    const std::vector<std::vector<int>>& edges_;
    int c_, nv_;
    std::uint64_t budget_, nodes_ = 0;
    bool exceeded_ = false;
    std::vector<std::vector<int>> edges_of_;
    std::vector<int> degree_, color_of_, mono_, cnt_, forbid_, forbid_cnt_;
};

} // namespace

ChiResult chromatic_number_exact(const Hypergraph& H, std::uint64_t budget, int chi_hint) {
    H.validate();
    ChiResult res;
    if (H.num_vertices == 0) {
        res.chi = res.lower = res.upper = 0;
        res.witness = Coloring{};
        return res;
    }
    if (H.hyperedges.empty()) {
        res.chi = res.lower = res.upper = 1;
        res.witness = Coloring{std::vector<int>(H.num_vertices, 1), 1};
        return res;
    }
    int c = std::max(2, chi_hint);
    std::uint64_t spent = 0;
    for (;; ++c) {
        DecideColorable dec(H, c, budget - spent);
        Coloring col;
        bool sat = dec.run(&col);
        spent += dec.nodes();
        res.nodes = spent;
        if (dec.exceeded()) {
            res.budget_exceeded = true;
            res.lower = c; // every c' < c proven uncolorable
            res.upper = -1;
            return res;
        }
        if (sat) {
            res.chi = res.lower = res.upper = c;
            res.witness = std::move(col);
            return res;
        }
    }
}

int chromatic_number(const Hypergraph& H, std::uint64_t budget, int chi_hint) {
    ChiResult r = chromatic_number_exact(H, budget, chi_hint);
    if (r.budget_exceeded)
        throw BudgetExceeded("node budget exceeded; chi >= " + std::to_string(r.lower),
                             r.lower, r.upper);
    return r.chi;
}

int afl_formula(int r, int k, int n) {
    if (r < 2 || k < 1) throw InvalidArgument("need r >= 2 and k >= 1");
    if (n < r * k) throw InvalidArgument("range error: need n >= r*k");
    int num = n - r * (k - 1);
    return (num + r - 2) / (r - 1);
}

Coloring greedy_coloring(int r, int k, int n) {
    int t = afl_formula(r, k, n);
    SetSystem F = k_subsets(n, k);
    Coloring col;
    col.c = t;
    col.colors.reserve(F.sets.size());
    for (Mask m : F.sets) {
        int mn = std::countr_zero(m) + 1;
        int block = (mn - 1) / (r - 1) + 1;
        col.colors.push_back(std::min(block, t));
    }
    return col;
}

int kriz_bound(const SetSystem& F, int r) {
    int cd = colorability_defect(F, r).value;
    if (cd <= 0) return 0;
    return (cd + r - 2) / (r - 1);
}

} // namespace kneserlab
