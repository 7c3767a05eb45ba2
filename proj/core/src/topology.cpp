#include "kneserlab/topology.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <gmpxx.h>

namespace kneserlab {

namespace {

constexpr int kMaxEnumVertices = 24; // full face enumeration cap (2^24 masks)

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

void check_enum(int n) {
    if (n > kMaxEnumVertices)
        throw SizeLimit("complex too large for face enumeration: n = " + std::to_string(n));
}

/// Keep only inclusion-maximal masks.
std::vector<Mask> maximal_masks(std::vector<Mask> faces) {
    std::sort(faces.begin(), faces.end(),
              [](Mask a, Mask b) { return popcount(a) > popcount(b); });
    std::vector<Mask> out;
    for (Mask f : faces) {
        bool dominated = false;
        for (Mask g : out)
            if ((f & g) == f) { dominated = true; break; }
        if (!dominated) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

SimplicialComplex SimplicialComplex::make_unchecked(int n, std::vector<Mask> facets) {
    if (n < 0 || n > kMaxGround) throw InvalidArgument("vertex count out of range");
    for (Mask f : facets)
        if (f & ~full_mask(n)) throw InvalidArgument("facet exceeds vertex set");
    if (facets.empty()) facets.push_back(0);
    SimplicialComplex K;
    K.n = n;
    K.facets = maximal_masks(std::move(facets));
    return K;
}

SimplicialComplex SimplicialComplex::make(int n, std::vector<Mask> facets) {
    SimplicialComplex K = make_unchecked(n, std::move(facets));
    Mask covered = 0;
    for (Mask f : K.facets) covered |= f;
    if (covered != full_mask(n))
        throw InvalidArgument("ghost vertices are disallowed: every vertex must lie in a face");
    return K;
}

SimplicialComplex SimplicialComplex::full_simplex(int n) {
    return make(n, {full_mask(n)});
}

SimplicialComplex SimplicialComplex::skeleton(int n, int dim) {
    if (dim < 0) return make_unchecked(n, {});
    if (dim >= n - 1) return full_simplex(n);
    std::vector<Mask> facets;
    for (Mask m : k_subsets(n, dim + 1).sets) facets.push_back(m);
    return make(n, std::move(facets));
}

bool SimplicialComplex::is_face(Mask sigma) const {
    for (Mask f : facets)
        if ((sigma & f) == sigma) return true;
    return false;
}

std::vector<Mask> SimplicialComplex::all_faces() const {
    check_enum(n);
    std::vector<bool> seen(std::size_t{1} << n, false);
    std::vector<Mask> out;
    for (Mask f : facets) {
        // enumerate subsets of f
        Mask sub = f;
        while (true) {
            if (!seen[sub]) { seen[sub] = true; out.push_back(sub); }
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (Mask f : facets) d = std::max(d, popcount(f) - 1);
    return d;
}

SimplicialComplex complex_with_missing_faces(const SetSystem& F) {
    check_enum(F.n);
    for (Mask m : F.sets)
        if (popcount(m) == 1)
            throw InvalidArgument("singleton missing face would orphan a vertex");
    if (inclusion_minimal(F).sets != F.sets)
        throw InvalidArgument("family is not an antichain");
    std::size_t total = std::size_t{1} << F.n;
    std::vector<bool> face(total, false);
    for (std::size_t s = 0; s < total; ++s) {
        bool ok = true;
        for (Mask m : F.sets)
            if ((s & m) == m) { ok = false; break; }
        face[s] = ok;
    }
    std::vector<Mask> facets;
    for (std::size_t s = 0; s < total; ++s) {
        if (!face[s]) continue;
        bool maximal = true;
        for (int v = 0; v < F.n; ++v)
            if (!(s >> v & 1) && face[s | (Mask{1} << v)]) { maximal = false; break; }
        if (maximal) facets.push_back((Mask)s);
    }
    return SimplicialComplex::make(F.n, std::move(facets));
}

SetSystem missing_faces(const SimplicialComplex& K) {
    check_enum(K.n);
    std::size_t total = std::size_t{1} << K.n;
    std::vector<bool> face(total, false);
    for (Mask f : K.all_faces()) face[f] = true;
    std::vector<Mask> out;
    for (std::size_t s = 1; s < total; ++s) {
        if (face[s]) continue;
        bool minimal = true;
        Mask rem = s;
        while (rem) {
            Mask b = rem & -rem;
            if (!face[s ^ b]) { minimal = false; break; }
            rem ^= b;
        }
        if (minimal) out.push_back((Mask)s);
    }
    return SetSystem(K.n, std::move(out));
}

SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L) {
    if (K.n + L.n > kMaxGround) throw SizeLimit("join exceeds vertex cap");
    std::vector<Mask> facets;
    for (Mask fk : K.facets)
        for (Mask fl : L.facets)
            facets.push_back(fk | (fl << K.n));
    return SimplicialComplex::make_unchecked(K.n + L.n, std::move(facets));
}

SimplicialComplex deleted_join(const SimplicialComplex& K, int r, int s) {
    if (r < 2 || s < 2 || s > r) throw InvalidArgument("need r >= 2 and 2 <= s <= r");
    if (K.n * r > kMaxEnumVertices) throw SizeLimit("deleted join too large");
    std::vector<Mask> faces_of_K = K.all_faces();
    std::vector<Mask> combined;
    // s-wise disjoint <=> no vertex of K lies in s of the chosen faces
    std::vector<int> count(K.n, 0);
    std::vector<Mask> chosen(r, 0);
    auto rec = [&](auto&& self, int copy) -> void {
        if (copy == r) {
            Mask total = 0;
            for (int i = 0; i < r; ++i) total |= chosen[i] << (i * K.n);
            combined.push_back(total);
            return;
        }
        for (Mask f : faces_of_K) {
            bool ok = true;
            for (int v = 0; v < K.n && ok; ++v)
                if ((f >> v & 1) && count[v] + 1 >= s) ok = false;
            if (!ok) continue;
            for (int v = 0; v < K.n; ++v)
                if (f >> v & 1) ++count[v];
            chosen[copy] = f;
            self(self, copy + 1);
            chosen[copy] = 0;
            for (int v = 0; v < K.n; ++v)
                if (f >> v & 1) --count[v];
        }
    };
    rec(rec, 0);
    return SimplicialComplex::make_unchecked(K.n * r, maximal_masks(std::move(combined)));
}

SimplicialComplex box_complex(const Hypergraph& H, bool strict_transversal) {
    H.validate();
    int nv = H.num_vertices;
    int r = H.r;
    if (nv * r > kMaxEnumVertices) throw SizeLimit("box complex too large");
    std::vector<Mask> edge_masks;
    Mask covered = 0;
    for (const auto& e : H.hyperedges) {
        Mask m = 0;
        for (int v : e) m |= Mask{1} << v;
        edge_masks.push_back(m);
        covered |= m;
    }
    if (covered != ((Mask{1} << nv) - 1))
        throw InvalidArgument("hypergraph has isolated vertices");

    auto in_closure = [&](Mask sigma) {
        for (Mask em : edge_masks)
            if ((sigma & em) == sigma) return true;
        return false;
    };

    // Check that every transversal subset of A_1 u ... u A_r spans a face
    // of the downward closure of H.
    auto admissible = [&](const std::vector<Mask>& classes) {
        std::vector<std::vector<int>> members;
        for (Mask a : classes)
            if (a) {
                members.push_back({});
                for (int v = 0; v < nv; ++v)
                    if (a >> v & 1) members.back().push_back(v);
            }
        std::vector<int> pick(members.size(), strict_transversal ? 0 : -1);
        // pick[i] = -1 skips class i (only in the non-strict reading)
        auto rec = [&](auto&& self, std::size_t i, Mask sigma) -> bool {
            if (i == members.size()) return in_closure(sigma);
            if (!strict_transversal && !self(self, i + 1, sigma)) return false;
            for (int v : members[i])
                if (!self(self, i + 1, sigma | (Mask{1} << v))) return false;
            return true;
        };
        return rec(rec, 0, 0);
    };

    std::vector<Mask> faces;
    std::vector<Mask> classes(r, 0);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == nv) {
            if (admissible(classes)) {
                Mask total = 0;
                for (int i = 0; i < r; ++i) total |= classes[i] << (i * nv);
                faces.push_back(total);
            }
            return;
        }
        self(self, v + 1); // v unused
        for (int i = 0; i < r; ++i) {
            classes[i] |= Mask{1} << v;
            self(self, v + 1);
            classes[i] &= ~(Mask{1} << v);
        }
    };
    rec(rec, 0);
    return SimplicialComplex::make_unchecked(nv * r, maximal_masks(std::move(faces)));
}

Hypergraph kg_relative(const SimplicialComplex& K, const SimplicialComplex& L, int r) {
    if (K.n != L.n) throw InvalidArgument("K and L must share a vertex set");
    for (Mask f : K.facets)
        if (!L.is_face(f)) throw InvalidArgument("K is not a subcomplex of L");
    std::vector<Mask> verts;
    for (Mask m : missing_faces(K).sets)
        if (L.is_face(m)) verts.push_back(m);
    return build_kneser(SetSystem(K.n, std::move(verts)), r);
}

namespace {

// Rank of a sparse +-1 boundary matrix over GF(p) or Q.
struct BoundaryMatrix {
    int rows = 0;
    std::vector<std::vector<std::pair<int, int>>> cols; // (row, sign)
};

long rank_gfp(const BoundaryMatrix& M, int p) {
    std::vector<std::vector<long>> mat(M.cols.size(), std::vector<long>(M.rows, 0));
    for (std::size_t c = 0; c < M.cols.size(); ++c)
        for (auto [r, s] : M.cols[c]) mat[c][r] = ((s % p) + p) % p;
    // eliminate over GF(p), columns as row vectors
    long rank = 0;
    std::size_t nr = mat.size();
    for (int piv = 0; piv < M.rows && rank < (long)nr; ++piv) {
        std::size_t sel = nr;
        for (std::size_t i = rank; i < nr; ++i)
            if (mat[i][piv] != 0) { sel = i; break; }
        if (sel == nr) continue;
        std::swap(mat[rank], mat[sel]);
        long inv = 1, base = mat[rank][piv], e = p - 2;
        while (e) { if (e & 1) inv = inv * base % p; base = base * base % p; e >>= 1; }
        for (int j = piv; j < M.rows; ++j) mat[rank][j] = mat[rank][j] * inv % p;
        for (std::size_t i = 0; i < nr; ++i) {
            if ((long)i == rank || mat[i][piv] == 0) continue;
            long f = mat[i][piv];
            for (int j = piv; j < M.rows; ++j)
                mat[i][j] = ((mat[i][j] - f * mat[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

long rank_rational(const BoundaryMatrix& M) {
    std::vector<std::vector<mpq_class>> mat(M.cols.size(), std::vector<mpq_class>(M.rows, 0));
    for (std::size_t c = 0; c < M.cols.size(); ++c)
        for (auto [r, s] : M.cols[c]) mat[c][r] = s;
    long rank = 0;
    std::size_t nr = mat.size();
    for (int piv = 0; piv < M.rows && rank < (long)nr; ++piv) {
        std::size_t sel = nr;
        for (std::size_t i = rank; i < nr; ++i)
            if (mat[i][piv] != 0) { sel = i; break; }
        if (sel == nr) continue;
        std::swap(mat[rank], mat[sel]);
        mpq_class pv = mat[rank][piv];
        for (int j = piv; j < M.rows; ++j) mat[rank][j] /= pv;
        for (std::size_t i = 0; i < nr; ++i) {
            if ((long)i == rank || mat[i][piv] == 0) continue;
            mpq_class f = mat[i][piv];
            for (int j = piv; j < M.rows; ++j) mat[i][j] -= f * mat[rank][j];
        }
        ++rank;
    }
    return rank;
}

} // namespace

BettiVector betti_numbers(const SimplicialComplex& K, const Field& field) {
    if (!field.rationals) {
        int p = field.p;
        if (p < 2) throw InvalidArgument("field characteristic must be a prime");
        for (int q = 2; q * q <= p; ++q)
            if (p % q == 0) throw InvalidArgument("field characteristic must be a prime");
    }
    std::vector<Mask> faces = K.all_faces();
    int dim = K.dimension();
    BettiVector out;
    out.field = field;
    if (dim < 0) return out;

    // faces grouped by dimension, with index maps for boundary columns
    std::vector<std::vector<Mask>> by_dim(dim + 1);
    std::vector<std::map<Mask, int>> index(dim + 1);
    for (Mask f : faces) {
        int d = popcount(f) - 1;
        if (d < 0) continue;
        index[d][f] = (int)by_dim[d].size();
        by_dim[d].push_back(f);
    }

    // rank of boundary operator C_d -> C_{d-1}; d = 0 is the augmentation
    std::vector<long> ranks(dim + 2, 0);
    ranks[0] = by_dim[0].empty() ? 0 : 1;
    for (int d = 1; d <= dim; ++d) {
        BoundaryMatrix M;
        M.rows = (int)by_dim[d - 1].size();
        M.cols.resize(by_dim[d].size());
        for (std::size_t c = 0; c < by_dim[d].size(); ++c) {
            Mask f = by_dim[d][c];
            int pos = 0, sign = 1;
            Mask rem = f;
            while (rem) {
                Mask b = rem & -rem;
                M.cols[c].emplace_back(index[d - 1].at(f ^ b), sign);
                sign = -sign;
                rem ^= b;
                ++pos;
            }
        }
        ranks[d] = field.rationals ? rank_rational(M) : rank_gfp(M, field.p);
    }
    ranks[dim + 1] = 0;

    out.betti.resize(dim + 1);
    for (int d = 0; d <= dim; ++d)
        out.betti[d] = (long)by_dim[d].size() - ranks[d] - ranks[d + 1];
    return out;
}

long euler_characteristic(const SimplicialComplex& K) {
    long chi = 0;
    for (Mask f : K.all_faces()) {
        if (f == 0) continue;
        chi += (popcount(f) % 2 == 1) ? 1 : -1;
    }
    return chi;
}

bool is_prime_power(int r, int* prime) {
    if (r < 2) return false;
    for (int p = 2; p <= r; ++p) {
        if (r % p) continue;
        int m = r;
        while (m % p == 0) m /= p;
        if (m == 1) { if (prime) *prime = p; return true; }
        return false;
    }
    return false;
}

ConnectivityBound equivariant_chi_bound(const Hypergraph& H, bool require_prime_power) {
    int p = 0;
    bool pp = is_prime_power(H.r, &p);
    if (require_prime_power && !pp)
        throw InvalidArgument("uniformity is not a prime power: " + std::to_string(H.r));
    if (!pp) p = 2; // arbitrary field for reporting when the check is waived

    SimplicialComplex B = box_complex(H);
    BettiVector bv = betti_numbers(B, Field{false, p});
    int kappa = -1;
    for (std::size_t i = 0; i < bv.betti.size() && bv.betti[i] == 0; ++i)
        kappa = (int)i;
    ConnectivityBound out;
    out.kappa = kappa;
    out.chi_bound = (kappa + 1) / (H.r - 1) + 1;
    out.betti = std::move(bv);
    return out;
}

} // namespace kneserlab
