#ifndef KNESERLAB_TOPOLOGY_HPP
#define KNESERLAB_TOPOLOGY_HPP

#include <vector>

#include "kneserlab/kneser.hpp"
#include "kneserlab/setsystem.hpp"

namespace kneserlab {

/// Downward-closed face family on vertices {1..n}, stored by its
/// inclusion-maximal faces. The complex whose only face is the empty set
/// has facets = {0}. Vertices that appear in no face ("ghosts") are
/// rejected by the topology constructors; tcd certification tolerates
/// them via make_unchecked.
struct SimplicialComplex {
    int n = 0;
    std::vector<Mask> facets{0};

    static SimplicialComplex make(int n, std::vector<Mask> facets);
    static SimplicialComplex make_unchecked(int n, std::vector<Mask> facets);
    static SimplicialComplex full_simplex(int n);
    static SimplicialComplex skeleton(int n, int dim); // dim-skeleton of the (n-1)-simplex

    bool is_face(Mask sigma) const;
    /// All faces including the empty face, ascending mask order.
    std::vector<Mask> all_faces() const;
    int dimension() const; // -1 for the empty-face-only complex

    bool operator==(const SimplicialComplex&) const = default;
};

struct Field {
    bool rationals = true;
    int p = 0; // prime, used when !rationals
};

struct BettiVector {
    Field field;
    std::vector<long> betti; // reduced Betti numbers b_0..b_dim
};

/// The unique complex on [n] whose missing faces are exactly the members
/// of F. F must be an antichain without singleton members.
SimplicialComplex complex_with_missing_faces(const SetSystem& F);

/// All minimal nonfaces of K.
SetSystem missing_faces(const SimplicialComplex& K);

/// Join; vertex set is the disjoint union, L's vertices shifted past K's.
SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L);

/// s-wise deleted r-fold join: faces are joins of r faces of K any s of
/// which have no vertex in common. Copy i of K occupies vertices
/// (i-1)*K.n+1 .. i*K.n.
SimplicialComplex deleted_join(const SimplicialComplex& K, int r, int s);

/// Box complex B(H) of an r-uniform hypergraph without isolated vertices.
/// With strict_transversal the quantifier ranges over subsets meeting
/// every nonempty class exactly once instead of at most once.
SimplicialComplex box_complex(const Hypergraph& H, bool strict_transversal = false);

/// Generalized Kneser hypergraph of the missing faces of K that are faces
/// of L (K must be a subcomplex of L on the same vertex set).
Hypergraph kg_relative(const SimplicialComplex& K, const SimplicialComplex& L, int r);

/// Reduced Betti numbers from boundary-matrix ranks over the chosen field.
BettiVector betti_numbers(const SimplicialComplex& K, const Field& field);

long euler_characteristic(const SimplicialComplex& K); // non-reduced

struct ConnectivityBound {
    int kappa;       // homology vanishes in degrees 0..kappa
    int chi_bound;   // largest c with (r-1)(c-1)-1 <= kappa
    BettiVector betti;
};

/// Lower bound on chi(H) from the homological connectivity of B(H).
/// Heuristic proxy: homological connectivity stands in for topological
/// connectivity (simple-connectivity is not checked).
ConnectivityBound equivariant_chi_bound(const Hypergraph& H, bool require_prime_power = true);

bool is_prime_power(int r, int* prime = nullptr);

} // namespace kneserlab

#endif
