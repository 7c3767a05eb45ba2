#ifndef KNESERLAB_DEFECT_HPP
#define KNESERLAB_DEFECT_HPP

#include <cstdint>
#include <vector>

#include "kneserlab/geometry.hpp"
#include "kneserlab/setsystem.hpp"

namespace kneserlab {

/// cd^r value with one maximizing tuple of parts A_1..A_r.
struct DefectWitness {
    int value = 0;
    std::vector<Mask> parts; // r pairwise disjoint subsets, no member inside any
};

inline constexpr int kDefaultDefectCap = 16;

/// Exact r-colorability defect by branch-and-bound over assignments of
/// each element to one of r parts or "unused".
DefectWitness colorability_defect(const SetSystem& F, int r, int cap = kDefaultDefectCap);

/// Certified lower bound on tcd^r: value = N - (r-1)(d+1) where N is the
/// vertex count of the certifying complex.
struct CertifiedBound {
    int value = 0;
    PointConfig config;
    std::size_t checked_tuples = 0;
};

struct VerificationFailure : Error {
    IntersectionWitness witness;
    VerificationFailure(const std::string& msg, IntersectionWitness w)
        : Error(msg), witness(std::move(w)) {}
};

/// Verify that the complex with missing faces F, joined with a simplex on
/// extra_vertices further vertices, has no r-fold hull coincidence among
/// pairwise disjoint faces under the affine map vertex i -> config point i.
CertifiedBound tcd_certificate(const SetSystem& F, int extra_vertices,
                               const PointConfig& config, int r);

struct CdTcdReport {
    bool ok = false;
    DefectWitness cd;
    CertifiedBound certificate;
    int trials_used = 0;
    int dimension = 0;
    int extra_vertices = 0;
};

/// Build the join construction with random rational points in the forced
/// dimension, certify it, and check certified value >= cd. Degenerate
/// point draws are rerolled up to `trials` times.
CdTcdReport cd_le_tcd_check(const SetSystem& F, int r, int trials = 8,
                            std::uint64_t seed = 1);

} // namespace kneserlab

#endif
