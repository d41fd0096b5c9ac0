#pragma once

#include <vector>

#include "simsim/linalg.hpp"

namespace simsim {

/// An eigenspace (orthonormal columns, possibly zero of them) with its phase in turns.
struct HarrisBlock {
    Matrix basis;
    double phase = 0.0;
};

/**
 * A point of the realization |X.|: mutually orthogonal subspaces V_1..V_p of
 * C^n together with phases 0 <= t_1 <= ... <= t_p <= 1. The map to U(n) makes
 * V_i the e^{2 pi i t_i}-eigenspace and acts trivially on the complement.
 */
struct HarrisConfiguration {
    int n = 0;
    std::vector<HarrisBlock> blocks;

    int p() const { return static_cast<int>(blocks.size()); }
    /// Throws DomainError if bases are not jointly orthonormal within tol,
    /// have the wrong ambient dimension, or phases are unordered or outside [0,1].
    void validate(double tol = kDefaultTol) const;
    /// 0 < t_1 < ... < t_p < 1 and every block non-empty.
    bool is_canonical() const;
};

/// Ordered system of mutually orthogonal subspaces: a point of Gr(n_1, n_2, ...; n).
struct PlaneArrangement {
    int n = 0;
    std::vector<Matrix> planes;

    std::vector<int> dims() const;
    void validate(double tol = kDefaultTol) const;
};

/// k arrangements in one ambient space.
struct MultiArrangement {
    int n = 0;
    std::vector<PlaneArrangement> members;

    int k() const { return static_cast<int>(members.size()); }
    void validate(double tol = kDefaultTol) const;
};

/// Canonical configuration of U: eigenphases in (0,1) clustered within tol,
/// strictly increasing; the eigenphase-0 eigenspace is left implicit.
HarrisConfiguration harris_decompose(const UnitaryMatrix& u, double tol = kDefaultTol);

/// I + sum_i (e^{2 pi i t_i} - 1) P_{V_i}.
UnitaryMatrix harris_reconstruct(const HarrisConfiguration& c, double tol = kDefaultTol);

/// Simplicial face map d_i on the arrangement, 0 <= i <= p:
/// d_0 drops V_1, d_p drops V_p, otherwise V_i and V_{i+1} merge.
PlaneArrangement face_map(const PlaneArrangement& a, int i);

/// Degeneracy s_i, 0 <= i <= p: a zero-dimensional subspace becomes V_{i+1}.
PlaneArrangement degeneracy_map(const PlaneArrangement& a, int i);

/// Face map on configurations. Subspaces follow the arrangement face map;
/// the phase list loses t_1 for i = 0, t_p for i = p and t_i otherwise, so a
/// merged block carries t_{i+1}.
HarrisConfiguration face_map(const HarrisConfiguration& c, int i);

/// Degeneracy on configurations; the inserted block repeats the preceding
/// phase (0 when inserted first).
HarrisConfiguration degeneracy_map(const HarrisConfiguration& c, int i);

PlaneArrangement arrangement_of(const HarrisConfiguration& c);

/// Singular values of V^* W, descending, clamped to [0,1]: the cosines of
/// the principal angles between span V and span W.
std::vector<double> principal_angles(const Matrix& v, const Matrix& w);

/// Largest principal angle (radians) between equal-dimensional subspaces.
double subspace_distance(const Matrix& v, const Matrix& w);

/// Principal-angle data for every unordered pair of planes in the flattened
/// (member-major) plane list, pairs in lexicographic order.
std::vector<std::vector<double>> principal_angle_signature(const MultiArrangement& m);

/// The block element of U(kn) rotating copy 1 of C^n towards copy i (1-based);
/// i = 1 gives the identity.
Matrix rotation_block(int k, int n, int i, double theta);

/// Stabilize every member into the first copy of C^n inside C^{kn} and apply
/// rotation_block(k, n, i, theta) to member i, re-orthonormalizing afterwards.
/// Throws DomainError unless 0 <= theta <= pi/2.
MultiArrangement null_homotopy(const MultiArrangement& m, double theta);

/// Plain stabilization: every member embedded in the first copy of C^n inside C^{kn}.
MultiArrangement stabilize_arrangement(const MultiArrangement& m, int copies);

/**
 * Block-diagonal unitary diag(g_1, ..., g_k) of size kn with g_i carrying
 * every plane of a.members[i] onto the matching plane of b.members[i].
 * It maps null_homotopy(a, pi/2) onto null_homotopy(b, pi/2).
 * Throws ShapeError unless a and b share n, k and dimension types.
 */
UnitaryMatrix endpoint_matching(const MultiArrangement& a, const MultiArrangement& b);

/// Apply g to every plane of every member.
MultiArrangement transform(const UnitaryMatrix& g, const MultiArrangement& m);

/// Largest subspace distance between corresponding planes.
double arrangement_distance(const MultiArrangement& a, const MultiArrangement& b);

}  // namespace simsim
