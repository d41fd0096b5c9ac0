#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "simsim/linalg.hpp"

namespace simsim {

/// Orthonormal (Frobenius) basis of the commutant {X : X A_i = A_i X for all i}.
struct CommutantBasis {
    int n = 0;
    int dim = 0;
    std::vector<Matrix> basis;
    /// Largest singular value of the stacked Sylvester operator.
    double sigma_max = 0.0;
    /// Absolute cut-off: singular values below it count as null directions.
    double threshold = 0.0;
};

/**
 * Joint null space of X -> X A_i - A_i X, by singular-value thresholding of the
 * stacked (k n^2) x n^2 operator. A singular value s is treated as zero when
 * s < tol * max(sigma_max, 1).
 */
CommutantBasis commutant_basis(const UnitaryTuple& t, double tol = kDefaultTol);

/// Schur: irreducible iff the commutant consists of scalars only.
bool is_irreducible(const UnitaryTuple& t, double tol = kDefaultTol);

/**
 * Unitary X with X a_i X^* = b_i for all i, if the intertwiner space of the
 * pair is non-trivial at `tol`. Meant for irreducible a, b where the
 * intertwiner is unique up to a scalar; returns nullopt for mismatched shapes.
 */
std::optional<UnitaryMatrix> irreducible_intertwiner(const UnitaryTuple& a, const UnitaryTuple& b,
                                                     double tol = kDefaultTol);

struct Summand {
    UnitaryTuple tuple;
    int multiplicity = 1;
};

/**
 * A unitary tuple split into irreducibles. conjugate(original, basis_change)
 * is the block-diagonal assembly: each summand repeated `multiplicity` times,
 * summands in canonical order (dimension, then word-trace signature).
 */
struct Decomposition {
    std::vector<Summand> summands;
    UnitaryMatrix basis_change;
    int commutant_dim = 0;
    double rank_threshold = 0.0;

    int total_blocks() const;
    /// The block-diagonal tuple the basis change is supposed to produce.
    UnitaryTuple assembly() const;
};

/// Throws InconclusiveError when eigenvalue clustering of the random
/// splitting element stays ambiguous after one retry.
Decomposition decompose_irreducibles(const UnitaryTuple& t, double tol = kDefaultTol, std::uint64_t seed = 0);

}  // namespace simsim
