#pragma once

#include <vector>

#include "simsim/linalg.hpp"

namespace simsim {

/**
 * A point of the n-fold symmetric product of the circle. Phases are in
 * fractions of a full turn (t stands for e^{2 pi i t}), reduced to [0,1)
 * and kept sorted.
 */
class PhaseMultiset {
public:
    PhaseMultiset() = default;
    /// Reduces every phase mod 1 and sorts. Phases within `wrap_tol` of 1 become 0.
    explicit PhaseMultiset(std::vector<double> phases, double wrap_tol = 0.0);

    int n() const { return static_cast<int>(phases_.size()); }
    const std::vector<double>& phases() const { return phases_; }

    /// Multiset union.
    PhaseMultiset operator+(const PhaseMultiset& other) const;

private:
    std::vector<double> phases_;
};

/// Shortest arc between two phases, in turns (at most 0.5).
double circular_distance(double a, double b);

/// Sorted eigenphases of U. Throws NotUnitaryError when U fails the unitarity
/// check at `tol` or an eigenvalue modulus deviates from 1 by more than `tol`.
PhaseMultiset eigenphases(const UnitaryMatrix& u, double tol = kDefaultTol);

/// Component-wise eigenphases: a conjugation invariant of the tuple.
std::vector<PhaseMultiset> eigenvalue_map(const UnitaryTuple& t, double tol = kDefaultTol);

/// Minimal total circular distance over bijections (Wasserstein-1 on the
/// circle), found by scanning the n cyclic alignments of the sorted lists.
double sym_distance(const PhaseMultiset& a, const PhaseMultiset& b);

}  // namespace simsim
