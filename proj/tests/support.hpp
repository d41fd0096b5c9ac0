#pragma once

#include <complex>
#include <random>
#include <vector>

#include "simsim/linalg.hpp"

namespace simsim::testing {

inline Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

inline Matrix pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

inline Matrix hadamard() {
    Matrix m(2, 2);
    m << 1, 1, 1, -1;
    return m / std::sqrt(2.0);
}

inline Matrix phase_diag(const std::vector<double>& t) {
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(t.size()), static_cast<Eigen::Index>(t.size()));
    for (std::size_t i = 0; i < t.size(); ++i)
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = std::polar(1.0, 2.0 * M_PI * t[i]);
    return m;
}

inline UnitaryTuple tuple_of(std::initializer_list<Matrix> ms) {
    std::vector<UnitaryMatrix> v;
    for (const auto& m : ms) v.emplace_back(m);
    return UnitaryTuple(std::move(v));
}

// Irreducible with probability one for k >= 2.
inline UnitaryTuple random_irreducible(int n, int k, std::uint64_t seed) { return random_tuple(n, k, seed); }

inline UnitaryTuple repeat(const UnitaryTuple& t, int m) {
    UnitaryTuple out = t;
    for (int i = 1; i < m; ++i) out = block_sum(out, t);
    return out;
}

// Random unitary near the identity: exp(i eps H) for a random Hermitian H of unit norm.
inline UnitaryMatrix small_unitary(int n, double eps, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    Matrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = Complex(normal(rng), normal(rng));
    Matrix h = (g + g.adjoint()) / 2.0;
    h /= h.norm();
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    Matrix d = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) d(i, i) = std::polar(1.0, eps * es.eigenvalues()(i));
    return UnitaryMatrix(es.eigenvectors() * d * es.eigenvectors().adjoint());
}

inline Matrix random_isometry(int n, int d, std::uint64_t seed) {
    return random_unitary(n, seed).matrix().leftCols(d);
}

}  // namespace simsim::testing
