#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "simsim/error.hpp"

namespace simsim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline constexpr double kDefaultTol = 1e-9;

/// Frobenius norm of M*M - I.
double unitarity_residual(const Matrix& m);

/// True iff ||M*M - I||_F <= tol. Throws DimensionError for non-square M.
bool check_unitary(const Matrix& m, double tol = kDefaultTol);

/**
 * An element of U(n). The invariant ||U*U - I||_F <= tol is checked once at
 * construction; afterwards the value is immutable.
 */
class UnitaryMatrix {
public:
    /// Throws DimensionError (non-square, n = 0) or NotUnitaryError.
    explicit UnitaryMatrix(Matrix m, double tol = kDefaultTol);

    static UnitaryMatrix identity(int n);

    int n() const { return static_cast<int>(m_.rows()); }
    const Matrix& matrix() const { return m_; }
    Complex operator()(int r, int c) const { return m_(r, c); }

    UnitaryMatrix adjoint() const;

private:
    struct Unchecked {};
    UnitaryMatrix(Matrix m, Unchecked) : m_(std::move(m)) {}

    Matrix m_;

    friend UnitaryMatrix random_unitary(int n, std::uint64_t seed);
};

/// A point of U(n)^k, i.e. a unitary representation of the free group on k letters.
class UnitaryTuple {
public:
    /// Throws ShapeError if empty or if members disagree on n.
    explicit UnitaryTuple(std::vector<UnitaryMatrix> matrices);

    static UnitaryTuple identity(int n, int k);

    int n() const { return n_; }
    int k() const { return static_cast<int>(mats_.size()); }
    const UnitaryMatrix& operator[](int i) const { return mats_[static_cast<std::size_t>(i)]; }
    const std::vector<UnitaryMatrix>& matrices() const { return mats_; }

private:
    int n_;
    std::vector<UnitaryMatrix> mats_;
};

/// Approximately Haar-distributed unitary; a pure function of (n, seed).
UnitaryMatrix random_unitary(int n, std::uint64_t seed);

/// k independent Haar unitaries derived from one seed.
UnitaryTuple random_tuple(int n, int k, std::uint64_t seed);

/// Block-diagonal [[a, 0], [0, b]].
Matrix block_diagonal(const Matrix& a, const Matrix& b);

/// Member-wise block sum; s.k must equal t.k.
UnitaryTuple block_sum(const UnitaryTuple& s, const UnitaryTuple& t);

/// Block sum with the m-dimensional identity tuple.
UnitaryTuple stabilize(const UnitaryTuple& t, int m);

/// Member-wise W * A_i * W^*.
UnitaryTuple conjugate(const UnitaryTuple& t, const UnitaryMatrix& w);

/// Largest member-wise Frobenius distance; tuples must share n and k.
double tuple_distance(const UnitaryTuple& s, const UnitaryTuple& t);

/// Modified Gram-Schmidt on the columns of `basis`. Columns that are
/// already orthonormal are reproduced to rounding.
Matrix orthonormalize(const Matrix& basis);

/// Nearest unitary in Frobenius norm (polar factor).
Matrix nearest_unitary(const Matrix& m);

}  // namespace simsim
