#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace simsim {

using Integer = boost::multiprecision::cpp_int;

/// Dense exact integer matrix, row-major.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    /// Row list; throws DimensionError on ragged input.
    IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);
    static IntegerMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols);
    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    IntegerMatrix transpose() const;

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Exact determinant (fraction-free Bareiss elimination). Square input only.
Integer determinant(const IntegerMatrix& m);

/// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... on the
/// diagonal, all d_i >= 0.
struct SmithDecomposition {
    IntegerMatrix d;
    IntegerMatrix u;
    IntegerMatrix v;
    std::vector<Integer> invariant_factors;  // the nonzero diagonal of D
};

/**
 * Smith normal form by unimodular row and column operations. The pivot is
 * always the smallest nonzero |entry| of the remaining block, ties broken by
 * row-major position, so results are deterministic.
 */
SmithDecomposition smith_normal_form(const IntegerMatrix& m);

/// Invariant factors only; same pivoting, no transforms tracked.
std::vector<Integer> invariant_factors(const IntegerMatrix& m);

/// Finitely generated abelian group Z^rank + sum Z/torsion_i.
struct AbelianGroup {
    std::size_t rank = 0;
    std::vector<Integer> torsion;  // invariant factors > 1, each dividing the next

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Cokernel of M : Z^cols -> Z^rows.
AbelianGroup cokernel(const IntegerMatrix& m);

/// Invariant-factor form of a direct sum of cyclic groups Z/o_i (o_i >= 1).
std::vector<Integer> normalize_torsion(const std::vector<Integer>& orders);

}  // namespace simsim
