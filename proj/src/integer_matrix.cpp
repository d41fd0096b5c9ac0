#include "simsim/integer_matrix.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "simsim/error.hpp"

namespace simsim {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ragged integer matrix literal");
        for (long long x : r) data_.emplace_back(x);
    }
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw DimensionError("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                                 " entries, expected " + std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool IntegerMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x.is_zero(); });
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("integer matrix product shape mismatch");
    IntegerMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t l = 0; l < a.cols_; ++l) {
            const Integer& x = a(i, l);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(l, j).is_zero()) out(i, j) += x * b(l, j);
        }
    return out;
}

Integer determinant(const IntegerMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntegerMatrix a = m;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k).is_zero()) ++swap;
            if (swap == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

namespace {

// Row and column operations applied to the working matrix and mirrored into
// the optional transforms (U accumulates row ops, V column ops).
class SmithReducer {
public:
    SmithReducer(IntegerMatrix a, bool track)
        : a_(std::move(a)), r_(a_.rows()), c_(a_.cols()) {
        if (track) {
            u_ = IntegerMatrix::identity(r_);
            v_ = IntegerMatrix::identity(c_);
        }
    }

    void run() {
        const std::size_t steps = std::min(r_, c_);
        for (std::size_t t = 0; t < steps; ++t) {
            if (!reduce_block(t)) break;
        }
    }

    IntegerMatrix& matrix() { return a_; }
    IntegerMatrix& u() { return *u_; }
    IntegerMatrix& v() { return *v_; }

private:
    std::optional<std::pair<std::size_t, std::size_t>> smallest(std::size_t t) const {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        Integer best_abs;
        for (std::size_t i = t; i < r_; ++i)
            for (std::size_t j = t; j < c_; ++j) {
                const Integer& x = a_(i, j);
                if (x.is_zero()) continue;
                Integer ax = abs(x);
                if (!best || ax < best_abs) {
                    best = {i, j};
                    best_abs = std::move(ax);
                    if (best_abs == 1) return best;
                }
            }
        return best;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < c_; ++c) std::swap(a_(i, c), a_(j, c));
        if (u_)
            for (std::size_t c = 0; c < r_; ++c) std::swap((*u_)(i, c), (*u_)(j, c));
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < r_; ++r) std::swap(a_(r, i), a_(r, j));
        if (v_)
            for (std::size_t r = 0; r < c_; ++r) std::swap((*v_)(r, i), (*v_)(r, j));
    }

    // row_dst -= q * row_src
    void row_axpy(std::size_t dst, std::size_t src, const Integer& q, std::size_t from) {
        for (std::size_t c = from; c < c_; ++c)
            if (!a_(src, c).is_zero()) a_(dst, c) -= q * a_(src, c);
        if (u_)
            for (std::size_t c = 0; c < r_; ++c)
                if (!(*u_)(src, c).is_zero()) (*u_)(dst, c) -= q * (*u_)(src, c);
    }

    // col_dst -= q * col_src
    void col_axpy(std::size_t dst, std::size_t src, const Integer& q, std::size_t from) {
        for (std::size_t r = from; r < r_; ++r)
            if (!a_(r, src).is_zero()) a_(r, dst) -= q * a_(r, src);
        if (v_)
            for (std::size_t r = 0; r < c_; ++r)
                if (!(*v_)(r, src).is_zero()) (*v_)(r, dst) -= q * (*v_)(r, src);
    }

    // Returns false when the remaining block is zero.
    bool reduce_block(std::size_t t) {
        for (;;) {
            const auto pos = smallest(t);
            if (!pos) return false;
            swap_rows(t, pos->first);
            swap_cols(t, pos->second);
            const Integer pivot = a_(t, t);

            bool clean = true;
            for (std::size_t i = t + 1; i < r_; ++i) {
                if (a_(i, t).is_zero()) continue;
                const Integer q = a_(i, t) / pivot;
                if (!q.is_zero()) row_axpy(i, t, q, t);
                if (!a_(i, t).is_zero()) clean = false;
            }
            for (std::size_t j = t + 1; j < c_; ++j) {
                if (a_(t, j).is_zero()) continue;
                const Integer q = a_(t, j) / pivot;
                if (!q.is_zero()) col_axpy(j, t, q, t);
                if (!a_(t, j).is_zero()) clean = false;
            }
            if (!clean) continue;

            // Divisibility: fold an offending row into the pivot row and repeat.
            bool divides = true;
            if (abs(pivot) != 1) {
                for (std::size_t i = t + 1; i < r_ && divides; ++i)
                    for (std::size_t j = t + 1; j < c_; ++j)
                        if (a_(i, j) % pivot != 0) {
                            row_axpy(t, i, Integer(-1), t);
                            divides = false;
                            break;
                        }
            }
            if (!divides) continue;

            if (pivot < 0) {
                for (std::size_t c = t; c < c_; ++c) a_(t, c) = -a_(t, c);
                if (u_)
                    for (std::size_t c = 0; c < r_; ++c) (*u_)(t, c) = -(*u_)(t, c);
            }
            return true;
        }
    }

    IntegerMatrix a_;
    std::size_t r_, c_;
    std::optional<IntegerMatrix> u_, v_;
};

std::vector<Integer> diagonal_factors(const IntegerMatrix& d) {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
        if (!d(i, i).is_zero()) out.push_back(d(i, i));
    return out;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
    SmithReducer red(m, true);
    red.run();
    SmithDecomposition out{std::move(red.matrix()), std::move(red.u()), std::move(red.v()), {}};
    out.invariant_factors = diagonal_factors(out.d);
    return out;
}

std::vector<Integer> invariant_factors(const IntegerMatrix& m) {
    SmithReducer red(m, false);
    red.run();
    return diagonal_factors(red.matrix());
}

AbelianGroup cokernel(const IntegerMatrix& m) {
    const auto factors = invariant_factors(m);
    AbelianGroup g;
    g.rank = m.rows() - factors.size();
    for (const auto& f : factors)
        if (f > 1) g.torsion.push_back(f);
    return g;
}

std::vector<Integer> normalize_torsion(const std::vector<Integer>& orders) {
    IntegerMatrix diag(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (orders[i] < 1) throw DomainError("torsion orders must be >= 1");
        diag(i, i) = orders[i];
    }
    std::vector<Integer> out;
    for (const auto& f : invariant_factors(diag))
        if (f > 1) out.push_back(f);
    return out;
}

}  // namespace simsim
