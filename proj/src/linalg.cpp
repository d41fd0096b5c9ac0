#include "simsim/linalg.hpp"

#include <cmath>
#include <random>
#include <string>

namespace simsim {

double unitarity_residual(const Matrix& m) {
    if (m.rows() != m.cols())
        throw DimensionError("matrix is " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + ", expected square");
    const Matrix gram = m.adjoint() * m;
    return (gram - Matrix::Identity(m.rows(), m.cols())).norm();
}

bool check_unitary(const Matrix& m, double tol) { return unitarity_residual(m) <= tol; }

UnitaryMatrix::UnitaryMatrix(Matrix m, double tol) : m_(std::move(m)) {
    if (m_.rows() == 0) throw DimensionError("unitary matrix must have n >= 1");
    const double r = unitarity_residual(m_);
    if (!(r <= tol))
        throw NotUnitaryError("matrix is not unitary: ||U*U - I||_F = " + std::to_string(r));
}

UnitaryMatrix UnitaryMatrix::identity(int n) {
    if (n < 1) throw DomainError("identity dimension must be >= 1");
    return UnitaryMatrix(Matrix::Identity(n, n), Unchecked{});
}

UnitaryMatrix UnitaryMatrix::adjoint() const { return UnitaryMatrix(m_.adjoint(), Unchecked{}); }

UnitaryTuple::UnitaryTuple(std::vector<UnitaryMatrix> matrices) : n_(0), mats_(std::move(matrices)) {
    if (mats_.empty()) throw ShapeError("unitary tuple needs k >= 1");
    n_ = mats_.front().n();
    for (const auto& m : mats_)
        if (m.n() != n_) throw ShapeError("tuple members have different dimensions");
}

UnitaryTuple UnitaryTuple::identity(int n, int k) {
    if (k < 1) throw ShapeError("unitary tuple needs k >= 1");
    return UnitaryTuple(std::vector<UnitaryMatrix>(static_cast<std::size_t>(k), UnitaryMatrix::identity(n)));
}

UnitaryMatrix random_unitary(int n, std::uint64_t seed) {
    if (n < 1) throw DomainError("random_unitary needs n >= 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix g(n, n);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(r, c) = Complex(re, im);
        }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix& rfac = qr.matrixQR();
    // Fix the phase ambiguity of QR so the result is Haar distributed.
    for (int j = 0; j < n; ++j) {
        const Complex d = rfac(j, j);
        const double a = std::abs(d);
        if (a > 0) q.col(j) *= d / a;
    }
    return UnitaryMatrix(std::move(q), UnitaryMatrix::Unchecked{});
}

UnitaryTuple random_tuple(int n, int k, std::uint64_t seed) {
    std::seed_seq seq{seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k)};
    std::vector<std::uint64_t> seeds(static_cast<std::size_t>(k));
    seq.generate(seeds.begin(), seeds.end());
    std::vector<UnitaryMatrix> mats;
    mats.reserve(seeds.size());
    for (auto s : seeds) mats.push_back(random_unitary(n, s));
    return UnitaryTuple(std::move(mats));
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
    Matrix out = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    out.topLeftCorner(a.rows(), a.cols()) = a;
    out.bottomRightCorner(b.rows(), b.cols()) = b;
    return out;
}

UnitaryTuple block_sum(const UnitaryTuple& s, const UnitaryTuple& t) {
    if (s.k() != t.k())
        throw ShapeError("block_sum arity mismatch: " + std::to_string(s.k()) + " vs " +
                         std::to_string(t.k()));
    std::vector<UnitaryMatrix> out;
    out.reserve(static_cast<std::size_t>(s.k()));
    for (int i = 0; i < s.k(); ++i)
        out.emplace_back(block_diagonal(s[i].matrix(), t[i].matrix()));
    return UnitaryTuple(std::move(out));
}

UnitaryTuple stabilize(const UnitaryTuple& t, int m) {
    if (m < 0) throw DomainError("stabilize needs m >= 0");
    if (m == 0) return t;
    return block_sum(t, UnitaryTuple::identity(m, t.k()));
}

UnitaryTuple conjugate(const UnitaryTuple& t, const UnitaryMatrix& w) {
    if (w.n() != t.n())
        throw DimensionError("conjugator has dimension " + std::to_string(w.n()) + ", tuple has " +
                             std::to_string(t.n()));
    std::vector<UnitaryMatrix> out;
    out.reserve(static_cast<std::size_t>(t.k()));
    const Matrix& wm = w.matrix();
    for (const auto& a : t.matrices()) {
        Matrix c = wm * a.matrix() * wm.adjoint();
        // Products of unitaries drift by O(n eps); the checked constructor
        // still applies its default tolerance.
        out.emplace_back(std::move(c));
    }
    return UnitaryTuple(std::move(out));
}

double tuple_distance(const UnitaryTuple& s, const UnitaryTuple& t) {
    if (s.n() != t.n() || s.k() != t.k()) throw ShapeError("tuple_distance shape mismatch");
    double worst = 0.0;
    for (int i = 0; i < s.k(); ++i) worst = std::max(worst, (s[i].matrix() - t[i].matrix()).norm());
    return worst;
}

Matrix orthonormalize(const Matrix& basis) {
    Matrix q = basis;
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
        for (Eigen::Index i = 0; i < j; ++i) {
            const Complex proj = q.col(i).dot(q.col(j));
            q.col(j) -= proj * q.col(i);
        }
        const double nrm = q.col(j).norm();
        if (nrm == 0.0) throw NumericalError("orthonormalize: rank-deficient basis");
        q.col(j) /= nrm;
    }
    return q;
}

Matrix nearest_unitary(const Matrix& m) {
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace simsim
