#include "simsim/eigenmap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace simsim {

namespace {

double reduce_phase(double p, double wrap_tol) {
    p -= std::floor(p);
    if (p >= 1.0 || p > 1.0 - wrap_tol) p = 0.0;
    return p;
}

}  // namespace

PhaseMultiset::PhaseMultiset(std::vector<double> phases, double wrap_tol) : phases_(std::move(phases)) {
    for (double& p : phases_) {
        if (!std::isfinite(p)) throw DomainError("phase must be finite");
        p = reduce_phase(p, wrap_tol);
    }
    std::sort(phases_.begin(), phases_.end());
}

PhaseMultiset PhaseMultiset::operator+(const PhaseMultiset& other) const {
    std::vector<double> all = phases_;
    all.insert(all.end(), other.phases_.begin(), other.phases_.end());
    return PhaseMultiset(std::move(all));
}

double circular_distance(double a, double b) {
    double d = std::fabs(a - b);
    d -= std::floor(d);
    return std::min(d, 1.0 - d);
}

PhaseMultiset eigenphases(const UnitaryMatrix& u, double tol) {
    const double r = unitarity_residual(u.matrix());
    if (!(r <= tol)) throw NotUnitaryError("eigenphases: ||U*U - I||_F = " + std::to_string(r));

    // U is normal, so its complex Schur form is diagonal up to rounding.
    Eigen::ComplexSchur<Matrix> schur(u.matrix(), /*computeU=*/false);
    if (schur.info() != Eigen::Success) throw NumericalError("eigenphases: Schur iteration did not converge");
    const Matrix& tri = schur.matrixT();

    std::vector<double> phases;
    phases.reserve(static_cast<std::size_t>(u.n()));
    for (int i = 0; i < u.n(); ++i) {
        const Complex lambda = tri(i, i);
        if (std::fabs(std::abs(lambda) - 1.0) > tol)
            throw NotUnitaryError("eigenvalue modulus " + std::to_string(std::abs(lambda)) + " off the unit circle");
        phases.push_back(std::arg(lambda) / (2.0 * std::numbers::pi));
    }
    return PhaseMultiset(std::move(phases), tol);
}

std::vector<PhaseMultiset> eigenvalue_map(const UnitaryTuple& t, double tol) {
    std::vector<PhaseMultiset> out;
    out.reserve(static_cast<std::size_t>(t.k()));
    for (const auto& m : t.matrices()) out.push_back(eigenphases(m, tol));
    return out;
}

double sym_distance(const PhaseMultiset& a, const PhaseMultiset& b) {
    if (a.n() != b.n())
        throw ShapeError("sym_distance size mismatch: " + std::to_string(a.n()) + " vs " + std::to_string(b.n()));
    const auto& x = a.phases();
    const auto& y = b.phases();
    const std::size_t n = x.size();
    if (n == 0) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t shift = 0; shift < n; ++shift) {
        double cost = 0.0;
        for (std::size_t i = 0; i < n; ++i) cost += circular_distance(x[i], y[(i + shift) % n]);
        best = std::min(best, cost);
    }
    return best;
}

}  // namespace simsim
