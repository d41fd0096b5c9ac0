#include "simsim/harris.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace simsim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Matrix concat_columns(const std::vector<Matrix>& parts, int n) {
    Eigen::Index cols = 0;
    for (const auto& p : parts) cols += p.cols();
    Matrix out(n, cols);
    Eigen::Index at = 0;
    for (const auto& p : parts) {
        out.middleCols(at, p.cols()) = p;
        at += p.cols();
    }
    return out;
}

void check_orthonormal(const std::vector<Matrix>& parts, int n, double tol, const char* what) {
    if (n < 0) throw DomainError(std::string(what) + ": negative ambient dimension");
    for (const auto& p : parts)
        if (p.rows() != n)
            throw DomainError(std::string(what) + ": basis has " + std::to_string(p.rows()) +
                              " rows, ambient dimension is " + std::to_string(n));
    const Matrix all = concat_columns(parts, n);
    if (all.cols() > n) throw DomainError(std::string(what) + ": total dimension exceeds ambient dimension");
    const double r = (all.adjoint() * all - Matrix::Identity(all.cols(), all.cols())).norm();
    if (!(r <= tol))
        throw DomainError(std::string(what) + ": bases not orthonormal (residual " + std::to_string(r) + ")");
}

void check_face_index(int i, int p) {
    if (i < 0 || i > p)
        throw DomainError("face index " + std::to_string(i) + " outside 0.." + std::to_string(p));
}

// Unitary whose leading columns are q (orthonormal).
Matrix complete_basis(const Matrix& q, int n) {
    if (q.cols() == n) return q;
    Eigen::HouseholderQR<Matrix> qr(q);
    Matrix full = qr.householderQ();
    Matrix out(n, n);
    out.leftCols(q.cols()) = q;
    out.rightCols(n - q.cols()) = full.rightCols(n - q.cols());
    return out;
}

}  // namespace

void HarrisConfiguration::validate(double tol) const {
    std::vector<Matrix> parts;
    double prev = 0.0;
    for (const auto& b : blocks) {
        if (!(b.phase >= 0.0 && b.phase <= 1.0)) throw DomainError("configuration phase outside [0,1]");
        if (b.phase < prev) throw DomainError("configuration phases must be non-decreasing");
        prev = b.phase;
        parts.push_back(b.basis);
    }
    check_orthonormal(parts, n, tol, "configuration");
}

bool HarrisConfiguration::is_canonical() const {
    double prev = 0.0;
    for (const auto& b : blocks) {
        if (b.basis.cols() == 0 || !(b.phase > prev) || !(b.phase < 1.0)) return false;
        prev = b.phase;
    }
    return true;
}

std::vector<int> PlaneArrangement::dims() const {
    std::vector<int> out;
    for (const auto& p : planes) out.push_back(static_cast<int>(p.cols()));
    return out;
}

void PlaneArrangement::validate(double tol) const { check_orthonormal(planes, n, tol, "arrangement"); }

void MultiArrangement::validate(double tol) const {
    if (members.empty()) throw DomainError("multi-arrangement needs k >= 1");
    for (const auto& m : members) {
        if (m.n != n) throw DomainError("multi-arrangement members disagree on ambient dimension");
        m.validate(tol);
    }
}

HarrisConfiguration harris_decompose(const UnitaryMatrix& u, double tol) {
    const double r = unitarity_residual(u.matrix());
    if (!(r <= tol)) throw NotUnitaryError("harris_decompose: ||U*U - I||_F = " + std::to_string(r));
    Eigen::ComplexSchur<Matrix> schur(u.matrix());
    if (schur.info() != Eigen::Success) throw NumericalError("harris_decompose: Schur iteration did not converge");
    const Matrix& tri = schur.matrixT();
    const Matrix& vecs = schur.matrixU();
    const int n = u.n();

    // Phases shifted into (-tol, 1 - tol] so that values near 1 join the 0 cluster.
    std::vector<std::pair<double, int>> phases;
    for (int i = 0; i < n; ++i) {
        double p = std::arg(tri(i, i)) / kTwoPi;
        if (p < 0) p += 1.0;
        if (p > 1.0 - tol) p -= 1.0;
        phases.emplace_back(p, i);
    }
    std::sort(phases.begin(), phases.end());

    HarrisConfiguration c;
    c.n = n;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= phases.size(); ++i) {
        if (i < phases.size() && phases[i].first - phases[i - 1].first <= tol) continue;
        double mean = 0.0;
        for (std::size_t j = start; j < i; ++j) mean += phases[j].first;
        mean /= static_cast<double>(i - start);
        if (std::fabs(mean) > tol) {
            Matrix basis(n, static_cast<Eigen::Index>(i - start));
            for (std::size_t j = start; j < i; ++j)
                basis.col(static_cast<Eigen::Index>(j - start)) = vecs.col(phases[j].second);
            c.blocks.push_back({std::move(basis), mean});
        }
        start = i;
    }
    return c;
}

UnitaryMatrix harris_reconstruct(const HarrisConfiguration& c, double tol) {
    c.validate(tol);
    Matrix a = Matrix::Identity(c.n, c.n);
    for (const auto& b : c.blocks) {
        const Complex shift = std::polar(1.0, kTwoPi * b.phase) - 1.0;
        a += shift * (b.basis * b.basis.adjoint());
    }
    return UnitaryMatrix(std::move(a));
}

PlaneArrangement face_map(const PlaneArrangement& a, int i) {
    const int p = static_cast<int>(a.planes.size());
    if (p == 0) throw DomainError("face map on an empty arrangement");
    check_face_index(i, p);
    PlaneArrangement out{a.n, {}};
    if (i == 0) {
        out.planes.assign(a.planes.begin() + 1, a.planes.end());
    } else if (i == p) {
        out.planes.assign(a.planes.begin(), a.planes.end() - 1);
    } else {
        for (int j = 0; j < p; ++j) {
            if (j == i - 1) {
                out.planes.push_back(concat_columns({a.planes[j], a.planes[j + 1]}, a.n));
                ++j;
            } else {
                out.planes.push_back(a.planes[j]);
            }
        }
    }
    return out;
}

PlaneArrangement degeneracy_map(const PlaneArrangement& a, int i) {
    const int p = static_cast<int>(a.planes.size());
    check_face_index(i, p);
    PlaneArrangement out = a;
    out.planes.insert(out.planes.begin() + i, Matrix(a.n, 0));
    return out;
}

HarrisConfiguration face_map(const HarrisConfiguration& c, int i) {
    const PlaneArrangement faced = face_map(arrangement_of(c), i);
    std::vector<double> phases;
    for (const auto& b : c.blocks) phases.push_back(b.phase);
    phases.erase(phases.begin() + std::max(i, 1) - 1);
    HarrisConfiguration out{c.n, {}};
    for (std::size_t j = 0; j < phases.size(); ++j) out.blocks.push_back({faced.planes[j], phases[j]});
    return out;
}

HarrisConfiguration degeneracy_map(const HarrisConfiguration& c, int i) {
    check_face_index(i, c.p());
    const double phase = i == 0 ? 0.0 : c.blocks[static_cast<std::size_t>(i - 1)].phase;
    HarrisConfiguration out = c;
    out.blocks.insert(out.blocks.begin() + i, HarrisBlock{Matrix(c.n, 0), phase});
    return out;
}

PlaneArrangement arrangement_of(const HarrisConfiguration& c) {
    PlaneArrangement a{c.n, {}};
    for (const auto& b : c.blocks) a.planes.push_back(b.basis);
    return a;
}

std::vector<double> principal_angles(const Matrix& v, const Matrix& w) {
    if (v.rows() != w.rows())
        throw DimensionError("principal_angles: ambient dimensions " + std::to_string(v.rows()) + " and " +
                             std::to_string(w.rows()));
    if (v.cols() == 0 || w.cols() == 0) return {};
    const Matrix cross = v.adjoint() * w;
    Eigen::JacobiSVD<Matrix> svd(cross);
    std::vector<double> out;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        out.push_back(std::clamp(svd.singularValues()(i), 0.0, 1.0));
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

double subspace_distance(const Matrix& v, const Matrix& w) {
    if (v.cols() != w.cols()) throw DimensionError("subspace_distance: dimensions differ");
    if (v.rows() != w.rows()) throw DimensionError("subspace_distance: ambient dimensions differ");
    if (v.cols() == 0) return 0.0;
    // sin of the largest angle is the spectral norm of the part of W outside span V;
    // this stays accurate for nearly equal subspaces where acos(cos) does not.
    const Matrix outside = w - v * (v.adjoint() * w);
    Eigen::JacobiSVD<Matrix> svd(outside);
    return std::asin(std::clamp(svd.singularValues()(0), 0.0, 1.0));
}

std::vector<std::vector<double>> principal_angle_signature(const MultiArrangement& m) {
    std::vector<const Matrix*> flat;
    for (const auto& member : m.members)
        for (const auto& p : member.planes) flat.push_back(&p);
    std::vector<std::vector<double>> out;
    for (std::size_t a = 0; a < flat.size(); ++a)
        for (std::size_t b = a + 1; b < flat.size(); ++b) out.push_back(principal_angles(*flat[a], *flat[b]));
    return out;
}

Matrix rotation_block(int k, int n, int i, double theta) {
    if (i < 1 || i > k) throw DomainError("rotation index outside 1..k");
    Matrix a = Matrix::Identity(static_cast<Eigen::Index>(k) * n, static_cast<Eigen::Index>(k) * n);
    if (i == 1) return a;
    const Eigen::Index off = static_cast<Eigen::Index>(i - 1) * n;
    const double c = std::cos(theta), s = std::sin(theta);
    for (Eigen::Index j = 0; j < n; ++j) {
        a(j, j) = c;
        a(j, off + j) = s;
        a(off + j, j) = -s;
        a(off + j, off + j) = c;
    }
    return a;
}

MultiArrangement stabilize_arrangement(const MultiArrangement& m, int copies) {
    if (copies < 1) throw DomainError("stabilization needs at least one copy");
    const int big = m.n * copies;
    MultiArrangement out{big, {}};
    for (const auto& member : m.members) {
        PlaneArrangement pa{big, {}};
        for (const auto& p : member.planes) {
            Matrix e = Matrix::Zero(big, p.cols());
            e.topRows(m.n) = p;
            pa.planes.push_back(std::move(e));
        }
        out.members.push_back(std::move(pa));
    }
    return out;
}

MultiArrangement null_homotopy(const MultiArrangement& m, double theta) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi / 2))
        throw DomainError("homotopy parameter " + std::to_string(theta) + " outside [0, pi/2]");
    m.validate();
    MultiArrangement out = stabilize_arrangement(m, m.k());
    for (int i = 1; i <= m.k(); ++i) {
        PlaneArrangement& member = out.members[static_cast<std::size_t>(i - 1)];
        if (member.planes.empty()) continue;
        const Matrix rot = rotation_block(m.k(), m.n, i, theta);
        Matrix joint = orthonormalize(rot * concat_columns(member.planes, out.n));
        Eigen::Index at = 0;
        for (auto& p : member.planes) {
            p = joint.middleCols(at, p.cols());
            at += p.cols();
        }
    }
    return out;
}

UnitaryMatrix endpoint_matching(const MultiArrangement& a, const MultiArrangement& b) {
    if (a.n != b.n || a.k() != b.k()) throw ShapeError("endpoint_matching: ambient dimension or k differ");
    const int n = a.n, k = a.k();
    Matrix g = Matrix::Zero(static_cast<Eigen::Index>(k) * n, static_cast<Eigen::Index>(k) * n);
    for (int i = 0; i < k; ++i) {
        const auto& ma = a.members[static_cast<std::size_t>(i)];
        const auto& mb = b.members[static_cast<std::size_t>(i)];
        if (ma.dims() != mb.dims()) throw ShapeError("endpoint_matching: dimension types differ");
        const Matrix ba = complete_basis(concat_columns(ma.planes, n), n);
        const Matrix bb = complete_basis(concat_columns(mb.planes, n), n);
        g.block(static_cast<Eigen::Index>(i) * n, static_cast<Eigen::Index>(i) * n, n, n) = bb * ba.adjoint();
    }
    return UnitaryMatrix(std::move(g));
}

MultiArrangement transform(const UnitaryMatrix& g, const MultiArrangement& m) {
    if (g.n() != m.n) throw DimensionError("transform: dimension mismatch");
    MultiArrangement out = m;
    for (auto& member : out.members)
        for (auto& p : member.planes) p = g.matrix() * p;
    return out;
}

double arrangement_distance(const MultiArrangement& a, const MultiArrangement& b) {
    if (a.n != b.n || a.k() != b.k()) throw ShapeError("arrangement_distance: shapes differ");
    double worst = 0.0;
    for (int i = 0; i < a.k(); ++i) {
        const auto& pa = a.members[static_cast<std::size_t>(i)].planes;
        const auto& pb = b.members[static_cast<std::size_t>(i)].planes;
        if (pa.size() != pb.size()) throw ShapeError("arrangement_distance: plane counts differ");
        for (std::size_t j = 0; j < pa.size(); ++j) worst = std::max(worst, subspace_distance(pa[j], pb[j]));
    }
    return worst;
}

}  // namespace simsim
