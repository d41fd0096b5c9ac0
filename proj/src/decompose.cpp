#include "simsim/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "simsim/orbits.hpp"

namespace simsim {

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// Stacked operator X -> X a_i - b_i X acting on column-major vec(X), X of
// shape (b.n x a.n).
Matrix stacked_sylvester(const UnitaryTuple& a, const UnitaryTuple& b) {
    const Eigen::Index da = a.n(), db = b.n();
    const Eigen::Index block = da * db;
    Matrix op(block * a.k(), block);
    const Matrix ia = Matrix::Identity(da, da), ib = Matrix::Identity(db, db);
    for (int i = 0; i < a.k(); ++i)
        op.middleRows(i * block, block) =
            kron(a[i].matrix().transpose(), ib) - kron(ia, b[i].matrix());
    return op;
}

struct NullSpace {
    Matrix vectors;  // columns span the numerical null space
    double sigma_max = 0.0;
    double threshold = 0.0;
};

template <class Svd>
NullSpace null_space_from(const Svd& svd, Eigen::Index cols, double tol) {
    const auto& sv = svd.singularValues();
    NullSpace ns;
    ns.sigma_max = sv.size() > 0 ? sv(0) : 0.0;
    // The operator of a tuple of unitaries has norm O(1) unless it is nearly
    // zero; flooring the scale at 1 keeps round-off from counting as rank then.
    ns.threshold = tol * std::max(ns.sigma_max, 1.0);
    // Singular values are sorted descending; pad with zeros when op is wide.
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) >= ns.threshold && sv(i) > 0.0) ++rank;
    ns.vectors = svd.matrixV().rightCols(cols - rank);
    return ns;
}

// True when some singular value sits just above the cut-off.
template <class Svd>
bool suspicious(const Svd& svd, double tol) {
    const auto& sv = svd.singularValues();
    const double scale = std::max(sv.size() > 0 ? sv(0) : 0.0, 1.0);
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) >= tol * scale && sv(i) < 1e-4 * scale) return true;
    return false;
}

NullSpace null_space(const Matrix& op, double tol) {
    Eigen::BDCSVD<Matrix> fast(op, Eigen::ComputeFullV);
    if (fast.info() == Eigen::Success && !suspicious(fast, tol)) return null_space_from(fast, op.cols(), tol);
    // BDCSVD can leave spurious singular values near 1e-6 where the true ones
    // are round-off. One-sided Jacobi after QR is slower but does not.
    Eigen::JacobiSVD<Matrix, Eigen::ColPivHouseholderQRPreconditioner> svd(op, Eigen::ComputeFullV);
    if (svd.info() != Eigen::Success) throw NumericalError("commutant: SVD failed");
    return null_space_from(svd, op.cols(), tol);
}

Matrix unvec(const Eigen::VectorXcd& v, Eigen::Index rows, Eigen::Index cols) {
    return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

UnitaryTuple restrict_to(const UnitaryTuple& t, const Matrix& q) {
    std::vector<UnitaryMatrix> mats;
    mats.reserve(static_cast<std::size_t>(t.k()));
    for (const auto& a : t.matrices()) mats.emplace_back(nearest_unitary(q.adjoint() * a.matrix() * q));
    return UnitaryTuple(std::move(mats));
}

struct Leaf {
    UnitaryTuple tuple;
    Matrix basis;  // n x d, orthonormal columns in the original coordinates
};

// Ordering key used for canonical summand order.
bool signature_less(const WordTraceSignature& a, const WordTraceSignature& b, double tol) {
    const std::size_t m = std::min(a.entries.size(), b.entries.size());
    for (std::size_t i = 0; i < m; ++i) {
        const Complex x = a.entries[i].second, y = b.entries[i].second;
        if (std::fabs(x.real() - y.real()) > tol) return x.real() < y.real();
        if (std::fabs(x.imag() - y.imag()) > tol) return x.imag() < y.imag();
    }
    return a.entries.size() < b.entries.size();
}

class Splitter {
public:
    Splitter(const UnitaryTuple& t, double tol, std::uint64_t seed) : t_(t), tol_(tol), rng_(seed) {}

    void split(const Matrix& q, std::vector<Leaf>& leaves) {
        UnitaryTuple sub = restrict_to(t_, q);
        const CommutantBasis comm = commutant_basis(sub, tol_);
        if (comm.dim <= 1) {
            leaves.push_back({std::move(sub), q});
            return;
        }
        std::vector<Matrix> pieces;
        std::string last_issue;
        for (int attempt = 0; attempt < 2 && pieces.empty(); ++attempt)
            pieces = try_split(comm, last_issue);
        if (pieces.empty())
            throw InconclusiveError("decompose: eigenvalue clustering ambiguous at tol " + std::to_string(tol_) +
                                    " (" + last_issue + ")");
        for (const Matrix& e : pieces) split(q * e, leaves);
    }

private:
    // Eigenspaces of a random self-adjoint commutant element, or empty on ambiguity.
    std::vector<Matrix> try_split(const CommutantBasis& comm, std::string& issue) {
        std::normal_distribution<double> normal(0.0, 1.0);
        const int d = comm.n;
        Matrix h = Matrix::Zero(d, d);
        const Complex i_unit(0.0, 1.0);
        for (const Matrix& x : comm.basis) {
            const double a = normal(rng_);
            const double b = normal(rng_);
            h += a * (x + x.adjoint()) + b * i_unit * (x - x.adjoint());
        }
        h = 0.5 * (h + h.adjoint()).eval();
        Eigen::SelfAdjointEigenSolver<Matrix> eig(h);
        if (eig.info() != Eigen::Success) throw NumericalError("decompose: eigensolver failed");
        const auto& vals = eig.eigenvalues();
        const double scale = std::max(vals.cwiseAbs().maxCoeff(), 1e-300);
        const double merge_below = tol_ * scale;
        const double split_above = 1e3 * tol_ * scale;

        std::vector<Matrix> pieces;
        Eigen::Index start = 0;
        for (Eigen::Index i = 1; i <= vals.size(); ++i) {
            bool cut = (i == vals.size());
            if (!cut) {
                const double gap = vals(i) - vals(i - 1);
                if (gap > merge_below && gap < split_above) {
                    issue = "eigenvalue gap " + std::to_string(gap) + " relative to scale " + std::to_string(scale);
                    return {};
                }
                cut = gap >= split_above;
            }
            if (cut) {
                pieces.push_back(eig.eigenvectors().middleCols(start, i - start));
                start = i;
            }
        }
        if (pieces.size() < 2) {
            issue = "splitting element is scalar";
            return {};
        }
        return pieces;
    }

    const UnitaryTuple& t_;
    double tol_;
    std::mt19937_64 rng_;
};

}  // namespace

CommutantBasis commutant_basis(const UnitaryTuple& t, double tol) {
    const NullSpace ns = null_space(stacked_sylvester(t, t), tol);
    CommutantBasis out;
    out.n = t.n();
    out.dim = static_cast<int>(ns.vectors.cols());
    out.sigma_max = ns.sigma_max;
    out.threshold = ns.threshold;
    out.basis.reserve(static_cast<std::size_t>(out.dim));
    for (Eigen::Index j = 0; j < ns.vectors.cols(); ++j)
        out.basis.push_back(unvec(ns.vectors.col(j), t.n(), t.n()));
    return out;
}

bool is_irreducible(const UnitaryTuple& t, double tol) { return commutant_basis(t, tol).dim == 1; }

std::optional<UnitaryMatrix> irreducible_intertwiner(const UnitaryTuple& a, const UnitaryTuple& b, double tol) {
    if (a.n() != b.n() || a.k() != b.k()) return std::nullopt;
    const NullSpace ns = null_space(stacked_sylvester(a, b), tol);
    if (ns.vectors.cols() == 0) return std::nullopt;
    Matrix x = unvec(ns.vectors.col(0), b.n(), a.n());
    // For irreducibles X^* X is a positive scalar; the polar factor is the unitary intertwiner.
    Matrix u = nearest_unitary(x);
    for (int i = 0; i < a.k(); ++i) {
        const double r = (u * a[i].matrix() * u.adjoint() - b[i].matrix()).norm();
        if (!(r <= 10.0 * std::max(tol, 1e-12) * std::sqrt(static_cast<double>(a.n())) + 1e-12))
            return std::nullopt;
    }
    return UnitaryMatrix(std::move(u));
}

int Decomposition::total_blocks() const {
    int total = 0;
    for (const auto& s : summands) total += s.multiplicity;
    return total;
}

UnitaryTuple Decomposition::assembly() const {
    const int k = summands.front().tuple.k();
    std::vector<UnitaryMatrix> out;
    for (int i = 0; i < k; ++i) {
        Matrix acc(0, 0);
        for (const auto& s : summands)
            for (int c = 0; c < s.multiplicity; ++c) acc = block_diagonal(acc, s.tuple[i].matrix());
        out.emplace_back(std::move(acc));
    }
    return UnitaryTuple(std::move(out));
}

Decomposition decompose_irreducibles(const UnitaryTuple& t, double tol, std::uint64_t seed) {
    const CommutantBasis top = commutant_basis(t, tol);
    if (top.dim <= 1) {
        return Decomposition{{Summand{t, 1}}, UnitaryMatrix::identity(t.n()), top.dim, top.threshold};
    }

    std::vector<Leaf> leaves;
    Splitter splitter(t, tol, seed);
    splitter.split(Matrix::Identity(t.n(), t.n()), leaves);

    // Group similar leaves; each copy is rotated onto its class representative
    // so the assembly repeats one matrix tuple per class.
    struct Class {
        UnitaryTuple rep;
        std::vector<Matrix> copies;
        WordTraceSignature sig;
    };
    std::vector<Class> classes;
    for (auto& leaf : leaves) {
        bool placed = false;
        for (auto& cls : classes) {
            if (cls.rep.n() != leaf.tuple.n()) continue;
            if (auto x = irreducible_intertwiner(leaf.tuple, cls.rep, tol)) {
                cls.copies.push_back(leaf.basis * x->matrix().adjoint());
                placed = true;
                break;
            }
        }
        if (!placed) {
            WordTraceSignature sig = signature(leaf.tuple, 2);
            classes.push_back(Class{leaf.tuple, {leaf.basis}, std::move(sig)});
        }
    }
    std::stable_sort(classes.begin(), classes.end(), [tol](const Class& a, const Class& b) {
        if (a.rep.n() != b.rep.n()) return a.rep.n() < b.rep.n();
        return signature_less(a.sig, b.sig, tol);
    });

    Matrix q(t.n(), t.n());
    Eigen::Index col = 0;
    std::vector<Summand> summands;
    for (const auto& cls : classes) {
        for (const Matrix& c : cls.copies) {
            q.middleCols(col, c.cols()) = c;
            col += c.cols();
        }
        summands.push_back(Summand{cls.rep, static_cast<int>(cls.copies.size())});
    }
    return Decomposition{std::move(summands), UnitaryMatrix(nearest_unitary(q.adjoint())), top.dim, top.threshold};
}

}  // namespace simsim
