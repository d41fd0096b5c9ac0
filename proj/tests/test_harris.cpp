#include "doctest.h"

#include <numbers>

#include "simsim/harris.hpp"
#include "support.hpp"

using namespace simsim;
using namespace simsim::testing;

namespace {

PlaneArrangement random_arrangement(int n, const std::vector<int>& dims, std::uint64_t seed) {
    int total = 0;
    for (int d : dims) total += d;
    const Matrix q = random_isometry(n, total, seed);
    PlaneArrangement a{n, {}};
    int at = 0;
    for (int d : dims) {
        a.planes.push_back(q.middleCols(at, d));
        at += d;
    }
    return a;
}

MultiArrangement random_multi(int n, const std::vector<std::vector<int>>& type, std::uint64_t seed) {
    MultiArrangement m{n, {}};
    for (std::size_t i = 0; i < type.size(); ++i) m.members.push_back(random_arrangement(n, type[i], seed * 31 + i));
    return m;
}

HarrisConfiguration random_configuration(int n, const std::vector<int>& dims, std::uint64_t seed) {
    const auto a = random_arrangement(n, dims, seed);
    HarrisConfiguration c{n, {}};
    for (std::size_t i = 0; i < dims.size(); ++i)
        c.blocks.push_back({a.planes[i], static_cast<double>(i + 1) / static_cast<double>(dims.size() + 1)});
    return c;
}

// Coordinate subspaces: entries are 0 and 1, so every operation below is exact.
PlaneArrangement coordinate_arrangement(int n, const std::vector<int>& dims) {
    PlaneArrangement a{n, {}};
    int at = 0;
    for (int d : dims) {
        a.planes.push_back(Matrix::Identity(n, n).middleCols(at, d));
        at += d;
    }
    return a;
}

bool same(const PlaneArrangement& a, const PlaneArrangement& b) {
    if (a.n != b.n || a.planes.size() != b.planes.size()) return false;
    for (std::size_t i = 0; i < a.planes.size(); ++i)
        if (a.planes[i].cols() != b.planes[i].cols() || a.planes[i] != b.planes[i]) return false;
    return true;
}

bool same(const HarrisConfiguration& a, const HarrisConfiguration& b) {
    if (!same(arrangement_of(a), arrangement_of(b))) return false;
    for (std::size_t i = 0; i < a.blocks.size(); ++i)
        if (a.blocks[i].phase != b.blocks[i].phase) return false;
    return true;
}

}  // namespace

TEST_CASE("harris_decompose examples") {
    CHECK(harris_decompose(UnitaryMatrix::identity(4)).blocks.empty());

    const auto c = harris_decompose(UnitaryMatrix(phase_diag({1.0 / 3.0, 0.0})));
    REQUIRE(c.p() == 1);
    CHECK(c.blocks[0].phase == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    REQUIRE(c.blocks[0].basis.cols() == 1);
    CHECK(std::abs(c.blocks[0].basis(0, 0)) == doctest::Approx(1.0));
    CHECK(c.is_canonical());

    // Repeated eigenvalues merge into one block.
    const auto w = random_unitary(4, 1);
    const auto r = harris_decompose(UnitaryMatrix(w.matrix() * phase_diag({0.25, 0.25, 0.5, 0.0}) * w.matrix().adjoint()));
    REQUIRE(r.p() == 2);
    CHECK(r.blocks[0].basis.cols() == 2);
    CHECK(r.blocks[1].basis.cols() == 1);
}

TEST_CASE("harris_reconstruct examples") {
    CHECK(harris_reconstruct(HarrisConfiguration{4, {}}).matrix() == Matrix::Identity(4, 4));
    HarrisConfiguration c{2, {{Matrix::Identity(2, 2).leftCols(1), 0.5}}};
    Matrix expect(2, 2);
    expect << -1, 0, 0, 1;
    CHECK((harris_reconstruct(c).matrix() - expect).norm() <= 1e-15);
}

TEST_CASE("round trip on random unitaries") {
    for (int n = 1; n <= 12; ++n) {
        const auto u = random_unitary(n, 100 + static_cast<std::uint64_t>(n));
        const auto c = harris_decompose(u);
        c.validate(1e-9);
        CHECK(c.is_canonical());
        CHECK((harris_reconstruct(c).matrix() - u.matrix()).norm() <= 1e-8);
    }
}

TEST_CASE("harris_decompose is equivariant") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto u = random_unitary(5, 200 + seed);
        const auto w = random_unitary(5, 300 + seed);
        const auto a = harris_decompose(u);
        const auto b = harris_decompose(UnitaryMatrix(w.matrix() * u.matrix() * w.matrix().adjoint()));
        REQUIRE(a.p() == b.p());
        for (int i = 0; i < a.p(); ++i) {
            const auto& ba = a.blocks[static_cast<std::size_t>(i)];
            const auto& bb = b.blocks[static_cast<std::size_t>(i)];
            CHECK(ba.phase == doctest::Approx(bb.phase).epsilon(1e-9));
            for (double cosine : principal_angles(w.matrix() * ba.basis, bb.basis))
                CHECK(cosine == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("face maps") {
    const auto a = coordinate_arrangement(5, {1, 2, 1});
    const auto merged = face_map(a, 1);
    REQUIRE(merged.planes.size() == 2);
    CHECK(merged.planes[0].cols() == 3);
    CHECK(face_map(a, 0).planes.size() == 2);
    CHECK(face_map(a, 3).planes.back().cols() == 2);
    CHECK_THROWS_AS(face_map(a, 4), DomainError);
    CHECK_THROWS_AS(face_map(PlaneArrangement{3, {}}, 0), DomainError);

    // Merged blocks carry the later phase, so the canonical ordering survives.
    const auto c = random_configuration(6, {1, 2, 1}, 3);
    const auto f = face_map(c, 2);
    REQUIRE(f.p() == 2);
    CHECK(f.blocks[1].phase == c.blocks[2].phase);
    CHECK(f.is_canonical());
}

TEST_CASE("simplicial identities on exact configurations") {
    const std::vector<std::vector<int>> types = {{1}, {1, 1}, {2, 1, 1}, {1, 1, 1, 1}, {1, 0, 2, 1}};
    for (const auto& dims : types) {
        const auto a = coordinate_arrangement(6, dims);
        const int p = static_cast<int>(dims.size());
        // Composites of two faces need p >= 2.
        if (p >= 2)
            for (int j = 1; j <= p; ++j)
                for (int i = 0; i < j; ++i) CHECK(same(face_map(face_map(a, j), i), face_map(face_map(a, i), j - 1)));
        for (int j = 0; j <= p; ++j)
            for (int i = 0; i <= j; ++i)
                CHECK(same(degeneracy_map(degeneracy_map(a, j), i), degeneracy_map(degeneracy_map(a, i), j + 1)));
        for (int j = 0; j <= p; ++j) {
            const auto s = degeneracy_map(a, j);
            CHECK(same(face_map(s, j), a));
            CHECK(same(face_map(s, j + 1), a));
            for (int i = 0; i < j; ++i) CHECK(same(face_map(s, i), degeneracy_map(face_map(a, i), j - 1)));
            for (int i = j + 2; i <= p + 1; ++i) CHECK(same(face_map(s, i), degeneracy_map(face_map(a, i - 1), j)));
        }
    }
}

TEST_CASE("face identities on random configurations keep phases") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto c = random_configuration(8, {1, 2, 1, 3}, seed);
        for (int j = 1; j <= c.p(); ++j)
            for (int i = 0; i < j; ++i) CHECK(same(face_map(face_map(c, j), i), face_map(face_map(c, i), j - 1)));
        for (int j = 0; j <= c.p(); ++j) {
            const auto s = degeneracy_map(c, j);
            s.validate();
            CHECK(same(face_map(s, j), c));
            CHECK(same(face_map(s, j + 1), c));
        }
    }
}

TEST_CASE("principal angles") {
    const Matrix v = random_isometry(5, 2, 1);
    for (double x : principal_angles(v, v)) CHECK(x == doctest::Approx(1.0).epsilon(1e-12));
    const Matrix e = Matrix::Identity(4, 4);
    for (double x : principal_angles(e.leftCols(2), e.rightCols(2))) CHECK(x == 0.0);
    const Matrix w = random_isometry(5, 3, 2);
    const auto g = random_unitary(5, 3);
    const auto before = principal_angles(v, w);
    const auto after = principal_angles(g.matrix() * v, g.matrix() * w);
    REQUIRE(before.size() == after.size());
    for (std::size_t i = 0; i < before.size(); ++i) CHECK(before[i] == doctest::Approx(after[i]).epsilon(1e-9));
    CHECK_THROWS_AS(principal_angles(v, random_isometry(4, 2, 1)), DimensionError);
    CHECK(subspace_distance(v, v) <= 1e-15);
}

TEST_CASE("null homotopy endpoints") {
    const auto m = random_multi(3, {{1, 1}, {2}}, 7);
    const auto zero = null_homotopy(m, 0.0);
    const auto stab = stabilize_arrangement(m, 2);
    REQUIRE(zero.n == 6);
    for (std::size_t i = 0; i < zero.members.size(); ++i)
        for (std::size_t j = 0; j < zero.members[i].planes.size(); ++j) {
            const Matrix& z = zero.members[i].planes[j];
            CHECK((z - stab.members[i].planes[j]).cwiseAbs().maxCoeff() <= 1e-12);
            CHECK(z.bottomRows(3).norm() == 0.0);
        }

    const auto mid = null_homotopy(m, 0.7);
    mid.validate(1e-9);

    // At the far end member i lives entirely in copy i.
    const auto end = null_homotopy(m, std::numbers::pi / 2);
    CHECK(end.members[0].planes[0].bottomRows(3).norm() <= 1e-12);
    CHECK(end.members[1].planes[0].topRows(3).norm() <= 1e-12);

    CHECK_THROWS_AS(null_homotopy(m, -0.1), DomainError);
    CHECK_THROWS_AS(null_homotopy(m, 1.6), DomainError);
}

TEST_CASE("null homotopy endpoint is determined by the dimension type") {
    const std::vector<std::vector<int>> type = {{1, 2}, {1}, {2, 1}};
    const auto a = random_multi(4, type, 11);
    const auto b = random_multi(4, type, 12);
    const auto ea = null_homotopy(a, std::numbers::pi / 2);
    const auto eb = null_homotopy(b, std::numbers::pi / 2);
    const auto sa = principal_angle_signature(ea), sb = principal_angle_signature(eb);
    REQUIRE(sa.size() == sb.size());
    for (std::size_t i = 0; i < sa.size(); ++i)
        for (std::size_t j = 0; j < sa[i].size(); ++j) CHECK(std::fabs(sa[i][j] - sb[i][j]) <= 1e-9);
    const auto g = endpoint_matching(a, b);
    CHECK(arrangement_distance(transform(g, ea), eb) <= 1e-9);
    CHECK_THROWS_AS(endpoint_matching(a, random_multi(4, {{1, 1}, {1}, {2, 1}}, 1)), ShapeError);
}

TEST_CASE("null homotopy is Lipschitz in theta") {
    const auto m = random_multi(4, {{1, 2}, {2}, {1}}, 21);
    constexpr int kSteps = 200;
    const double delta = (std::numbers::pi / 2) / kSteps;
    double worst = 0.0;
    auto prev = null_homotopy(m, 0.0);
    for (int s = 1; s <= kSteps; ++s) {
        const auto cur = null_homotopy(m, std::min(s * delta, std::numbers::pi / 2));
        worst = std::max(worst, arrangement_distance(prev, cur) / delta);
        prev = cur;
    }
    MESSAGE("empirical Lipschitz constant " << worst);
    CHECK(worst <= 2.0);
}
