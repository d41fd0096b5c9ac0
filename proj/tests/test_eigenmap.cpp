#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "simsim/eigenmap.hpp"
#include "support.hpp"

using namespace simsim;
using namespace simsim::testing;

namespace {

// Minimum over all n! bijections of the summed circular distance.
double brute_force_distance(const PhaseMultiset& a, const PhaseMultiset& b) {
    std::vector<int> perm(static_cast<std::size_t>(a.n()));
    std::iota(perm.begin(), perm.end(), 0);
    double best = 1e300;
    do {
        double s = 0.0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            s += circular_distance(a.phases()[i], b.phases()[static_cast<std::size_t>(perm[i])]);
        best = std::min(best, s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

PhaseMultiset random_phases(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> p(static_cast<std::size_t>(n));
    for (auto& x : p) x = u(rng);
    return PhaseMultiset(p);
}

}  // namespace

TEST_CASE("PhaseMultiset normalizes") {
    const PhaseMultiset p({0.7, 1.0, -0.25, 0.3});
    CHECK(p.phases() == std::vector<double>{0.0, 0.3, 0.7, 0.75});
    const PhaseMultiset w({1.0 - 1e-12, 0.5}, 1e-9);
    CHECK(w.phases() == std::vector<double>{0.0, 0.5});
    CHECK_THROWS_AS(PhaseMultiset({std::nan("")}), DomainError);
}

TEST_CASE("eigenphases of simple unitaries") {
    const auto id = eigenphases(UnitaryMatrix::identity(4));
    CHECK(id.phases() == std::vector<double>(4, 0.0));

    const auto x = eigenphases(UnitaryMatrix(pauli_x()));
    REQUIRE(x.n() == 2);
    CHECK(x.phases()[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(x.phases()[1] == doctest::Approx(0.5).epsilon(1e-12));

    const auto d = eigenphases(UnitaryMatrix(phase_diag({0.3, 0.7})));
    CHECK(d.phases()[0] == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(d.phases()[1] == doctest::Approx(0.7).epsilon(1e-12));

    for (const double t : d.phases()) {
        CHECK(t >= 0.0);
        CHECK(t < 1.0);
    }
}

TEST_CASE("eigenvalue_map") {
    const auto id = eigenvalue_map(UnitaryTuple::identity(3, 2));
    REQUIRE(id.size() == 2);
    for (const auto& p : id) CHECK(p.phases() == std::vector<double>(3, 0.0));

    // n = 1: the map is the coordinate-wise argument.
    const auto scalars = tuple_of({phase_diag({0.125}), phase_diag({0.5}), phase_diag({0.875})});
    const auto e = eigenvalue_map(scalars);
    CHECK(e[0].phases()[0] == doctest::Approx(0.125));
    CHECK(e[1].phases()[0] == doctest::Approx(0.5));
    CHECK(e[2].phases()[0] == doctest::Approx(0.875));

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto t = random_tuple(5, 3, seed);
        const auto w = random_unitary(5, 1000 + seed);
        const auto a = eigenvalue_map(t);
        const auto b = eigenvalue_map(conjugate(t, w));
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(sym_distance(a[i], b[i]) <= 1e-9);

        const auto s = eigenvalue_map(stabilize(t, 1));
        for (std::size_t i = 0; i < a.size(); ++i)
            CHECK(sym_distance(s[i], a[i] + PhaseMultiset({0.0})) <= 1e-9);
    }
}

TEST_CASE("sym_distance examples") {
    const PhaseMultiset a({0.1, 0.4, 0.9});
    CHECK(sym_distance(a, a) == 0.0);
    CHECK(sym_distance(PhaseMultiset({0.95}), PhaseMultiset({0.05})) == doctest::Approx(0.10).epsilon(1e-12));
    CHECK_THROWS_AS(sym_distance(PhaseMultiset({0.1}), PhaseMultiset({0.1, 0.2})), ShapeError);
}

TEST_CASE("sym_distance matches the brute-force oracle") {
    std::mt19937_64 rng(4242);
    for (int n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 40; ++trial) {
            const auto a = random_phases(n, rng);
            const auto b = random_phases(n, rng);
            CHECK(sym_distance(a, b) == doctest::Approx(brute_force_distance(a, b)).epsilon(1e-12));
        }
    }
}

TEST_CASE("sym_distance is a metric") {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 40; ++trial) {
            const auto a = random_phases(n, rng);
            const auto b = random_phases(n, rng);
            const auto c = random_phases(n, rng);
            const double ab = sym_distance(a, b);
            CHECK(ab >= 0.0);
            CHECK(ab == doctest::Approx(sym_distance(b, a)).epsilon(1e-14));
            CHECK(ab <= sym_distance(a, c) + sym_distance(c, b) + 1e-12);
            CHECK(sym_distance(a, a) == 0.0);
            if (ab == 0.0) CHECK(a.phases() == b.phases());
        }
    }
}
