#include "doctest.h"

#include "simsim/error.hpp"
#include "simsim/homology.hpp"
#include "simsim/rep_ring.hpp"

using namespace simsim;

namespace {

std::uint64_t choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t c = 1;
    for (int i = 0; i < k; ++i) c = c * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
    return c;
}

}  // namespace

TEST_CASE("rep_ring_abelian small cases") {
    const auto z = rep_ring_abelian(1, {}, 10);
    CHECK(z.at(0) == free_entry(1));
    CHECK(z.at(1) == free_entry(1));
    CHECK(z.at(2).is_zero());

    const auto z2 = rep_ring_abelian(0, {2}, 10);
    CHECK(z2.at(0) == free_entry(2));
    CHECK(z2.degrees.size() == 1);

    const auto t2 = rep_ring_abelian(2, {}, 10);
    CHECK(t2.at(0).rank == Rank(1));
    CHECK(t2.at(1).rank == Rank(2));
    CHECK(t2.at(2).rank == Rank(1));

    CHECK_THROWS_AS(rep_ring_abelian(-1, {}, 3), DomainError);
    CHECK_THROWS_AS(rep_ring_abelian(1, {0}, 3), DomainError);
}

TEST_CASE("fixtures") {
    const auto h = rep_ring_fixture("heisenberg");
    CHECK(h.degrees.size() == 3);
    for (int d = 0; d <= 2; ++d) CHECK(h.at(d).rank.is_countable());
    CHECK(h.at(0).annotation() == "per root of unity: rank 1");
    CHECK(h.at(1).annotation() == "per root of unity: rank 2");
    CHECK(h.at(2).annotation() == "per root of unity: rank 1");

    const auto zz = rep_ring_fixture("z_semidirect_z2");
    CHECK(zz.at(0) == free_entry(3));
    CHECK(zz.degrees.size() == 1);

    const auto z4 = rep_ring_fixture("z2_semidirect_z4");
    CHECK(z4.at(0) == free_entry(8));
    CHECK(z4.at(1).is_zero());
    CHECK(z4.at(2) == free_entry(1));

    const auto f3 = rep_ring_fixture("free(3)");
    CHECK(f3.at(0) == free_entry(1));
    CHECK(f3.at(1) == free_entry(3));

    CHECK(rep_ring_fixture("heisenberg", 1).degrees.size() == 2);
    CHECK_THROWS_AS(rep_ring_fixture("sl2z"), DomainError);
}

TEST_CASE("the Z^2 x| Z/4 fixture complex is a valid filtration complex") {
    const auto c = z2_semidirect_z4_complex();
    REQUIRE_NOTHROW(c.validate());
    CHECK(c.dims == std::vector<std::size_t>{10, 2, 1});
    // d_1 injects onto a direct summand: invariant factors all 1.
    CHECK(invariant_factors(c.boundaries[0]) == std::vector<Integer>{1, 1});
}

TEST_CASE("assembly tables") {
    const auto h = ahss_assemble(rep_ring_fixture("heisenberg"), 10);
    CHECK(h.at(0).annotation() == "per root of unity: rank 1");
    for (int d = 1; d <= 10; ++d) {
        CHECK(h.at(d).rank.is_countable());
        CHECK(h.at(d).annotation() == "per root of unity: rank 2");
    }

    const auto zz = ahss_assemble(rep_ring_fixture("z_semidirect_z2"), 10);
    for (int d = 0; d <= 10; ++d) CHECK(zz.at(d) == (d % 2 == 0 ? free_entry(3) : GroupEntry{}));

    const auto z4 = ahss_assemble(rep_ring_fixture("z2_semidirect_z4"), 10);
    CHECK(z4.at(0) == free_entry(8));
    for (int d = 1; d <= 10; ++d) CHECK(z4.at(d) == (d % 2 == 0 ? free_entry(9) : GroupEntry{}));

    for (std::uint64_t k : {1u, 2u, 3u, 5u}) {
        const auto f = ahss_assemble(rep_ring_fixture("free(" + std::to_string(k) + ")"), 10);
        for (int d = 0; d <= 10; ++d) CHECK(f.at(d) == free_entry(d % 2 == 0 ? 1 : k));
    }
    CHECK(zz.warnings.empty());
}

TEST_CASE("assembly is linear") {
    const auto a = rep_ring_fixture("z2_semidirect_z4");
    const auto b = rep_ring_abelian(3, {2, 3}, 10);
    const auto c = rep_ring_fixture("free(2)");
    const auto lhs = ahss_assemble(direct_sum(direct_sum(a, b), c), 10);
    const auto rhs = direct_sum(direct_sum(ahss_assemble(a, 10), ahss_assemble(b, 10)), ahss_assemble(c, 10));
    CHECK(lhs == rhs);
}

TEST_CASE("abelian assembly equals direct binomial sums") {
    for (int r = 0; r <= 5; ++r)
        for (std::uint64_t order : {1u, 2u, 6u}) {
            const auto k = ahss_assemble(rep_ring_abelian(r, order == 1 ? std::vector<std::uint64_t>{}
                                                                        : std::vector<std::uint64_t>{order},
                                                          12),
                                         12);
            for (int n = 0; n <= 12; ++n) {
                std::uint64_t expect = 0;
                for (int j = 0; 2 * j <= n; ++j) expect += order * choose(r, n - 2 * j);
                CHECK(k.at(n).rank == Rank(expect));
            }
            // Past degree r the sum is half the binomial row.
            if (r > 0) CHECK(k.at(12).rank == Rank(order << (r - 1)));
        }
}

TEST_CASE("torsion input is flagged") {
    GradedAbelianGroup g;
    g.set(0, free_entry(1));
    GroupEntry t;
    t.torsion = {2};
    g.set(1, t);
    const auto k = ahss_assemble(g, 4);
    REQUIRE(k.warnings.size() == 1);
    CHECK(k.warnings[0] == kExtensionWarning);
    CHECK(k.at(3).torsion == std::vector<Integer>{2});
}

TEST_CASE("graded group bookkeeping") {
    GradedAbelianGroup g;
    GroupEntry bad;
    bad.torsion = {2, 3};
    CHECK_THROWS_AS(g.set(0, bad), DomainError);
    bad.torsion = {1};
    CHECK_THROWS_AS(g.set(0, bad), DomainError);
    g.set(2, GroupEntry{});
    CHECK(g.degrees.empty());

    CHECK((Rank::countable() + Rank(4)).is_countable());
    CHECK(Rank(2) + Rank(3) == Rank(5));
    const auto sum = direct_sum(countable_entry("root of unity", 1), countable_entry("root of unity", 2));
    CHECK(sum.annotation() == "per root of unity: rank 3");

    GroupEntry e;
    e.rank = Rank::countable();
    e.set_annotation("per root of unity: rank 2");
    CHECK(e.indexed.has_value());
    e.set_annotation("something else");
    CHECK(e.annotation() == "something else");
    CHECK(to_string(free_entry(3)) == "Z^3");
}
