#include "doctest.h"

#include "simsim/decompose.hpp"
#include "simsim/orbits.hpp"
#include "support.hpp"

using namespace simsim;
using namespace simsim::testing;

namespace {

const Letter x1{1, 1}, x1i{1, -1}, x2{2, 1}, x2i{2, -1};

// Trace of a word computed directly from the matrices, left to right.
Complex oracle_trace(const UnitaryTuple& t, const Word& w) {
    Matrix acc = Matrix::Identity(t.n(), t.n());
    for (const auto& l : w) {
        const Matrix& m = t[l.generator - 1].matrix();
        acc = l.exponent > 0 ? Matrix(acc * m) : Matrix(acc * m.adjoint());
    }
    return acc.trace();
}

void check_verified(const UnitaryTuple& s, const UnitaryTuple& t, const SimilarityResult& r, double tol) {
    if (r.verdict == Verdict::similar) {
        REQUIRE(r.similar.has_value());
        CHECK(tuple_distance(conjugate(s, r.similar->conjugator), t) <= 10 * tol);
    } else if (r.verdict == Verdict::distinct) {
        REQUIRE(r.distinct.has_value());
        CHECK(std::abs(oracle_trace(s, r.distinct->word) - oracle_trace(t, r.distinct->word)) > tol);
    }
}

}  // namespace

TEST_CASE("word_trace") {
    const auto id = UnitaryTuple::identity(5, 2);
    CHECK(word_trace(id, {}) == Complex(5.0, 0.0));

    Matrix d(2, 2);
    d << Complex(0, 1), 0, 0, Complex(0, -1);
    const auto t = tuple_of({d});
    CHECK(std::abs(word_trace(t, {x1})) <= 1e-15);

    const auto r = random_tuple(4, 2, 3);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto w = random_unitary(4, 77 + seed);
        const Word word{x1, x2i, x2i, x1i, x2};
        CHECK(std::abs(word_trace(r, word) - word_trace(conjugate(r, w), word)) <= 1e-9);
        CHECK(std::abs(word_trace(r, word) - oracle_trace(r, word)) <= 1e-12);
    }
    CHECK_THROWS_AS(word_trace(r, {Letter{3, 1}}), DomainError);
    CHECK_THROWS_AS(word_trace(r, {Letter{1, 2}}), DomainError);
}

TEST_CASE("reduced word enumeration") {
    const auto w = reduced_words(1, 2);
    REQUIRE(w.size() == 5);
    CHECK(w[0].empty());
    CHECK(word_to_string(w[1]) == "x1");
    CHECK(word_to_string(w[2]) == "x1^-1");
    CHECK(word_to_string(w[3]) == "x1 x1");
    CHECK(word_to_string(w[4]) == "x1^-1 x1^-1");
    // 1 + 4 + 4*3 + 4*9 reduced words for two generators.
    CHECK(reduced_words(2, 3).size() == 53);
    CHECK(reduced_words(3, 0).size() == 1);
}

TEST_CASE("signature") {
    const auto t = random_tuple(3, 2, 8);
    const auto s0 = signature(t, 0);
    REQUIRE(s0.entries.size() == 1);
    CHECK(s0.entries[0].second == Complex(3.0, 0.0));

    const auto s = signature(t, 3);
    CHECK(s.entries.size() == 53);
    for (const auto& [w, v] : s.entries) {
        Word inv;
        for (auto it = w.rbegin(); it != w.rend(); ++it) inv.push_back(Letter{it->generator, -it->exponent});
        const auto vi = s.find(inv);
        REQUIRE(vi.has_value());
        CHECK(std::abs(*vi - std::conj(v)) <= 1e-12);
    }

    const auto c = signature(conjugate(t, random_unitary(3, 9)), 3);
    for (std::size_t i = 0; i < s.entries.size(); ++i) CHECK(std::abs(s.entries[i].second - c.entries[i].second) <= 1e-9);
}

TEST_CASE("similar: constructed positives carry a verified conjugator") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto t = random_tuple(3, 2, 300 + seed);
        const auto c = conjugate(t, random_unitary(3, 400 + seed));
        const auto r = simultaneously_similar(t, c);
        CHECK(r.verdict == Verdict::similar);
        CHECK(r.max_word_len == 18);
        check_verified(t, c, r, 1e-9);
    }
}

TEST_CASE("similar: Hadamard swaps X and Z") {
    const auto a = tuple_of({pauli_x(), pauli_z()});
    const auto b = tuple_of({pauli_z(), pauli_x()});
    const auto r = simultaneously_similar(a, b);
    CHECK(r.verdict == Verdict::similar);
    check_verified(a, b, r, 1e-9);
}

TEST_CASE("similar: different eigenvalue maps give a one-letter witness") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto a = random_tuple(3, 2, 600 + seed);
        const auto b = random_tuple(3, 2, 700 + seed);
        const auto r = simultaneously_similar(a, b);
        CHECK(r.verdict == Verdict::distinct);
        REQUIRE(r.distinct.has_value());
        CHECK(r.distinct->word.size() == 1);
        check_verified(a, b, r, 1e-9);
    }
}

TEST_CASE("similar: same eigenvalue maps but different joint class") {
    // Both pairs have eigenphases {0, 1/2} in each slot; the relative angle differs.
    const Matrix rot = random_unitary(2, 5).matrix();
    const auto a = tuple_of({pauli_z(), pauli_x()});
    const auto b = tuple_of({pauli_z(), Matrix(rot * pauli_z() * rot.adjoint())});
    const auto r = simultaneously_similar(a, b);
    CHECK(r.verdict == Verdict::distinct);
    REQUIRE(r.distinct.has_value());
    CHECK(r.distinct->word.size() >= 2);
    check_verified(a, b, r, 1e-9);
}

TEST_CASE("similar: reflexive, symmetric, and reducible inputs") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const auto a = block_sum(random_tuple(2, 2, seed), random_tuple(1, 2, 50 + seed));
        const auto b = conjugate(block_sum(random_tuple(1, 2, 50 + seed), random_tuple(2, 2, seed)),
                                 random_unitary(3, 90 + seed));
        const auto other = random_tuple(3, 2, 130 + seed);
        CHECK(simultaneously_similar(a, a).verdict == Verdict::similar);
        const auto ab = simultaneously_similar(a, b);
        CHECK(ab.verdict == Verdict::similar);
        check_verified(a, b, ab, 1e-9);
        CHECK(simultaneously_similar(b, a).verdict == ab.verdict);
        CHECK(simultaneously_similar(a, other).verdict == simultaneously_similar(other, a).verdict);
    }

    // Multiplicity two, matched copy by copy.
    const auto s = random_tuple(2, 2, 19);
    const auto ss = block_sum(s, s);
    const auto cs = conjugate(ss, random_unitary(4, 20));
    const auto r = simultaneously_similar(ss, cs);
    CHECK(r.verdict == Verdict::similar);
    check_verified(ss, cs, r, 1e-9);
}

TEST_CASE("similar: perturbations of size 1e-6 are detected") {
    int distinct = 0;
    constexpr int kTrials = 20;
    for (std::uint64_t seed = 0; seed < kTrials; ++seed) {
        const auto t = random_tuple(3, 2, 800 + seed);
        const auto c = conjugate(t, random_unitary(3, 900 + seed));
        const auto noise = small_unitary(3, 1e-6, 1000 + seed);
        const auto p = UnitaryTuple({UnitaryMatrix(Matrix(noise.matrix() * c[0].matrix())), c[1]});
        const auto r = simultaneously_similar(t, p);
        if (r.verdict == Verdict::distinct) ++distinct;
        check_verified(t, p, r, 1e-9);
    }
    CHECK(distinct >= kTrials - 1);
}

TEST_CASE("similar: argument checks") {
    CHECK_THROWS_AS(simultaneously_similar(random_tuple(2, 2, 1), random_tuple(3, 2, 1)), ShapeError);
    CHECK_THROWS_AS(simultaneously_similar(random_tuple(2, 2, 1), random_tuple(2, 3, 1)), ShapeError);
    CHECK_THROWS_AS(simultaneously_similar(random_tuple(2, 2, 1), random_tuple(2, 2, 1), 1e-9, -1), DomainError);
    const auto r = simultaneously_similar(random_tuple(2, 2, 1), random_tuple(2, 2, 2), 1e-9, 0);
    CHECK(r.max_word_len == 0);
}
