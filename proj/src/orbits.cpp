#include "simsim/orbits.hpp"

#include <algorithm>
#include <cmath>

#include "simsim/decompose.hpp"

namespace simsim {

namespace {

std::vector<Letter> alphabet(int k) {
    std::vector<Letter> out;
    out.reserve(static_cast<std::size_t>(2 * k));
    for (int g = 1; g <= k; ++g) {
        out.push_back({g, 1});
        out.push_back({g, -1});
    }
    return out;
}

bool cancels(const Word& w, const Letter& next) {
    return !w.empty() && w.back().generator == next.generator && w.back().exponent == -next.exponent;
}

const Matrix& letter_matrix(const UnitaryTuple& t, const Letter& l, const std::vector<Matrix>& adjoints) {
    const auto idx = static_cast<std::size_t>(l.generator - 1);
    return l.exponent > 0 ? t[l.generator - 1].matrix() : adjoints[idx];
}

std::vector<Matrix> adjoints_of(const UnitaryTuple& t) {
    std::vector<Matrix> out;
    out.reserve(static_cast<std::size_t>(t.k()));
    for (const auto& m : t.matrices()) out.push_back(m.matrix().adjoint());
    return out;
}

void validate_word(const Word& w, int k) {
    for (const auto& l : w) {
        if (l.generator < 1 || l.generator > k)
            throw DomainError("word uses generator " + std::to_string(l.generator) + " outside 1.." +
                              std::to_string(k));
        if (l.exponent != 1 && l.exponent != -1) throw DomainError("word exponents must be +1 or -1");
    }
}

// Orthonormal basis of the span of visited joint word matrices.
class SpanTracker {
public:
    explicit SpanTracker(double tol) : tol_(tol) {}

    // Adds v if it is not already in the span; returns whether it was added.
    bool add(Eigen::VectorXcd v) {
        const double nrm = v.norm();
        if (nrm == 0.0) return false;
        v /= nrm;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& b : basis_) v -= b.dot(v) * b;
        const double res = v.norm();
        if (res <= tol_) return false;
        basis_.push_back(v / res);
        return true;
    }

private:
    double tol_;
    std::vector<Eigen::VectorXcd> basis_;
};

Eigen::VectorXcd joint_vector(const Matrix& a, const Matrix& b) {
    Eigen::VectorXcd v(a.size() + b.size());
    v.head(a.size()) = Eigen::Map<const Eigen::VectorXcd>(a.data(), a.size());
    v.tail(b.size()) = Eigen::Map<const Eigen::VectorXcd>(b.data(), b.size());
    return v;
}

struct Frontier {
    Word word;
    Matrix a;
    Matrix b;
};

}  // namespace

bool letter_less(const Letter& a, const Letter& b) {
    if (a.generator != b.generator) return a.generator < b.generator;
    return a.exponent > b.exponent;
}

std::string word_to_string(const Word& w) {
    if (w.empty()) return "e";
    std::string out;
    for (const auto& l : w) {
        if (!out.empty()) out += ' ';
        out += 'x' + std::to_string(l.generator);
        if (l.exponent < 0) out += "^-1";
    }
    return out;
}

Complex word_trace(const UnitaryTuple& t, const Word& w) {
    validate_word(w, t.k());
    if (w.empty()) return Complex(t.n(), 0.0);
    Matrix acc = w.front().exponent > 0 ? t[w.front().generator - 1].matrix()
                                        : Matrix(t[w.front().generator - 1].matrix().adjoint());
    for (std::size_t i = 1; i < w.size(); ++i) {
        const Matrix& m = t[w[i].generator - 1].matrix();
        if (w[i].exponent > 0)
            acc = acc * m;
        else
            acc = acc * m.adjoint();
    }
    return acc.trace();
}

std::optional<Complex> WordTraceSignature::find(const Word& w) const {
    for (const auto& [word, value] : entries)
        if (word == w) return value;
    return std::nullopt;
}

std::vector<Word> reduced_words(int k, int max_len) {
    if (max_len < 0) throw DomainError("max_len must be >= 0");
    const auto letters = alphabet(k);
    std::vector<Word> out{Word{}};
    std::size_t level_begin = 0;
    for (int len = 1; len <= max_len; ++len) {
        const std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (const auto& l : letters) {
                if (cancels(out[i], l)) continue;
                Word w = out[i];
                w.push_back(l);
                out.push_back(std::move(w));
            }
        level_begin = level_end;
    }
    return out;
}

WordTraceSignature signature(const UnitaryTuple& t, int max_len) {
    if (max_len < 0) throw DomainError("signature max_len must be >= 0");
    const auto letters = alphabet(t.k());
    const auto adj = adjoints_of(t);
    WordTraceSignature sig;
    sig.max_len = max_len;
    sig.entries.emplace_back(Word{}, Complex(t.n(), 0.0));

    std::vector<std::pair<Word, Matrix>> level{{Word{}, Matrix::Identity(t.n(), t.n())}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::pair<Word, Matrix>> next;
        for (const auto& [w, m] : level)
            for (const auto& l : letters) {
                if (cancels(w, l)) continue;
                Word nw = w;
                nw.push_back(l);
                Matrix nm = m * letter_matrix(t, l, adj);
                sig.entries.emplace_back(nw, nm.trace());
                next.emplace_back(std::move(nw), std::move(nm));
            }
        level = std::move(next);
    }
    return sig;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::similar: return "similar";
        case Verdict::distinct: return "distinct";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

int default_word_len(int n) { return 2 * n * n; }

SimilarityResult simultaneously_similar(const UnitaryTuple& s, const UnitaryTuple& t, double tol,
                                        std::optional<int> max_word_len, std::uint64_t seed) {
    if (s.n() != t.n() || s.k() != t.k())
        throw ShapeError("similar: shape mismatch (n=" + std::to_string(s.n()) + ", k=" + std::to_string(s.k()) +
                         ") vs (n=" + std::to_string(t.n()) + ", k=" + std::to_string(t.k()) + ")");
    SimilarityResult result;
    result.max_word_len = max_word_len.value_or(default_word_len(s.n()));
    if (result.max_word_len < 0) throw DomainError("max word length must be >= 0");

    // Stage 1: trace prefilter over the span-pruned word tree.
    const auto letters = alphabet(s.k());
    const auto adj_s = adjoints_of(s);
    const auto adj_t = adjoints_of(t);
    SpanTracker span(std::max(tol, 1e-12));
    std::vector<Frontier> frontier;
    {
        Matrix id = Matrix::Identity(s.n(), s.n());
        span.add(joint_vector(id, id));
        frontier.push_back({Word{}, id, id});
        result.words_examined = 1;
    }
    for (int len = 1; len <= result.max_word_len && !frontier.empty(); ++len) {
        std::vector<Frontier> next;
        for (const auto& node : frontier)
            for (const auto& l : letters) {
                if (cancels(node.word, l)) continue;
                Frontier child{node.word, node.a * letter_matrix(s, l, adj_s), node.b * letter_matrix(t, l, adj_t)};
                child.word.push_back(l);
                ++result.words_examined;
                const Complex ta = child.a.trace(), tb = child.b.trace();
                if (std::abs(ta - tb) > tol) {
                    result.verdict = Verdict::distinct;
                    result.distinct = DistinctWitness{child.word, ta, tb};
                    return result;
                }
                if (span.add(joint_vector(child.a, child.b))) next.push_back(std::move(child));
            }
        frontier = std::move(next);
    }

    // Stage 2: irreducible decompositions and summand matching.
    std::optional<Decomposition> ds, dt;
    try {
        ds = decompose_irreducibles(s, tol, seed);
        dt = decompose_irreducibles(t, tol, seed);
    } catch (const InconclusiveError& e) {
        result.reason = e.what();
        return result;
    }

    auto offsets = [](const Decomposition& d) {
        std::vector<Eigen::Index> offs;
        Eigen::Index at = 0;
        for (const auto& sm : d.summands) {
            offs.push_back(at);
            at += static_cast<Eigen::Index>(sm.tuple.n()) * sm.multiplicity;
        }
        return offs;
    };
    const auto off_s = offsets(*ds);
    const auto off_t = offsets(*dt);

    std::vector<bool> used(dt->summands.size(), false);
    Matrix u = Matrix::Zero(s.n(), s.n());
    SimilarWitness witness{UnitaryMatrix::identity(s.n()), {}, 0.0};
    for (std::size_t i = 0; i < ds->summands.size(); ++i) {
        const Summand& a = ds->summands[i];
        bool matched = false;
        for (std::size_t j = 0; j < dt->summands.size() && !matched; ++j) {
            const Summand& b = dt->summands[j];
            if (used[j] || b.tuple.n() != a.tuple.n() || b.multiplicity != a.multiplicity) continue;
            auto x = irreducible_intertwiner(a.tuple, b.tuple, tol);
            if (!x) continue;
            used[j] = matched = true;
            const Eigen::Index d = a.tuple.n();
            for (int c = 0; c < a.multiplicity; ++c)
                u.block(off_t[j] + c * d, off_s[i] + c * d, d, d) = x->matrix();
            witness.matches.push_back(
                {static_cast<int>(i), static_cast<int>(j), a.tuple.n(), a.multiplicity});
        }
        if (!matched) {
            result.reason = "word traces agree but summand " + std::to_string(i) + " has no partner";
            return result;
        }
    }
    if (std::find(used.begin(), used.end(), false) != used.end()) {
        result.reason = "word traces agree but decompositions have different summand counts";
        return result;
    }

    Matrix w = dt->basis_change.matrix().adjoint() * u * ds->basis_change.matrix();
    witness.conjugator = UnitaryMatrix(nearest_unitary(w));
    witness.residual = tuple_distance(conjugate(s, witness.conjugator), t);
    if (!(witness.residual <= 10.0 * tol)) {
        result.reason = "matched conjugator misses by " + std::to_string(witness.residual);
        return result;
    }
    result.verdict = Verdict::similar;
    result.similar = std::move(witness);
    return result;
}

}  // namespace simsim
