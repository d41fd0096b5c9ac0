#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "simsim/linalg.hpp"

namespace simsim {

/// One letter of a free-group word: generator index in 1..k and exponent +1 or -1.
struct Letter {
    int generator = 1;
    int exponent = 1;

    friend bool operator==(const Letter&, const Letter&) = default;
};

/// Element of the free group F_k; the empty word is the identity.
using Word = std::vector<Letter>;

/// Letter order used for enumeration: x1 < x1^-1 < x2 < x2^-1 < ...
bool letter_less(const Letter& a, const Letter& b);

std::string word_to_string(const Word& w);

/// Trace of the product of t's matrices along w (exponent -1 uses the adjoint).
/// Throws DomainError on out-of-range generators or exponents.
Complex word_trace(const UnitaryTuple& t, const Word& w);

/// Traces of every reduced word of length <= max_len, ordered by length, then
/// lexicographically in letter order.
struct WordTraceSignature {
    int max_len = 0;
    std::vector<std::pair<Word, Complex>> entries;

    /// Entry for w, if w is reduced and short enough to be present.
    std::optional<Complex> find(const Word& w) const;
};

/// All reduced words of length <= max_len on k generators, in signature order.
std::vector<Word> reduced_words(int k, int max_len);

WordTraceSignature signature(const UnitaryTuple& t, int max_len);

enum class Verdict { similar, distinct, inconclusive };

std::string to_string(Verdict v);

struct DistinctWitness {
    Word word;
    Complex trace_first;
    Complex trace_second;
};

struct SummandMatch {
    int first_index = 0;   // summand index in the decomposition of the first tuple
    int second_index = 0;  // matched summand of the second tuple
    int dimension = 0;
    int multiplicity = 0;
};

struct SimilarWitness {
    /// conjugate(first, conjugator) agrees with second within `residual`.
    UnitaryMatrix conjugator;
    std::vector<SummandMatch> matches;
    double residual = 0.0;
};

struct SimilarityResult {
    Verdict verdict = Verdict::inconclusive;
    std::optional<DistinctWitness> distinct;
    std::optional<SimilarWitness> similar;
    std::string reason;
    int max_word_len = 0;
    int words_examined = 0;
};

/// 2 n^2, the default prefilter word-length bound.
int default_word_len(int n);

/**
 * Decide simultaneous unitary similarity of two tuples.
 *
 * Stage one walks reduced words in signature order up to `max_word_len`
 * (default 2 n^2), pruning words whose joint matrix (A_w, B_w) already lies
 * in the span of accepted words; any trace gap above `tol` yields `distinct`
 * with that word. Stage two decomposes both tuples into irreducibles and
 * matches summands; a complete matching yields `similar` with an explicit
 * conjugator, otherwise the answer is `inconclusive`.
 *
 * Throws ShapeError when n or k differ.
 */
SimilarityResult simultaneously_similar(const UnitaryTuple& s, const UnitaryTuple& t, double tol = kDefaultTol,
                                        std::optional<int> max_word_len = std::nullopt, std::uint64_t seed = 0);

}  // namespace simsim
