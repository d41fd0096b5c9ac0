#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "simsim/decompose.hpp"
#include "simsim/eigenmap.hpp"
#include "simsim/graded_group.hpp"
#include "simsim/harris.hpp"
#include "simsim/homology.hpp"
#include "simsim/integer_matrix.hpp"
#include "simsim/orbits.hpp"

namespace simsim::io {

using Json = nlohmann::ordered_json;

/// Deterministic rendering: two-space indentation, shallow arrays inline,
/// floating-point values with 17 significant digits.
std::string format_json(const Json& j);

/// Throws ParseError on invalid JSON text.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

/// n x m complex matrix as rows of [re, im] pairs.
Json matrix_to_json(const Matrix& m);
/// `cols` disambiguates matrices with no rows or no columns.
Matrix matrix_from_json(const Json& j, Eigen::Index rows, Eigen::Index cols);

/// Matrix-tuple document {"n", "k", "matrices"}.
Json tuple_to_json(const UnitaryTuple& t);
/// Raw matrices of a matrix-tuple document, without the unitarity check.
std::vector<Matrix> raw_matrices_from_json(const Json& j);
/// Throws ParseError on schema violations, NotUnitaryError on non-unitary members.
UnitaryTuple tuple_from_json(const Json& j, double tol = kDefaultTol);

Json phases_to_json(const PhaseMultiset& p);
PhaseMultiset phases_from_json(const Json& j);

Json word_to_json(const Word& w);
Word word_from_json(const Json& j);

Json configuration_to_json(const HarrisConfiguration& c);
HarrisConfiguration configuration_from_json(const Json& j);

Json arrangement_to_json(const PlaneArrangement& a);
PlaneArrangement arrangement_from_json(const Json& j);

Json multi_arrangement_to_json(const MultiArrangement& m);
MultiArrangement multi_arrangement_from_json(const Json& j);

Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);

/// {"rows", "cols", "entries"}; a bare array of rows is accepted on input.
Json integer_matrix_to_json(const IntegerMatrix& m);
IntegerMatrix integer_matrix_from_json(const Json& j);

Json chain_complex_to_json(const ChainComplex& c);
ChainComplex chain_complex_from_json(const Json& j);

Json graded_group_to_json(const GradedAbelianGroup& g);
GradedAbelianGroup graded_group_from_json(const Json& j);

Json abelian_group_to_json(const AbelianGroup& g);

Json similarity_to_json(const SimilarityResult& r);
Json decomposition_to_json(const Decomposition& d);

}  // namespace simsim::io
