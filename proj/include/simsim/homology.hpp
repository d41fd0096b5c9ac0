#pragma once

#include <vector>

#include "simsim/graded_group.hpp"
#include "simsim/integer_matrix.hpp"

namespace simsim {

/// Free chain complex C_0 <- C_1 <- ... <- C_top over Z.
struct ChainComplex {
    std::vector<std::size_t> dims;
    /// boundaries[p - 1] is d_p : C_p -> C_{p-1}, a dims[p-1] x dims[p] matrix.
    std::vector<IntegerMatrix> boundaries;

    int top_degree() const { return static_cast<int>(dims.size()) - 1; }
    /// Throws DimensionError on shape mismatch, InvalidComplexError if d d != 0.
    void validate() const;
};

/// H_p = ker d_p / im d_{p+1}, exactly.
GradedAbelianGroup homology(const ChainComplex& c);

}  // namespace simsim
