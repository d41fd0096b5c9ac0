#include "simsim/homology.hpp"

#include <string>

#include "simsim/error.hpp"

namespace simsim {

void ChainComplex::validate() const {
    if (dims.empty()) throw DimensionError("chain complex needs at least C_0");
    if (boundaries.size() + 1 != dims.size())
        throw DimensionError("chain complex with top degree " + std::to_string(top_degree()) + " needs " +
                             std::to_string(dims.size() - 1) + " boundary maps, got " +
                             std::to_string(boundaries.size()));
    for (std::size_t p = 1; p < dims.size(); ++p) {
        const IntegerMatrix& d = boundaries[p - 1];
        if (d.rows() != dims[p - 1] || d.cols() != dims[p])
            throw DimensionError("boundary d_" + std::to_string(p) + " has shape " + std::to_string(d.rows()) + "x" +
                                 std::to_string(d.cols()) + ", expected " + std::to_string(dims[p - 1]) + "x" +
                                 std::to_string(dims[p]));
    }
    for (std::size_t p = 2; p < dims.size(); ++p)
        if (!(boundaries[p - 2] * boundaries[p - 1]).is_zero())
            throw InvalidComplexError("d_" + std::to_string(p - 1) + " d_" + std::to_string(p) + " is not zero");
}

GradedAbelianGroup homology(const ChainComplex& c) {
    c.validate();
    const std::size_t top = c.dims.size();
    // factors[p] are the invariant factors of d_p (p = 1..top-1).
    std::vector<std::vector<Integer>> factors(top + 1);
    for (std::size_t p = 1; p < top; ++p) factors[p] = invariant_factors(c.boundaries[p - 1]);

    GradedAbelianGroup h;
    for (std::size_t p = 0; p < top; ++p) {
        const std::size_t rank_out = factors[p].size();
        const std::size_t rank_in = factors[p + 1].size();
        GroupEntry e;
        e.rank = Rank(c.dims[p] - rank_out - rank_in);
        for (const auto& f : factors[p + 1])
            if (f > 1) e.torsion.push_back(f);
        h.set(static_cast<int>(p), std::move(e));
    }
    return h;
}

}  // namespace simsim
