#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "simsim/graded_group.hpp"
#include "simsim/homology.hpp"

namespace simsim {

/**
 * Homotopy of the deformation representation ring of G = Z^r + A with A
 * finite: one copy of H_*(T^r) per character of A, i.e. rank |A| C(r,p) in
 * degree p <= min(r, max_deg). `torsion_orders` lists the cyclic factors of A.
 */
GradedAbelianGroup rep_ring_abelian(int r, const std::vector<std::uint64_t>& torsion_orders, int max_deg);

/// Recognised fixture names: heisenberg, z_semidirect_z2, z2_semidirect_z4, free(k).
GradedAbelianGroup rep_ring_fixture(const std::string& name, int max_deg = 10);

/// Relation column 1 + sigma - tau - sigma tau in the character lattice of Z x| Z/2.
IntegerMatrix z_semidirect_z2_relation();

/**
 * Filtration complex for Z^2 x| Z/4: ten 0-cells (8 characters and the two
 * 2-dimensional irreducibles), two 1-cells whose boundaries compare the
 * degenerate 4-dimensional representations with their splittings, one 2-cell
 * attached trivially in homology.
 */
ChainComplex z2_semidirect_z4_complex();

inline const std::string kExtensionWarning = "associated graded only - extensions unresolved";

/**
 * Degenerate spectral-sequence assembly:
 * pi_n K = sum_{j >= 0, n - 2j >= 0} pi_{n-2j} R, for 0 <= n <= max_deg.
 * When any torsion is involved the result carries kExtensionWarning.
 */
GradedAbelianGroup ahss_assemble(const GradedAbelianGroup& pi_r, int max_deg);

}  // namespace simsim
