#include "simsim/rep_ring.hpp"

#include <algorithm>
#include <regex>

#include "simsim/error.hpp"

namespace simsim {

namespace {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t out = 1;
    for (int i = 1; i <= k; ++i) out = out * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return out;
}

GradedAbelianGroup truncate(GradedAbelianGroup g, int max_deg) {
    for (auto it = g.degrees.begin(); it != g.degrees.end();)
        it = it->first > max_deg ? g.degrees.erase(it) : std::next(it);
    return g;
}

}  // namespace

GradedAbelianGroup rep_ring_abelian(int r, const std::vector<std::uint64_t>& torsion_orders, int max_deg) {
    if (r < 0) throw DomainError("free rank r must be >= 0");
    if (max_deg < 0) throw DomainError("max_deg must be >= 0");
    std::uint64_t order = 1;
    for (auto o : torsion_orders) {
        if (o == 0) throw DomainError("finite part orders must be >= 1");
        order *= o;
    }
    GradedAbelianGroup g;
    for (int p = 0; p <= std::min(r, max_deg); ++p) g.set(p, free_entry(order * binomial(r, p)));
    return g;
}

IntegerMatrix z_semidirect_z2_relation() { return IntegerMatrix{{1}, {1}, {-1}, {-1}}; }

ChainComplex z2_semidirect_z4_complex() {
    // 0-cells: chi_1..chi_4 extend the trivial character, chi_5..chi_8 extend
    // x, y -> -1, rho_1, rho_2 are the 2-dimensional irreducibles.
    ChainComplex c;
    c.dims = {10, 2, 1};
    c.boundaries = {
        IntegerMatrix{{-1, -1}, {-1, -1}, {-1, -1}, {-1, -1}, {1, 0}, {1, 0}, {1, 0}, {1, 0}, {0, 1}, {0, 1}},
        IntegerMatrix{{0}, {0}},
    };
    return c;
}

GradedAbelianGroup rep_ring_fixture(const std::string& name, int max_deg) {
    if (max_deg < 0) throw DomainError("max_deg must be >= 0");
    static const std::regex free_pattern(R"(^free\(([0-9]+)\)$)");
    std::smatch m;
    GradedAbelianGroup g;
    if (name == "heisenberg") {
        g.set(0, countable_entry("root of unity", 1));
        g.set(1, countable_entry("root of unity", 2));
        g.set(2, countable_entry("root of unity", 1));
    } else if (name == "z_semidirect_z2") {
        const AbelianGroup pi0 = cokernel(z_semidirect_z2_relation());
        g.set(0, GroupEntry{Rank(pi0.rank), pi0.torsion, std::nullopt, std::nullopt});
    } else if (name == "z2_semidirect_z4") {
        g = homology(z2_semidirect_z4_complex());
    } else if (std::regex_match(name, m, free_pattern)) {
        const std::uint64_t k = std::stoull(m[1].str());
        g.set(0, free_entry(1));
        g.set(1, free_entry(k));
    } else {
        throw DomainError("unknown group fixture '" + name + "'");
    }
    return truncate(std::move(g), max_deg);
}

GradedAbelianGroup ahss_assemble(const GradedAbelianGroup& pi_r, int max_deg) {
    if (max_deg < 0) throw DomainError("max_deg must be >= 0");
    GradedAbelianGroup out;
    bool torsion = false;
    for (int n = 0; n <= max_deg; ++n) {
        GroupEntry acc;
        for (int q = n; q >= 0; q -= 2) {
            const GroupEntry e = pi_r.at(q);
            torsion = torsion || !e.torsion.empty();
            acc = direct_sum(acc, e);
        }
        out.set(n, std::move(acc));
    }
    out.warnings = pi_r.warnings;
    if (torsion && std::find(out.warnings.begin(), out.warnings.end(), kExtensionWarning) == out.warnings.end())
        out.warnings.push_back(kExtensionWarning);
    return out;
}

}  // namespace simsim
