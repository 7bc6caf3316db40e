#include "iqr/degeneracy.hpp"

#include <cmath>
#include <cstring>

namespace iqr {

DegeneracyFamily family_of(const QuantumNumbers& anchor, double mass_term,
                           int D_min, int D_max) {
    anchor.validate();
    DegeneracyFamily fam;
    fam.anchor = anchor;
    fam.Lambda = anchor.Lambda();
    fam.delta2 = centrifugal_strength(anchor, mass_term).delta2;
    for (int l = fam.Lambda / 2 + 1; l >= 0; --l) {
        const int D = fam.Lambda - 2 * l + 2;
        if (D < D_min || D > D_max) continue;
        fam.members.push_back({anchor.n, l, D});
    }
    return fam;
}

FamilyReport verify_family(const DegeneracyFamily& family, const PotentialSpec& spec,
                           int oracle_points) {
    if (family.members.empty())
        throw std::invalid_argument("verify_family: empty family");
    FamilyReport rep;
    rep.family = family;
    for (const auto& qn : family.members)
        rep.members.push_back({qn, solve_energy(qn, spec)});

    rep.energies_identical = true;
    rep.statuses_identical = true;
    const EnergyLevel& first = rep.members.front().level;
    for (const auto& m : rep.members) {
        // bit-exact comparison: same delta2 must give the same bits
        if (std::memcmp(&m.level.E, &first.E, sizeof(double)) != 0)
            rep.energies_identical = false;
        if (m.level.status != first.status) rep.statuses_identical = false;
    }

    if (family.members.size() >= 2) {
        const QuantumNumbers& a = family.members.front();
        const QuantumNumbers& b = family.members.back();
        RadialGrid grid = RadialGrid::default_for(spec, oracle_points);
        for (CentrifugalMode mode : {CentrifugalMode::Pekeris, CentrifugalMode::Exact}) {
            const OracleLevels la = oracle_levels(spec, a.l, a.D, 1, mode, grid);
            const OracleLevels lb = oracle_levels(spec, b.l, b.D, 1, mode, grid);
            if (la.energies.empty() || lb.energies.empty()) continue;
            const double gap = std::fabs(la.energies[0] - lb.energies[0]);
            const double tol = la.est_error[0] + lb.est_error[0];
            if (mode == CentrifugalMode::Pekeris) {
                rep.oracle_gap_pekeris = gap;
                rep.oracle_tol_pekeris = tol;
            } else {
                rep.oracle_gap_exact = gap;
                rep.oracle_tol_exact = tol;
            }
            rep.oracle_checked = true;
        }
    }
    return rep;
}

}  // namespace iqr
