#pragma once

#include <vector>

#include "iqr/oracle.hpp"
#include "iqr/spectrum.hpp"

namespace iqr {

// States sharing Lambda = 2l + D - 2 (same n) are exactly degenerate.
struct DegeneracyFamily {
    QuantumNumbers anchor;
    std::vector<QuantumNumbers> members;  // ordered by decreasing l
    int Lambda = 0;
    double delta2 = 0.0;
};

DegeneracyFamily family_of(const QuantumNumbers& anchor, double mass_term,
                           int D_min = 2, int D_max = 12);

struct FamilyMemberResult {
    QuantumNumbers qn;
    EnergyLevel level;
};

struct FamilyReport {
    DegeneracyFamily family;
    std::vector<FamilyMemberResult> members;
    bool energies_identical = false;  // bit-exact across members
    bool statuses_identical = false;
    // Pekeris/Exact-mode oracle cross-check on two members (when >= 2 members)
    bool oracle_checked = false;
    double oracle_gap_pekeris = 0.0;
    double oracle_tol_pekeris = 0.0;
    double oracle_gap_exact = 0.0;
    double oracle_tol_exact = 0.0;
};

FamilyReport verify_family(const DegeneracyFamily& family, const PotentialSpec& spec,
                           int oracle_points = 3000);

}  // namespace iqr
