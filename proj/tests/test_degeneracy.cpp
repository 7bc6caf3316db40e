#include <doctest.h>

#include "iqr/degeneracy.hpp"

using namespace iqr;

TEST_CASE("family enumeration shares Lambda") {
    const DegeneracyFamily fam = family_of({0, 4, 2}, kDefaultMassTerm);
    CHECK(fam.Lambda == 8);
    REQUIRE(fam.members.size() == 5);  // (4,2) (3,4) (2,6) (1,8) (0,10)
    for (const auto& m : fam.members) {
        CHECK(m.Lambda() == 8);
        CHECK(m.n == 0);
    }
    CHECK(fam.members.front().l == 4);
    CHECK(fam.members.front().D == 2);
    CHECK(fam.members.back().l == 0);
    CHECK(fam.members.back().D == 10);
}

TEST_CASE("family respects the dimension window") {
    const DegeneracyFamily fam = family_of({1, 0, 10}, kDefaultMassTerm, 3, 9);
    CHECK(fam.Lambda == 8);
    for (const auto& m : fam.members) {
        CHECK(m.D >= 3);
        CHECK(m.D <= 9);
        CHECK(m.Lambda() == 8);
    }
}

TEST_CASE("delta2 is the shared invariant") {
    const DegeneracyFamily fam = family_of({0, 2, 3}, 2.0);
    // Lambda = 5: delta2 = mt (Lambda^2 - 1)/4 = 2 * 24/4 = 12
    CHECK(fam.delta2 == doctest::Approx(12.0).epsilon(1e-14));
}

TEST_CASE("hulthen family energies are bit-identical and oracle-consistent") {
    const PotentialSpec hu = PotentialSpec::hulthen(4.0, 0.25, 1.0);
    const DegeneracyFamily fam = family_of({0, 2, 2}, hu.mass_term, 2, 8);
    const FamilyReport rep = verify_family(fam, hu, 1500);
    CHECK(rep.energies_identical);
    CHECK(rep.statuses_identical);
    CHECK(rep.oracle_checked);
    CHECK(rep.oracle_gap_pekeris <= rep.oracle_tol_pekeris);
    CHECK(rep.oracle_gap_exact <= rep.oracle_tol_exact);
}

TEST_CASE("woods-saxon family is status-consistent even without bound levels") {
    const PotentialSpec ws = PotentialSpec::woods_saxon(50.0, 5.0, 0.6);
    const DegeneracyFamily fam = family_of({0, 4, 2}, ws.mass_term);
    const FamilyReport rep = verify_family(fam, ws, 1500);
    CHECK(rep.energies_identical);
    CHECK(rep.statuses_identical);
}
