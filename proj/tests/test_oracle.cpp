#include <doctest.h>

#include <cmath>

#include "iqr/oracle.hpp"
#include "iqr/spectrum.hpp"

using namespace iqr;

TEST_CASE("sturm count brackets eigenvalues of a known matrix") {
    // free particle on n interior points: eigenvalues 2 - 2cos(k pi/(n+1)), h = 1, mt = 1/2...
    // use the plain discrete Laplacian: diag 2, off -1
    Tridiagonal T;
    const int n = 50;
    T.diag.assign(n, 2.0);
    T.off.assign(n - 1, -1.0);
    const double lam1 = 2.0 - 2.0 * std::cos(M_PI / (n + 1));
    CHECK(sturm_count(T, lam1 - 1e-9) == 0);
    CHECK(sturm_count(T, lam1 + 1e-9) == 1);
    CHECK(sturm_count(T, 5.0) == n);
}

TEST_CASE("eigen_lowest reproduces discrete laplacian eigenpairs") {
    Tridiagonal T;
    const int n = 200;
    T.diag.assign(n, 2.0);
    T.off.assign(n - 1, -1.0);
    const double h = 1.0;
    const OracleSpectrum sp = eigen_lowest(T, 3, h);
    REQUIRE(sp.eigenvalues.size() == 3);
    for (int k = 1; k <= 3; ++k) {
        const double lam = 2.0 - 2.0 * std::cos(k * M_PI / (n + 1));
        CHECK(sp.eigenvalues[k - 1] == doctest::Approx(lam).epsilon(1e-10));
        // eigenvector: sin(k pi j/(n+1)) up to normalization and sign
        const auto& v = sp.eigenvectors[k - 1];
        const double scale = v[0] / std::sin(k * M_PI / (n + 1));
        for (int j : {10, 57, 123}) {
            const double expect = scale * std::sin(k * M_PI * (j + 1) / (n + 1));
            CHECK(v[j] == doctest::Approx(expect).epsilon(1e-8));
        }
    }
}

TEST_CASE("frozen exact-mode woods-saxon levels, l = 0, D = 3") {
    const PotentialSpec ws = PotentialSpec::woods_saxon(50.0, 5.0, 0.6);
    RadialGrid grid;
    grid.r_min = 0.0;
    grid.r_max = 23.0;
    grid.n_points = 4000;
    const OracleLevels orc = oracle_levels(ws, 0, 3, 3, CentrifugalMode::Exact, grid);
    REQUIRE(orc.energies.size() == 3);
    CHECK(orc.energies[0] == doctest::Approx(-41.1369530682).epsilon(1e-7));
    CHECK(orc.energies[1] == doctest::Approx(-21.2750314385).epsilon(1e-7));
    CHECK(orc.energies[2] == doctest::Approx(-1.2497122546).epsilon(1e-4));
}

TEST_CASE("frozen exact-mode woods-saxon levels, l = 1 and 2") {
    const PotentialSpec ws = PotentialSpec::woods_saxon(50.0, 5.0, 0.6);
    RadialGrid grid;
    grid.r_min = 0.0;
    grid.r_max = 23.0;
    grid.n_points = 4000;
    const OracleLevels o1 = oracle_levels(ws, 1, 3, 2, CentrifugalMode::Exact, grid);
    REQUIRE(o1.energies.size() == 2);
    CHECK(o1.energies[0] == doctest::Approx(-33.0484466453).epsilon(1e-7));
    CHECK(o1.energies[1] == doctest::Approx(-10.6434539089).epsilon(1e-6));
    const OracleLevels o2 = oracle_levels(ws, 2, 3, 2, CentrifugalMode::Exact, grid);
    REQUIRE(o2.energies.size() == 2);
    CHECK(o2.energies[0] == doctest::Approx(-23.7160134818).epsilon(1e-7));
}

TEST_CASE("pekeris-mode levels differ from exact for l > 0") {
    const PotentialSpec ws = PotentialSpec::woods_saxon(50.0, 5.0, 0.6);
    RadialGrid grid;
    grid.r_min = 0.0;
    grid.r_max = 23.0;
    grid.n_points = 4000;
    const OracleLevels op = oracle_levels(ws, 1, 3, 2, CentrifugalMode::Pekeris, grid);
    REQUIRE(op.energies.size() == 2);
    CHECK(op.energies[0] == doctest::Approx(-38.5260089554).epsilon(1e-7));
    CHECK(op.energies[1] == doctest::Approx(-18.9626904441).epsilon(1e-7));
}

TEST_CASE("pekeris-mode degeneracy across dimensions at the oracle level") {
    // (l=1, D=5) and (l=2, D=3) share Lambda = 5
    const PotentialSpec ws = PotentialSpec::woods_saxon(50.0, 5.0, 0.6);
    RadialGrid grid;
    grid.r_min = 0.0;
    grid.r_max = 23.0;
    grid.n_points = 3000;
    const OracleLevels a = oracle_levels(ws, 1, 5, 1, CentrifugalMode::Pekeris, grid);
    const OracleLevels b = oracle_levels(ws, 2, 3, 1, CentrifugalMode::Pekeris, grid);
    REQUIRE(a.energies.size() == 1);
    REQUIRE(b.energies.size() == 1);
    CHECK(a.energies[0] == doctest::Approx(b.energies[0]).epsilon(1e-12));
}

TEST_CASE("hulthen exact-mode oracle matches the closed levels") {
    const PotentialSpec hu = PotentialSpec::hulthen(1.0, 0.25, 1.0);
    RadialGrid grid;
    grid.r_min = 0.0;
    grid.r_max = 140.0;
    grid.n_points = 8000;
    const OracleLevels orc = oracle_levels(hu, 0, 3, 2, CentrifugalMode::Exact, grid);
    REQUIRE(orc.energies.size() == 2);
    CHECK(orc.energies[0] == doctest::Approx(-3.515625).epsilon(1e-7));
    CHECK(orc.energies[1] == doctest::Approx(-0.5625).epsilon(1e-6));
}

TEST_CASE("overlap of a vector with itself is one") {
    std::vector<double> v = {0.1, 0.5, -0.2, 0.8};
    double s = 0.0;
    for (double x : v) s += x * x;
    const double h = 0.01;
    for (double& x : v) x /= std::sqrt(s * h);
    CHECK(overlap(v, v, h) == doctest::Approx(1.0).epsilon(1e-14));
}
