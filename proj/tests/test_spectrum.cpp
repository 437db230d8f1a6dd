#include "galosc/spectrum.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <complex>
#include <vector>

using namespace galosc;

namespace {

// Independent oracle: irreducible angular momentum matrices of dimension
// two_j+1 from the ladder construction, used to cross-check the L.S channel
// values by brute diagonalization. Test-only; the production code never
// builds these.
std::array<Eigen::MatrixXcd, 3> irrep_matrices(int two_j) {
    const int d = two_j + 1;
    Eigen::MatrixXcd jp = Eigen::MatrixXcd::Zero(d, d);
    double j = two_j / 2.0;
    for (int k = 1; k < d; ++k) {
        double m = j - k;  // J+ |j,m> = sqrt(j(j+1) - m(m+1)) |j,m+1>
        jp(k - 1, k) = std::sqrt(j * (j + 1) - m * (m + 1));
    }
    Eigen::MatrixXcd jm = jp.adjoint();
    std::array<Eigen::MatrixXcd, 3> out;
    out[0] = 0.5 * (jp + jm);
    out[1] = std::complex<double>(0, -0.5) * (jp - jm);
    out[2] = Eigen::MatrixXcd::Zero(d, d);
    for (int k = 0; k < d; ++k) out[2](k, k) = j - k;
    return out;
}

}  // namespace

TEST_CASE("closed-form energies") {
    // j = l + S zeroes the bracket
    CHECK(closed_form_energy(1, 2, 5, 1) == Rational(2));
    // spin-1/2 lower branch: 2n + 2l + 1
    CHECK(closed_form_energy(1, 2, 3, 1) == Rational(7));
    // spin-1, l=1, j=0
    CHECK(closed_form_energy(0, 1, 0, 2) == Rational(3));
    // spin-0 ladder
    CHECK(closed_form_energy(2, 3, 6, 0) == Rational(7));

    SECTION("invalid quantum numbers are rejected") {
        CHECK_THROWS_AS(closed_form_energy(0, 1, 5, 1), std::invalid_argument);
        CHECK_THROWS_AS(closed_form_energy(0, 1, 2, 1), std::invalid_argument);  // parity
        CHECK_THROWS_AS(closed_form_energy(-1, 0, 1, 1), std::invalid_argument);
        CHECK_THROWS_AS(closed_form_energy(0, 1, 0, 0), std::invalid_argument);  // spin-0 needs j=l
    }
}

TEST_CASE("spin-1/2 special form") {
    CHECK(spin_half_special(3, 0, SpinHalfBranch::plus) == Rational(6));
    CHECK(spin_half_special(0, 1, SpinHalfBranch::minus) == Rational(3));
    CHECK_THROWS_AS(spin_half_special(0, 0, SpinHalfBranch::minus), std::invalid_argument);

    SECTION("agrees with the general formula exhaustively") {
        for (int n = 0; n <= 10; ++n)
            for (int ell = 0; ell <= 10; ++ell) {
                CHECK(spin_half_special(n, ell, SpinHalfBranch::plus) ==
                      closed_form_energy(n, ell, 2 * ell + 1, 1));
                if (ell >= 1)
                    CHECK(spin_half_special(n, ell, SpinHalfBranch::minus) ==
                          closed_form_energy(n, ell, 2 * ell - 1, 1));
            }
    }
}

TEST_CASE("lambda-deformed energies") {
    SECTION("lambda = 1 is the closed form") {
        for (int n = 0; n <= 3; ++n)
            for (int ell = 0; ell <= 4; ++ell)
                for (int two_s = 1; two_s <= 4; ++two_s)
                    for (int tj : allowed_two_j(ell, two_s))
                        CHECK(lambda_energy(n, ell, tj, two_s, 1) ==
                              closed_form_energy(n, ell, tj, two_s));
    }
    SECTION("lambda = 0 is the shifted oscillator ladder") {
        for (int tj : allowed_two_j(1, 2)) CHECK(lambda_energy(0, 1, tj, 2, 0) == Rational(1));
    }
    SECTION("worked value at lambda = 1/2") {
        CHECK(lambda_energy(0, 1, 0, 2, Rational(1, 2)) == Rational(2));
    }
    SECTION("spin 0 admits no deformation") {
        CHECK(lambda_energy(1, 2, 4, 0, 1) == Rational(4));
        CHECK_THROWS_AS(lambda_energy(1, 2, 4, 0, Rational(1, 2)), std::domain_error);
    }
}

TEST_CASE("positivity and the j = l+S zero family") {
    for (int two_s = 0; two_s <= 24; two_s += 2)
        for (int ell = 0; ell <= 12; ++ell) {
            std::vector<int> tjs = two_s == 0 ? std::vector<int>{2 * ell} : allowed_two_j(ell, two_s);
            for (int tj : tjs)
                for (int n = 0; n <= 2; ++n) {
                    Rational e = closed_form_energy(n, ell, tj, two_s);
                    CHECK(e >= 0);
                    if (two_s > 0 && tj == 2 * ell + two_s) CHECK(e == Rational(2 * n));
                }
        }
    // half-integer spins too
    for (int two_s = 1; two_s <= 23; two_s += 2)
        for (int ell = 0; ell <= 12; ++ell)
            for (int tj : allowed_two_j(ell, two_s)) {
                Rational e = closed_form_energy(0, ell, tj, two_s);
                CHECK(e >= 0);
            }
}

TEST_CASE("level enumeration") {
    SECTION("spin-1 ground sector at the origin") {
        LevelTable t = enumerate_levels(2, 0, 0);
        REQUIRE(t.rows.size() == 1);
        CHECK(t.rows[0].n == 0);
        CHECK(t.rows[0].ell == 0);
        CHECK(t.rows[0].two_j == 2);
        CHECK(t.rows[0].multiplicity == 3);  // 2S+1
    }
    SECTION("zero-energy family has one member per l") {
        LevelTable t = enumerate_levels(2, 0, 5);
        REQUIRE(t.rows.size() == 6);
        for (int ell = 0; ell <= 5; ++ell) {
            CHECK(t.rows[ell].ell == ell);
            CHECK(t.rows[ell].two_j == 2 * ell + 2);  // j = l + S
            CHECK(t.rows[ell].n == 0);
            CHECK(t.rows[ell].energy_over_omega == 0);
        }
    }
    SECTION("spin-0 ladder rows") {
        LevelTable t = enumerate_levels(0, 2, 8);
        REQUIRE(t.rows.size() == 4);
        CHECK(t.rows[0].ell == 0);
        CHECK(t.rows[0].energy_over_omega == 0);
        CHECK(t.rows[1].ell == 1);
        CHECK(t.rows[1].energy_over_omega == 1);
        CHECK(t.rows[2].energy_over_omega == 2);
        CHECK(t.rows[3].energy_over_omega == 2);
    }
    SECTION("aggregate degeneracy is consistent with the rows") {
        LevelTable t = enumerate_levels(1, 4, 6);
        std::map<Rational, int> agg;
        for (const auto& r : t.rows) agg[r.energy_over_omega] += r.multiplicity;
        CHECK(agg == t.aggregate);
    }
    SECTION("rows are sorted by (E, l, j, n)") {
        LevelTable t = enumerate_levels(3, 6, 5);
        for (size_t i = 1; i < t.rows.size(); ++i) {
            const auto &a = t.rows[i - 1], &b = t.rows[i];
            auto key = [](const SpectrumLevel& r) {
                return std::tuple<Rational, int, int, int>{r.energy_over_omega, r.ell, r.two_j, r.n};
            };
            CHECK(key(a) <= key(b));
        }
    }
}

TEST_CASE("ground state l=0 count is 2S+1") {
    for (int two_s = 1; two_s <= 8; ++two_s) CHECK(ground_state_ell0_count(two_s) == two_s + 1);
}

TEST_CASE("L.S channel values match brute-force diagonalization") {
    // oracle: eigenvalues of sum_k L_k (x) S_k on the (2l+1)(2S+1) product
    // space are [j(j+1)-l(l+1)-S(S+1)]/2 with multiplicity 2j+1
    for (int ell = 0; ell <= 4; ++ell)
        for (int two_s = 1; two_s <= 6; ++two_s) {
            auto Lm = irrep_matrices(2 * ell);
            auto Sm = irrep_matrices(two_s);
            int dim = (2 * ell + 1) * (two_s + 1);
            Eigen::MatrixXcd ls = Eigen::MatrixXcd::Zero(dim, dim);
            for (int k = 0; k < 3; ++k)
                ls += Eigen::kroneckerProduct(Lm[k], Sm[k]).eval();
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(ls);
            std::vector<double> got(es.eigenvalues().data(), es.eigenvalues().data() + dim);
            std::vector<double> expect;
            for (int tj : allowed_two_j(ell, two_s)) {
                double v = to_double(ls_channel_value(ell, tj, two_s));
                for (int m = 0; m <= tj; ++m) expect.push_back(v);
            }
            std::sort(expect.begin(), expect.end());
            REQUIRE(got.size() == expect.size());
            for (size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - expect[i]) < 1e-10);
        }
}
