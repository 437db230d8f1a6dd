#include "galosc/fock.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Eigenvalues>

#include <sstream>

using namespace galosc;

namespace {

DenseC interior_block(const SparseC& op, const FockBasis& b, int margin) {
    auto proj = InteriorProjector::make(b, margin);
    return compress(op, proj);
}

}  // namespace

TEST_CASE("basis enumeration and dimensions") {
    CHECK(FockBasis::make(0).dim() == 1);
    CHECK(FockBasis::make(1).dim() == 4);
    CHECK(FockBasis::make(8).dim() == 165);  // 9*10*11/6
    CHECK_THROWS_AS(FockBasis::make(-1), std::invalid_argument);
    CHECK_THROWS_AS(FockBasis::make(41), std::invalid_argument);

    SECTION("graded lexicographic order") {
        FockBasis b = FockBasis::make(2);
        CHECK(b.states[0] == std::array<int, 3>{0, 0, 0});
        CHECK(b.states[1] == std::array<int, 3>{0, 0, 1});
        CHECK(b.states[2] == std::array<int, 3>{0, 1, 0});
        CHECK(b.states[3] == std::array<int, 3>{1, 0, 0});
        for (int i = 1; i < b.dim(); ++i)
            CHECK(b.total_quanta(i - 1) <= b.total_quanta(i));
    }
}

TEST_CASE("kinematic operators") {
    FockBasis b = FockBasis::make(6);
    const double M = 1.0, w = 1.0;
    Kinematics k = build_kinematics(b, M, w);

    SECTION("parameter validation") {
        CHECK_THROWS_AS(build_kinematics(b, 0.0, 1.0), std::invalid_argument);
        CHECK_THROWS_AS(build_kinematics(b, 1.0, -2.0), std::invalid_argument);
    }

    SECTION("ladder matrix element of r1") {
        int i0 = b.index.at({0, 0, 0});
        int i1 = b.index.at({1, 0, 0});
        CHECK(std::abs(DenseC(k.r[0])(i1, i0) - 1.0 / std::sqrt(2.0 * M * w)) < 1e-15);
    }

    SECTION("r, p, L are Hermitian; N is diagonal") {
        for (int ax = 0; ax < 3; ++ax) {
            CHECK(hermiticity_defect(k.r[ax]) < 1e-12);
            CHECK(hermiticity_defect(k.p[ax]) < 1e-12);
            CHECK(hermiticity_defect(k.L[ax]) < 1e-12);
        }
        DenseC n = DenseC(k.number_op);
        CHECK((n - DenseC(n.diagonal().asDiagonal())).cwiseAbs().maxCoeff() == 0.0);
    }

    SECTION("canonical commutators on the interior") {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                SparseC rr = SparseC(k.r[i] * k.r[j]) - SparseC(k.r[j] * k.r[i]);
                SparseC pp = SparseC(k.p[i] * k.p[j]) - SparseC(k.p[j] * k.p[i]);
                SparseC rp = SparseC(k.r[i] * k.p[j]) - SparseC(k.p[j] * k.r[i]);
                CHECK(max_abs(interior_block(rr, b, 2)) < 1e-12);
                CHECK(max_abs(interior_block(pp, b, 2)) < 1e-12);
                DenseC c = interior_block(rp, b, 2);
                if (i == j) c -= Complex(0, 1) * DenseC::Identity(c.rows(), c.cols());
                CHECK(max_abs(c) < 1e-12);
            }
    }

    SECTION("angular momentum algebra holds within the whole truncation") {
        // L conserves N, so no boundary loss
        for (int i = 0; i < 3; ++i) {
            int j = (i + 1) % 3, l = (i + 2) % 3;
            DenseC comm = DenseC(SparseC(k.L[i] * k.L[j]) - SparseC(k.L[j] * k.L[i]));
            CHECK(max_abs(comm - Complex(0, 1) * DenseC(k.L[l])) < 1e-12);
            DenseC nc = DenseC(SparseC(k.L[i] * k.number_op) - SparseC(k.number_op * k.L[i]));
            CHECK(max_abs(nc) < 1e-12);
        }
    }

    SECTION("L3 eigenvalues on the N=1 shell are {-1, 0, 1}") {
        std::vector<int> shell;
        for (int i = 0; i < b.dim(); ++i)
            if (b.total_quanta(i) == 1) shell.push_back(i);
        DenseC l3 = compress(DenseC(k.L[2]), shell, shell);
        Eigen::SelfAdjointEigenSolver<DenseC> es(l3);
        REQUIRE(es.eigenvalues().size() == 3);
        CHECK(std::abs(es.eigenvalues()(0) + 1.0) < 1e-12);
        CHECK(std::abs(es.eigenvalues()(1)) < 1e-12);
        CHECK(std::abs(es.eigenvalues()(2) - 1.0) < 1e-12);
    }

    SECTION("hamiltonian is w(N + 3/2) on the interior") {
        SparseC h(b.dim(), b.dim());
        for (int ax = 0; ax < 3; ++ax)
            h = h + Complex(1.0 / (2.0 * M), 0) * SparseC(k.p[ax] * k.p[ax]) +
                Complex(0.5 * M * w * w, 0) * SparseC(k.r[ax] * k.r[ax]);
        DenseC hint = interior_block(h, b, 2);
        DenseC nint = interior_block(k.number_op, b, 2);
        DenseC diff = hint - w * nint - 1.5 * w * DenseC::Identity(hint.rows(), hint.cols());
        CHECK(max_abs(diff) < 1e-12);

        SECTION("N commutes with the hamiltonian on the interior") {
            SparseC c = SparseC(h * k.number_op) - SparseC(k.number_op * h);
            CHECK(max_abs(interior_block(c, b, 2)) < 1e-12);
        }
    }
}

TEST_CASE("oscillator operator identity") {
    SECTION("natural units") {
        FockBasis b = FockBasis::make(6);
        Kinematics k = build_kinematics(b, 1.0, 1.0);
        CHECK(oscillator_identity_check(k) <= 1e-10);
    }
    SECTION("scaled parameters") {
        FockBasis b = FockBasis::make(6);
        Kinematics k = build_kinematics(b, 2.0, 0.5);
        CHECK(oscillator_identity_check(k) <= 1e-10);
    }
    SECTION("near-free limit") {
        // as w -> 0 the identity degenerates to (sigma.p)^2 = p^2
        FockBasis b = FockBasis::make(6);
        Kinematics k = build_kinematics(b, 1.0, 1e-8);
        CHECK(oscillator_identity_check(k) <= 1e-10);
    }
    SECTION("n_max precondition") {
        FockBasis b = FockBasis::make(2);
        Kinematics k = build_kinematics(b, 1.0, 1.0);
        CHECK_THROWS_AS(oscillator_identity_check(k), std::invalid_argument);
    }
}

TEST_CASE("coordinate triplet dump") {
    FockBasis b = FockBasis::make(1);
    Kinematics k = build_kinematics(b, 1.0, 1.0);
    std::ostringstream os;
    dump_coordinate_triplets(k.r[0], os);
    std::string text = os.str();
    CHECK(!text.empty());
    CHECK(text.find(' ') != std::string::npos);
}
