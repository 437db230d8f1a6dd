#include "galosc/spinor_algebra.hpp"
#include "support/reference_expansions.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace galosc;
using galosc::testing::reference_spin0_expansion;
using galosc::testing::reference_spin1_expansion;

namespace {

Polynomial nf(const Polynomial& p) { return p.ibp_normal_form(); }

}  // namespace

TEST_CASE("spin-1 trace expansion equals the reference term by term") {
    for (bool osc : {true, false}) {
        Polynomial L = expand_trace_lagrangian(BispinorSymmetry::symmetric, osc);
        Polynomial ref = reference_spin1_expansion(osc);
        CHECK((nf(L) - nf(ref)).is_zero());
    }
}

TEST_CASE("spin-0 trace expansion equals the reference term by term") {
    for (bool osc : {true, false}) {
        Polynomial L = expand_trace_lagrangian(BispinorSymmetry::antisymmetric, osc);
        Polynomial ref = reference_spin0_expansion(osc);
        CHECK((nf(L) - nf(ref)).is_zero());
    }
}

TEST_CASE("spot coefficients of the expansions") {
    Polynomial L1 = expand_trace_lagrangian(BispinorSymmetry::symmetric, true);
    Polynomial L0 = expand_trace_lagrangian(BispinorSymmetry::antisymmetric, true);

    SECTION("coefficient of Y*.Y is 2M") {
        CHECK(L1.coefficient(monomial_of({Symbol::Y1s, Symbol::Y1, Symbol::mass})) ==
              GaussianRational(2));
        CHECK(L1.coefficient(monomial_of({Symbol::Y3s, Symbol::Y3, Symbol::mass})) ==
              GaussianRational(2));
    }

    SECTION("coefficient of C* r.A is -Mw") {
        CHECK(L0.coefficient(
                  monomial_of({Symbol::Cs, Symbol::r2, Symbol::A2, Symbol::mass, Symbol::omega})) ==
              GaussianRational(-1));
    }

    SECTION("X*. i dt X carries coefficient i") {
        CHECK(L1.coefficient(monomial_of({Symbol::X2s, Symbol::dt, Symbol::X2})) ==
              GaussianRational::i());
    }

    SECTION("at omega = 0 the B field appears only in its 2M B*B term") {
        Polynomial L0free = expand_trace_lagrangian(BispinorSymmetry::antisymmetric, false);
        Polynomial row_b = L0free.terms_containing(Symbol::B);
        Polynomial row_bs = L0free.terms_containing(Symbol::Bs);
        CHECK(row_b == row_bs);
        CHECK(row_b.term_count() == 1);
        CHECK(row_b.coefficient(monomial_of({Symbol::Bs, Symbol::B, Symbol::mass})) ==
              GaussianRational(2));
    }
}

TEST_CASE("omitted components contribute exactly zero") {
    SECTION("the three (1-rho3)/2 sigma_i sigma_2 insertions at spin 1") {
        Polynomial with = expand_trace_lagrangian(BispinorSymmetry::symmetric, true, true);
        Polynomial without = expand_trace_lagrangian(BispinorSymmetry::symmetric, true, false);
        CHECK((with - without).is_zero());
        for (Symbol s : {Symbol::W1, Symbol::W1s, Symbol::W2, Symbol::W2s, Symbol::W3, Symbol::W3s})
            CHECK(!with.contains(s));
    }
    SECTION("the (1-rho3)/2 sigma_2 insertion at spin 0") {
        Polynomial with = expand_trace_lagrangian(BispinorSymmetry::antisymmetric, true, true);
        Polynomial without = expand_trace_lagrangian(BispinorSymmetry::antisymmetric, true, false);
        CHECK((with - without).is_zero());
        CHECK(!with.contains(Symbol::V));
        CHECK(!with.contains(Symbol::Vs));
    }
}

TEST_CASE("component classification from the expanded Lagrangian") {
    SECTION("spin 1: X dynamical, Y and Z constrained") {
        auto labels = classify_components(BispinorSymmetry::symmetric);
        REQUIRE(labels.size() == 7);
        for (const auto& l : labels) {
            if (l.field == Symbol::X1 || l.field == Symbol::X2 || l.field == Symbol::X3)
                CHECK(l.kind == ComponentKind::dynamical);
            else
                CHECK(l.kind == ComponentKind::constrained);
        }
    }
    SECTION("spin 0: C dynamical, A constrained, B absent") {
        auto labels = classify_components(BispinorSymmetry::antisymmetric);
        REQUIRE(labels.size() == 5);
        for (const auto& l : labels) {
            if (l.field == Symbol::C) CHECK(l.kind == ComponentKind::dynamical);
            else if (l.field == Symbol::B) CHECK(l.kind == ComponentKind::absent);
            else CHECK(l.kind == ComponentKind::constrained);
        }
    }
}

TEST_CASE("expansion exports a stable term table") {
    Polynomial L = expand_trace_lagrangian(BispinorSymmetry::antisymmetric, true);
    std::string table = L.term_table();
    CHECK(table == L.term_table());
    CHECK(table.find("dt.C.C*") != std::string::npos);
}
