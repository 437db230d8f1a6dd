#pragma once

#include "galosc/spinor_algebra.hpp"
#include "galosc/sym_basis.hpp"

namespace galosc {

struct CouplingClass {
    std::array<int, 4> occupation;
    bool retained = false;
    ComponentKind kind = ComponentKind::absent;
};

struct CouplingReport {
    int two_s = 0;
    int total = 0;
    int retained = 0;
    std::vector<CouplingClass> classes;
};

namespace detail {

/// Symmetrized operator sum sum_i Gamma...G(slot i)...Gamma on the rank-2S
/// symmetric component basis, with exact polynomial entries. Row classes are
/// represented by one index tuple each; column coefficients aggregate the
/// integer multiplicities of equivalent transitions.
inline std::vector<std::vector<Polynomial>> symmetrized_action(const SymmetricSpinBasis& basis,
                                                               const SymbolicMatrix& G,
                                                               const SymbolicMatrix& Gamma) {
    const int dim = basis.dim();
    const int slots = basis.two_s;
    std::vector<std::vector<Polynomial>> T(dim, std::vector<Polynomial>(dim));
    for (int row = 0; row < dim; ++row) {
        std::vector<int> rep = basis.representative(row);
        for (int i = 0; i < slots; ++i) {
            // product of the diagonal Gamma entries over the spectator slots
            Polynomial spectator = Polynomial::one();
            bool dead = false;
            for (int j = 0; j < slots && !dead; ++j) {
                if (j == i) continue;
                const Polynomial& ge = Gamma.at(rep[j], rep[j]);
                if (ge.is_zero()) dead = true;
                else spectator *= ge;
            }
            if (dead) continue;
            for (int target = 0; target < 4; ++target) {
                const Polynomial& entry = G.at(rep[i], target);
                if (entry.is_zero()) continue;
                std::array<int, 4> col{};
                for (int j = 0; j < slots; ++j) ++col[j == i ? target : rep[j]];
                T[row][basis.index.at(col)] += spectator * entry;
            }
        }
    }
    return T;
}

}  // namespace detail

/// Classifies the components of the rank-2S symmetric multispinor by the
/// exact zero pattern of the symmetrized wave operator: a component is
/// retained when its row or column carries any coupling; a retained row with
/// a time derivative is dynamical, otherwise constrained.
inline CouplingReport coupling_analysis(int rank_2s) {
    if (rank_2s < 1 || rank_2s > 8) throw std::invalid_argument("rank_2s must be in 1..8");
    SymmetricSpinBasis basis = SymmetricSpinBasis::make(rank_2s);
    SymbolicMatrix G = build_wave_operator(true);
    Generators g = build_generators();
    auto T = detail::symmetrized_action(basis, G, g.Gamma);

    const int dim = basis.dim();
    CouplingReport report;
    report.two_s = rank_2s;
    report.total = dim;
    for (int c = 0; c < dim; ++c) {
        bool row_nonzero = false, col_nonzero = false, row_has_dt = false;
        bool row_couples_other = false;
        for (int j = 0; j < dim; ++j) {
            if (!T[c][j].is_zero()) {
                row_nonzero = true;
                if (T[c][j].contains(Symbol::dt)) row_has_dt = true;
                if (j != c) row_couples_other = true;
            }
            if (!T[j][c].is_zero()) {
                col_nonzero = true;
                if (j != c) row_couples_other = true;
            }
        }
        CouplingClass cls;
        cls.occupation = basis.occupations[c];
        cls.retained = row_nonzero || col_nonzero;
        if (!cls.retained) cls.kind = ComponentKind::absent;
        else if (row_has_dt) cls.kind = ComponentKind::dynamical;
        else cls.kind = row_couples_other ? ComponentKind::constrained : ComponentKind::absent;
        if (cls.retained) ++report.retained;
        report.classes.push_back(cls);
    }
    return report;
}

}  // namespace galosc
