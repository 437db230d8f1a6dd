#pragma once

#include "galosc/symbolic_matrix.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace galosc {

// The 4-dimensional spinor space is (rho block) x (sigma spin): index
// a in {0..3} splits as a = 2*block + spin, so a in {0,1} are the upper
// components and a in {2,3} the lower ones.

inline SymbolicMatrix pauli(int k) {
    SymbolicMatrix m(2);
    switch (k) {
        case 0:
            m.at(0, 1) = Polynomial::one();
            m.at(1, 0) = Polynomial::one();
            break;
        case 1:
            m.at(0, 1) = Polynomial::constant(GaussianRational(0, -1));
            m.at(1, 0) = Polynomial::constant(GaussianRational::i());
            break;
        case 2:
            m.at(0, 0) = Polynomial::one();
            m.at(1, 1) = Polynomial::constant(GaussianRational(-1));
            break;
        default:
            throw std::invalid_argument("pauli index out of range");
    }
    return m;
}

/// The generator set of the first-order Galilean wave operator: two commuting
/// Pauli sets spanning the 4x4 spinor space, the invariant projector Gamma,
/// and the operator coefficients A, B_k, C.
struct Generators {
    std::array<SymbolicMatrix, 3> sigma;  // 1 (x) pauli_k
    std::array<SymbolicMatrix, 3> rho;    // pauli_k (x) 1
    SymbolicMatrix Gamma;                 // (1 + rho3)/2
    SymbolicMatrix A;                     // = Gamma
    std::array<SymbolicMatrix, 3> B;      // rho1 sigma_k
    SymbolicMatrix C;                     // M (1 - rho3)

    std::map<std::string, SymbolicMatrix> as_map() const {
        std::map<std::string, SymbolicMatrix> m;
        for (int k = 0; k < 3; ++k) {
            m["sigma" + std::to_string(k + 1)] = sigma[k];
            m["rho" + std::to_string(k + 1)] = rho[k];
            m["B" + std::to_string(k + 1)] = B[k];
        }
        m["Gamma"] = Gamma;
        m["A"] = A;
        m["C"] = C;
        return m;
    }
};

inline Generators build_generators() {
    Generators g;
    SymbolicMatrix id2 = SymbolicMatrix::identity(2);
    for (int k = 0; k < 3; ++k) {
        g.sigma[k] = kron(id2, pauli(k));
        g.rho[k] = kron(pauli(k), id2);
    }
    GaussianRational half(Rational(1, 2));
    g.Gamma = half * (SymbolicMatrix::identity(4) + g.rho[2]);
    g.A = g.Gamma;
    for (int k = 0; k < 3; ++k) g.B[k] = g.rho[0] * g.sigma[k];
    g.C = Polynomial::symbol(Symbol::mass) * (SymbolicMatrix::identity(4) - g.rho[2]);
    return g;
}

/// G = A (i dt) + B_k (1/i) d_k + C, optionally with the oscillator
/// substitution p -> p - i M w r rho3 (the rho3 composed to the right of
/// B_k), which adds B_k rho3 (-i M w r_k).
inline SymbolicMatrix build_wave_operator(bool with_oscillator) {
    Generators g = build_generators();
    SymbolicMatrix G = Polynomial::symbol(Symbol::dt, GaussianRational::i()) * g.A;
    static const Symbol dsym[3] = {Symbol::d1, Symbol::d2, Symbol::d3};
    static const Symbol rsym[3] = {Symbol::r1, Symbol::r2, Symbol::r3};
    for (int k = 0; k < 3; ++k) {
        G += Polynomial::symbol(dsym[k], GaussianRational(0, -1)) * g.B[k];
        if (with_oscillator) {
            Polynomial coeff = Polynomial::symbol(Symbol::mass, GaussianRational(0, -1)) *
                               Polynomial::symbol(Symbol::omega) * Polynomial::symbol(rsym[k]);
            G += coeff * (g.B[k] * g.rho[2]);
        }
    }
    G += g.C;
    return G;
}

enum class BispinorSymmetry { symmetric, antisymmetric };

enum class ComponentKind { dynamical, constrained, absent };

struct FieldComponentLabel {
    Symbol field;
    ComponentKind kind;
};

/// Bispinor parametrization in terms of named field symbols. The 1/sqrt(2)
/// normalization is tracked as a power flag so entries stay in the rational
/// coefficient field; bilinears pick up the exact factor (1/2)^power.
struct BispinorParametrization {
    SymbolicMatrix psi;
    int inv_sqrt2_power = 1;
    std::vector<Symbol> field_symbols;  // unstarred, in display order
};

/// psi for the spin-1 (symmetric) or spin-0 (antisymmetric) case. With
/// include_omitted the components that multiply (1-rho3)/2 are carried too,
/// so that their non-contribution to the Lagrangian can be checked rather
/// than assumed.
inline BispinorParametrization parametrize_bispinor(BispinorSymmetry symmetry,
                                                    bool include_omitted = false) {
    Generators g = build_generators();
    GaussianRational half(Rational(1, 2));
    SymbolicMatrix lower_proj = half * (SymbolicMatrix::identity(4) - g.rho[2]);

    BispinorParametrization out;
    SymbolicMatrix m(4);
    if (symmetry == BispinorSymmetry::symmetric) {
        static const Symbol xs[3] = {Symbol::X1, Symbol::X2, Symbol::X3};
        static const Symbol ys[3] = {Symbol::Y1, Symbol::Y2, Symbol::Y3};
        static const Symbol ws[3] = {Symbol::W1, Symbol::W2, Symbol::W3};
        for (int k = 0; k < 3; ++k) {
            m += Polynomial::symbol(xs[k]) * (g.sigma[k] * g.Gamma);
            m += Polynomial::symbol(ys[k]) * (g.sigma[k] * g.rho[0]);
            out.field_symbols.push_back(xs[k]);
        }
        m += Polynomial::symbol(Symbol::Z) * g.rho[1];
        for (int k = 0; k < 3; ++k) out.field_symbols.push_back(ys[k]);
        out.field_symbols.push_back(Symbol::Z);
        if (include_omitted) {
            for (int k = 0; k < 3; ++k) {
                m += Polynomial::symbol(ws[k]) * (lower_proj * g.sigma[k]);
                out.field_symbols.push_back(ws[k]);
            }
        }
    } else {
        static const Symbol as[3] = {Symbol::A1, Symbol::A2, Symbol::A3};
        for (int k = 0; k < 3; ++k) {
            m += Polynomial::symbol(as[k]) * (g.sigma[k] * g.rho[1]);
            out.field_symbols.push_back(as[k]);
        }
        m += Polynomial::symbol(Symbol::B) * g.rho[0];
        m += Polynomial::symbol(Symbol::C) * g.Gamma;
        out.field_symbols.push_back(Symbol::B);
        out.field_symbols.push_back(Symbol::C);
        if (include_omitted) {
            m += Polynomial::symbol(Symbol::V) * lower_proj;
            out.field_symbols.push_back(Symbol::V);
        }
    }
    out.psi = m * g.sigma[1];
    return out;
}

/// Fully expanded trace Lagrangian: Tr G psi Gamma psi* for the symmetric
/// case and -Tr G psi Gamma psi* for the antisymmetric one, including the
/// exact 1/2 from the two bispinor normalizations.
inline Polynomial expand_trace_lagrangian(BispinorSymmetry symmetry, bool with_oscillator,
                                          bool include_omitted = false) {
    SymbolicMatrix G = build_wave_operator(with_oscillator);
    BispinorParametrization par = parametrize_bispinor(symmetry, include_omitted);
    Generators g = build_generators();
    SymbolicMatrix psis = par.psi.conjugated();
    Polynomial L = (G * par.psi * g.Gamma * psis).trace();
    GaussianRational scale(Rational(1, 2));  // (1/sqrt2)^2 from psi and psi*
    for (int k = 1; k < par.inv_sqrt2_power; ++k) scale = scale * GaussianRational(Rational(1, 2));
    if (symmetry == BispinorSymmetry::antisymmetric) scale = -scale;
    return scale * L;
}

/// Classifies each field of the parametrization from the expanded Lagrangian:
/// a field whose starred equation row carries a time derivative is dynamical,
/// one whose row couples it to other fields is constrained, and one that sits
/// alone in its row (or is missing entirely) is absent.
inline std::vector<FieldComponentLabel> classify_components(BispinorSymmetry symmetry,
                                                            bool with_oscillator = true) {
    BispinorParametrization par = parametrize_bispinor(symmetry);
    Polynomial L = expand_trace_lagrangian(symmetry, with_oscillator);
    std::vector<FieldComponentLabel> labels;
    for (Symbol f : par.field_symbols) {
        Polynomial row = L.terms_containing(star(f));
        ComponentKind kind = ComponentKind::absent;
        if (row.contains(Symbol::dt) || row.contains(Symbol::dt_on_star)) {
            kind = ComponentKind::dynamical;
        } else {
            for (Symbol other : par.field_symbols) {
                if (other != f && row.contains(other)) {
                    kind = ComponentKind::constrained;
                    break;
                }
            }
        }
        labels.push_back({f, kind});
    }
    return labels;
}

}  // namespace galosc
