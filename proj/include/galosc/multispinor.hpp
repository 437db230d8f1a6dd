#pragma once

#include "galosc/fock.hpp"
#include "galosc/spectrum.hpp"
#include "galosc/sym_basis.hpp"

#include <Eigen/Eigenvalues>

#include <array>
#include <limits>
#include <optional>
#include <vector>

namespace galosc {

// Composite spaces are ordered sector-major: index = spin_state * fock_dim +
// fock_state, with sym-basis classes in the SymmetricSpinBasis order (phi
// sector first, then chi).

/// 4x4 table of Fock-space operators; an empty matrix means a zero entry.
struct Mat4Fock {
    std::array<std::array<SparseC, 4>, 4> e;
    int fock_dim = 0;

    static Mat4Fock zero(int fock_dim) {
        Mat4Fock m;
        m.fock_dim = fock_dim;
        for (auto& row : m.e)
            for (auto& x : row) x = SparseC(fock_dim, fock_dim);
        return m;
    }
};

/// Spin-S matrices on the phi sector, built as the symmetrized one-body lift
/// of sigma/2 over the two upper letters (the (2S+1)-dimensional irreducible
/// representation).
struct SpinMatrices {
    int two_s = 0;
    std::array<DenseC, 3> S;
};

inline SpinMatrices build_spin_matrices(int two_s) {
    if (two_s < 1) throw std::invalid_argument("two_s must be >= 1");
    const int d = two_s + 1;
    const Complex I(0.0, 1.0);
    Eigen::Matrix2cd sig[3];
    sig[0] << 0, 1, 1, 0;
    sig[1] << 0, -I, I, 0;
    sig[2] << 1, 0, 0, -1;
    SpinMatrices out;
    out.two_s = two_s;
    for (auto& m : out.S) m = DenseC::Zero(d, d);
    // phi states ordered by k2 ascending: state i has (k1, k2) = (2S - i, i)
    for (int i = 0; i < d; ++i) {
        int k[2] = {two_s - i, i};
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                if (k[b] == 0) continue;
                int kp[2] = {k[0], k[1]};
                --kp[b];
                ++kp[a];
                if (kp[0] < 0 || kp[1] < 0 || kp[0] > two_s || kp[1] > two_s) continue;
                double w = std::sqrt(double(k[b]) * double(kp[a]));
                int ip = kp[1];
                for (int m = 0; m < 3; ++m)
                    if (sig[m](a, b) != Complex(0, 0)) out.S[m](ip, i) += 0.5 * sig[m](a, b) * w;
            }
    }
    return out;
}

/// Symmetrized action sum_i Gamma...h(slot i)...Gamma of a one-index operator
/// h (4x4 table of Fock operators) on the orthonormal occupation basis of the
/// rank-2S symmetric space tensored with Fock space. The Gamma dressing makes
/// every row and column with more than one lower index vanish identically.
inline SparseC build_symmetric_action(const SymmetricSpinBasis& basis, const Mat4Fock& h) {
    const int F = h.fock_dim;
    const int D = basis.dim() * F;
    std::vector<Eigen::Triplet<Complex>> trip;
    for (int col = 0; col < basis.dim(); ++col) {
        const auto& k = basis.occupations[col];
        for (int b = 0; b < 4; ++b) {
            if (k[b] == 0) continue;
            std::array<int, 4> spect = k;
            --spect[b];
            if (spect[2] + spect[3] != 0) continue;  // Gamma kills lower spectators
            for (int a = 0; a < 4; ++a) {
                const SparseC& entry = h.e[a][b];
                if (entry.nonZeros() == 0) continue;
                std::array<int, 4> kp = spect;
                ++kp[a];
                int row = basis.index.at(kp);
                double w = std::sqrt(double(k[b]) * double(kp[a]));
                for (int oc = 0; oc < entry.outerSize(); ++oc)
                    for (SparseC::InnerIterator it(entry, oc); it; ++it)
                        trip.emplace_back(row * F + it.row(), col * F + it.col(), w * it.value());
            }
        }
    }
    SparseC out(D, D);
    out.setFromTriplets(trip.begin(), trip.end());
    return out;
}

/// Plain symmetrized one-body lift sum_i h(slot i) with identity spectators,
/// on the same basis. This is the lift behind the spin matrices; unlike the
/// Gamma-dressed action it does not decouple multi-lower components.
inline SparseC one_body_lift(const SymmetricSpinBasis& basis, const Mat4Fock& h) {
    const int F = h.fock_dim;
    const int D = basis.dim() * F;
    std::vector<Eigen::Triplet<Complex>> trip;
    for (int col = 0; col < basis.dim(); ++col) {
        const auto& k = basis.occupations[col];
        for (int b = 0; b < 4; ++b) {
            if (k[b] == 0) continue;
            for (int a = 0; a < 4; ++a) {
                const SparseC& entry = h.e[a][b];
                if (entry.nonZeros() == 0) continue;
                std::array<int, 4> kp = k;
                --kp[b];
                ++kp[a];
                int row = basis.index.at(kp);
                double w = std::sqrt(double(k[b]) * double(kp[a]));
                for (int oc = 0; oc < entry.outerSize(); ++oc)
                    for (SparseC::InnerIterator it(entry, oc); it; ++it)
                        trip.emplace_back(row * F + it.row(), col * F + it.col(), w * it.value());
            }
        }
    }
    SparseC out(D, D);
    out.setFromTriplets(trip.begin(), trip.end());
    return out;
}

/// Non-time part of the wave operator as a 4x4 table of Fock operators:
/// sigma.(p + iMwr) in the upper-right block, sigma.(p - iMwr) in the
/// lower-left, 2M on the lower diagonal.
inline Mat4Fock wave_operator_table(const Kinematics& kin) {
    const int F = kin.basis->dim();
    Mat4Fock h = Mat4Fock::zero(F);
    const Complex I(0.0, 1.0);
    Eigen::Matrix2cd sig[3];
    sig[0] << 0, 1, 1, 0;
    sig[1] << 0, -I, I, 0;
    sig[2] << 1, 0, 0, -1;
    for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t) {
            SparseC plus(F, F), minus(F, F);
            for (int k = 0; k < 3; ++k) {
                if (sig[k](s, t) == Complex(0, 0)) continue;
                SparseC shift = (I * kin.mass * kin.omega) * kin.r[k];
                plus = plus + sig[k](s, t) * SparseC(kin.p[k] + shift);
                minus = minus + sig[k](s, t) * SparseC(kin.p[k] - shift);
            }
            h.e[s][2 + t] = plus.pruned(1e-300);
            h.e[2 + s][t] = minus.pruned(1e-300);
        }
    SparseC twoM(F, F);
    twoM.setIdentity();
    twoM = 2.0 * kin.mass * twoM;
    h.e[2][2] = twoM;
    h.e[3][3] = twoM;
    return h;
}

struct SectorBlocks {
    SparseC K_phi_chi;
    SparseC K_chi_phi;
    SparseC K_chi_chi;  // must equal 2M times identity
};

struct ReductionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline SectorBlocks build_sector_blocks(const SymmetricSpinBasis& basis, const Kinematics& kin,
                                        std::optional<SparseC>* full_action_out = nullptr) {
    const int F = kin.basis->dim();
    Mat4Fock h = wave_operator_table(kin);
    SparseC full = build_symmetric_action(basis, h);
    const int nphi = basis.phi_count() * F;
    const int nchi = basis.chi_count() * F;
    SectorBlocks kb;
    kb.K_phi_chi = full.block(0, nphi, nphi, nchi);
    kb.K_chi_phi = full.block(nphi, 0, nchi, nphi);
    kb.K_chi_chi = full.block(nphi, nphi, nchi, nchi);
    SparseC ident(nchi, nchi);
    ident.setIdentity();
    double dev = max_abs(DenseC(kb.K_chi_chi) - 2.0 * kin.mass * DenseC(ident));
    if (dev > 1e-12)
        throw ReductionError("chi-sector block deviates from 2M identity: assembly bug");
    if (full_action_out) *full_action_out = std::move(full);
    return kb;
}

/// Eigenvalue record for one (N, l, j) sector of the reduced problem.
struct SectorLevel {
    int N = 0;
    int n = 0;
    int ell = 0;
    int two_j = 0;
    double energy = 0.0;
    Rational closed_form;
    double deviation = 0.0;
    int degeneracy = 0;
};

struct ReductionReport {
    int two_s = 0;
    Rational lambda = 1;
    int n_max = 0;
    double mass = 1.0;
    double omega = 1.0;
    bool nonminimal = false;
    int field_component_count = 0;  // 6S+1 minimal, 12S+4 nonminimal, 4 at spin 0
    double hermiticity_defect = 0.0;
    double max_deviation = 0.0;     // interior eigenvalues vs closed form, multiset match
    double lowest_eigenvalue = 0.0;
    bool matched = false;
    double tolerance = 1e-9;
    std::vector<SectorLevel> sectors;
};

namespace detail {

/// Effective Hamiltonian on phi (x) Fock for the minimal theory (lambda = 1)
/// or the lambda-weighted mix for the non-minimal one.
inline DenseC effective_hamiltonian(int two_s, double lambda, const Kinematics& kin, bool nonminimal,
                                    SparseC* full_action = nullptr) {
    const int F = kin.basis->dim();
    const Complex I(0.0, 1.0);
    if (two_s == 0) {
        // spin-0 reduction: 2M A = (grad + Mwr) C, single dynamical field
        DenseC h = DenseC::Zero(F, F);
        for (int k = 0; k < 3; ++k) {
            SparseC shift = (I * kin.mass * kin.omega) * kin.r[k];
            h += DenseC(SparseC(kin.p[k] + shift) * SparseC(kin.p[k] - shift));
        }
        return h / (2.0 * kin.mass);
    }
    SymmetricSpinBasis basis = SymmetricSpinBasis::make(two_s);
    std::optional<SparseC> full;
    SectorBlocks kb = build_sector_blocks(basis, kin, &full);
    if (full_action) *full_action = *full;
    DenseC h_min = DenseC(SparseC(kb.K_phi_chi * kb.K_chi_phi)) / (2.0 * kin.mass * two_s);
    if (!nonminimal) return h_min;
    // (1-lambda) part from eliminating the vector constraint fields psi^k
    const int d = two_s + 1;
    DenseC scal = DenseC::Zero(F, F);
    for (int k = 0; k < 3; ++k) {
        SparseC shift = (I * kin.mass * kin.omega) * kin.r[k];
        scal += DenseC(SparseC(kin.p[k] + shift) * SparseC(kin.p[k] - shift));
    }
    scal /= 2.0 * kin.mass;
    DenseC h = lambda * h_min;
    for (int s = 0; s < d; ++s) h.block(s * F, s * F, F, F) += (1.0 - lambda) * scal;
    return h;
}

inline std::vector<int> block_indices(const FockBasis& fb, int spin_dim, int N) {
    std::vector<int> idx;
    const int F = fb.dim();
    for (int s = 0; s < spin_dim; ++s)
        for (int i = 0; i < F; ++i)
            if (fb.total_quanta(i) == N) idx.push_back(s * F + i);
    return idx;
}

inline std::vector<int> interior_indices(const FockBasis& fb, int spin_dim, int margin) {
    std::vector<int> idx;
    const int F = fb.dim();
    for (int s = 0; s < spin_dim; ++s)
        for (int i = 0; i < F; ++i)
            if (fb.total_quanta(i) <= fb.n_max - margin) idx.push_back(s * F + i);
    return idx;
}

inline int round_two_j(double jj) {
    // eigenvalue of J^2 is j(j+1); two_j = round(sqrt(4x+1) - 1)
    return static_cast<int>(std::lround(std::sqrt(4.0 * jj + 1.0) - 1.0));
}

/// Simultaneous eigenspace refinement: within each eigenvalue cluster of A
/// (tolerance tol), diagonalize the compression of B, and so on. Returns a
/// list of (labels..., vectors) leaves.
struct LabeledSubspace {
    std::vector<double> labels;
    DenseC vectors;  // columns
};

inline std::vector<LabeledSubspace> refine(const std::vector<LabeledSubspace>& spaces,
                                           const DenseC& op, double tol = 1e-6) {
    std::vector<LabeledSubspace> out;
    for (const auto& sp : spaces) {
        DenseC compressed = sp.vectors.adjoint() * op * sp.vectors;
        Eigen::SelfAdjointEigenSolver<DenseC> es(0.5 * (compressed + compressed.adjoint()));
        const auto& ev = es.eigenvalues();
        int start = 0;
        while (start < ev.size()) {
            int stop = start + 1;
            while (stop < ev.size() && ev(stop) - ev(stop - 1) < tol) ++stop;
            LabeledSubspace leaf;
            leaf.labels = sp.labels;
            double mean = 0.0;
            for (int i = start; i < stop; ++i) mean += ev(i);
            leaf.labels.push_back(mean / (stop - start));
            leaf.vectors = sp.vectors * es.eigenvectors().middleCols(start, stop - start);
            out.push_back(std::move(leaf));
            start = stop;
        }
    }
    return out;
}

}  // namespace detail

/// Assembles the rank-2S wave equation, eliminates the constrained sector by
/// the explicit Schur complement (the chi block is the scalar 2M), and
/// compares every interior eigenvalue of the effective Hamiltonian with the
/// closed-form spectrum. Sector labels (l, j) are recovered by simultaneous
/// diagonalization with L^2 and J^2.
inline ReductionReport assemble_and_reduce(int two_s, int n_max, double mass = 1.0,
                                           double omega = 1.0, const Rational& lambda = 1,
                                           bool nonminimal = false, double tolerance = 1e-9) {
    if (two_s < 0) throw std::invalid_argument("two_s must be >= 0");
    if (n_max < 4) throw std::invalid_argument("n_max must be >= 4");
    if (nonminimal && two_s < 1) throw std::invalid_argument("non-minimal theory needs two_s >= 1");
    if (!nonminimal && lambda != 1)
        throw std::invalid_argument("minimal theory has no lambda parameter");

    FockBasis fb = FockBasis::make(n_max);
    Kinematics kin = build_kinematics(fb, mass, omega);
    const int F = fb.dim();
    const int spin_dim = two_s + 1;
    const double lam = to_double(lambda);

    ReductionReport rep;
    rep.two_s = two_s;
    rep.lambda = lambda;
    rep.n_max = n_max;
    rep.mass = mass;
    rep.omega = omega;
    rep.nonminimal = nonminimal;
    rep.tolerance = tolerance;
    // 6S+1 minimal and 12S+4 non-minimal, with S = two_s/2
    rep.field_component_count = two_s == 0 ? 4 : (nonminimal ? 6 * two_s + 4 : 3 * two_s + 1);

    DenseC H = detail::effective_hamiltonian(two_s, lam, kin, nonminimal);

    auto interior = detail::interior_indices(fb, spin_dim, 2);
    DenseC Hint = compress(H, interior, interior);
    rep.hermiticity_defect = max_abs(Hint - DenseC(Hint.adjoint()));

    // angular labels
    DenseC L2 = DenseC::Zero(spin_dim * F, spin_dim * F);
    DenseC J2 = DenseC::Zero(spin_dim * F, spin_dim * F);
    {
        DenseC l2f = DenseC::Zero(F, F);
        for (int k = 0; k < 3; ++k) l2f += DenseC(SparseC(kin.L[k] * kin.L[k]));
        std::array<DenseC, 3> Sk;
        if (two_s >= 1) {
            SpinMatrices sm = build_spin_matrices(two_s);
            Sk = sm.S;
        } else {
            for (auto& m : Sk) m = DenseC::Zero(1, 1);
        }
        for (int s = 0; s < spin_dim; ++s) L2.block(s * F, s * F, F, F) = l2f;
        // J^2 = L^2 + S^2 + 2 S.L
        double s2 = 0.25 * two_s * (two_s + 2);
        J2 = L2 + s2 * DenseC::Identity(spin_dim * F, spin_dim * F);
        for (int k = 0; k < 3; ++k) {
            DenseC lk = DenseC(kin.L[k]);
            for (int s = 0; s < spin_dim; ++s)
                for (int t = 0; t < spin_dim; ++t)
                    if (std::abs(Sk[k](s, t)) > 0.0)
                        J2.block(s * F, t * F, F, F) += 2.0 * Sk[k](s, t) * lk;
        }
    }

    double maxdev = 0.0;
    double lowest = std::numeric_limits<double>::infinity();
    for (int N = 0; N <= n_max - 2; ++N) {
        auto idx = detail::block_indices(fb, spin_dim, N);
        DenseC HB = compress(H, idx, idx);
        DenseC L2B = compress(L2, idx, idx);
        DenseC J2B = compress(J2, idx, idx);

        // multiset comparison of the whole block against the closed form
        Eigen::SelfAdjointEigenSolver<DenseC> es(0.5 * (HB + HB.adjoint()));
        std::vector<double> got(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
        std::vector<double> expected;
        for (int ell = N % 2; ell <= N; ell += 2) {
            int n = (N - ell) / 2;
            std::vector<int> tjs =
                two_s == 0 ? std::vector<int>{2 * ell} : allowed_two_j(ell, two_s);
            for (int tj : tjs) {
                Rational e = nonminimal ? lambda_energy(n, ell, tj, two_s, lambda)
                                        : closed_form_energy(n, ell, tj, two_s);
                double val = omega * to_double(e);
                for (int m = 0; m <= tj; ++m) expected.push_back(val);
            }
        }
        std::sort(expected.begin(), expected.end());
        if (got.size() != expected.size())
            throw ReductionError("block dimension mismatch against quantum-number count");
        for (size_t i = 0; i < got.size(); ++i)
            maxdev = std::max(maxdev, std::abs(got[i] - expected[i]));
        if (!got.empty()) lowest = std::min(lowest, got.front());

        // labeled sectors via {J^2, L^2} refinement
        detail::LabeledSubspace root;
        root.vectors = DenseC::Identity(idx.size(), idx.size());
        auto jspaces = detail::refine({root}, J2B);
        for (auto& jsp : jspaces) {
            auto lspaces = detail::refine({jsp}, L2B);
            for (auto& lsp : lspaces) {
                int two_j = detail::round_two_j(lsp.labels[0]);
                int ell = static_cast<int>(std::lround(
                    0.5 * (std::sqrt(4.0 * lsp.labels[1] + 1.0) - 1.0)));
                DenseC hsub = lsp.vectors.adjoint() * HB * lsp.vectors;
                Eigen::SelfAdjointEigenSolver<DenseC> hs(0.5 * (hsub + hsub.adjoint()));
                SectorLevel lv;
                lv.N = N;
                lv.ell = ell;
                lv.two_j = two_j;
                lv.n = (N - ell) / 2;
                lv.degeneracy = static_cast<int>(hs.eigenvalues().size());
                lv.energy = hs.eigenvalues().mean();
                lv.closed_form = nonminimal ? lambda_energy(lv.n, ell, two_j, two_s, lambda)
                                            : closed_form_energy(lv.n, ell, two_j, two_s);
                lv.deviation = std::abs(lv.energy - omega * to_double(lv.closed_form));
                rep.sectors.push_back(lv);
            }
        }
    }
    rep.max_deviation = maxdev;
    rep.lowest_eigenvalue = lowest;
    rep.matched = maxdev <= tolerance;
    return rep;
}

inline ReductionReport assemble_nonminimal(int two_s, const Rational& lambda, int n_max,
                                           double mass = 1.0, double omega = 1.0,
                                           double tolerance = 1e-9) {
    return assemble_and_reduce(two_s, n_max, mass, omega, lambda, true, tolerance);
}

/// Max-norm interior defect of H_eff against p^2/2M + Mw^2 r^2/2 - 3w/2
/// - (w lambda / S) S.L.
inline double effective_hamiltonian_identity(int two_s, int n_max, double mass = 1.0,
                                             double omega = 1.0, double lambda = 1.0,
                                             bool nonminimal = false) {
    FockBasis fb = FockBasis::make(n_max);
    Kinematics kin = build_kinematics(fb, mass, omega);
    const int F = fb.dim();
    const int spin_dim = two_s + 1;
    DenseC H = detail::effective_hamiltonian(two_s, lambda, kin, nonminimal);

    DenseC h0 = DenseC::Zero(F, F);
    for (int k = 0; k < 3; ++k)
        h0 += DenseC(SparseC(kin.p[k] * kin.p[k])) / (2.0 * mass) +
              0.5 * mass * omega * omega * DenseC(SparseC(kin.r[k] * kin.r[k]));
    h0 -= 1.5 * omega * DenseC::Identity(F, F);

    DenseC ref = DenseC::Zero(spin_dim * F, spin_dim * F);
    for (int s = 0; s < spin_dim; ++s) ref.block(s * F, s * F, F, F) = h0;
    if (two_s >= 1) {
        SpinMatrices sm = build_spin_matrices(two_s);
        double coeff = lambda * omega / (0.5 * two_s);
        for (int k = 0; k < 3; ++k) {
            DenseC lk = DenseC(kin.L[k]);
            for (int s = 0; s < spin_dim; ++s)
                for (int t = 0; t < spin_dim; ++t)
                    if (std::abs(sm.S[k](s, t)) > 0.0)
                        ref.block(s * F, t * F, F, F) -= coeff * sm.S[k](s, t) * lk;
        }
    }
    auto interior = detail::interior_indices(fb, spin_dim, 2);
    return max_abs(compress(DenseC(H - ref), interior, interior));
}

/// Least-squares spin-orbit coefficient kappa of H_eff = (oscillator shifted)
/// - kappa S.L, extracted on the N = 1 block. For the minimal theory
/// kappa S = w; for the non-minimal one kappa S = lambda w.
inline double spin_orbit_coefficient(int two_s, int n_max = 4, double mass = 1.0,
                                     double omega = 1.0, double lambda = 1.0,
                                     bool nonminimal = false) {
    if (two_s < 1) throw std::invalid_argument("spin-orbit extraction needs two_s >= 1");
    FockBasis fb = FockBasis::make(n_max);
    Kinematics kin = build_kinematics(fb, mass, omega);
    const int F = fb.dim();
    const int spin_dim = two_s + 1;
    DenseC H = detail::effective_hamiltonian(two_s, lambda, kin, nonminimal);

    DenseC h0 = DenseC::Zero(F, F);
    for (int k = 0; k < 3; ++k)
        h0 += DenseC(SparseC(kin.p[k] * kin.p[k])) / (2.0 * mass) +
              0.5 * mass * omega * omega * DenseC(SparseC(kin.r[k] * kin.r[k]));
    h0 -= 1.5 * omega * DenseC::Identity(F, F);

    SpinMatrices sm = build_spin_matrices(two_s);
    DenseC SL = DenseC::Zero(spin_dim * F, spin_dim * F);
    DenseC D = DenseC::Zero(spin_dim * F, spin_dim * F);
    for (int s = 0; s < spin_dim; ++s) D.block(s * F, s * F, F, F) = h0;
    D -= H;
    for (int k = 0; k < 3; ++k) {
        DenseC lk = DenseC(kin.L[k]);
        for (int s = 0; s < spin_dim; ++s)
            for (int t = 0; t < spin_dim; ++t)
                if (std::abs(sm.S[k](s, t)) > 0.0) SL.block(s * F, t * F, F, F) += sm.S[k](s, t) * lk;
    }
    auto idx = detail::block_indices(fb, spin_dim, 1);
    DenseC DB = compress(D, idx, idx);
    DenseC SLB = compress(SL, idx, idx);
    Complex num = (DB * SLB).trace();
    Complex den = (SLB * SLB).trace();
    return (num / den).real();
}

/// Max-norm interior difference between the non-minimal Hamiltonian at
/// lambda = 1 and the minimal one.
inline double nonminimal_minimal_difference(int two_s, int n_max, double mass = 1.0,
                                            double omega = 1.0) {
    FockBasis fb = FockBasis::make(n_max);
    Kinematics kin = build_kinematics(fb, mass, omega);
    DenseC a = detail::effective_hamiltonian(two_s, 1.0, kin, true);
    DenseC b = detail::effective_hamiltonian(two_s, 1.0, kin, false);
    auto interior = detail::interior_indices(fb, two_s + 1, 2);
    return max_abs(compress(DenseC(a - b), interior, interior));
}

/// Zero-pattern check: the assembled symmetrized action must vanish on every
/// row and column whose class has more than one lower index. Returns the max
/// magnitude found on those rows/columns (0 when the decoupling is exact).
inline double decoupled_sector_leakage(int two_s, int n_max, double mass = 1.0,
                                       double omega = 1.0) {
    FockBasis fb = FockBasis::make(n_max);
    Kinematics kin = build_kinematics(fb, mass, omega);
    SymmetricSpinBasis basis = SymmetricSpinBasis::make(two_s);
    SparseC full = build_symmetric_action(basis, wave_operator_table(kin));
    const int F = fb.dim();
    const int retained = basis.retained_count() * F;
    double leak = 0.0;
    for (int oc = 0; oc < full.outerSize(); ++oc)
        for (SparseC::InnerIterator it(full, oc); it; ++it)
            if (it.row() >= retained || it.col() >= retained)
                leak = std::max(leak, std::abs(it.value()));
    return leak;
}

}  // namespace galosc
