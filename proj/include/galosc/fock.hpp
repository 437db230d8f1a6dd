#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace galosc {

using Complex = std::complex<double>;
using SparseC = Eigen::SparseMatrix<Complex>;
using DenseC = Eigen::MatrixXcd;

/// Truncated 3D oscillator basis: occupation triples (n1,n2,n3) with total
/// quanta <= n_max, in graded lexicographic order (by total N, then lex).
struct FockBasis {
    int n_max = 0;
    std::vector<std::array<int, 3>> states;
    std::map<std::array<int, 3>, int> index;

    static FockBasis make(int n_max) {
        if (n_max < 0 || n_max > 40) throw std::invalid_argument("n_max must be in 0..40");
        FockBasis b;
        b.n_max = n_max;
        for (int N = 0; N <= n_max; ++N)
            for (int n1 = 0; n1 <= N; ++n1)
                for (int n2 = 0; n2 <= N - n1; ++n2)
                    b.states.push_back({n1, n2, N - n1 - n2});
        for (int i = 0; i < static_cast<int>(b.states.size()); ++i) b.index[b.states[i]] = i;
        return b;
    }

    int dim() const { return static_cast<int>(states.size()); }
    int total_quanta(int i) const {
        const auto& s = states[i];
        return s[0] + s[1] + s[2];
    }
};

/// Position, momentum, angular momentum and number operators on a FockBasis,
/// realized through the 1D ladder operators along each Cartesian axis.
struct Kinematics {
    const FockBasis* basis = nullptr;
    double mass = 1.0;
    double omega = 1.0;
    std::array<SparseC, 3> r;
    std::array<SparseC, 3> p;
    std::array<SparseC, 3> L;  // L_k = (r x p)_k, number conserving
    SparseC number_op;
};

namespace detail {

inline SparseC lowering(const FockBasis& b, int axis) {
    std::vector<Eigen::Triplet<Complex>> trip;
    for (int i = 0; i < b.dim(); ++i) {
        auto s = b.states[i];
        if (s[axis] == 0) continue;
        double amp = std::sqrt(double(s[axis]));
        --s[axis];
        trip.emplace_back(b.index.at(s), i, Complex(amp, 0.0));
    }
    SparseC a(b.dim(), b.dim());
    a.setFromTriplets(trip.begin(), trip.end());
    return a;
}

}  // namespace detail

inline Kinematics build_kinematics(const FockBasis& basis, double mass, double omega) {
    if (mass <= 0.0 || omega <= 0.0) throw std::invalid_argument("mass and omega must be positive");
    Kinematics k;
    k.basis = &basis;
    k.mass = mass;
    k.omega = omega;
    std::array<SparseC, 3> a;
    for (int ax = 0; ax < 3; ++ax) a[ax] = detail::lowering(basis, ax);
    const double rs = 1.0 / std::sqrt(2.0 * mass * omega);
    const Complex ps = Complex(0.0, 1.0) * std::sqrt(mass * omega / 2.0);
    std::array<SparseC, 3> ad;
    for (int ax = 0; ax < 3; ++ax) {
        ad[ax] = SparseC(a[ax].adjoint());
        k.r[ax] = rs * (a[ax] + ad[ax]);
        k.p[ax] = ps * (ad[ax] - a[ax]);
    }
    // L_k = r_i p_j - r_j p_i in normal-ordered ladder form, i(a_j^+ a_i -
    // a_i^+ a_j): number conserving, so exact within the truncation (the
    // product of truncated r and p would lose edge terms on the top shell).
    for (int ax = 0; ax < 3; ++ax) {
        int i = (ax + 1) % 3, j = (ax + 2) % 3;
        k.L[ax] = (Complex(0, 1) * SparseC(ad[j] * a[i] - ad[i] * a[j])).pruned(1e-300);
    }
    k.number_op = SparseC(basis.dim(), basis.dim());
    std::vector<Eigen::Triplet<Complex>> trip;
    for (int i = 0; i < basis.dim(); ++i)
        trip.emplace_back(i, i, Complex(double(basis.total_quanta(i)), 0.0));
    k.number_op.setFromTriplets(trip.begin(), trip.end());
    return k;
}

/// Projector bookkeeping for truncation-exact statements: operator identities
/// built from products of two ladder-linear factors hold exactly on states
/// with N <= n_max - 2, so checks compress to that interior.
struct InteriorProjector {
    int margin = 2;
    std::vector<int> indices;  // basis indices with N <= n_max - margin

    static InteriorProjector make(const FockBasis& b, int margin = 2) {
        if (margin < 0) throw std::invalid_argument("margin must be nonnegative");
        InteriorProjector p;
        p.margin = margin;
        for (int i = 0; i < b.dim(); ++i)
            if (b.total_quanta(i) <= b.n_max - margin) p.indices.push_back(i);
        return p;
    }
};

inline DenseC compress(const DenseC& op, const std::vector<int>& rows, const std::vector<int>& cols) {
    DenseC out(rows.size(), cols.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) out(i, j) = op(rows[i], cols[j]);
    return out;
}

inline DenseC compress(const SparseC& op, const InteriorProjector& proj) {
    DenseC d = DenseC(op);
    return compress(d, proj.indices, proj.indices);
}

inline double max_abs(const DenseC& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

inline double hermiticity_defect(const SparseC& op) {
    return max_abs(DenseC(op) - DenseC(op).adjoint());
}

/// Max-norm defect of sigma.(p + iMwr) sigma.(p - iMwr) =
/// p^2 + M^2 w^2 r^2 - 3Mw - 2Mw L.sigma, compressed to the interior.
inline double oscillator_identity_check(const Kinematics& k, int margin = 2) {
    const FockBasis& b = *k.basis;
    if (b.n_max < 3) throw std::invalid_argument("oscillator_identity_check needs n_max >= 3");
    const int F = b.dim();
    const Complex I(0.0, 1.0);
    Eigen::Matrix2cd sig[3];
    sig[0] << 0, 1, 1, 0;
    sig[1] << 0, -I, I, 0;
    sig[2] << 1, 0, 0, -1;

    auto lift = [&](const std::array<SparseC, 3>& ops) {
        DenseC out = DenseC::Zero(2 * F, 2 * F);
        for (int kx = 0; kx < 3; ++kx)
            for (int s = 0; s < 2; ++s)
                for (int t = 0; t < 2; ++t)
                    if (sig[kx](s, t) != Complex(0, 0))
                        out.block(s * F, t * F, F, F) += sig[kx](s, t) * DenseC(ops[kx]);
        return out;
    };
    std::array<SparseC, 3> plus, minus;
    for (int ax = 0; ax < 3; ++ax) {
        SparseC shift = (I * k.mass * k.omega) * k.r[ax];
        plus[ax] = k.p[ax] + shift;
        minus[ax] = k.p[ax] - shift;
    }
    DenseC lhs = lift(plus) * lift(minus);

    SparseC scal(F, F);
    for (int ax = 0; ax < 3; ++ax)
        scal = scal + SparseC(k.p[ax] * k.p[ax]) +
               (k.mass * k.omega * k.mass * k.omega) * SparseC(k.r[ax] * k.r[ax]);
    DenseC rhs = DenseC::Zero(2 * F, 2 * F);
    DenseC scal_d = DenseC(scal) - 3.0 * k.mass * k.omega * DenseC::Identity(F, F);
    rhs.block(0, 0, F, F) = scal_d;
    rhs.block(F, F, F, F) = scal_d;
    for (int kx = 0; kx < 3; ++kx)
        for (int s = 0; s < 2; ++s)
            for (int t = 0; t < 2; ++t)
                if (sig[kx](s, t) != Complex(0, 0))
                    rhs.block(s * F, t * F, F, F) -=
                        2.0 * k.mass * k.omega * sig[kx](s, t) * DenseC(k.L[kx]);

    InteriorProjector proj = InteriorProjector::make(b, margin);
    std::vector<int> idx;
    for (int s = 0; s < 2; ++s)
        for (int i : proj.indices) idx.push_back(s * F + i);
    return max_abs(compress(DenseC(lhs - rhs), idx, idx));
}

/// Debug dump: one "row col re im" line per stored entry.
inline void dump_coordinate_triplets(const SparseC& op, std::ostream& os) {
    for (int k = 0; k < op.outerSize(); ++k)
        for (SparseC::InnerIterator it(op, k); it; ++it)
            os << it.row() << ' ' << it.col() << ' ' << it.value().real() << ' '
               << it.value().imag() << '\n';
}

}  // namespace galosc
