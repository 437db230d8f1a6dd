#pragma once

#include "galosc/rational.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <vector>

namespace galosc {

/// Allowed total angular momenta for orbital l and spin two_s/2:
/// two_j runs from |2l - two_s| to 2l + two_s in steps of 2.
inline std::vector<int> allowed_two_j(int ell, int two_s) {
    std::vector<int> out;
    for (int tj = std::abs(2 * ell - two_s); tj <= 2 * ell + two_s; tj += 2) out.push_back(tj);
    return out;
}

inline bool valid_two_j(int ell, int two_j, int two_s) {
    return two_j >= std::abs(2 * ell - two_s) && two_j <= 2 * ell + two_s &&
           (two_j - 2 * ell - two_s) % 2 == 0;
}

inline void require_quantum_numbers(int n, int ell, int two_j, int two_s) {
    if (n < 0 || ell < 0 || two_s < 0 || two_j < 0)
        throw std::invalid_argument("quantum numbers must be nonnegative");
    if (two_s == 0) {
        if (two_j != 2 * ell) throw std::invalid_argument("spin 0 requires j = l");
    } else if (!valid_two_j(ell, two_j, two_s)) {
        throw std::invalid_argument("two_j outside |2l-two_s|..2l+two_s");
    }
}

/// L.S channel eigenvalue [j(j+1) - l(l+1) - S(S+1)]/2 as an exact rational.
inline Rational ls_channel_value(int ell, int two_j, int two_s) {
    Rational jj(two_j * (two_j + 2), 4);
    Rational ss(two_s * (two_s + 2), 4);
    return (jj - Rational(ell * (ell + 1)) - ss) / 2;
}

/// Closed-form level E/w = 2n + [(l+S)(l+S+1) - j(j+1)]/(2S) for spin S > 0,
/// and the shifted-oscillator ladder 2n + l for the spin-0 theory.
inline Rational closed_form_energy(int n, int ell, int two_j, int two_s) {
    require_quantum_numbers(n, ell, two_j, two_s);
    if (two_s == 0) return Rational(2 * n + ell);
    long ls = 2L * ell + two_s;
    Rational bracket(ls * (ls + 2) - long(two_j) * (two_j + 2), 4L * two_s);
    return Rational(2 * n) + bracket;
}

enum class SpinHalfBranch { plus, minus };

/// Spin-1/2 two-branch form: 2n for j = l + 1/2 and 2n + 2l + 1 for
/// j = l - 1/2.
inline Rational spin_half_special(int n, int ell, SpinHalfBranch branch) {
    if (n < 0 || ell < 0) throw std::invalid_argument("quantum numbers must be nonnegative");
    if (branch == SpinHalfBranch::plus) return Rational(2 * n);
    if (ell < 1) throw std::invalid_argument("j = l - 1/2 requires l >= 1");
    return Rational(2 * n + 2 * ell + 1);
}

/// Level of the lambda-deformed theory: 2n + l - lambda [j(j+1) - l(l+1)
/// - S(S+1)]/(2S). Coincides with closed_form_energy at lambda = 1.
inline Rational lambda_energy(int n, int ell, int two_j, int two_s, const Rational& lambda) {
    require_quantum_numbers(n, ell, two_j, two_s);
    if (two_s == 0) {
        if (lambda != 1) throw std::domain_error("spin 0 admits no spin-orbit deformation");
        return Rational(2 * n + ell);
    }
    Rational shift = lambda * ls_channel_value(ell, two_j, two_s) / Rational(two_s, 2);
    return Rational(2 * n + ell) - shift;
}

struct SpectrumLevel {
    int n = 0;
    int ell = 0;
    int two_j = 0;
    int two_s = 0;
    Rational energy_over_omega;
    int multiplicity = 1;  // 2j+1
};

struct LevelTable {
    int two_s = 0;
    Rational e_max;
    int ell_max = 0;
    int n_max = 0;  // derived bound: 2n <= e_max
    std::vector<SpectrumLevel> rows;
    std::map<Rational, int> aggregate;  // E/w -> total multiplicity within cutoffs
};

/// Every level (n, l <= ell_max, j) with E/w <= e_max, sorted by
/// (E, l, j, n), with its 2j+1 multiplicity. Degeneracy figures always carry
/// the cutoffs: the E = 0 family has one member per l, so totals are only
/// meaningful relative to (e_max, ell_max).
inline LevelTable enumerate_levels(int two_s, const Rational& e_max, int ell_max) {
    if (two_s < 0 || ell_max < 0 || e_max < 0)
        throw std::invalid_argument("cutoffs must be nonnegative");
    LevelTable t;
    t.two_s = two_s;
    t.e_max = e_max;
    t.ell_max = ell_max;
    t.n_max = static_cast<int>(to_double(e_max) / 2.0);
    for (int ell = 0; ell <= ell_max; ++ell) {
        std::vector<int> tjs = two_s == 0 ? std::vector<int>{2 * ell} : allowed_two_j(ell, two_s);
        for (int tj : tjs) {
            for (int n = 0;; ++n) {
                Rational e = closed_form_energy(n, ell, tj, two_s);
                if (e > e_max) break;
                SpectrumLevel lv;
                lv.n = n;
                lv.ell = ell;
                lv.two_j = tj;
                lv.two_s = two_s;
                lv.energy_over_omega = e;
                lv.multiplicity = tj + 1;
                t.rows.push_back(lv);
            }
        }
    }
    std::sort(t.rows.begin(), t.rows.end(), [](const SpectrumLevel& a, const SpectrumLevel& b) {
        if (a.energy_over_omega != b.energy_over_omega) return a.energy_over_omega < b.energy_over_omega;
        if (a.ell != b.ell) return a.ell < b.ell;
        if (a.two_j != b.two_j) return a.two_j < b.two_j;
        return a.n < b.n;
    });
    for (const auto& r : t.rows) t.aggregate[r.energy_over_omega] += r.multiplicity;
    return t;
}

/// Multiplicity of the zero-energy level restricted to the l = 0 sector;
/// equals 2S+1 (the j = S multiplet).
inline int ground_state_ell0_count(int two_s) {
    LevelTable t = enumerate_levels(two_s, Rational(0), 0);
    int count = 0;
    for (const auto& r : t.rows)
        if (r.energy_over_omega == 0 && r.ell == 0) count += r.multiplicity;
    return count;
}

}  // namespace galosc
