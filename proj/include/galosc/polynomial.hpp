#pragma once

#include "galosc/rational.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace galosc {

// Formal commutative symbols. Derivative symbols come in two flavours: the
// plain ones act on the unstarred field of a bilinear term, the *_on_star
// ones act on the starred field. Integration by parts maps one flavour onto
// the other (see ibp_normal_form), so Lagrangians can be compared modulo
// total derivatives. Field symbols appear in starred/unstarred pairs.
enum class Symbol : uint8_t {
    dt, d1, d2, d3,                      // derivative on the unstarred field
    dt_on_star, d1_on_star, d2_on_star, d3_on_star,
    r1, r2, r3,
    mass, omega, lambda,
    // spin-1 symmetric bispinor components
    X1, X1s, X2, X2s, X3, X3s,
    Y1, Y1s, Y2, Y2s, Y3, Y3s,
    Z, Zs,
    // spin-0 antisymmetric bispinor components
    A1, A1s, A2, A2s, A3, A3s,
    B, Bs,
    C, Cs,
    // components the parametrizations omit; carried so their vanishing
    // contribution is a computed result rather than an assumption
    W1, W1s, W2, W2s, W3, W3s,
    V, Vs,
    count_
};

inline constexpr int kSymbolCount = static_cast<int>(Symbol::count_);

inline const char* symbol_name(Symbol s) {
    static const char* names[kSymbolCount] = {
        "dt", "d1", "d2", "d3", "dt*", "d1*", "d2*", "d3*",
        "r1", "r2", "r3", "M", "w", "lam",
        "X1", "X1*", "X2", "X2*", "X3", "X3*",
        "Y1", "Y1*", "Y2", "Y2*", "Y3", "Y3*",
        "Z", "Z*",
        "A1", "A1*", "A2", "A2*", "A3", "A3*",
        "B", "B*", "C", "C*",
        "W1", "W1*", "W2", "W2*", "W3", "W3*",
        "V", "V*"};
    return names[static_cast<int>(s)];
}

inline bool is_field_symbol(Symbol s) { return s >= Symbol::X1; }
inline bool is_starred_field(Symbol s) {
    return is_field_symbol(s) && (static_cast<int>(s) - static_cast<int>(Symbol::X1)) % 2 == 1;
}

/// Star involution: swaps each field with its conjugate partner and each
/// derivative flavour with the other; all remaining symbols are fixed.
inline Symbol star(Symbol s) {
    int v = static_cast<int>(s);
    if (is_field_symbol(s)) {
        int base = static_cast<int>(Symbol::X1);
        return static_cast<Symbol>(base + ((v - base) ^ 1));
    }
    if (s >= Symbol::dt && s <= Symbol::d3) return static_cast<Symbol>(v + 4);
    if (s >= Symbol::dt_on_star && s <= Symbol::d3_on_star) return static_cast<Symbol>(v - 4);
    return s;
}

using Monomial = std::array<uint8_t, kSymbolCount>;

inline Monomial unit_monomial() { return Monomial{}; }

inline Monomial monomial_of(std::initializer_list<Symbol> symbols) {
    Monomial m{};
    for (Symbol s : symbols) ++m[static_cast<int>(s)];
    return m;
}

inline std::string monomial_str(const Monomial& m) {
    std::string out;
    for (int i = 0; i < kSymbolCount; ++i) {
        for (int e = 0; e < m[i]; ++e) {
            if (!out.empty()) out += '.';
            out += symbol_name(static_cast<Symbol>(i));
        }
    }
    return out.empty() ? "1" : out;
}

/// Multivariate polynomial over GaussianRational in the formal symbols above.
/// Commutativity is sound for this project's identities: everything compared
/// is first order in the derivative symbols, so a derivative never has to be
/// reordered past a coordinate symbol.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, GaussianRational>;

    Polynomial() = default;

    static Polynomial constant(GaussianRational c) {
        Polynomial p;
        if (!c.is_zero()) p.terms_[unit_monomial()] = std::move(c);
        return p;
    }
    static Polynomial one() { return constant(GaussianRational::one()); }
    static Polynomial symbol(Symbol s, GaussianRational c = GaussianRational::one()) {
        Polynomial p;
        if (!c.is_zero()) p.terms_[monomial_of({s})] = std::move(c);
        return p;
    }
    static Polynomial term(Monomial m, GaussianRational c) {
        Polynomial p;
        if (!c.is_zero()) p.terms_[m] = std::move(c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    GaussianRational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? GaussianRational::zero() : it->second;
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator-() const {
        Polynomial p;
        for (const auto& [m, c] : terms_) p.terms_[m] = -c;
        return p;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial p;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                for (int i = 0; i < kSymbolCount; ++i) m[i] = static_cast<uint8_t>(m[i] + mb[i]);
                p.add_term(m, ca * cb);
            }
        }
        return p;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator*(const GaussianRational& c, const Polynomial& a) {
        Polynomial p;
        if (c.is_zero()) return p;
        for (const auto& [m, pc] : a.terms_) p.terms_[m] = c * pc;
        return p;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    /// Formal conjugate: conjugates every coefficient and applies the star
    /// involution to every symbol.
    Polynomial conjugated() const {
        Polynomial p;
        for (const auto& [m, c] : terms_) {
            Monomial sm{};
            for (int i = 0; i < kSymbolCount; ++i) {
                if (m[i]) sm[static_cast<int>(star(static_cast<Symbol>(i)))] += m[i];
            }
            p.add_term(sm, c.conjugated());
        }
        return p;
    }

    /// Integration-by-parts normal form: each derivative acting on a starred
    /// field, (d u)* w, is rewritten as -u* (d w) by dropping a surface term.
    /// Two Lagrangian densities are equal modulo total derivatives exactly
    /// when their normal forms are identical polynomials.
    Polynomial ibp_normal_form() const {
        Polynomial p;
        constexpr int first = static_cast<int>(Symbol::dt_on_star);
        constexpr int last = static_cast<int>(Symbol::d3_on_star);
        for (const auto& [m, c] : terms_) {
            Monomial nm = m;
            int flips = 0;
            for (int i = first; i <= last; ++i) {
                if (nm[i]) {
                    flips += nm[i];
                    nm[i - 4] = static_cast<uint8_t>(nm[i - 4] + nm[i]);
                    nm[i] = 0;
                }
            }
            p.add_term(nm, flips % 2 ? -c : c);
        }
        return p;
    }

    /// Drops every term that contains the given symbol (substitution by 0).
    Polynomial without(Symbol s) const {
        Polynomial p;
        for (const auto& [m, c] : terms_) {
            if (m[static_cast<int>(s)] == 0) p.terms_[m] = c;
        }
        return p;
    }

    /// Keeps only the terms that contain the given symbol.
    Polynomial terms_containing(Symbol s) const {
        Polynomial p;
        for (const auto& [m, c] : terms_) {
            if (m[static_cast<int>(s)] > 0) p.terms_[m] = c;
        }
        return p;
    }

    bool contains(Symbol s) const {
        for (const auto& [m, c] : terms_) {
            if (m[static_cast<int>(s)] > 0) return true;
        }
        return false;
    }

    int degree_in(Symbol s) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, int(m[static_cast<int>(s)]));
        return d;
    }

    /// Plain-text term table, one "coefficient <tab> monomial" row per term,
    /// in the canonical monomial order. Used for golden-file comparison.
    std::string term_table() const {
        std::string out;
        for (const auto& [m, c] : terms_) {
            out += c.str();
            out += '\t';
            out += monomial_str(m);
            out += '\n';
        }
        return out;
    }

  private:
    void add_term(const Monomial& m, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TermMap terms_;
};

}  // namespace galosc
