#pragma once

#include "galosc/polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace galosc {

/// Square matrix with exact polynomial entries. Small and dense by design:
/// the generators live on 2- and 4-dimensional spaces and Kronecker products
/// only ever multiply those.
class SymbolicMatrix {
  public:
    SymbolicMatrix() = default;
    explicit SymbolicMatrix(int dim) : dim_(dim), e_(static_cast<size_t>(dim) * dim) {
        if (dim <= 0) throw std::invalid_argument("SymbolicMatrix dimension must be positive");
    }

    static SymbolicMatrix identity(int dim) {
        SymbolicMatrix m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = Polynomial::one();
        return m;
    }

    int dim() const { return dim_; }

    Polynomial& at(int i, int j) { return e_[static_cast<size_t>(i) * dim_ + j]; }
    const Polynomial& at(int i, int j) const { return e_[static_cast<size_t>(i) * dim_ + j]; }

    SymbolicMatrix& operator+=(const SymbolicMatrix& o) {
        require_same_dim(o);
        for (size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
        return *this;
    }
    SymbolicMatrix& operator-=(const SymbolicMatrix& o) {
        require_same_dim(o);
        for (size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
        return *this;
    }
    friend SymbolicMatrix operator+(SymbolicMatrix a, const SymbolicMatrix& b) { return a += b; }
    friend SymbolicMatrix operator-(SymbolicMatrix a, const SymbolicMatrix& b) { return a -= b; }

    friend SymbolicMatrix operator*(const SymbolicMatrix& a, const SymbolicMatrix& b) {
        a.require_same_dim(b);
        SymbolicMatrix m(a.dim_);
        for (int i = 0; i < a.dim_; ++i) {
            for (int k = 0; k < a.dim_; ++k) {
                const Polynomial& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < a.dim_; ++j) {
                    if (b.at(k, j).is_zero()) continue;
                    m.at(i, j) += aik * b.at(k, j);
                }
            }
        }
        return m;
    }

    friend SymbolicMatrix operator*(const Polynomial& s, const SymbolicMatrix& a) {
        SymbolicMatrix m(a.dim_);
        for (size_t k = 0; k < a.e_.size(); ++k) m.e_[k] = s * a.e_[k];
        return m;
    }
    friend SymbolicMatrix operator*(const GaussianRational& c, const SymbolicMatrix& a) {
        SymbolicMatrix m(a.dim_);
        for (size_t k = 0; k < a.e_.size(); ++k) m.e_[k] = c * a.e_[k];
        return m;
    }

    friend bool operator==(const SymbolicMatrix& a, const SymbolicMatrix& b) {
        return a.dim_ == b.dim_ && a.e_ == b.e_;
    }

    SymbolicMatrix transposed() const {
        SymbolicMatrix m(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    /// Entrywise formal conjugate (no transpose).
    SymbolicMatrix conjugated() const {
        SymbolicMatrix m(dim_);
        for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k].conjugated();
        return m;
    }

    Polynomial trace() const {
        Polynomial t;
        for (int i = 0; i < dim_; ++i) t += at(i, i);
        return t;
    }

    bool is_zero() const {
        for (const auto& p : e_) {
            if (!p.is_zero()) return false;
        }
        return true;
    }

    friend SymbolicMatrix kron(const SymbolicMatrix& a, const SymbolicMatrix& b) {
        SymbolicMatrix m(a.dim_ * b.dim_);
        for (int ia = 0; ia < a.dim_; ++ia)
            for (int ja = 0; ja < a.dim_; ++ja) {
                if (a.at(ia, ja).is_zero()) continue;
                for (int ib = 0; ib < b.dim_; ++ib)
                    for (int jb = 0; jb < b.dim_; ++jb) {
                        if (b.at(ib, jb).is_zero()) continue;
                        m.at(ia * b.dim_ + ib, ja * b.dim_ + jb) = a.at(ia, ja) * b.at(ib, jb);
                    }
            }
        return m;
    }

  private:
    void require_same_dim(const SymbolicMatrix& o) const {
        if (dim_ != o.dim_) throw std::invalid_argument("SymbolicMatrix dimension mismatch");
    }

    int dim_ = 0;
    std::vector<Polynomial> e_;
};

}  // namespace galosc
