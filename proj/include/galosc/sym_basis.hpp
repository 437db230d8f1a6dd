#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <vector>

namespace galosc {

/// Basis of the totally symmetric rank-2S space over 4 letters, enumerated
/// as occupation 4-tuples (k1,k2,k3,k4) with sum 2S. Ordering groups the
/// sectors: first the phi sector (k3=k4=0, 2S+1 states, sorted by k2 so the
/// spin projection runs from +S down to -S), then the chi sector
/// (k3+k4 = 1, 4S states), then everything that decouples.
struct SymmetricSpinBasis {
    int two_s = 0;
    std::vector<std::array<int, 4>> occupations;
    std::map<std::array<int, 4>, int> index;

    static SymmetricSpinBasis make(int two_s) {
        if (two_s < 1) throw std::invalid_argument("two_s must be >= 1");
        SymmetricSpinBasis b;
        b.two_s = two_s;
        for (int k1 = 0; k1 <= two_s; ++k1)
            for (int k2 = 0; k2 + k1 <= two_s; ++k2)
                for (int k3 = 0; k3 + k2 + k1 <= two_s; ++k3)
                    b.occupations.push_back({k1, k2, k3, two_s - k1 - k2 - k3});
        auto key = [](const std::array<int, 4>& k) {
            return std::array<int, 4>{k[2] + k[3], k[3], k[2], k[1]};
        };
        std::sort(b.occupations.begin(), b.occupations.end(),
                  [&](const auto& a, const auto& c) { return key(a) < key(c); });
        for (int i = 0; i < static_cast<int>(b.occupations.size()); ++i) b.index[b.occupations[i]] = i;
        return b;
    }

    int dim() const { return static_cast<int>(occupations.size()); }
    int phi_count() const { return two_s + 1; }
    int chi_count() const { return 2 * two_s; }
    int retained_count() const { return 3 * two_s + 1; }

    static int lower_indices(const std::array<int, 4>& k) { return k[2] + k[3]; }

    /// Representative index tuple (values 0..3), non-decreasing.
    std::vector<int> representative(int i) const {
        std::vector<int> t;
        for (int letter = 0; letter < 4; ++letter)
            for (int c = 0; c < occupations[i][letter]; ++c) t.push_back(letter);
        return t;
    }
};

}  // namespace galosc
