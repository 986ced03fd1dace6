#pragma once
// Shared fixtures for the test binaries.

#include "toric/toric_model.hpp"

#include <cstdlib>
#include <initializer_list>
#include <numeric>
#include <random>
#include <stdexcept>

namespace toric::testing {

inline Hypertorus ht(std::initializer_list<long> a, Rat off = 0) {
    IntVec v;
    for (long x : a) v.emplace_back(x);
    return {v, off};
}

// characters (1,0), (1,2), (0,1), all offsets 0
inline ToricArrangement ex_arrangement() {
    return ToricArrangement::make(2, {ht({1, 0}), ht({1, 2}), ht({0, 1})});
}

inline ToricArrangement circle_one() { return ToricArrangement::make(1, {ht({1})}); }

// Essential arrangement with d <= max_dim, at most max_size hypertori, offset denominators <= 3.
inline ToricArrangement random_arrangement(std::mt19937& rng, int max_dim = 2, int max_size = 4) {
    for (;;) {
        int d = 1 + (int)(rng() % max_dim);
        int n = 1 + (int)(rng() % max_size);
        std::vector<Hypertorus> t;
        for (int i = 0; i < n; ++i) {
            IntVec a;
            long g = 0;
            for (int j = 0; j < d; ++j) {
                long x = (long)(rng() % 5) - 2;
                g = std::gcd(g, std::labs(x));
                a.emplace_back(x);
            }
            if (g == 0) continue;
            for (auto& x : a) x /= g;
            long den = 1 + (long)(rng() % 3);
            t.push_back({a, Rat((long)(rng() % den), den)});
        }
        try {
            auto arr = ToricArrangement::make(d, t);
            if (arr.is_essential()) return arr;
        } catch (const std::invalid_argument&) {
        }
    }
}

}  // namespace toric::testing
