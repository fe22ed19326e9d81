#pragma once

// Test-only oracles, kept independent of the decision procedures they check:
// Schreier membership by exhaustive decomposition search and the Schreier
// norm by brute force over all subsets of the support.

#include <functional>
#include <vector>

#include "tsirnorm/finvec.hpp"
#include "tsirnorm/index_set.hpp"

namespace tsir::testing {

inline bool member_exhaustive(const std::vector<int>& f, int n) {
    if (f.empty()) return true;
    if (n == 0) return f.size() == 1;
    std::function<bool(size_t, int)> rec = [&](size_t pos, int parts_left) -> bool {
        if (pos == f.size()) return true;
        if (parts_left == 0) return false;
        for (size_t len = 1; pos + len <= f.size(); ++len) {
            std::vector<int> part(f.begin() + static_cast<long>(pos),
                                  f.begin() + static_cast<long>(pos + len));
            if (member_exhaustive(part, n - 1) && rec(pos + len, parts_left - 1)) return true;
        }
        return false;
    };
    return rec(0, f.front());
}

inline bool member_exhaustive(const IndexSet& f, int n) {
    return member_exhaustive(f.elements(), n);
}

inline Rational schreier_norm_brute(const FinVec& x, int n) {
    IndexSet sup = x.support();
    int size = sup.size();
    Rational best(0);
    for (int mask = 0; mask < (1 << size); ++mask) {
        std::vector<int> elems;
        for (int b = 0; b < size; ++b)
            if (mask & (1 << b)) elems.push_back(sup[b]);
        if (!member_exhaustive(elems, n)) continue;
        Rational sum(0);
        for (int j : elems) sum += abs_r(x.at(j));
        if (sum > best) best = sum;
    }
    return best;
}

}  // namespace tsir::testing
