#pragma once

#include "tsirnorm/finvec.hpp"
#include "tsirnorm/space.hpp"

namespace tsir {

struct OracleOptions {
    int max_support = 8;  // brute force; keep small
};

/// Independent brute force over the norming sets K^m: K^0 = {±e_j} and
/// K^{i+1} adds θ_k(f_1 + … + f_r) for f_j ∈ K^i with disjoint supports
/// conforming to the law's rule at level k. Enumerates every functional
/// supported in supp(x) — partial families included, no value pruning, no
/// canonical-cover reduction — with levels truncated at the provable
/// stabilization level, and returns sup |f(x)|. Must equal eval_iterate.
Rational oracle_norm(const FinVec& x, const MixedLaw& law, int m,
                     const OracleOptions& opts = {});

}  // namespace tsir
