#pragma once

#include <vector>

#include "tsirnorm/finvec.hpp"
#include "tsirnorm/index_set.hpp"

namespace tsir::schreier {

inline constexpr int kDefaultEnumerationGuard = 20;

/// Membership in the Schreier family S_n under the usual inductive definition
/// with the empty-padding convention: S_0 = singletons and the empty set;
/// F ∈ S_{n+1} iff F is empty or splits into at most min(F) successive
/// nonempty parts, each in S_n. The convention makes every S_n hereditary,
/// spreading and nested in S_{n+1}, which the decision procedure relies on:
/// membership is decided greedily by stripping the longest S_{n-1} prefix.
bool member(const IndexSet& f, int n);

/// Blocks successive (max E_i < min E_{i+1} in the recorded order) and the
/// set of minima lies in S_n.
bool admissible(const SetFamily& fam, int n);

/// Blocks pairwise disjoint (interleaving permitted) and the set of minima
/// lies in S_n.
bool allowable(const SetFamily& fam, int n);

/// All inclusion-maximal members of S_n contained in `window`, sorted
/// lexicographically. Every member of S_n inside the window is a subset of
/// some returned set (hereditariness). The empty set is never returned.
std::vector<IndexSet> maximal_members(const IndexSet& window, int n,
                                      int guard = kDefaultEnumerationGuard);

struct SchreierNormResult {
    Rational value;
    IndexSet witness;  // lexicographically least maximizing S_n set
};

/// |x|_n = sup_{S ∈ S_n} Σ_{j∈S} |x_j|, achieved on a maximal S_n subset of
/// the support.
SchreierNormResult norm(const FinVec& x, int n, int guard = kDefaultEnumerationGuard);

}  // namespace tsir::schreier
