#include "tsirnorm/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "tsirnorm/schreier.hpp"

namespace tsir {

namespace {

using Mask = std::uint32_t;

// Brute-force sup over K^i functionals supported inside `mask`. Families are
// enumerated naively — every point is skipped, joins an existing block, or
// opens a new one — with no value pruning and no covering reduction, and the
// minima condition is checked once per completed family. Partitioning into
// support envelopes is exhaustive: every K^i member arises from the envelopes
// equal to its children's exact supports, and every enumerated combination is
// realized by a K^i member because block minima only spread rightwards.
class KSetOracle {
public:
    KSetOracle(const FinVec& x, const MixedLaw& law, const OracleOptions& opts) : law_(law) {
        if (x.support_size() > opts.max_support)
            throw Error::guard("oracle: support of size " + std::to_string(x.support_size()) +
                               " exceeds the oracle guard " + std::to_string(opts.max_support));
        for (const auto& [j, v] : x.entries()) {
            indices_.push_back(j);
            abs_values_.push_back(abs_r(v));
        }
        full_ = indices_.empty() ? 0 : ((Mask(1) << indices_.size()) - 1);
    }

    Mask full() const { return full_; }

    Rational sup(Mask mask, int i) {
        if (!mask) return 0;
        uint64_t key = static_cast<uint64_t>(mask) | (static_cast<uint64_t>(i) << 32);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Rational best(0);
        for (Mask rest = mask; rest;) {  // K^0: ±e_j
            int p = std::countr_zero(rest);
            rest &= rest - 1;
            best = std::max(best, abs_values_[static_cast<size_t>(p)]);
        }
        if (i > 0) {
            int k_stop = std::max(std::popcount(mask), law_.theta.monotone_from());
            if (law_.level_cap > 0) k_stop = std::min(k_stop, law_.level_cap);
            std::vector<int> points;
            for (Mask rest = mask; rest;) {
                int p = std::countr_zero(rest);
                rest &= rest - 1;
                points.push_back(p);
            }
            for (int k = 1; k <= k_stop; ++k) {
                std::vector<Mask> blocks;
                assign(points, 0, blocks, k, i, best);
            }
        }
        memo_.emplace(key, best);
        return best;
    }

private:
    void assign(const std::vector<int>& points, size_t at, std::vector<Mask>& blocks, int k,
                int i, Rational& best) {
        if (at == points.size()) {
            if (blocks.empty()) return;
            std::vector<int> minima;
            for (Mask b : blocks) minima.push_back(indices_[std::countr_zero(b)]);
            if (!schreier::member(IndexSet(std::move(minima)), k)) return;
            Rational sum(0);
            for (Mask b : blocks) sum += sup(b, i - 1);
            best = std::max(best, Rational(law_.theta.at(k) * sum));
            return;
        }
        Mask bit = Mask(1) << points[at];
        assign(points, at + 1, blocks, k, i, best);  // skip the point
        bool admissible = law_.rule_at(k) == FamilyRule::Admissible;
        size_t first_join = admissible && !blocks.empty() ? blocks.size() - 1 : 0;
        for (size_t b = first_join; b < blocks.size(); ++b) {
            blocks[b] |= bit;  // join: points ascend, so block minima are unchanged
            assign(points, at + 1, blocks, k, i, best);
            blocks[b] &= ~bit;
        }
        blocks.push_back(bit);  // open a new block
        assign(points, at + 1, blocks, k, i, best);
        blocks.pop_back();
    }

    MixedLaw law_;
    std::vector<int> indices_;
    std::vector<Rational> abs_values_;
    Mask full_ = 0;
    std::unordered_map<uint64_t, Rational> memo_;
};

}  // namespace

Rational oracle_norm(const FinVec& x, const MixedLaw& law, int m, const OracleOptions& opts) {
    if (m < 0) throw Error::input("iterate index must be nonnegative");
    if (x.empty()) return 0;
    KSetOracle oracle(x, law, opts);
    return oracle.sup(oracle.full(), m);
}

}  // namespace tsir
