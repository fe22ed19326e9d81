#include "tsirnorm/schreier.hpp"

#include <algorithm>
#include <span>
#include <unordered_map>

namespace tsir::schreier {

namespace {

// Membership on contiguous slices of one base sequence, memoized per call.
// Greedy: F ∈ S_n (n ≥ 1) iff stripping longest S_{n-1} prefixes exhausts F
// in at most min(F) parts. Greedy is optimal because each S_{n-1} is
// hereditary and spreading: a longest prefix absorbs at least as much as the
// first part of any decomposition, and what remains is a spread of the rest.
class MemberDecider {
public:
    explicit MemberDecider(std::span<const int> base) : base_(base) {}

    bool member(size_t offset, size_t len, int n) {
        if (len == 0) return true;
        if (n == 0) return len == 1;
        if (len == 1) return true;  // singletons sit in every S_n
        uint64_t key = (static_cast<uint64_t>(offset) << 32) |
                       (static_cast<uint64_t>(len) << 8) | static_cast<uint64_t>(n);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        int budget = base_[offset];
        size_t pos = 0;
        int parts = 0;
        bool ok = true;
        while (pos < len) {
            if (++parts > budget) {
                ok = false;
                break;
            }
            size_t take = 1;
            while (pos + take < len && member(offset + pos, take + 1, n - 1)) ++take;
            pos += take;
        }
        memo_.emplace(key, ok);
        return ok;
    }

private:
    std::span<const int> base_;
    std::unordered_map<uint64_t, bool> memo_;
};

}  // namespace

bool member(const IndexSet& f, int n) {
    if (n < 0) throw Error::input("Schreier level must be nonnegative");
    if (f.empty()) return true;
    if (n == 0) return f.size() == 1;
    MemberDecider d(std::span<const int>(f.elements()));
    return d.member(0, f.elements().size(), n);
}

bool admissible(const SetFamily& fam, int n) {
    if (fam.blocks.empty()) return true;
    if (!fam.successive()) return false;
    return member(IndexSet(fam.minima()), n);
}

bool allowable(const SetFamily& fam, int n) {
    if (fam.blocks.empty()) return true;
    if (!fam.pairwise_disjoint()) return false;
    return member(IndexSet(fam.minima()), n);
}

namespace {

// DFS over members of S_n within the window, extending by larger elements
// only; every member is reached exactly once. A leaf is kept iff no single
// element of the window extends it (by hereditariness that is exactly
// inclusion-maximality).
void collect_maximal(const IndexSet& window, int n, const IndexSet& current,
                     std::vector<IndexSet>& out) {
    bool extended = false;
    int floor = current.empty() ? 0 : current.max();
    for (int e : window) {
        if (e <= floor) continue;
        IndexSet next = current.with(e);
        if (member(next, n)) {
            extended = true;
            collect_maximal(window, n, next, out);
        }
    }
    if (extended || current.empty()) return;
    for (int e : window) {
        if (current.contains(e)) continue;
        if (member(current.with(e), n)) return;  // a strictly larger member exists
    }
    out.push_back(current);
}

}  // namespace

std::vector<IndexSet> maximal_members(const IndexSet& window, int n, int guard) {
    if (n < 0) throw Error::input("Schreier level must be nonnegative");
    if (window.size() > guard)
        throw Error::guard("window of size " + std::to_string(window.size()) +
                           " exceeds the enumeration guard " + std::to_string(guard));
    std::vector<IndexSet> out;
    collect_maximal(window, n, IndexSet{}, out);
    std::sort(out.begin(), out.end());
    return out;
}

SchreierNormResult norm(const FinVec& x, int n, int guard) {
    if (x.empty()) return {Rational(0), IndexSet{}};
    FinVec a = x.absolute();
    SchreierNormResult best{Rational(0), IndexSet{}};
    for (const IndexSet& s : maximal_members(x.support(), n, guard)) {
        Rational sum(0);
        for (int j : s) sum += a.at(j);
        if (sum > best.value) best = {sum, s};
    }
    return best;
}

}  // namespace tsir::schreier
