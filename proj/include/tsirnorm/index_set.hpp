#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "tsirnorm/errors.hpp"

namespace tsir {

/// A finite, strictly increasing list of positive 1-based coordinates of c_00.
/// May be empty.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::vector<int> elements);  // validates ordering and positivity
    IndexSet(std::initializer_list<int> elements)
        : IndexSet(std::vector<int>(elements)) {}

    bool empty() const { return elems_.empty(); }
    int size() const { return static_cast<int>(elems_.size()); }
    int operator[](int i) const { return elems_[static_cast<size_t>(i)]; }
    int min() const { return elems_.front(); }
    int max() const { return elems_.back(); }
    bool contains(int v) const;

    /// Returns a copy with `v` inserted (error if already present).
    IndexSet with(int v) const;

    const std::vector<int>& elements() const { return elems_; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    bool operator==(const IndexSet&) const = default;
    bool operator<(const IndexSet& o) const { return elems_ < o.elems_; }

    /// "2,3,7"; empty set renders as "".
    std::string to_string() const;
    static IndexSet parse(const std::string& text);

private:
    std::vector<int> elems_;
};

/// An ordered finite family of nonempty index sets. Block order is recorded;
/// disjointness / successiveness are checked by operations, never assumed.
struct SetFamily {
    std::vector<IndexSet> blocks;

    SetFamily() = default;
    explicit SetFamily(std::vector<IndexSet> b);  // validates blocks nonempty
    SetFamily(std::initializer_list<IndexSet> b)
        : SetFamily(std::vector<IndexSet>(b)) {}

    /// Block minima sorted increasingly. May contain ties when blocks
    /// overlap; callers check disjointness/successiveness first.
    std::vector<int> minima() const;

    bool successive() const;         // max of each block < min of the next
    bool pairwise_disjoint() const;  // interleaving permitted
};

}  // namespace tsir
