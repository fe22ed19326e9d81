#include "tsirnorm/index_set.hpp"

#include <algorithm>
#include <sstream>

namespace tsir {

IndexSet::IndexSet(std::vector<int> elements) : elems_(std::move(elements)) {
    for (size_t i = 0; i < elems_.size(); ++i) {
        if (elems_[i] <= 0) throw Error::input("index sets hold positive 1-based coordinates");
        if (i > 0 && elems_[i] <= elems_[i - 1])
            throw Error::input("index set must be strictly increasing");
    }
}

bool IndexSet::contains(int v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v);
}

IndexSet IndexSet::with(int v) const {
    if (contains(v)) throw Error::input("duplicate element in index set");
    std::vector<int> out = elems_;
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return IndexSet(std::move(out));
}

std::string IndexSet::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < elems_.size(); ++i) {
        if (i) os << ',';
        os << elems_[i];
    }
    return os.str();
}

IndexSet IndexSet::parse(const std::string& text) {
    std::vector<int> out;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        // trim spaces
        size_t b = token.find_first_not_of(" \t");
        size_t e = token.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        token = token.substr(b, e - b + 1);
        try {
            size_t used = 0;
            int v = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            out.push_back(v);
        } catch (const std::exception&) {
            throw Error::input("malformed index '" + token + "' in index set");
        }
    }
    return IndexSet(std::move(out));
}

SetFamily::SetFamily(std::vector<IndexSet> b) : blocks(std::move(b)) {
    for (const auto& block : blocks)
        if (block.empty()) throw Error::input("set families hold nonempty blocks");
}

std::vector<int> SetFamily::minima() const {
    std::vector<int> mins;
    mins.reserve(blocks.size());
    for (const auto& block : blocks) mins.push_back(block.min());
    std::sort(mins.begin(), mins.end());
    return mins;
}

bool SetFamily::successive() const {
    for (size_t i = 0; i + 1 < blocks.size(); ++i)
        if (blocks[i].max() >= blocks[i + 1].min()) return false;
    return true;
}

bool SetFamily::pairwise_disjoint() const {
    std::vector<int> all;
    for (const auto& block : blocks)
        all.insert(all.end(), block.begin(), block.end());
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) == all.end();
}

}  // namespace tsir
