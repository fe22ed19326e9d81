#include "tsirnorm/finvec.hpp"

#include <sstream>

namespace tsir {

FinVec::FinVec(std::vector<std::pair<int, Rational>> entries) {
    for (auto& [j, v] : entries) {
        if (j <= 0) throw Error::input("vector indices are positive 1-based coordinates");
        if (v == 0) continue;
        if (!entries_.emplace(j, std::move(v)).second)
            throw Error::input("duplicate index " + std::to_string(j) + " in vector");
    }
}

FinVec FinVec::parse(const std::string& text) {
    std::vector<std::pair<int, Rational>> out;
    std::string token;
    std::string normalized = text;
    for (char& c : normalized)
        if (c == '\n' || c == '\r' || c == ' ' || c == '\t') c = ',';
    std::istringstream is(normalized);
    while (std::getline(is, token, ',')) {
        if (token.empty()) continue;
        auto colon = token.find(':');
        if (colon == std::string::npos)
            throw Error::input("vector entry '" + token + "' is not of the form j:p/q");
        int j = 0;
        try {
            size_t used = 0;
            j = std::stoi(token.substr(0, colon), &used);
            if (used != colon) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw Error::input("malformed vector index in '" + token + "'");
        }
        out.emplace_back(j, parse_rational(token.substr(colon + 1)));
    }
    return FinVec(std::move(out));
}

IndexSet FinVec::support() const {
    std::vector<int> idx;
    idx.reserve(entries_.size());
    for (const auto& [j, v] : entries_) idx.push_back(j);
    return IndexSet(std::move(idx));
}

Rational FinVec::at(int j) const {
    auto it = entries_.find(j);
    return it == entries_.end() ? Rational(0) : it->second;
}

FinVec FinVec::restricted(const IndexSet& e) const {
    FinVec out;
    for (const auto& [j, v] : entries_)
        if (e.contains(j)) out.entries_.emplace(j, v);
    return out;
}

FinVec FinVec::squared() const {
    FinVec out;
    for (const auto& [j, v] : entries_) out.entries_.emplace(j, v * v);
    return out;
}

FinVec FinVec::absolute() const {
    FinVec out;
    for (const auto& [j, v] : entries_) out.entries_.emplace(j, abs_r(v));
    return out;
}

FinVec FinVec::scaled(const Rational& c) const {
    FinVec out;
    if (c == 0) return out;
    for (const auto& [j, v] : entries_) out.entries_.emplace(j, c * v);
    return out;
}

FinVec FinVec::plus(const FinVec& y) const {
    FinVec out = *this;
    for (const auto& [j, v] : y.entries_) {
        auto [it, inserted] = out.entries_.emplace(j, v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) out.entries_.erase(it);
        }
    }
    return out;
}

Rational FinVec::linf() const {
    Rational best(0);
    for (const auto& [j, v] : entries_) {
        Rational a = abs_r(v);
        if (a > best) best = a;
    }
    return best;
}

Rational FinVec::l1() const {
    Rational sum(0);
    for (const auto& [j, v] : entries_) sum += abs_r(v);
    return sum;
}

Rational FinVec::l2_squared() const {
    Rational sum(0);
    for (const auto& [j, v] : entries_) sum += v * v;
    return sum;
}

std::string FinVec::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [j, v] : entries_) {
        if (!first) os << ',';
        first = false;
        os << j << ':' << format_rational(v);
    }
    return os.str();
}

}  // namespace tsir
