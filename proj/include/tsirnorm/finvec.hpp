#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tsirnorm/index_set.hpp"
#include "tsirnorm/rational.hpp"

namespace tsir {

/// A finitely supported vector with exact rational coordinates: an element of
/// c_00. No explicit zero entries are stored; support == key set.
class FinVec {
public:
    FinVec() = default;
    /// Validates indices, rejects duplicates, prunes explicit zeros.
    explicit FinVec(std::vector<std::pair<int, Rational>> entries);

    static FinVec unit(int k) { return FinVec({{k, Rational(1)}}); }
    static FinVec zero() { return {}; }

    /// Inline grammar "j:p/q,j:p/q" (newlines also accepted as separators).
    static FinVec parse(const std::string& text);

    bool empty() const { return entries_.empty(); }
    int support_size() const { return static_cast<int>(entries_.size()); }
    IndexSet support() const;
    const std::map<int, Rational>& entries() const { return entries_; }

    Rational at(int j) const;  // 0 outside the support

    FinVec restricted(const IndexSet& e) const;  // Ex: zero outside E
    FinVec squared() const;                      // coordinatewise x^2
    FinVec absolute() const;                     // coordinatewise |x|
    FinVec scaled(const Rational& c) const;      // c·x (c = 0 gives the zero vector)
    FinVec plus(const FinVec& y) const;          // exact sum, zeros pruned

    Rational linf() const;  // 0 for the zero vector
    Rational l1() const;
    Rational l2_squared() const;

    std::string to_string() const;  // "j:p/q,..." in index order

    bool operator==(const FinVec&) const = default;

private:
    std::map<int, Rational> entries_;
};

}  // namespace tsir
