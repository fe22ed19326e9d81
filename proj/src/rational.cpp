#include "tsirnorm/rational.hpp"

#include <cmath>
#include <cstdio>

namespace tsir {

Rational abs_r(const Rational& r) { return r < 0 ? Rational(-r) : r; }

Rational parse_rational(const std::string& text) {
    auto bad = [&] { return Error::input("malformed rational '" + text + "'"); };
    if (text.empty()) throw bad();
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (num.empty() || den.empty() || den.find('/') != std::string::npos) throw bad();
    }
    auto digits_ok = [](const std::string& s) {
        size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!digits_ok(num) || !digits_ok(den)) throw bad();
    BigInt p(num), q(den);
    if (q == 0) throw Error::input("zero denominator in rational '" + text + "'");
    return Rational(p, q);
}

std::string format_rational(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string format_float(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", r.convert_to<double>());
    return buf;
}

std::string format_float_sqrt(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", std::sqrt(r.convert_to<double>()));
    return buf;
}

void sqrt_interval(const Rational& s, const Rational& width, Rational& lo, Rational& hi) {
    if (s < 0) throw Error::input("sqrt_interval of a negative rational");
    if (s == 0) {
        lo = hi = 0;
        return;
    }
    lo = 0;
    hi = s < 1 ? Rational(1) : s;
    while (hi - lo >= width) {
        Rational mid = (lo + hi) / 2;
        if (mid * mid <= s)
            lo = mid;
        else
            hi = mid;
    }
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace tsir
