#pragma once

// Exact integer / rational arithmetic used throughout the library, plus the
// small set of numeric predicates the geometry layers are built on:
// bit-size accounting, comparison against square roots, and rational
// enclosures of square roots.  Backed by Boost.Multiprecision.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace gridspan {

// Expression templates are disabled so arithmetic always yields concrete
// values; geometry code stores and passes these types generically.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

inline int sign(const Int& n) { return n.sign(); }
inline int sign(const Rat& q) { return q.sign(); }

// num/den as a canonical rational; accepts any nonzero denominator sign.
inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(std::move(num), std::move(den));
}

inline Int pow2(unsigned m) { return Int(1) << m; }

// Smallest k with 2^k >= m, for m >= 1.
inline unsigned ceil_log2(const Int& m) {
    if (m <= 0) throw std::domain_error("ceil_log2: argument must be positive");
    if (m == 1) return 0;
    unsigned b = boost::multiprecision::msb(m);  // 2^b <= m < 2^(b+1)
    return (Int(1) << b) == m ? b : b + 1;
}

// Number of bits in the sign-magnitude encoding: 1 + ceil(log2(|n| + 1)).
// Zero takes one bit.
inline std::uint64_t bit_size(const Int& n) {
    return 1 + ceil_log2(abs(n) + 1);
}

inline std::uint64_t bit_size(const Rat& q) {
    return bit_size(numerator(q)) + bit_size(denominator(q));
}

// Three-way comparison of a against sqrt(q), exactly.  q must be >= 0.
// Returns -1, 0, +1 for a < sqrt(q), a == sqrt(q), a > sqrt(q).
inline int cmp_sqrt(const Rat& a, const Rat& q) {
    if (q < 0) throw std::domain_error("cmp_sqrt: negative radicand");
    if (a < 0) return q == 0 && a == 0 ? 0 : -1;
    Rat a2 = a * a;
    if (a2 < q) return -1;
    if (a2 > q) return 1;
    return 0;
}

// Floor of the integer square root.
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

// Rational enclosure of sqrt(q): returns (lo, hi) with lo <= sqrt(q) < hi
// and hi - lo == 1 / (den(q) * 2^guard_bits).  For q == 0 the lower bound
// is exact.
inline std::pair<Rat, Rat> sqrt_bounds(const Rat& q, unsigned guard_bits) {
    if (q < 0) throw std::domain_error("sqrt_bounds: negative radicand");
    Int num = numerator(q), den = denominator(q);
    Int scale = den * pow2(guard_bits);
    Int s = isqrt(num * den * pow2(2 * guard_bits));
    return {Rat(s, scale), Rat(s + 1, scale)};
}

inline Rat sqrt_lower(const Rat& q, unsigned guard_bits) {
    return sqrt_bounds(q, guard_bits).first;
}

inline Rat sqrt_upper(const Rat& q, unsigned guard_bits) {
    return sqrt_bounds(q, guard_bits).second;
}

inline double to_double(const Rat& q) { return q.convert_to<double>(); }

inline std::string to_string(const Int& n) { return n.str(); }

// Canonical text form: "num" when the denominator is 1, else "num/den".
inline std::string to_string(const Rat& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline Int parse_int(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("parse_int: empty input");
    try {
        return Int(std::string(text));
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_int: bad integer '" + std::string(text) + "'");
    }
}

// Inverse of to_string(Rat).  Accepts any integer numerator / denominator
// pair (denominator nonzero) and canonicalizes.
inline Rat parse_rat(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rat: zero denominator");
    return make_rat(std::move(num), std::move(den));
}

}  // namespace gridspan
