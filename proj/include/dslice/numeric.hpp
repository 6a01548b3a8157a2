#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <numeric>
#include <limits>
#include <stdexcept>
#include <string>

namespace dslice {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline int sign(const Integer& a) { return a.sign(); }
inline int sign(const Rational& a) { return a.sign(); }

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

inline std::int64_t to_int64(const Integer& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw Error("integer " + v.str() + " does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline std::string to_string(const Integer& v) { return v.str(); }

/// Exact rational from a finite double (every double is a dyadic rational).
inline Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw Error("non-finite double");
    int exp = 0;
    double mant = std::frexp(x, &exp);
    // 53 bits of mantissa become an integer.
    auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
    exp -= 53;
    Rational r{Integer(scaled)};
    if (exp > 0) r *= Rational(Integer(1) << exp);
    if (exp < 0) r /= Rational(Integer(1) << (-exp));
    return r;
}

inline double to_double(const Rational& r) { return static_cast<double>(r); }

}  // namespace dslice
