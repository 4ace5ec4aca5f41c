#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace gdlab {

// Exact arithmetic over Q. cpp_rational keeps values in lowest terms with a
// positive denominator, which is exactly the Scalar contract.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Raised on malformed input: bad files, dimension mismatches, violated
// operation preconditions. The CLI maps it to exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

inline Rat make_rat(long long num, long long den) {
    if (den == 0) throw input_error("rational with zero denominator");
    return Rat(Int(num), Int(den));
}

inline std::string to_string(const Rat& x) {
    const Int num = boost::multiprecision::numerator(x);
    const Int den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// gcd(p1/q1, p2/q2) = gcd(p1,p2)/lcm(q1,q2); used for factoring out the
// content of a polynomial when rendering.
inline Rat rat_gcd(const Rat& a, const Rat& b) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    using boost::multiprecision::numerator;
    if (a == 0) return b < 0 ? Rat(-b) : b;
    if (b == 0) return a < 0 ? Rat(-a) : a;
    Int n = gcd(numerator(a), numerator(b));
    if (n < 0) n = -n;
    const Int d = lcm(denominator(a), denominator(b));
    return Rat(n, d);
}

}  // namespace gdlab
