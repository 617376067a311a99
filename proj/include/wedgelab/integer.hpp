// Arbitrary-precision integer and rational scalar types used everywhere in
// wedgelab.  All arithmetic in this library is exact; there is no floating
// point anywhere.

#ifndef WEDGELAB_INTEGER_HPP
#define WEDGELAB_INTEGER_HPP

#include <string>
#include <boost/multiprecision/cpp_int.hpp>

namespace wedgelab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// base^e with the combinatorial convention 0^0 = 1.
inline Integer ipow(const Integer& base, unsigned long long e) {
    Integer r = 1;
    Integer b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline std::string to_decimal(const Integer& v) { return v.str(); }

}  // namespace wedgelab

#endif
