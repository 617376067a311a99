// Exact combinatorial primitives: factorials, binomial coefficients and
// Stirling numbers of the second kind, with two independent computation
// routes for the Stirling numbers so they can be cross-checked.

#ifndef WEDGELAB_COMBINATORICS_HPP
#define WEDGELAB_COMBINATORICS_HPP

#include <stdexcept>
#include <vector>

#include "integer.hpp"

namespace wedgelab {

inline Integer factorial(long long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    Integer r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

// C(n, k).  Out-of-range k (k < 0 or k > n) yields 0; negative n is rejected.
inline Integer binomial(long long n, long long k) {
    if (n < 0) throw std::domain_error("binomial: negative n");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is C(n-k+i, i) after this step
    }
    return r;
}

// S(n, k) via the triangle recurrence S(n,k) = k*S(n-1,k) + S(n-1,k-1).
// S(0,0) = 1, S(n,0) = 0 for n > 0, S(n,k) = 0 for k > n.
inline Integer stirling2(long long n, long long k) {
    if (n < 0 || k < 0) throw std::domain_error("stirling2: negative argument");
    if (k > n) return 0;
    std::vector<Integer> row(static_cast<size_t>(k) + 1);
    row[0] = 1;  // S(0,0)
    for (long long i = 1; i <= n; ++i) {
        for (long long j = std::min(i, k); j >= 1; --j)
            row[static_cast<size_t>(j)] =
                j * row[static_cast<size_t>(j)] + row[static_cast<size_t>(j) - 1];
        row[0] = 0;  // S(i,0) = 0 once i > 0
    }
    return row[static_cast<size_t>(k)];
}

// S(n, k) via the alternating-sum closed form
//   S(n,k) = (1/k!) * sum_{j=0..k} (-1)^{k-j} C(k,j) j^n.
// The division by k! must be exact; a nonzero remainder indicates an
// arithmetic bug and is reported as a logic error.
inline Integer stirling2_closed(long long n, long long k) {
    if (n < 0 || k < 0) throw std::domain_error("stirling2_closed: negative argument");
    if (k > n) return 0;
    Integer sum = 0;
    for (long long j = 0; j <= k; ++j) {
        Integer term = binomial(k, j) * ipow(Integer(j), static_cast<unsigned long long>(n));
        if ((k - j) % 2 != 0)
            sum -= term;
        else
            sum += term;
    }
    Integer q, r;
    boost::multiprecision::divide_qr(sum, factorial(k), q, r);
    if (r != 0)
        throw std::logic_error("stirling2_closed: alternating sum not divisible by k!");
    return q;
}

}  // namespace wedgelab

#endif
