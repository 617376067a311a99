// Truncated power series with exact rational coefficients, in one variable
// (RationalSeries) and two (BivariateSeries).  Supported arithmetic: sum,
// difference, product, and exp of a series with zero constant term, all
// truncated at a fixed maximum (total) degree.

#ifndef WEDGELAB_SERIES_HPP
#define WEDGELAB_SERIES_HPP

#include <stdexcept>
#include <vector>

#include "combinatorics.hpp"
#include "integer.hpp"

namespace wedgelab {

class RationalSeries {
public:
    explicit RationalSeries(int max_degree)
        : max_degree_(max_degree), c_(static_cast<size_t>(max_degree) + 1) {
        if (max_degree < 0) throw std::domain_error("RationalSeries: negative degree bound");
    }

    int max_degree() const { return max_degree_; }

    const Rational& coeff(int d) const { return c_.at(static_cast<size_t>(d)); }
    void set_coeff(int d, const Rational& v) { c_.at(static_cast<size_t>(d)) = v; }

    RationalSeries& operator+=(const RationalSeries& o) {
        check_same_bound(o);
        for (int d = 0; d <= max_degree_; ++d) c_[d] += o.c_[d];
        return *this;
    }

    RationalSeries& operator-=(const RationalSeries& o) {
        check_same_bound(o);
        for (int d = 0; d <= max_degree_; ++d) c_[d] -= o.c_[d];
        return *this;
    }

    friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
        a.check_same_bound(b);
        RationalSeries r(a.max_degree_);
        for (int i = 0; i <= a.max_degree_; ++i) {
            if (a.c_[i] == 0) continue;
            for (int j = 0; i + j <= a.max_degree_; ++j) {
                if (b.c_[j] == 0) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    // exp of a series with zero constant term, as sum_{m<=D} g^m / m!.
    RationalSeries exp() const {
        if (c_[0] != 0) throw std::domain_error("RationalSeries::exp: nonzero constant term");
        RationalSeries result(max_degree_);
        result.c_[0] = 1;
        RationalSeries power(max_degree_);
        power.c_[0] = 1;
        for (int m = 1; m <= max_degree_; ++m) {
            power = power * (*this);
            Rational inv_fact(1, factorial(m));
            for (int d = m; d <= max_degree_; ++d) result.c_[d] += power.c_[d] * inv_fact;
        }
        return result;
    }

    bool operator==(const RationalSeries& o) const {
        return max_degree_ == o.max_degree_ && c_ == o.c_;
    }

private:
    void check_same_bound(const RationalSeries& o) const {
        if (max_degree_ != o.max_degree_)
            throw std::invalid_argument("RationalSeries: mismatched degree bounds");
    }

    int max_degree_;
    std::vector<Rational> c_;
};

// Bivariate series in x and y truncated at total degree max_degree; the
// coefficient of x^k y^n is stored for every k + n <= max_degree.
class BivariateSeries {
public:
    explicit BivariateSeries(int max_degree) : max_degree_(max_degree) {
        if (max_degree < 0) throw std::domain_error("BivariateSeries: negative degree bound");
        c_.resize(static_cast<size_t>(max_degree) + 1);
        for (int k = 0; k <= max_degree; ++k)
            c_[k].resize(static_cast<size_t>(max_degree - k) + 1);
    }

    int max_degree() const { return max_degree_; }

    const Rational& coeff(int k, int n) const {
        return c_.at(static_cast<size_t>(k)).at(static_cast<size_t>(n));
    }
    void set_coeff(int k, int n, const Rational& v) {
        c_.at(static_cast<size_t>(k)).at(static_cast<size_t>(n)) = v;
    }

    BivariateSeries& operator+=(const BivariateSeries& o) {
        check_same_bound(o);
        for (int k = 0; k <= max_degree_; ++k)
            for (int n = 0; k + n <= max_degree_; ++n) c_[k][n] += o.c_[k][n];
        return *this;
    }

    friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
        a.check_same_bound(b);
        BivariateSeries r(a.max_degree_);
        for (int k1 = 0; k1 <= a.max_degree_; ++k1)
            for (int n1 = 0; k1 + n1 <= a.max_degree_; ++n1) {
                if (a.c_[k1][n1] == 0) continue;
                int rest = a.max_degree_ - k1 - n1;
                for (int k2 = 0; k2 <= rest; ++k2)
                    for (int n2 = 0; k2 + n2 <= rest; ++n2) {
                        if (b.c_[k2][n2] == 0) continue;
                        r.c_[k1 + k2][n1 + n2] += a.c_[k1][n1] * b.c_[k2][n2];
                    }
            }
        return r;
    }

    // exp of a series with zero constant term (truncated composition).
    BivariateSeries exp() const {
        if (c_[0][0] != 0) throw std::domain_error("BivariateSeries::exp: nonzero constant term");
        BivariateSeries result(max_degree_);
        result.c_[0][0] = 1;
        BivariateSeries power(max_degree_);
        power.c_[0][0] = 1;
        for (int m = 1; m <= max_degree_; ++m) {
            power = power * (*this);
            Rational inv_fact(1, factorial(m));
            for (int k = 0; k <= max_degree_; ++k)
                for (int n = 0; k + n <= max_degree_; ++n)
                    if (power.c_[k][n] != 0) result.c_[k][n] += power.c_[k][n] * inv_fact;
        }
        return result;
    }

private:
    void check_same_bound(const BivariateSeries& o) const {
        if (max_degree_ != o.max_degree_)
            throw std::invalid_argument("BivariateSeries: mismatched degree bounds");
    }

    int max_degree_;
    std::vector<std::vector<Rational>> c_;
};

}  // namespace wedgelab

#endif
