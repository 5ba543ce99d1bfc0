#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace riskpath {

using BigInt = boost::multiprecision::cpp_int;

/// Univariate polynomial in the uniform risk alpha with exact integer
/// coefficients, constant term first. The zero polynomial has no
/// coefficients; otherwise the leading coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Polynomial constant(long v);
    /// The polynomial alpha itself.
    static Polynomial variable();

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<BigInt>& coefficients() const { return c_; }
    const BigInt& coefficient(int power) const;

    /// Horner evaluation in 64-bit floats.
    double eval(double alpha) const;

    /// Exact sign of the value at the dyadic rational num / 2^log2_den.
    int sign_at_dyadic(const BigInt& num, int log2_den) const;
    /// Exact sign at a double in [0,1] (doubles are dyadic rationals).
    int sign_at(double alpha) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string to_string() const;  // e.g. "2a - a^2"

private:
    void normalize();
    std::vector<BigInt> c_;
};

/// a v b = a + b - a*b on polynomials.
Polynomial por(const Polynomial& a, const Polynomial& b);

/// Roots of p in the open interval (lo, hi) found by an exact-sign scan on a
/// 4096-point grid followed by bisection; each root localized to width tol.
/// Roots of even multiplicity (no sign change) are not reported.
std::vector<double> sign_change_roots(const Polynomial& p, double lo, double hi,
                                      double tol = 1e-12);

}  // namespace riskpath
