#include "riskpath/polynomial.hpp"

#include <cmath>
#include <stdexcept>

namespace riskpath {

namespace {
const BigInt kZero = 0;
}

void Polynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::constant(long v) {
    if (v == 0) return Polynomial();
    return Polynomial(std::vector<BigInt>{BigInt(v)});
}

Polynomial Polynomial::variable() {
    return Polynomial(std::vector<BigInt>{BigInt(0), BigInt(1)});
}

const BigInt& Polynomial::coefficient(int power) const {
    if (power < 0 || power >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(power)];
}

double Polynomial::eval(double alpha) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * alpha + it->convert_to<double>();
    return acc;
}

int Polynomial::sign_at_dyadic(const BigInt& num, int log2_den) const {
    // value * 2^(k*deg) = sum c_i * num^i * 2^(k*(deg-i)), all integers
    if (c_.empty()) return 0;
    BigInt total = 0;
    BigInt num_pow = 1;
    const int deg = degree();
    for (int i = 0; i <= deg; ++i) {
        BigInt term = c_[static_cast<size_t>(i)] * num_pow;
        total += term << (static_cast<unsigned>(log2_den) * static_cast<unsigned>(deg - i));
        num_pow *= num;
    }
    return total == 0 ? 0 : (total > 0 ? 1 : -1);
}

int Polynomial::sign_at(double alpha) const {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::domain_error("sign_at: alpha outside [0,1]");
    if (alpha == 0.0) return c_.empty() ? 0 : (c_[0] == 0 ? 0 : (c_[0] > 0 ? 1 : -1));
    int exp = 0;
    double m = std::frexp(alpha, &exp);  // alpha = m * 2^exp, m in [0.5, 1)
    auto num = static_cast<long long>(std::ldexp(m, 53));  // exact: 53-bit mantissa
    int log2_den = 53 - exp;
    while (log2_den > 0 && num % 2 == 0) {
        num /= 2;
        --log2_den;
    }
    return sign_at_dyadic(BigInt(num), log2_den);
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
    return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return Polynomial();
    std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
}

Polynomial por(const Polynomial& a, const Polynomial& b) { return a + b - a * b; }

std::string Polynomial::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = c_[static_cast<size_t>(i)];
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1 || i == 0) out += mag.str();
        if (i >= 1) out += "a";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

std::vector<double> sign_change_roots(const Polynomial& p, double lo, double hi, double tol) {
    std::vector<double> roots;
    if (p.is_zero() || !(lo < hi)) return roots;

    constexpr int kGrid = 4096;
    const double step = (hi - lo) / kGrid;

    auto bisect = [&](double a, double b, int sa, int sb) {
        while (b - a > tol) {
            double mid = a + (b - a) / 2;
            if (mid <= a || mid >= b) break;
            int sm = p.sign_at(mid);
            if (sm == 0) return mid;
            if (sm == sa) {
                a = mid;
            } else {
                b = mid;
                sb = sm;
            }
        }
        (void)sb;
        return a + (b - a) / 2;
    };

    int prev_sign = 0;
    double prev_x = lo;
    for (int k = 0; k <= kGrid; ++k) {
        double x = (k == kGrid) ? hi : lo + k * step;
        int s = p.sign_at(x);
        if (s == 0) {
            // exact root at a grid point; report it if interior
            if (x > lo && x < hi) roots.push_back(x);
            prev_sign = 0;
            prev_x = x;
            continue;
        }
        if (prev_sign != 0 && s != prev_sign) roots.push_back(bisect(prev_x, x, prev_sign, s));
        prev_sign = s;
        prev_x = x;
    }
    return roots;
}

}  // namespace riskpath
