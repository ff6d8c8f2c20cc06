#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace zmlab {

using Complex = std::complex<double>;

// A complex number kept as exp(log_scale) * mantissa, so that products of
// gamma-function magnitudes far outside double range stay representable.
// Only the operations the kernel assembly needs are provided.
struct ScaledComplex {
    double log_scale = 0.0;
    Complex mantissa{1.0, 0.0};

    static ScaledComplex zero() { return {0.0, Complex(0.0, 0.0)}; }

    // exp(lg) for a complex log value, kept scaled.
    static ScaledComplex from_log(Complex lg) {
        return {lg.real(), std::exp(Complex(0.0, lg.imag()))};
    }

    static ScaledComplex from_value(Complex v) {
        ScaledComplex s{0.0, v};
        s.normalize();
        return s;
    }

    void normalize() {
        double a = std::abs(mantissa);
        if (a == 0.0) {
            log_scale = 0.0;
            return;
        }
        log_scale += std::log(a);
        mantissa /= a;
    }

    bool is_zero() const { return mantissa == Complex(0.0, 0.0); }

    ScaledComplex operator*(const ScaledComplex& o) const {
        ScaledComplex r{log_scale + o.log_scale, mantissa * o.mantissa};
        r.normalize();
        return r;
    }

    ScaledComplex operator/(const ScaledComplex& o) const {
        ScaledComplex r{log_scale - o.log_scale, mantissa / o.mantissa};
        r.normalize();
        return r;
    }

    ScaledComplex operator+(const ScaledComplex& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        const ScaledComplex *hi = this, *lo = &o;
        if (o.log_scale > log_scale) { hi = &o; lo = this; }
        double d = lo->log_scale - hi->log_scale;
        Complex m = hi->mantissa;
        if (d > -745.0) m += lo->mantissa * std::exp(d);
        ScaledComplex r{hi->log_scale, m};
        r.normalize();
        return r;
    }

    ScaledComplex operator-(const ScaledComplex& o) const {
        ScaledComplex n{o.log_scale, -o.mantissa};
        return *this + n;
    }

    Complex value() const {
        if (is_zero()) return {0.0, 0.0};
        return std::exp(log_scale) * mantissa;
    }

    // log|.|, -inf for zero
    double log_abs() const {
        if (is_zero()) return -std::numeric_limits<double>::infinity();
        return log_scale + std::log(std::abs(mantissa));
    }
};

} // namespace zmlab
