#include "zmlab/weights.hpp"

#include <cmath>
#include <limits>

#include "zmlab/errors.hpp"
#include "zmlab/specfun.hpp"

namespace zmlab {

namespace {

constexpr double neg_inf = -std::numeric_limits<double>::infinity();

WeightValue from_scaled_nonnegative(const ScaledComplex& s, const char* what) {
    if (s.is_zero()) return {neg_inf, Complex(1.0, 0.0)};
    Complex m = s.mantissa;
    if (std::abs(m.imag()) > 1e-8 || m.real() <= 0.0)
        throw DomainError(std::string(what) + ": weight came out non-positive");
    return {s.log_abs(), Complex(1.0, 0.0)};
}

double log_dim_ratio(const YoungDiagram& lambda) {
    double r = dim_ratio(lambda);
    return std::log(r);
}

// Frobenius form of the z-measure weight (the (zz')^d display).
ScaledComplex z_weight_frobenius(const ZXiParams& params, const YoungDiagram& lambda) {
    FrobeniusCoords fc = frobenius(lambda);
    Complex prod(1.0, 0.0);
    for (int i = 0; i < fc.d(); ++i) {
        prod *= pochhammer(params.z + 1.0, fc.p[static_cast<std::size_t>(i)]) *
                pochhammer(params.zp + 1.0, fc.p[static_cast<std::size_t>(i)]) *
                pochhammer(-params.z + 1.0, fc.q[static_cast<std::size_t>(i)]) *
                pochhammer(-params.zp + 1.0, fc.q[static_cast<std::size_t>(i)]);
    }
    Complex zz(params.z * params.zp);
    ScaledComplex v = ScaledComplex::from_value(prod);
    double lbase = params.zzp() * std::log1p(-params.xi) +
                   static_cast<double>(lambda.size()) * std::log(params.xi) +
                   2.0 * log_dim_ratio(lambda) +
                   static_cast<double>(fc.d()) * std::log(std::abs(zz));
    ScaledComplex base{lbase, Complex(1.0, 0.0)};
    return v * base;
}

ScaledComplex z_weight_rows(const ZXiParams& params, const YoungDiagram& lambda) {
    Complex prod = pochhammer_lambda(params.z, lambda) *
                   pochhammer_lambda(params.zp, lambda);
    ScaledComplex v = ScaledComplex::from_value(prod);
    double lbase = params.zzp() * std::log1p(-params.xi) +
                   static_cast<double>(lambda.size()) * std::log(params.xi) +
                   2.0 * log_dim_ratio(lambda);
    return v * ScaledComplex{lbase, Complex(1.0, 0.0)};
}

double shell_sum_zw(const ZWParams& p, int bound) {
    double acc = 0.0;
    for (const auto& s : enum_signatures(p.n, bound, false)) {
        bool on_shell = false;
        for (int e : s.entries())
            if (std::abs(e) == bound) { on_shell = true; break; }
        if (!on_shell && bound > 0) continue;
        acc += zw_weight(s, p).value();
    }
    return acc;
}

double shell_sum_zab(const ZABParams& p, int bound) {
    double acc = 0.0;
    for (const auto& s : enum_signatures(p.n, bound, true)) {
        if (s.entries().front() != bound && bound > 0) continue;
        acc += zab_weight(s, p).value();
    }
    return acc;
}

template <typename ShellFn>
NormConstResult norm_const(int initial_bound, double tol, int cap, ShellFn shell) {
    int bound = std::max(initial_bound, 1);
    double total = shell(0);
    double last = 0.0;
    for (int b = 1; b <= bound; ++b) {
        last = shell(b);
        total += last;
    }
    while (last >= tol * total) {
        int next = bound * 2;
        if (next > cap)
            throw BudgetError("normalizing constant: shell cap reached before tail tolerance");
        for (int b = bound + 1; b <= next; ++b) {
            last = shell(b);
            total += last;
        }
        bound = next;
    }
    return {total, last, bound};
}

} // namespace

WeightValue z_weight(const ZXiParams& params, const YoungDiagram& lambda) {
    ScaledComplex rows = z_weight_rows(params, lambda);
    ScaledComplex frob = z_weight_frobenius(params, lambda);
    // the two routes must agree; this guards the Frobenius-form algebra
    double va = rows.is_zero() ? 0.0 : std::exp(rows.log_abs());
    double vb = frob.is_zero() ? 0.0 : std::exp(frob.log_abs());
    if (std::abs(va - vb) > 1e-8 * std::max({va, vb, 1e-300}))
        throw DomainError("z_weight: row and Frobenius forms disagree");
    if (rows.is_zero()) return {neg_inf, Complex(1.0, 0.0)};
    Complex m = rows.mantissa;
    if (std::abs(m.imag()) > 1e-8)
        throw DomainError("z_weight: non-real weight");
    double sign = m.real() >= 0.0 ? 1.0 : -1.0;
    if (sign < 0.0 && params.cls != AdmissibilityClass::inadmissible) {
        // admissible parameters give nonnegative weights; a tiny negative
        // value can only be roundoff on an exact zero
        if (std::exp(rows.log_abs()) > 1e-250)
            throw DomainError("z_weight: negative weight on admissible parameters");
        return {neg_inf, Complex(1.0, 0.0)};
    }
    return {rows.log_abs(), Complex(sign, 0.0)};
}

double mixing_weight(long n, const ZXiParams& params) {
    if (n < 0) throw DomainError("mixing_weight: negative n");
    Complex zz = params.z * params.zp;
    Complex p = pochhammer(zz, n);
    double lg = params.zzp() * std::log1p(-params.xi) +
                static_cast<double>(n) * std::log(params.xi) -
                std::lgamma(static_cast<double>(n) + 1.0);
    return p.real() * std::exp(lg);
}

WeightValue zw_weight(const Signature& lambda, const ZWParams& params) {
    if (lambda.length() != params.n)
        throw DomainError("zw_weight: signature length differs from N");
    Complex lg(0.0, 0.0);
    for (int i = 1; i <= params.n; ++i) {
        double li = lambda.entry(i);
        double off = static_cast<double>(params.n) + 1.0 + li - i;
        lg -= log_gamma(params.z - li + static_cast<double>(i)) +
              log_gamma(params.zp - li + static_cast<double>(i)) +
              log_gamma(params.w + off) + log_gamma(params.wp + off);
    }
    double ldim = 0.0;
    for (int i = 1; i <= params.n; ++i)
        for (int j = i + 1; j <= params.n; ++j)
            ldim += std::log(static_cast<double>(lambda.entry(i) - lambda.entry(j) + j - i) /
                             static_cast<double>(j - i));
    ScaledComplex v = ScaledComplex::from_log(lg) *
                      ScaledComplex{2.0 * ldim, Complex(1.0, 0.0)};
    return from_scaled_nonnegative(v, "zw_weight");
}

WeightValue zab_weight(const Signature& lambda, const ZABParams& params) {
    if (lambda.length() != params.n)
        throw DomainError("zab_weight: signature length differs from N");
    if (!lambda.nonnegative())
        throw DomainError("zab_weight: signature must be nonnegative");
    double nn = params.n, eps = params.eps;
    Complex lg(0.0, 0.0);
    double linfactor = 1.0;
    for (int i = 1; i <= params.n; ++i) {
        double m = static_cast<double>(lambda.entry(i)) - i;
        linfactor *= nn + eps + m;
        lg += log_gamma(Complex(nn + 2.0 * eps + m, 0.0)) +
              log_gamma(Complex(nn + params.a + 1.0 + m, 0.0)) -
              log_gamma(Complex(nn + params.b + 1.0 + m, 0.0)) -
              log_gamma(Complex(nn + 1.0 + m, 0.0));
        lg -= log_gamma(params.z - static_cast<double>(lambda.entry(i)) + static_cast<double>(i)) +
              log_gamma(params.zp - static_cast<double>(lambda.entry(i)) + static_cast<double>(i)) +
              log_gamma(params.z + 2.0 * nn + 2.0 * eps + m) +
              log_gamma(params.zp + 2.0 * nn + 2.0 * eps + m);
    }
    double lvdm = 0.0;
    for (int i = 1; i <= params.n; ++i)
        for (int j = i + 1; j <= params.n; ++j) {
            double xi2 = nn + lambda.entry(i) - i + eps;
            double xj2 = nn + lambda.entry(j) - j + eps;
            lvdm += 2.0 * std::log(std::abs(xi2 * xi2 - xj2 * xj2));
        }
    ScaledComplex v = ScaledComplex::from_log(lg) *
                      ScaledComplex::from_value(Complex(linfactor, 0.0)) *
                      ScaledComplex{lvdm, Complex(1.0, 0.0)};
    return from_scaled_nonnegative(v, "zab_weight");
}

double plancherel_weight(double theta, const YoungDiagram& lambda) {
    if (theta <= 0.0) throw DomainError("plancherel_weight: theta must be positive");
    double lg = -theta + 2.0 * std::log(dim_ratio(lambda)) +
                static_cast<double>(lambda.size()) * std::log(theta);
    return std::exp(lg);
}

NormConstResult zw_const(const ZWParams& params, int initial_bound, double tol, int cap) {
    return norm_const(initial_bound, tol, cap,
                      [&](int b) { return shell_sum_zw(params, b); });
}

NormConstResult zab_const(const ZABParams& params, int initial_bound, double tol, int cap) {
    return norm_const(initial_bound, tol, cap,
                      [&](int b) { return shell_sum_zab(params, b); });
}

} // namespace zmlab
