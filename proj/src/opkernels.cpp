#include "zmlab/opkernels.hpp"

#include <cmath>
#include <numbers>

#include "zmlab/errors.hpp"
#include "zmlab/specfun.hpp"

namespace zmlab {

namespace {

constexpr double pi = std::numbers::pi;

double real_checked(Complex v, const char* what, double tol = 1e-8) {
    if (std::abs(v.imag()) > tol * (std::abs(v.real()) + 1.0))
        throw DomainError(std::string(what) + ": imaginary residue too large");
    return v.real();
}

bool near_nonpos_int(Complex z, double tol = 1e-12) {
    if (std::abs(z.imag()) > tol) return false;
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) <= tol * std::max(1.0, -r);
}

void validate_al(const ZWParams& p) {
    if (std::abs(p.sigma) < 1e-9)
        throw DomainError("askey_lesky: sigma = 0 requires the analytic continuation (not implemented)");
    Complex d = p.z - p.zp;
    if (std::abs(d.imag()) < 1e-12 && std::abs(d.real() - std::round(d.real())) < 1e-9)
        throw DomainError("askey_lesky: integer z - z' requires the analytic continuation (not implemented)");
}

} // namespace

double askey_lesky_weight_log(double x, const ZWParams& p) {
    double nn = p.n;
    return -(log_gamma(p.z - x + 0.5).real() + log_gamma(p.zp - x + 0.5).real() +
             log_gamma(p.w + x + nn + 0.5).real() +
             log_gamma(p.wp + x + nn + 0.5).real());
}

double askey_lesky_weight(double x, const ZWParams& p) {
    return std::exp(askey_lesky_weight_log(x, p));
}

ScaledComplex askey_lesky_scaled(int deg, double x, const ZWParams& p) {
    validate_al(p);
    double nn = p.n;
    Complex sigma(p.sigma, 0.0);
    if (deg == p.n) {
        ScaledComplex pref = ScaledComplex::from_log(
            log_gamma(Complex(x, 0.0) + p.wp + nn + 0.5) -
            log_gamma(Complex(x, 0.0) + p.wp + 0.5));
        return pref * hyp3f2_term_scaled(p.z + p.wp, p.zp + p.wp, p.n, sigma,
                                         Complex(x, 0.0) + p.wp + 0.5);
    }
    if (deg == p.n - 1) {
        ScaledComplex pref = ScaledComplex::from_log(
            log_gamma(Complex(x, 0.0) + p.wp + nn + 0.5) -
            log_gamma(Complex(x, 0.0) + p.wp + 1.5));
        return pref * hyp3f2_term_scaled(p.z + p.wp + 1.0, p.zp + p.wp + 1.0,
                                         p.n - 1, sigma + 2.0,
                                         Complex(x, 0.0) + p.wp + 1.5);
    }
    throw DomainError("askey_lesky_scaled: degree must be N or N-1");
}

double askey_lesky_eval(int deg, double x, const ZWParams& p) {
    return real_checked(askey_lesky_scaled(deg, x, p).value(), "askey_lesky_eval");
}

double askey_lesky_norm(const ZWParams& p) {
    validate_al(p);
    double nn = p.n;
    Complex sigma(p.sigma, 0.0);
    Complex lg = log_gamma(Complex(nn, 0.0)) + log_gamma(sigma + 1.0) +
                 log_gamma(sigma + 2.0) - log_gamma(sigma + nn + 1.0) -
                 log_gamma(p.z + p.w + 1.0) - log_gamma(p.z + p.wp + 1.0) -
                 log_gamma(p.zp + p.w + 1.0) - log_gamma(p.zp + p.wp + 1.0);
    double h = real_checked(ScaledComplex::from_log(lg).value(), "askey_lesky_norm");
    if (!(h > 0.0)) throw DomainError("askey_lesky_norm: h_{N-1} must be positive");
    return h;
}

namespace {

double zw_kernel_offdiag(double x, double y, const ZWParams& p) {
    ScaledComplex pn_x = askey_lesky_scaled(p.n, x, p);
    ScaledComplex pm_x = askey_lesky_scaled(p.n - 1, x, p);
    ScaledComplex pn_y = askey_lesky_scaled(p.n, y, p);
    ScaledComplex pm_y = askey_lesky_scaled(p.n - 1, y, p);
    ScaledComplex bracket = pn_x * pm_y - pm_x * pn_y;
    ScaledComplex wgt{0.5 * (askey_lesky_weight_log(x, p) + askey_lesky_weight_log(y, p)),
                      Complex(1.0, 0.0)};
    ScaledComplex h{std::log(askey_lesky_norm(p)), Complex(1.0, 0.0)};
    ScaledComplex v = bracket * wgt / h;
    return real_checked(v.value(), "zw_kernel") / (x - y);
}

} // namespace

double zw_kernel(double x, double y, const ZWParams& p) {
    validate_al(p);
    if (std::abs(x - y) < 1e-9) {
        double h = 1e-4 * (std::abs(x) + 1.0);
        return 0.5 * (zw_kernel_offdiag(x, x + h, p) + zw_kernel_offdiag(x, x - h, p));
    }
    return zw_kernel_offdiag(x, y, p);
}

// ---- Neretin suite ----

NeretinBasis NeretinBasis::from_zab(const ZABParams& p) {
    double eps = p.eps, nn = p.n;
    NeretinBasis b{{Complex(1.0 - eps, 0.0), Complex(p.b + 1.0 - eps, 0.0),
                    p.z + nn + eps, p.zp + nn + eps},
                   Complex(eps, 0.0)};
    // the closed forms divide by these sines; integer combinations make the
    // basis degenerate
    auto check = [](Complex arg, const char* what) {
        if (std::abs(sin_pi(arg)) < 1e-9)
            throw DomainError(std::string("NeretinBasis: degenerate configuration, ") + what);
    };
    check(b.sum(), "sum of parameters is an integer");
    check(b.a[0] + b.a[1], "a+b is an integer");
    check(2.0 * b.alpha, "a+b is an odd integer");
    return b;
}

ScaledComplex neretin_weight_scaled(double t, const NeretinBasis& basis) {
    Complex lg(0.0, 0.0);
    for (const auto& aj : basis.a) {
        Complex up = aj + basis.alpha + t;
        Complex dn = aj - basis.alpha - t;
        if (near_nonpos_int(up, 1e-9) || near_nonpos_int(dn, 1e-9))
            return ScaledComplex::zero(); // denominator pole kills the weight
        lg -= log_gamma(up) + log_gamma(dn);
    }
    return ScaledComplex::from_value(basis.alpha + t) * ScaledComplex::from_log(lg);
}

Complex neretin_weight(double t, const NeretinBasis& basis) {
    return neretin_weight_scaled(t, basis).value();
}

ScaledComplex neretin_eval_scaled(int n, double t, const NeretinBasis& basis) {
    if (n < 0) throw DomainError("neretin_eval: negative degree");
    const auto& a = basis.a;
    Complex s = basis.sum();
    Complex lg(0.0, 0.0);
    for (int j = 1; j <= 3; ++j)
        lg += log_gamma(2.0 - a[0] - a[static_cast<std::size_t>(j)] + static_cast<double>(n)) -
              log_gamma(2.0 - a[0] - a[static_cast<std::size_t>(j)]);
    ScaledComplex f = hyp4f3_term_scaled(
        static_cast<double>(n) + 3.0 - s, 1.0 - a[0] + t + basis.alpha,
        1.0 - a[0] - t - basis.alpha, n, 2.0 - a[0] - a[1], 2.0 - a[0] - a[2],
        2.0 - a[0] - a[3]);
    return ScaledComplex::from_log(lg) * f;
}

Complex neretin_eval(int n, double t, const NeretinBasis& basis) {
    return neretin_eval_scaled(n, t, basis).value();
}

ScaledComplex neretin_norm_scaled(int n, const NeretinBasis& basis) {
    const auto& a = basis.a;
    Complex s = basis.sum();
    // closed form; the denominator carries (3-S+2n) Gamma(3-S+n) and the
    // overall sign makes the norm positive in orthogonality-admissible
    // configurations
    Complex sines = sin_pi(2.0 * basis.alpha);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            sines *= sin_pi(a[static_cast<std::size_t>(i)] + a[static_cast<std::size_t>(j)]);
    ScaledComplex c = ScaledComplex::from_value(-sines) /
                      ScaledComplex::from_value(2.0 * std::pow(pi, 6) * sin_pi(s));
    Complex lg = log_gamma(Complex(static_cast<double>(n) + 1.0, 0.0)) -
                 log_gamma(3.0 - s + static_cast<double>(n));
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            lg += log_gamma(2.0 - a[static_cast<std::size_t>(i)] -
                            a[static_cast<std::size_t>(j)] + static_cast<double>(n));
    ScaledComplex denom = ScaledComplex::from_value(3.0 - s + 2.0 * static_cast<double>(n));
    return c * ScaledComplex::from_log(lg) / denom;
}

Complex neretin_norm(int n, const NeretinBasis& basis) {
    return neretin_norm_scaled(n, basis).value();
}

Complex neretin_norm_sum(int n, const NeretinBasis& basis, double tol) {
    // decay exponent of w(t) Q_n(t)^2: need 4n + 5 - 2 Re(sum a) < -1
    double decay = 2.0 * basis.sum().real() - 6.0 - 4.0 * static_cast<double>(n);
    if (decay <= 0.0)
        throw BudgetError("neretin_norm_sum: w(t) Q_n^2 tail does not decay");
    ScaledComplex acc = ScaledComplex::zero();
    double shell = 0.0;
    long t = 0;
    long block_end = 64;
    while (true) {
        shell = 0.0;
        for (; t <= block_end; ++t) {
            for (long tt : {t, -t - 1}) {
                ScaledComplex w = neretin_weight_scaled(static_cast<double>(tt), basis);
                if (w.is_zero()) continue;
                ScaledComplex q = neretin_eval_scaled(n, static_cast<double>(tt), basis);
                ScaledComplex term = q * q * w;
                acc = acc + term;
                shell += std::exp(term.log_abs());
            }
        }
        double total = acc.is_zero() ? 0.0 : std::exp(acc.log_abs());
        if (shell < tol * total) break;
        if (block_end > 2'000'000)
            throw BudgetError("neretin_norm_sum: truncation cap reached");
        block_end *= 2;
    }
    return acc.value();
}

ScaledComplex neretin_leading_scaled(int n, const NeretinBasis& basis) {
    Complex s = basis.sum();
    // k_n = (n+3-S)_n = Gamma(2n+3-S)/Gamma(n+3-S)
    return ScaledComplex::from_log(log_gamma(2.0 * n + 3.0 - s) -
                                   log_gamma(static_cast<double>(n) + 3.0 - s));
}

double zab_g_weight(double x, const ZABParams& p) {
    double nn = p.n, eps = p.eps;
    Complex d1(nn + p.b + x + 0.5, 0.0), d2(nn + x + 0.5, 0.0);
    if (near_nonpos_int(d1, 1e-9) || near_nonpos_int(d2, 1e-9)) return 0.0;
    Complex lg = log_gamma(Complex(nn + 2.0 * eps + x - 0.5, 0.0)) +
                 log_gamma(Complex(nn + p.a + x + 0.5, 0.0)) -
                 log_gamma(d1) - log_gamma(d2);
    lg -= log_gamma(p.z - x + 0.5) + log_gamma(p.zp - x + 0.5) +
          log_gamma(p.z + 2.0 * nn + 2.0 * eps + x - 0.5) +
          log_gamma(p.zp + 2.0 * nn + 2.0 * eps + x - 0.5);
    ScaledComplex v = ScaledComplex::from_value(Complex(nn + eps + x - 0.5, 0.0)) *
                      ScaledComplex::from_log(lg);
    return real_checked(v.value(), "zab_g_weight");
}

namespace {

double zab_kernel_offdiag(double x, double y, const ZABParams& p) {
    NeretinBasis basis = NeretinBasis::from_zab(p);
    double nn = p.n, eps = p.eps;
    double tx = nn + x - 0.5, ty = nn + y - 0.5;
    double xh = nn + x + eps - 0.5, yh = nn + y + eps - 0.5;
    ScaledComplex wx = neretin_weight_scaled(tx, basis);
    ScaledComplex wy = neretin_weight_scaled(ty, basis);
    if (wx.is_zero() || wy.is_zero()) return 0.0;
    ScaledComplex qn_x = neretin_eval_scaled(p.n, tx, basis);
    ScaledComplex qm_x = neretin_eval_scaled(p.n - 1, tx, basis);
    ScaledComplex qn_y = neretin_eval_scaled(p.n, ty, basis);
    ScaledComplex qm_y = neretin_eval_scaled(p.n - 1, ty, basis);
    ScaledComplex bracket = qn_x * qm_y - qm_x * qn_y;
    ScaledComplex pref = neretin_leading_scaled(p.n - 1, basis) /
                         (neretin_leading_scaled(p.n, basis) *
                          neretin_norm_scaled(p.n - 1, basis));
    ScaledComplex wgt{0.5 * (wx.log_abs() + wy.log_abs()), Complex(1.0, 0.0)};
    // sqrt(w(tx) w(ty)) is the positive root: w > 0 wherever it is nonzero
    // on the nonnegative-signature support
    ScaledComplex v = pref * bracket * wgt;
    return real_checked(v.value(), "zab_kernel") / (xh * xh - yh * yh);
}

} // namespace

double zab_kernel(double x, double y, const ZABParams& p) {
    p.require_moment_condition();
    if (std::abs(x - y) < 1e-9) {
        double h = 1e-4 * (std::abs(x) + 1.0);
        return 0.5 * (zab_kernel_offdiag(x, x + h, p) + zab_kernel_offdiag(x, x - h, p));
    }
    return zab_kernel_offdiag(x, y, p);
}

// ---- reports ----

AskeyLeskyReport askey_lesky_report(const ZWParams& p, double shell_tol, double x_cap) {
    validate_al(p);
    // the cross term p_N p_{N-1} f decays like x^{-sigma-1}, slowest of the
    // tracked sums, so the whole window is summed rather than shell-stopped
    double dot = 0.0, norm_n = 0.0, norm_m = 0.0;
    for (double x = 0.5; x <= x_cap; x += 1.0) {
        for (double xx : {x, -x}) {
            double f = askey_lesky_weight(xx, p);
            double pn = askey_lesky_eval(p.n, xx, p);
            double pm = askey_lesky_eval(p.n - 1, xx, p);
            dot += pn * pm * f;
            norm_n += pn * pn * f;
            norm_m += pm * pm * f;
        }
    }
    double h = askey_lesky_norm(p);
    double tr = 0.0, prev_shell = 1.0;
    double trace_cap = std::min(x_cap, 2048.0);
    for (double x = 0.5; x <= trace_cap; x += 1.0) {
        double shell = zw_kernel(x, x, p) + zw_kernel(-x, -x, p);
        tr += shell;
        if (x > 64.0 && std::abs(shell) < shell_tol * 1e-2 &&
            std::abs(prev_shell) < shell_tol * 1e-2)
            break;
        prev_shell = shell;
    }
    return {std::abs(dot) / std::sqrt(norm_n * norm_m),
            std::abs(norm_m - h) / h,
            std::abs(tr - static_cast<double>(p.n)),
            x_cap};
}

NeretinReport neretin_report(const ZABParams& p, int n_max) {
    NeretinBasis basis = NeretinBasis::from_zab(p);
    double worst = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        Complex closed = neretin_norm(n, basis);
        Complex summed = neretin_norm_sum(n, basis);
        worst = std::max(worst, std::abs(closed - summed) / std::abs(closed));
    }
    // leading coefficient of Q_1 from a two-point slope in (t+alpha)^2
    double t1 = 1.0, t2 = 5.0;
    Complex s1 = std::pow(t1 + basis.alpha, 2), s2 = std::pow(t2 + basis.alpha, 2);
    Complex q1 = neretin_eval(1, t1, basis), q2 = neretin_eval(1, t2, basis);
    Complex slope = (q2 - q1) / (s2 - s1);
    Complex k1 = neretin_leading_scaled(1, basis).value();
    double k_err = std::abs(slope - k1) / std::abs(k1);
    // g proportional to w under the identification
    double ratio0 = 0.0, dev = 0.0;
    int cnt = 0;
    for (double x : {-0.5, 0.5, 1.5, 2.5, 3.5}) {
        double g = zab_g_weight(x, p);
        Complex w = neretin_weight(p.n + x - 0.5, basis);
        double r = g / real_checked(w, "neretin weight");
        if (cnt == 0) ratio0 = r;
        dev = std::max(dev, std::abs(r - ratio0) / std::abs(ratio0));
        ++cnt;
    }
    double tr = 0.0, prev_shell = 1.0;
    for (double x = 0.5 - static_cast<double>(p.n); x <= 2048.0; x += 1.0) {
        double shell = zab_kernel(x, x, p);
        tr += shell;
        if (x > 64.0 && std::abs(shell) < 1e-8 && std::abs(prev_shell) < 1e-8) break;
        prev_shell = shell;
    }
    return {worst, k_err, dev, std::abs(tr - static_cast<double>(p.n))};
}

} // namespace zmlab
