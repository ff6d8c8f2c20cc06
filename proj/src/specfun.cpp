#include "zmlab/specfun.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "zmlab/errors.hpp"

namespace zmlab {

namespace {

constexpr double pi = std::numbers::pi;

// Lanczos coefficients, g = 607/128, 15 terms (Godfrey's set).
constexpr double lanczos_g = 4.7421875;
constexpr std::array<double, 15> lanczos_c = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

bool near_nonpositive_integer(Complex z, double tol = 1e-13) {
    if (std::abs(z.imag()) > tol) return false;
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) <= tol * std::max(1.0, std::abs(z.real()));
}

// log Gamma on Re z >= 1/2 via the Lanczos sum.
Complex log_gamma_right(Complex z) {
    Complex zm1 = z - 1.0;
    Complex sum = lanczos_c[0];
    for (std::size_t k = 1; k < lanczos_c.size(); ++k)
        sum += lanczos_c[k] / (zm1 + static_cast<double>(k));
    Complex t = zm1 + lanczos_g + 0.5;
    return (zm1 + 0.5) * std::log(t) - t + std::log(std::sqrt(2.0 * pi) * sum);
}

// Even Bernoulli numbers B_2..B_16 for the psi asymptotics.
constexpr std::array<double, 8> bernoulli2n = {
    1.0 / 6.0,      -1.0 / 30.0,  1.0 / 42.0,      -1.0 / 30.0,
    5.0 / 66.0, -691.0 / 2730.0,  7.0 / 6.0, -3617.0 / 510.0,
};

// ---- extended-precision complex scalar for the terminating sums ----

struct MpC {
    mpf_class re, im;
    MpC(unsigned long prec) : re(0, prec), im(0, prec) {}
    MpC(Complex v, unsigned long prec) : re(v.real(), prec), im(v.imag(), prec) {}
};

void mpc_mul(MpC& a, const MpC& b, MpC& tmp) {
    tmp.re = a.re * b.re - a.im * b.im;
    tmp.im = a.re * b.im + a.im * b.re;
    mpf_swap(a.re.get_mpf_t(), tmp.re.get_mpf_t());
    mpf_swap(a.im.get_mpf_t(), tmp.im.get_mpf_t());
}

void mpc_div(MpC& a, const MpC& b, MpC& tmp) {
    mpf_class n = b.re * b.re + b.im * b.im;
    tmp.re = (a.re * b.re + a.im * b.im) / n;
    tmp.im = (a.im * b.re - a.re * b.im) / n;
    mpf_swap(a.re.get_mpf_t(), tmp.re.get_mpf_t());
    mpf_swap(a.im.get_mpf_t(), tmp.im.get_mpf_t());
}

ScaledComplex mpc_to_scaled(const MpC& v) {
    long er = 0, ei = 0;
    double mr = mpf_get_d_2exp(&er, v.re.get_mpf_t());
    double mi = mpf_get_d_2exp(&ei, v.im.get_mpf_t());
    if (mr == 0.0 && mi == 0.0) return ScaledComplex::zero();
    long e = std::max(mr != 0.0 ? er : ei, mi != 0.0 ? ei : er);
    constexpr double ln2 = 0.6931471805599453;
    double r = mr != 0.0 ? std::ldexp(mr, static_cast<int>(std::max(-1060L, er - e))) : 0.0;
    double i = mi != 0.0 ? std::ldexp(mi, static_cast<int>(std::max(-1060L, ei - e))) : 0.0;
    ScaledComplex s{static_cast<double>(e) * ln2, Complex(r, i)};
    s.normalize();
    return s;
}

void check_lower_parameter(Complex b, long n, const char* which) {
    // (b)_k vanishes for some k <= n iff b is one of 0, -1, ..., -(n-1)
    if (std::abs(b.imag()) > 1e-12) return;
    double r = std::round(b.real());
    if (r <= 0.0 && r > -static_cast<double>(n) &&
        std::abs(b.real() - r) < 1e-12 * std::max(1.0, std::abs(r)))
        throw DomainError(std::string("terminating series: lower parameter ") + which +
                          " hits a pole inside the sum");
}

unsigned long term_prec(long n) {
    return static_cast<unsigned long>(128 + 4 * n);
}

// extended-precision summation core shared by the scaled and big entry points
MpC terminating_sum_mp(const std::vector<Complex>& upper,
                       const std::vector<Complex>& lower, long n,
                       unsigned long prec) {
    MpC term(Complex(1.0, 0.0), prec), sum(Complex(0.0, 0.0), prec);
    MpC factor(prec), tmp(prec);
    for (long k = 0;; ++k) {
        sum.re += term.re;
        sum.im += term.im;
        if (k == n) break;
        double kk = static_cast<double>(k);
        for (auto& a : upper) {
            factor.re = a.real() + kk;
            factor.im = a.imag();
            mpc_mul(term, factor, tmp);
        }
        factor.re = -static_cast<double>(n) + kk;
        factor.im = 0.0;
        mpc_mul(term, factor, tmp);
        for (auto& b : lower) {
            factor.re = b.real() + kk;
            factor.im = b.imag();
            mpc_div(term, factor, tmp);
        }
        factor.re = kk + 1.0;
        factor.im = 0.0;
        mpc_div(term, factor, tmp);
    }
    return sum;
}

// Generic terminating p+1Fp at unit argument: sum over k of
// prod (upper_i)_k / prod (lower_j)_k / k!, where one upper is -n.
ScaledComplex terminating_sum(const std::vector<Complex>& upper,
                              const std::vector<Complex>& lower, long n) {
    for (std::size_t j = 0; j < lower.size(); ++j)
        check_lower_parameter(lower[j], n, j == 0 ? "b1" : "b2+");

    if (n <= 24) {
        // double path, Kahan compensated
        Complex term(1.0, 0.0), sum(0.0, 0.0), comp(0.0, 0.0);
        for (long k = 0;; ++k) {
            Complex y = term - comp;
            Complex t = sum + y;
            comp = (t - sum) - y;
            sum = t;
            if (k == n) break;
            Complex num(1.0, 0.0), den(1.0, 0.0);
            double kk = static_cast<double>(k);
            num *= Complex(-static_cast<double>(n) + kk, 0.0);
            for (auto& a : upper) num *= a + kk;
            for (auto& b : lower) den *= b + kk;
            den *= kk + 1.0;
            term *= num / den;
        }
        return ScaledComplex::from_value(sum);
    }

    return mpc_to_scaled(terminating_sum_mp(upper, lower, n, term_prec(n)));
}

} // namespace

Complex sin_pi(Complex z) {
    double k = std::round(z.real());
    Complex r = z - k;
    Complex s = std::sin(pi * r);
    return (static_cast<long long>(k) % 2 == 0) ? s : -s;
}

Complex cos_pi(Complex z) {
    double k = std::round(z.real());
    Complex r = z - k;
    Complex c = std::cos(pi * r);
    return (static_cast<long long>(k) % 2 == 0) ? c : -c;
}

Complex log_gamma(Complex z) {
    if (near_nonpositive_integer(z))
        throw DomainError("log_gamma: pole at nonpositive integer");
    if (z.real() >= 0.5) return log_gamma_right(z);
    // reflection: log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z)
    return std::log(pi) - std::log(sin_pi(z)) - log_gamma_right(1.0 - z);
}

SignedLogGamma log_gamma_real(double x) {
    if (near_nonpositive_integer(Complex(x, 0.0)))
        throw DomainError("log_gamma_real: pole at nonpositive integer");
    if (x > 0.0) return {log_gamma_right(Complex(x, 0.0)).real(), 1};
    // Gamma(x) = pi / (sin(pi x) Gamma(1 - x)) for x < 0
    double s = sin_pi(Complex(x, 0.0)).real();
    double la = std::log(pi) - std::log(std::abs(s)) -
                log_gamma_right(Complex(1.0 - x, 0.0)).real();
    return {la, s > 0.0 ? 1 : -1};
}

Complex digamma(Complex z) {
    if (near_nonpositive_integer(z))
        throw DomainError("digamma: pole at nonpositive integer");
    Complex acc(0.0, 0.0);
    if (z.real() < 0.5) {
        // psi(z) = psi(1-z) - pi cot(pi z)
        acc -= pi * cos_pi(z) / sin_pi(z);
        z = 1.0 - z;
    }
    while (std::abs(z) < 16.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    Complex inv = 1.0 / z, inv2 = inv * inv;
    Complex s = std::log(z) - 0.5 * inv;
    Complex p = inv2;
    for (std::size_t m = 0; m < bernoulli2n.size(); ++m) {
        s -= bernoulli2n[m] / (2.0 * (m + 1)) * p;
        p *= inv2;
    }
    return acc + s;
}

Complex trigamma(Complex z) {
    if (near_nonpositive_integer(z))
        throw DomainError("trigamma: pole at nonpositive integer");
    bool reflected = false;
    Complex refl(0.0, 0.0);
    if (z.real() < 0.5) {
        // psi'(z) + psi'(1-z) = pi^2 / sin^2(pi z)
        Complex s = sin_pi(z);
        refl = pi * pi / (s * s);
        z = 1.0 - z;
        reflected = true;
    }
    Complex acc(0.0, 0.0);
    while (std::abs(z) < 16.0) {
        acc += 1.0 / (z * z);
        z += 1.0;
    }
    Complex inv = 1.0 / z, inv2 = inv * inv;
    Complex s = inv + 0.5 * inv2;
    Complex p = inv * inv2;
    for (std::size_t m = 0; m < bernoulli2n.size(); ++m) {
        s += bernoulli2n[m] * p;
        p *= inv2;
    }
    Complex v = acc + s;
    return reflected ? refl - v : v;
}

Complex pochhammer(Complex z, long k) {
    if (k < 0) throw DomainError("pochhammer: negative k");
    if (k == 0) return {1.0, 0.0};
    bool direct = k <= 64;
    if (!direct && std::abs(z.imag()) < 1e-12) {
        double r = std::round(z.real());
        // a base at (or near) a nonpositive integer above -k zeroes the
        // product; keep that path exact
        if (r <= 0.0 && r > -static_cast<double>(k) &&
            std::abs(z.real() - r) < 1e-10)
            direct = true;
    }
    if (direct) {
        Complex p(1.0, 0.0);
        for (long j = 0; j < k; ++j) p *= z + static_cast<double>(j);
        return p;
    }
    return std::exp(log_gamma(z + static_cast<double>(k)) - log_gamma(z));
}

EvalResult hyp2f1_reg_series(Complex a, Complex b, Complex c, double v) {
    if (v < 0.0 || v >= 1.0 - 1e-12)
        throw BudgetError("hyp2f1_reg_series: argument outside [0, 1-1e-12)");

    long k0 = 0;
    Complex t;
    if (near_nonpositive_integer(c, 1e-9)) {
        // shifted start: terms k <= -c vanish through the 1/Gamma(c+k) zeros
        long m = static_cast<long>(std::llround(-c.real()));
        k0 = m + 1;
        if (v == 0.0) return {Complex(0.0, 0.0), 0.0};
        bool a_int = near_nonpositive_integer(a), b_int = near_nonpositive_integer(b);
        if ((a_int && -std::llround(a.real()) < k0) ||
            (b_int && -std::llround(b.real()) < k0))
            return {Complex(0.0, 0.0), 0.0}; // upper zero kills every surviving term
        if (a_int || b_int) {
            t = pochhammer(a, k0) * pochhammer(b, k0) *
                std::pow(v, static_cast<double>(k0)) /
                (std::exp(log_gamma(Complex(static_cast<double>(k0) + 1.0, 0.0))) *
                 std::exp(log_gamma(c + static_cast<double>(k0))));
        } else {
            Complex lg = log_gamma(a + static_cast<double>(k0)) - log_gamma(a) +
                         log_gamma(b + static_cast<double>(k0)) - log_gamma(b) -
                         log_gamma(Complex(static_cast<double>(k0) + 1.0, 0.0)) -
                         log_gamma(c + static_cast<double>(k0)) +
                         static_cast<double>(k0) * std::log(v);
            if (lg.real() > 690.0)
                throw BudgetError("hyp2f1_reg_series: leading term overflows");
            t = std::exp(lg);
        }
    } else {
        t = std::exp(-log_gamma(c));
    }

    Complex sum(0.0, 0.0), comp(0.0, 0.0);
    double abs_acc = 0.0;
    int small_streak = 0;
    const long max_terms = 80'000'000;
    for (long k = k0; k < k0 + max_terms; ++k) {
        Complex y = t - comp;
        Complex s2 = sum + y;
        comp = (s2 - sum) - y;
        sum = s2;
        abs_acc += std::abs(t);
        double thresh = 1e-17 * std::max(abs_acc, std::abs(sum));
        if (std::abs(t) < thresh) {
            if (++small_streak >= 3) {
                double err = std::abs(t) + 1e-16 * abs_acc;
                return {sum, err};
            }
        } else {
            small_streak = 0;
        }
        double kk = static_cast<double>(k);
        t *= (a + kk) * (b + kk) * v / ((kk + 1.0) * (c + kk));
    }
    throw BudgetError("hyp2f1_reg_series: did not converge within term budget");
}

EvalResult hyp2f1_reg(Complex a, Complex b, Complex c, double w) {
    if (w > 0.0) throw DomainError("hyp2f1_reg: requires w <= 0");
    double v = (w == 0.0) ? 0.0 : w / (w - 1.0);
    // Pfaff: F(a,b;c;w) = (1-w)^{-a} F(a, c-b; c; w/(w-1))
    EvalResult ser = hyp2f1_reg_series(a, c - b, c, v);
    Complex pref = std::exp(-a * std::log1p(-w));
    return {pref * ser.value, std::abs(pref) * ser.abs_error_estimate};
}

ScaledComplex hyp3f2_term_scaled(Complex a1, Complex a2, long n,
                                 Complex b1, Complex b2) {
    if (n < 0) throw DomainError("hyp3f2_term: negative order");
    return terminating_sum({a1, a2}, {b1, b2}, n);
}

ScaledComplex hyp4f3_term_scaled(Complex x1, Complex x2, Complex x3, long n,
                                 Complex u, Complex v, Complex w) {
    if (n < 0) throw DomainError("hyp4f3_term: negative order");
    return terminating_sum({x1, x2, x3}, {u, v, w}, n);
}

EvalResult hyp3f2_term(Complex a1, Complex a2, long n, Complex b1, Complex b2) {
    ScaledComplex s = hyp3f2_term_scaled(a1, a2, n, b1, b2);
    Complex val = s.value();
    return {val, 1e-15 * std::abs(val) * static_cast<double>(n + 1)};
}

EvalResult hyp4f3_term(Complex x1, Complex x2, Complex x3, long n,
                       Complex u, Complex v, Complex w) {
    ScaledComplex s = hyp4f3_term_scaled(x1, x2, x3, n, u, v, w);
    Complex val = s.value();
    return {val, 1e-15 * std::abs(val) * static_cast<double>(n + 1)};
}

} // namespace zmlab
