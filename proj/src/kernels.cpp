#include "zmlab/kernels.hpp"

#include <cmath>
#include <numbers>

#include "zmlab/errors.hpp"
#include "zmlab/specfun.hpp"

namespace zmlab {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double diag_eps = 1e-9;

double real_checked(Complex v, const char* what, double tol = 1e-9) {
    if (std::abs(v.imag()) > tol * (std::abs(v.real()) + 1.0))
        throw DomainError(std::string(what) + ": imaginary residue too large");
    return v.real();
}

double re_lg(Complex arg) { return log_gamma(arg).real(); }

// positive product sin(pi z) sin(pi z') of an admissible pair
double sin_sin(Complex z, Complex zp) {
    double ss = real_checked(sin_pi(z) * sin_pi(zp), "sin(pi z) sin(pi z')");
    if (ss <= 0.0)
        throw DomainError("sin(pi z) sin(pi z') must be positive (admissible pair)");
    return ss;
}

double diff_step(double x) { return 1e-5 * (std::abs(x) + 1.0); }

} // namespace

double p_func(double x, const ZXiParams& prm) {
    prm.require_kernel_class();
    double szz = real_checked(prm.z + prm.zp, "z + z'");
    double lg = 0.25 * std::log(prm.zzp()) + 0.5 * x * std::log(prm.xi) +
                0.5 * szz * std::log1p(-prm.xi);
    lg += 0.5 * (re_lg(prm.z + x + 0.5) + re_lg(prm.zp + x + 0.5) -
                 re_lg(prm.z + 1.0) - re_lg(prm.zp + 1.0));
    EvalResult f = hyp2f1_reg(-prm.z, -prm.zp, Complex(x + 0.5, 0.0),
                              prm.xi / (prm.xi - 1.0));
    return std::exp(lg) * real_checked(f.value, "P(x)", 1e-8);
}

double q_func(double x, const ZXiParams& prm) {
    prm.require_kernel_class();
    double szz = real_checked(prm.z + prm.zp, "z + z'");
    double lg = 0.75 * std::log(prm.zzp()) + 0.5 * (x + 1.0) * std::log(prm.xi) +
                (0.5 * szz - 1.0) * std::log1p(-prm.xi);
    lg += 0.5 * (re_lg(prm.z + x + 0.5) + re_lg(prm.zp + x + 0.5) -
                 re_lg(prm.z + 1.0) - re_lg(prm.zp + 1.0));
    EvalResult f = hyp2f1_reg(-prm.z + 1.0, -prm.zp + 1.0, Complex(x + 1.5, 0.0),
                              prm.xi / (prm.xi - 1.0));
    return std::exp(lg) * real_checked(f.value, "Q(x)", 1e-8);
}

double dp_dxi(double x, const ZXiParams& prm) {
    double szz = real_checked(prm.z + prm.zp, "z + z'");
    return (x / (2.0 * prm.xi) - szz / (2.0 * (1.0 - prm.xi))) * p_func(x, prm) -
           std::sqrt(prm.zzp()) / (std::sqrt(prm.xi) * (1.0 - prm.xi)) * q_func(x, prm);
}

double dq_dxi(double x, const ZXiParams& prm) {
    double szz = real_checked(prm.z + prm.zp, "z + z'");
    return (-x / (2.0 * prm.xi) + szz / (2.0 * (1.0 - prm.xi))) * q_func(x, prm) +
           std::sqrt(prm.zzp()) / (std::sqrt(prm.xi) * (1.0 - prm.xi)) * p_func(x, prm);
}

namespace {

double hyperg_first(double x, double y, const ZXiParams& prm) {
    if (std::abs(x - y) < diag_eps) {
        // P'Q - Q'P with Richardson-refined central differences
        auto wronskian = [&](double h) {
            double dp = (p_func(x + h, prm) - p_func(x - h, prm)) / (2.0 * h);
            double dq = (q_func(x + h, prm) - q_func(x - h, prm)) / (2.0 * h);
            return dp * q_func(x, prm) - dq * p_func(x, prm);
        };
        double h = diff_step(x);
        return (4.0 * wronskian(0.5 * h) - wronskian(h)) / 3.0;
    }
    return (p_func(x, prm) * q_func(y, prm) - q_func(x, prm) * p_func(y, prm)) / (x - y);
}

double hyperg_second(double x, double y, const ZXiParams& prm) {
    if (x > 0.0 && y > 0.0) return hyperg_first(x, y, prm);
    ZXiParams neg = prm.negated();
    if (x < 0.0 && y < 0.0) return hyperg_first(-x, -y, neg);
    if (x > 0.0 && y < 0.0)
        return (p_func(x, prm) * p_func(-y, neg) + q_func(x, prm) * q_func(-y, neg)) / (x - y);
    return (p_func(-x, neg) * p_func(y, prm) + q_func(-x, neg) * q_func(y, prm)) / (x - y);
}

double gamma_first(double x, double y, Complex z, Complex zp);

// second-form mixed-sign case of the gamma kernel
double gamma_mixed(double x, double y, Complex z, Complex zp) {
    if (std::abs(z - zp) < 1e-8) {
        // remove the sin(pi(z-z')) indeterminacy by a symmetric perturbation
        double d = 1e-6;
        Complex mid = 0.5 * (z + zp);
        double va = gamma_kernel(KernelForm::second, x, y, mid + d, mid - d);
        double vb = gamma_kernel(KernelForm::second, x, y, mid - d, mid + d);
        return 0.5 * (va + vb);
    }
    double ss = sin_sin(z, zp);
    Complex pref = std::sqrt(ss) / (pi * sin_pi(z - zp));
    Complex ga, gb; // the two gamma-pair logs of the numerator
    double c;
    if (x > 0.0) { // x > 0 > y
        ga = log_gamma(z + x + 0.5) + log_gamma(-z - y + 0.5);
        gb = log_gamma(zp + x + 0.5) + log_gamma(-zp - y + 0.5);
    } else { // x < 0 < y
        ga = log_gamma(-z - x + 0.5) + log_gamma(z + y + 0.5);
        gb = log_gamma(-zp - x + 0.5) + log_gamma(zp + y + 0.5);
    }
    c = 0.5 * (ga.real() + gb.real());
    Complex num = sin_pi(z) * std::exp(ga - c) - sin_pi(zp) * std::exp(gb - c);
    return real_checked(pref * num / (x - y), "gamma kernel (mixed)");
}

double gamma_first(double x, double y, Complex z, Complex zp) {
    if (std::abs(z - zp) < 1e-8) {
        double zr = real_checked(0.5 * (z + zp), "psi branch z");
        return psi_kernel(x, y, zr);
    }
    Complex s = sin_pi(z) * sin_pi(zp) / (pi * sin_pi(z - zp));
    if (std::abs(x - y) < diag_eps) {
        Complex d = digamma(z + x + 0.5) - digamma(zp + x + 0.5);
        return real_checked(s * d, "gamma kernel diagonal");
    }
    Complex ga = log_gamma(z + x + 0.5) + log_gamma(zp + y + 0.5);
    Complex gb = log_gamma(zp + x + 0.5) + log_gamma(z + y + 0.5);
    double c = 0.5 * (ga.real() + gb.real());
    Complex num = std::exp(ga - c) - std::exp(gb - c);
    return real_checked(s * num / (x - y), "gamma kernel");
}

double gamma_second(double x, double y, Complex z, Complex zp) {
    if (x > 0.0 && y > 0.0) return gamma_first(x, y, z, zp);
    if (x < 0.0 && y < 0.0) return gamma_first(-x, -y, -z, -zp);
    return gamma_mixed(x, y, z, zp);
}

} // namespace

double hyperg_kernel(KernelForm form, double x, double y, const ZXiParams& prm) {
    prm.require_kernel_class();
    return form == KernelForm::first ? hyperg_first(x, y, prm)
                                     : hyperg_second(x, y, prm);
}

double gamma_kernel(KernelForm form, double x, double y, Complex z, Complex zp) {
    auto cls = classify(z, zp);
    if (cls != AdmissibilityClass::principal && cls != AdmissibilityClass::complementary)
        throw DomainError("gamma_kernel: requires a class (i)/(ii) pair");
    return form == KernelForm::first ? gamma_first(x, y, z, zp)
                                     : gamma_second(x, y, z, zp);
}

double psi_kernel(double x, double y, double z) {
    double s = std::pow(sin_pi(Complex(z, 0.0)).real() / pi, 2);
    if (std::abs(x - y) < diag_eps)
        return s * real_checked(trigamma(Complex(z + x + 0.5, 0.0)), "psi kernel diagonal");
    Complex d = digamma(Complex(z + x + 0.5, 0.0)) - digamma(Complex(z + y + 0.5, 0.0));
    return s * real_checked(d, "psi kernel") / (x - y);
}

double dxi_kernel(double x, double y, const ZXiParams& prm) {
    prm.require_kernel_class();
    return (p_func(x, prm) * q_func(y, prm) + q_func(x, prm) * p_func(y, prm)) /
           (2.0 * prm.xi);
}

double a_kernel(double x, double y, const ZXiParams& prm) {
    prm.require_kernel_class();
    if (!(x > 0.0) || !(y < 0.0))
        throw DomainError("a_kernel: requires x in Z'_+ and y in Z'_-");
    double ss = sin_sin(prm.z, prm.zp);
    double lg = 0.5 * (x - y) * std::log(prm.xi);
    lg += 0.5 * (re_lg(prm.z + x + 0.5) + re_lg(prm.zp + x + 0.5)) -
          re_lg(Complex(x + 0.5, 0.0));
    lg += 0.5 * (re_lg(-prm.z - y + 0.5) + re_lg(-prm.zp - y + 0.5)) -
          re_lg(Complex(-y + 0.5, 0.0));
    return std::sqrt(ss) / pi * std::exp(lg) / (x - y);
}

double a_kernel_limit(double x, double y, Complex z, Complex zp) {
    if (!(x > 0.0) || !(y < 0.0))
        throw DomainError("a_kernel_limit: requires x in Z'_+ and y in Z'_-");
    double ss = sin_sin(z, zp);
    double lg = 0.5 * (re_lg(z + x + 0.5) + re_lg(zp + x + 0.5)) -
                re_lg(Complex(x + 0.5, 0.0));
    lg += 0.5 * (re_lg(-z - y + 0.5) + re_lg(-zp - y + 0.5)) -
          re_lg(Complex(-y + 0.5, 0.0));
    return std::sqrt(ss) / pi * std::exp(lg) / (x - y);
}

double l_kernel(double x, double y, const ZXiParams& prm) {
    if (x > 0.0 && y < 0.0) return a_kernel(x, y, prm);
    if (x < 0.0 && y > 0.0) return -a_kernel(y, x, prm);
    return 0.0;
}

double l_kernel_limit(double x, double y, Complex z, Complex zp) {
    if (x > 0.0 && y < 0.0) return a_kernel_limit(x, y, z, zp);
    if (x < 0.0 && y > 0.0) return -a_kernel_limit(y, x, z, zp);
    return 0.0;
}

namespace {

// first-form tail profile in d = s - t
double tail_first_profile(double d, Complex z, Complex zp) {
    if (std::abs(z - zp) < 1e-8) {
        double zr = 0.5 * (z + zp).real();
        double ss = std::pow(sin_pi(Complex(zr, 0.0)).real(), 2);
        if (std::abs(d) < diag_eps) return ss / (pi * pi);
        return ss * d / (2.0 * pi * pi * std::sinh(d / 2.0));
    }
    Complex s = sin_pi(z) * sin_pi(zp) / (pi * sin_pi(z - zp));
    if (std::abs(d) < diag_eps) return real_checked(s * (z - zp), "tail diagonal");
    return real_checked(s * std::sinh(0.5 * (z - zp) * d), "tail kernel") /
           std::sinh(0.5 * d);
}

double tail_mixed_profile(bool x_positive, double d, Complex z, Complex zp) {
    double ss = sin_sin(z, zp);
    if (std::abs(z - zp) < 1e-8) {
        // z' -> z limit of the mixed-sign display
        double zr = 0.5 * (z + zp).real();
        double sz = sin_pi(Complex(zr, 0.0)).real();
        double cz = cos_pi(Complex(zr, 0.0)).real();
        double num = x_positive ? sz * d + pi * cz : sz * d - pi * cz;
        return sz * num / (2.0 * pi * pi * std::cosh(d / 2.0));
    }
    Complex pref = std::sqrt(ss) / (pi * sin_pi(z - zp));
    Complex e = std::exp(0.5 * (z - zp) * d);
    Complex num = x_positive ? sin_pi(z) * e - sin_pi(zp) / e
                             : sin_pi(zp) * e - sin_pi(z) / e;
    return real_checked(pref * num, "tail kernel (mixed)") / (2.0 * std::cosh(d / 2.0));
}

} // namespace

double tail_kernel(KernelForm form, bool x_positive, bool y_positive,
                   double s, double t, Complex z, Complex zp) {
    double d = s - t; // translation invariance: only s - t enters
    if (form == KernelForm::first || x_positive == y_positive)
        return tail_first_profile(d, z, zp);
    return tail_mixed_profile(x_positive, d, z, zp);
}

double l_tail(bool x_positive, bool y_positive, double s, double t,
              Complex z, Complex zp) {
    double d = s - t;
    if (x_positive == y_positive) return 0.0;
    double ss = sin_sin(z, zp);
    double szz = real_checked(z + zp, "z + z'");
    double e = x_positive ? std::exp(0.5 * szz * d) : -std::exp(-0.5 * szz * d);
    return std::sqrt(ss) / pi * e / (2.0 * std::cosh(d / 2.0));
}

FourierSymbols fourier_symbols(double u, Complex z, Complex zp) {
    auto cls = classify(z, zp);
    if (cls != AdmissibilityClass::principal && cls != AdmissibilityClass::complementary)
        throw DomainError("fourier_symbols: requires a class (i)/(ii) pair");
    double szz = real_checked(z + zp, "z + z'");
    if (!(std::abs(szz) < 1.0))
        throw DomainError("fourier_symbols: requires |z + z'| < 1");
    double ss = sin_sin(z, zp);
    Complex iu(0.0, u);
    Complex c = std::sqrt(ss) / std::cos(pi * iu - 0.5 * pi * szz);
    Complex den = std::cos(2.0 * pi * iu) + cos_pi(z - zp);
    Complex a = 2.0 * ss / den;
    Complex b = 2.0 * std::sqrt(ss) * std::cos(pi * iu + 0.5 * pi * szz) / den;
    return {c, a, b};
}

// ---- window assembly ----

KernelId KernelId::hypergeom(KernelForm form, const ZXiParams& p) {
    p.require_kernel_class();
    return {form == KernelForm::first ? KernelFamily::hypergeom_first
                                      : KernelFamily::hypergeom_second,
            p, p.z, p.zp};
}

KernelId KernelId::gamma(KernelForm form, Complex z, Complex zp) {
    return {form == KernelForm::first ? KernelFamily::gamma_first
                                      : KernelFamily::gamma_second,
            std::nullopt, z, zp};
}

KernelId KernelId::psi(double z) {
    return {KernelFamily::psi, std::nullopt, Complex(z, 0.0), Complex(z, 0.0)};
}

double eval_kernel(const KernelId& id, double x, double y) {
    switch (id.family) {
        case KernelFamily::hypergeom_first:
            return hyperg_kernel(KernelForm::first, x, y, *id.zxi);
        case KernelFamily::hypergeom_second:
            return hyperg_kernel(KernelForm::second, x, y, *id.zxi);
        case KernelFamily::gamma_first:
            return gamma_kernel(KernelForm::first, x, y, id.z, id.zp);
        case KernelFamily::gamma_second:
            return gamma_kernel(KernelForm::second, x, y, id.z, id.zp);
        case KernelFamily::psi:
            return psi_kernel(x, y, id.z.real());
        case KernelFamily::a_xi:
            return a_kernel(x, y, *id.zxi);
        case KernelFamily::a_limit:
            return a_kernel_limit(x, y, id.z, id.zp);
        case KernelFamily::l_xi:
            return l_kernel(x, y, *id.zxi);
        case KernelFamily::l_limit:
            return l_kernel_limit(x, y, id.z, id.zp);
        case KernelFamily::tail_first:
            return tail_kernel(KernelForm::first, true, true, x, y, id.z, id.zp);
        case KernelFamily::tail_second:
            return tail_kernel(KernelForm::second, x > 0.0, y > 0.0,
                               std::abs(x), std::abs(y), id.z, id.zp);
        case KernelFamily::l_tail:
            return l_tail(x > 0.0, y > 0.0, std::abs(x), std::abs(y), id.z, id.zp);
    }
    throw DomainError("eval_kernel: unknown family");
}

Eigen::MatrixXd kernel_window(const KernelId& id, const std::vector<HalfInteger>& pts) {
    const auto n = static_cast<Eigen::Index>(pts.size());
    Eigen::MatrixXd m(n, n);
    switch (id.family) {
        case KernelFamily::hypergeom_first: {
            const ZXiParams& prm = *id.zxi;
            std::vector<double> pv(pts.size()), qv(pts.size());
            for (std::size_t i = 0; i < pts.size(); ++i) {
                pv[i] = p_func(pts[i].value(), prm);
                qv[i] = q_func(pts[i].value(), prm);
            }
            for (Eigen::Index i = 0; i < n; ++i)
                for (Eigen::Index j = 0; j < n; ++j) {
                    if (i == j) {
                        m(i, j) = hyperg_first(pts[static_cast<std::size_t>(i)].value(),
                                               pts[static_cast<std::size_t>(j)].value(), prm);
                    } else {
                        double dx = pts[static_cast<std::size_t>(i)].value() -
                                    pts[static_cast<std::size_t>(j)].value();
                        m(i, j) = (pv[static_cast<std::size_t>(i)] * qv[static_cast<std::size_t>(j)] -
                                   qv[static_cast<std::size_t>(i)] * pv[static_cast<std::size_t>(j)]) / dx;
                    }
                }
            return m;
        }
        case KernelFamily::hypergeom_second: {
            const ZXiParams& prm = *id.zxi;
            ZXiParams neg = prm.negated();
            std::vector<double> pp(pts.size()), qp(pts.size());
            for (std::size_t i = 0; i < pts.size(); ++i) {
                double x = pts[i].value();
                pp[i] = x > 0.0 ? p_func(x, prm) : p_func(-x, neg);
                qp[i] = x > 0.0 ? q_func(x, prm) : q_func(-x, neg);
            }
            for (Eigen::Index i = 0; i < n; ++i)
                for (Eigen::Index j = 0; j < n; ++j) {
                    double x = pts[static_cast<std::size_t>(i)].value();
                    double y = pts[static_cast<std::size_t>(j)].value();
                    if (i == j) {
                        m(i, j) = hyperg_second(x, y, prm);
                        continue;
                    }
                    double pi_ = pp[static_cast<std::size_t>(i)], qi = qp[static_cast<std::size_t>(i)];
                    double pj = pp[static_cast<std::size_t>(j)], qj = qp[static_cast<std::size_t>(j)];
                    if (x > 0.0 && y > 0.0) m(i, j) = (pi_ * qj - qi * pj) / (x - y);
                    else if (x > 0.0 && y < 0.0) m(i, j) = (pi_ * pj + qi * qj) / (x - y);
                    else if (x < 0.0 && y > 0.0) m(i, j) = (pi_ * pj + qi * qj) / (x - y);
                    else m(i, j) = (pi_ * qj - qi * pj) / (y - x);
                }
            return m;
        }
        case KernelFamily::tail_first:
        case KernelFamily::tail_second:
        case KernelFamily::l_tail:
            throw DomainError("kernel_window: tail kernels live on the continuous line");
        default:
            break;
    }
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) = eval_kernel(id, pts[static_cast<std::size_t>(i)].value(),
                                  pts[static_cast<std::size_t>(j)].value());
    return m;
}

double circ_sign(HalfInteger x) {
    if (x.twice > 0) return 1.0;
    long k = (-x.twice - 1) / 2; // x = -(k + 1/2)
    return (k % 2 == 0) ? 1.0 : -1.0;
}

Eigen::MatrixXd circ_transform_on(const Eigen::MatrixXd& k,
                                  const std::vector<HalfInteger>& pts,
                                  const PointSet& flip) {
    const auto n = static_cast<Eigen::Index>(pts.size());
    if (k.rows() != n || k.cols() != n)
        throw DomainError("circ_transform: matrix does not match window");
    Eigen::MatrixXd out = k;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (flip.contains(pts[static_cast<std::size_t>(i)])) {
            out.row(i) = -k.row(i);
            out(i, i) += 1.0;
        }
    }
    return out;
}

Eigen::MatrixXd circ_transform(const Eigen::MatrixXd& k,
                               const std::vector<HalfInteger>& pts) {
    const auto n = static_cast<Eigen::Index>(pts.size());
    if (k.rows() != n || k.cols() != n)
        throw DomainError("circ_transform: matrix does not match window");
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (!(pts[i - 1] < pts[i]))
            throw DomainError("circ_transform: window points must be increasing");
    Eigen::MatrixXd out(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        HalfInteger x = pts[static_cast<std::size_t>(i)];
        for (Eigen::Index j = 0; j < n; ++j) {
            HalfInteger y = pts[static_cast<std::size_t>(j)];
            double v = x.twice > 0 ? k(i, j) : ((i == j ? 1.0 : 0.0) - k(i, j));
            out(i, j) = circ_sign(x) * v * circ_sign(y);
        }
    }
    return out;
}

} // namespace zmlab
