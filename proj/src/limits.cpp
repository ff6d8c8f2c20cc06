#include "zmlab/limits.hpp"

#include <cmath>
#include <numbers>

#include "zmlab/errors.hpp"
#include "zmlab/specfun.hpp"

namespace zmlab {

namespace {

constexpr double pi = std::numbers::pi;

void require_coupling_eps(double eps, Complex z, Complex zp) {
    double lim = 1.0 - std::abs((z - zp).real());
    if (!(eps > 0.0 && eps < lim))
        throw DomainError("scan: coupling exponent must satisfy 0 < eps < 1 - |Re(z-z')|");
}

double tail_target(const ScanSpec& spec, const Probe& p, Complex z, Complex zp) {
    return tail_kernel(spec.form, p.x_positive, p.y_positive, p.x, p.y, z, zp);
}

// sqrt(xy) K(x,y) with x = sx e^{s0+s}, y = sy e^{s0+t}
template <typename KernelFn>
double scaled_source(KernelFn kernel, double s0, const Probe& p) {
    double x = std::exp(s0 + p.x), y = std::exp(s0 + p.y);
    double jac = std::sqrt(x * y); // sqrt(dx dy) Jacobian of the log change
    double xs = p.x_positive ? x : -x;
    double ys = p.y_positive ? y : -y;
    return jac * kernel(xs, ys);
}

} // namespace

ScanSpec ScanSpec::xi_ladder(const ZXiParams& base, KernelForm form,
                             std::vector<double> ladder, std::vector<Probe> probes) {
    base.require_kernel_class();
    ScanSpec s;
    s.coupling = Coupling::xi_ladder;
    s.form = form;
    s.ladder = std::move(ladder);
    s.probes = std::move(probes);
    s.zxi = base;
    s.z = base.z;
    s.zp = base.zp;
    return s;
}

ScanSpec ScanSpec::n_ladder_zw(const ZWParams& base, std::vector<double> ns,
                               std::vector<Probe> probes) {
    ScanSpec s;
    s.coupling = Coupling::n_ladder_zw;
    s.ladder = std::move(ns);
    s.probes = std::move(probes);
    s.zw = base;
    s.z = -base.z;
    s.zp = -base.zp;
    return s;
}

ScanSpec ScanSpec::n_ladder_zab(const ZABParams& base, std::vector<double> ns,
                                std::vector<Probe> probes) {
    ScanSpec s;
    s.coupling = Coupling::n_ladder_zab;
    s.ladder = std::move(ns);
    s.probes = std::move(probes);
    s.zab = base;
    s.z = -base.z;
    s.zp = -base.zp;
    return s;
}

ScanSpec ScanSpec::tail_ladder(Complex z, Complex zp, KernelForm form,
                               std::vector<double> s0s, std::vector<Probe> probes) {
    ScanSpec s;
    s.coupling = Coupling::tail_s0_ladder;
    s.form = form;
    s.ladder = std::move(s0s);
    s.probes = std::move(probes);
    s.z = z;
    s.zp = zp;
    return s;
}

ScanSpec ScanSpec::coupled(const ZXiParams& base, KernelForm form, double eps,
                           std::vector<double> s0s, std::vector<Probe> probes) {
    base.require_kernel_class();
    require_coupling_eps(eps, base.z, base.zp);
    ScanSpec s;
    s.coupling = Coupling::coupled_xi_s0;
    s.form = form;
    s.ladder = std::move(s0s);
    s.probes = std::move(probes);
    s.zxi = base;
    s.z = base.z;
    s.zp = base.zp;
    s.coupling_eps = eps;
    return s;
}

ScanSpec ScanSpec::prob76(const ZWParams& base, double eps,
                          std::vector<double> ns, std::vector<Probe> probes) {
    require_coupling_eps(eps, base.z, base.zp);
    for (const auto& p : probes)
        if (!p.x_positive || !p.y_positive)
            throw DomainError("prob76 scan: only the (+,+) branch is evaluable "
                              "(the explicit second form is external)");
    ScanSpec s;
    s.coupling = Coupling::n_tail_coupled;
    s.ladder = std::move(ns);
    s.probes = std::move(probes);
    s.zw = base;
    s.z = -base.z;
    s.zp = -base.zp;
    s.coupling_eps = eps;
    return s;
}

ErrorTable run_scan(const ScanSpec& spec) {
    if (spec.ladder.empty() || spec.probes.empty())
        throw DomainError("run_scan: empty ladder or probe list");
    ErrorTable table;
    for (double lv : spec.ladder) {
        for (const auto& p : spec.probes) {
            double err = 0.0;
            switch (spec.coupling) {
                case Coupling::xi_ladder: {
                    ZXiParams prm = ZXiParams::make(spec.zxi->z, spec.zxi->zp, lv);
                    double src = hyperg_kernel(spec.form, p.x, p.y, prm);
                    double tgt = gamma_kernel(spec.form, p.x, p.y, spec.z, spec.zp);
                    err = std::abs(src - tgt);
                    break;
                }
                case Coupling::n_ladder_zw: {
                    ZWParams prm = spec.zw->with_n(static_cast<int>(lv));
                    double src = zw_kernel(p.x, p.y, prm);
                    double tgt = gamma_kernel(KernelForm::first, p.x, p.y, spec.z, spec.zp);
                    err = std::abs(src - tgt);
                    break;
                }
                case Coupling::n_ladder_zab: {
                    ZABParams prm = spec.zab->with_n(static_cast<int>(lv));
                    double src = zab_kernel(p.x, p.y, prm);
                    double tgt = gamma_kernel(KernelForm::first, p.x, p.y, spec.z, spec.zp);
                    err = std::abs(src - tgt);
                    break;
                }
                case Coupling::tail_s0_ladder: {
                    auto kernel = [&](double x, double y) {
                        return gamma_kernel(spec.form, x, y, spec.z, spec.zp);
                    };
                    double src = scaled_source(kernel, lv, p);
                    err = std::abs(src - tail_target(spec, p, spec.z, spec.zp));
                    break;
                }
                case Coupling::coupled_xi_s0: {
                    double xi = 1.0 - std::exp(-lv / spec.coupling_eps);
                    ZXiParams prm = ZXiParams::make(spec.zxi->z, spec.zxi->zp, xi);
                    auto kernel = [&](double x, double y) {
                        return hyperg_kernel(spec.form, x, y, prm);
                    };
                    double src = scaled_source(kernel, lv, p);
                    err = std::abs(src - tail_target(spec, p, spec.z, spec.zp));
                    break;
                }
                case Coupling::n_tail_coupled: {
                    int n = static_cast<int>(lv);
                    ZWParams prm = spec.zw->with_n(n);
                    double s0 = spec.coupling_eps * std::log(static_cast<double>(n));
                    auto kernel = [&](double x, double y) {
                        return zw_kernel(x, y, prm);
                    };
                    double src = scaled_source(kernel, s0, p);
                    err = std::abs(src - tail_target(spec, p, spec.z, spec.zp));
                    break;
                }
            }
            table.rows.push_back({lv, p.x, p.y, err});
            table.max_err = std::max(table.max_err, err);
        }
    }
    // trend verdict: strictly decreasing along the ladder at every probe
    bool dec = true;
    const std::size_t np = spec.probes.size();
    for (std::size_t ip = 0; ip < np; ++ip) {
        for (std::size_t il = 1; il < spec.ladder.size(); ++il) {
            double prev = table.rows[(il - 1) * np + ip].err;
            double cur = table.rows[il * np + ip].err;
            if (!(cur < prev)) dec = false;
        }
    }
    table.final_max = 0.0;
    for (std::size_t ip = 0; ip < np; ++ip)
        table.final_max = std::max(table.final_max,
                                   table.rows[(spec.ladder.size() - 1) * np + ip].err);
    if (spec.coupling == Coupling::n_tail_coupled)
        table.verdict = "exploratory";
    else
        table.verdict = dec ? "decreasing" : "not-decreasing";
    return table;
}

double density_constant(Complex z, Complex zp) {
    Complex c = (z - zp) * sin_pi(z) * sin_pi(zp) / (pi * sin_pi(z - zp));
    if (std::abs(c.imag()) > 1e-10 * (std::abs(c.real()) + 1.0))
        throw DomainError("density_constant: non-real value");
    return c.real();
}

ErrorTable density_profile(const KernelId& id, const std::vector<double>& xs) {
    if (xs.empty()) throw DomainError("density_profile: empty ladder");
    double c = density_constant(id.z, id.zp);
    ErrorTable table;
    for (double x : xs) {
        double v = std::abs(x) * eval_kernel(id, x, x);
        double err = std::abs(v - c);
        table.rows.push_back({x, x, x, err});
        table.max_err = std::max(table.max_err, err);
    }
    bool dec = true;
    for (std::size_t i = 1; i < table.rows.size(); ++i)
        if (!(table.rows[i].err < table.rows[i - 1].err)) dec = false;
    table.final_max = table.rows.back().err;
    table.verdict = table.rows.size() > 1 ? (dec ? "decreasing" : "not-decreasing")
                                          : "single";
    return table;
}

ErrorTable cross_decay(const ZWParams& base, const std::vector<int>& ns,
                       int neighborhood) {
    if (ns.empty()) throw DomainError("cross_decay: empty ladder");
    ErrorTable table;
    for (int n : ns) {
        ZWParams prm = base.with_n(n);
        double worst = 0.0;
        double wx = 0.0, wy = 0.0;
        for (int i = -neighborhood; i < neighborhood; ++i) {
            double x = i + 0.5;
            for (int j = -neighborhood; j < neighborhood; ++j) {
                double y = -static_cast<double>(n) + j + 0.5;
                double v = std::abs(zw_kernel(x, y, prm));
                if (v > worst) { worst = v; wx = x; wy = y; }
            }
        }
        table.rows.push_back({static_cast<double>(n), wx, wy, worst});
        table.max_err = std::max(table.max_err, worst);
    }
    bool dec = true;
    for (std::size_t i = 1; i < table.rows.size(); ++i)
        if (!(table.rows[i].err < table.rows[i - 1].err)) dec = false;
    table.final_max = table.rows.back().err;
    table.verdict = table.rows.size() > 1 ? (dec ? "decreasing" : "not-decreasing")
                                          : "single";
    return table;
}

} // namespace zmlab
