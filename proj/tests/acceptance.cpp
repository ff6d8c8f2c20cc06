// Acceptance suite: every criterion prints one PASS/FAIL line; the process
// exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "testutil.hpp"
#include "zmlab/dpp.hpp"
#include "zmlab/limits.hpp"
#include "zmlab/opkernels.hpp"
#include "zmlab/oracle.hpp"

using namespace zmlab;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s  criterion %2d  %-34s %s\n", pass ? "PASS" : "FAIL", idx,
                name.c_str(), detail.c_str());
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, ...) {
    char buf[256];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof(buf), f, ap);
    va_end(ap);
    return buf;
}

PointSet pts(std::initializer_list<double> xs) {
    std::vector<HalfInteger> v;
    for (double x : xs) v.push_back(HalfInteger::from_double(x));
    return PointSet(std::move(v));
}

// ---- criterion 1: oracle vs determinant for the z-measure ----
void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    const std::vector<PointSet> tuples = {
        pts({0.5}), pts({-0.5}), pts({0.5, 1.5}), pts({-1.5, 2.5}),
        pts({-0.5, 0.5, 1.5})};
    const std::vector<std::pair<Complex, Complex>> pairs = {
        {Complex(0.4, 0.7), Complex(0.4, -0.7)},
        {Complex(0.3, 0.0), Complex(0.6, 0.0)}};
    double worst = 0.0, tail_worst = 0.0;
    bool ok = true;
    for (const auto& [z, zp] : pairs) {
        auto prm = ZXiParams::make(z, zp, 0.35);
        for (auto emb : {Embedding::underline, Embedding::frobenius}) {
            KernelForm form = emb == Embedding::underline ? KernelForm::first
                                                          : KernelForm::second;
            for (const auto& tup : tuples) {
                auto oracle = correlation_oracle(prm, tup, emb, 28, 1e-9);
                tail_worst = std::max(tail_worst, oracle.tail_bound);
                const auto m = static_cast<Eigen::Index>(tup.size());
                Eigen::MatrixXd sub(m, m);
                for (Eigen::Index i = 0; i < m; ++i)
                    for (Eigen::Index j = 0; j < m; ++j)
                        sub(i, j) = hyperg_kernel(
                            form, tup.points()[static_cast<std::size_t>(i)].value(),
                            tup.points()[static_cast<std::size_t>(j)].value(), prm);
                double det = sub.determinant();
                double rel = std::abs(det - oracle.value) / std::abs(oracle.value);
                worst = std::max(worst, rel);
                if (rel > 1e-6) ok = false;
            }
        }
    }
    double dt = seconds_since(t0);
    ok = ok && tail_worst < 1e-9 && dt < 60.0;
    report(1, "oracle vs determinant",
           ok, fmt("max rel %.2e, tail %.1e, %.1fs", worst, tail_worst, dt));
}

// ---- criterion 2: form relations ----
void criterion_2() {
    auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    auto pts30 = symmetric_window(30);
    for (const auto& [z, zp] : std::vector<std::pair<Complex, Complex>>{
             {Complex(0.4, 0.7), Complex(0.4, -0.7)},
             {Complex(0.3, 0.0), Complex(0.6, 0.0)}}) {
        auto prm = ZXiParams::make(z, zp, 0.5);
        auto second = kernel_window(KernelId::hypergeom(KernelForm::second, prm), pts30);
        auto first = kernel_window(KernelId::hypergeom(KernelForm::first, prm), pts30);
        worst = std::max(worst,
                         (circ_transform(second, pts30) - first).cwiseAbs().maxCoeff());
        auto gsecond = kernel_window(KernelId::gamma(KernelForm::second, z, zp), pts30);
        auto gfirst = kernel_window(KernelId::gamma(KernelForm::first, z, zp), pts30);
        worst = std::max(worst,
                         (circ_transform(gsecond, pts30) - gfirst).cwiseAbs().maxCoeff());
    }
    double dt = seconds_since(t0);
    report(2, "form-relation transforms", worst < 1e-10 && dt < 5.0,
           fmt("max dev %.2e, %.1fs", worst, dt));
}

// ---- criterion 3: differentiation identity ----
void criterion_3() {
    auto prm = ZXiParams::make(Complex(0.3, 0.0), Complex(0.6, 0.0), 0.4);
    const double h = 1e-5;
    const std::vector<std::pair<double, double>> probes = {
        {0.5, 1.5}, {-1.5, 0.5}, {2.5, -0.5}, {0.5, 2.5}, {-2.5, 1.5},
        {1.5, 3.5}, {-0.5, -1.5}, {3.5, 0.5}, {-3.5, 2.5}, {1.5, -2.5}};
    double worst = 0.0;
    for (auto [x, y] : probes) {
        auto up = ZXiParams::make(prm.z, prm.zp, prm.xi + h);
        auto dn = ZXiParams::make(prm.z, prm.zp, prm.xi - h);
        double fd = (hyperg_kernel(KernelForm::first, x, y, up) -
                     hyperg_kernel(KernelForm::first, x, y, dn)) / (2.0 * h);
        double an = dxi_kernel(x, y, prm);
        worst = std::max(worst, std::abs(fd - an) / std::abs(an));
    }
    report(3, "d/dxi identity", worst < 1e-6, fmt("max rel %.2e", worst));
}

// ---- criterion 4: K = L/(1+L) ----
void criterion_4() {
    auto prm = ZXiParams::make(Complex(0.3, 0.0), Complex(0.6, 0.0), 0.5);
    auto win = symmetric_window(40);
    auto lw = WindowMatrix(win, kernel_window(KernelId{KernelFamily::l_xi, prm,
                                                       prm.z, prm.zp}, win));
    auto k = k_from_l(lw);
    auto closed = kernel_window(KernelId::hypergeom(KernelForm::second, prm), win);
    double worst = 0.0;
    for (Eigen::Index i = 0; i < k.size(); ++i)
        for (Eigen::Index j = 0; j < k.size(); ++j) {
            if (std::abs(win[static_cast<std::size_t>(i)].value()) > 20.0 ||
                std::abs(win[static_cast<std::size_t>(j)].value()) > 20.0)
                continue;
            worst = std::max(worst, std::abs(k.entries(i, j) - closed(i, j)));
        }
    report(4, "K = L/(1+L) inner window", worst < 1e-8, fmt("max dev %.2e", worst));
}

// ---- criterion 5: gamma limit ----
void criterion_5() {
    bool ok = true;
    double final_worst = 0.0;
    for (const auto& [z, zp] : std::vector<std::pair<Complex, Complex>>{
             {Complex(0.3, 0.0), Complex(0.6, 0.0)},
             {Complex(0.4, 0.7), Complex(0.4, -0.7)}}) {
        auto base = ZXiParams::make(z, zp, 0.5);
        auto t = run_scan(ScanSpec::xi_ladder(
            base, KernelForm::first, {0.9, 0.99, 0.999},
            {{0.5, 1.5}, {-1.5, 2.5}, {0.5, 3.5}, {-0.5, 1.5}}));
        ok = ok && t.decreasing() && t.final_max < 1e-2;
        final_worst = std::max(final_worst, t.final_max);
    }
    report(5, "gamma limit (xi ladder)", ok, fmt("final max %.2e", final_worst));
}

// ---- criterion 6: projection block algebra ----
void criterion_6() {
    double worst = 0.0;
    std::mt19937_64 rng(314159);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto check_l = [&](const WindowMatrix& lw) {
        auto blocks = circ_blocks(k_from_l(lw));
        const auto n = lw.size();
        worst = std::max(worst, (blocks.k_circ + blocks.circ_k -
                                 Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff());
        worst = std::max(worst, (blocks.k_circ * blocks.circ_k).cwiseAbs().maxCoeff());
        worst = std::max(worst, (blocks.k_circ * blocks.k_circ - blocks.k_circ)
                                    .cwiseAbs().maxCoeff());
    };
    for (int rep = 0; rep < 4; ++rep) {
        int m = 20;
        Eigen::MatrixXd a(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) a(i, j) = gauss(rng);
        Eigen::MatrixXd l = Eigen::MatrixXd::Zero(2 * m, 2 * m);
        l.block(m, 0, m, m) = a;
        l.block(0, m, m, m) = -a.transpose();
        check_l(WindowMatrix(symmetric_window(m), l));
    }
    auto prm = ZXiParams::make(Complex(0.3, 0.0), Complex(0.6, 0.0), 0.5);
    auto win = symmetric_window(30);
    check_l(WindowMatrix(win, kernel_window(KernelId{KernelFamily::l_xi, prm,
                                                     prm.z, prm.zp}, win)));
    report(6, "projection block algebra", worst < 1e-12, fmt("max dev %.2e", worst));
}

// ---- criterion 7: projection residual trend ----
void criterion_7() {
    // fixed interior block (the middle half of the smallest window), growing
    // sections over window sizes {40, 80, 160}
    auto prm = ZXiParams::make(Complex(0.3, 0.0), Complex(0.6, 0.0), 0.5);
    std::vector<double> hyp, gam;
    for (int r : {20, 40, 80}) {
        hyp.push_back(projection_residual(
            WindowMatrix::build(KernelId::hypergeom(KernelForm::first, prm), r), 10.0));
        gam.push_back(projection_residual(
            WindowMatrix::build(
                KernelId::gamma(KernelForm::first, Complex(0.2, 0.0), Complex(0.6, 0.0)),
                r),
            10.0));
    }
    bool ok = hyp[0] > hyp[1] && hyp[1] > hyp[2] && gam[0] > gam[1] && gam[1] > gam[2];
    report(7, "projection residual trend", ok,
           fmt("hyp %.1e>%.1e>%.1e gamma %.1e>%.1e>%.1e", hyp[0], hyp[1], hyp[2],
               gam[0], gam[1], gam[2]));
}

// ---- criterion 8: Askey-Lesky suite ----
void criterion_8() {
    bool ok = true;
    std::string detail;
    // monic checks N <= 5
    double monic_worst = 0.0;
    for (int n = 1; n <= 5; ++n) {
        auto prm = ZWParams::make(Complex(0.3, 0.0), Complex(0.6, 0.0),
                                  Complex(0.2, 0.0), Complex(0.5, 0.0), n);
        std::vector<double> xs, fs;
        for (int i = 0; i <= n; ++i) {
            xs.push_back(0.5 + i);
            fs.push_back(askey_lesky_eval(n, 0.5 + i, prm));
        }
        for (int level = 1; level <= n; ++level)
            for (int i = 0; i + level <= n; ++i)
                fs[static_cast<std::size_t>(i)] =
                    (fs[static_cast<std::size_t>(i + 1)] - fs[static_cast<std::size_t>(i)]) /
                    (xs[static_cast<std::size_t>(i + level)] - xs[static_cast<std::size_t>(i)]);
        monic_worst = std::max(monic_worst, std::abs(fs[0] - 1.0));
    }
    ok = ok && monic_worst < 1e-8;

    double ortho_worst = 0.0, norm_worst = 0.0, trace_worst = 0.0;
    for (int n = 1; n <= 8; ++n) {
        auto prm = ZWParams::make(Complex(0.3, 0.0), Complex(0.6, 0.0),
                                  Complex(0.2, 0.0), Complex(0.5, 0.0), n);
        auto rep = askey_lesky_report(prm);
        ortho_worst = std::max(ortho_worst, rep.ortho_residual);
        norm_worst = std::max(norm_worst, rep.norm_rel_err);
        trace_worst = std::max(trace_worst, rep.trace_abs_err);
    }
    ok = ok && ortho_worst < 1e-6 && norm_worst < 1e-6 && trace_worst < 1e-3;
    report(8, "Askey-Lesky suite", ok,
           fmt("monic %.1e ortho %.1e norm %.1e trace %.1e", monic_worst,
               ortho_worst, norm_worst, trace_worst));
}

// ---- criterion 9: zw oracle end to end ----
void criterion_9() {
    Complex z(0.4, 0.7), w(0.3, 0.2);
    double worst = 0.0;
    // N = 1: one-point correlations
    auto p1 = ZWParams::make(z, std::conj(z), w, std::conj(w), 1);
    for (double x : {-1.5, -0.5, 0.5, 1.5}) {
        auto oracle = correlation_oracle(p1, pts({x}), Embedding::underline, 30);
        double det = zw_kernel(x, x, p1);
        worst = std::max(worst, std::abs(det - oracle.value) / oracle.value);
    }
    // N = 2: one- and two-point correlations
    auto p2 = p1.with_n(2);
    for (double x : {-0.5, 0.5}) {
        auto oracle = correlation_oracle(p2, pts({x}), Embedding::underline, 30);
        double det = zw_kernel(x, x, p2);
        worst = std::max(worst, std::abs(det - oracle.value) / oracle.value);
    }
    for (auto [x, y] : std::vector<std::pair<double, double>>{
             {0.5, -1.5}, {0.5, 1.5}, {-0.5, -2.5}}) {
        auto oracle = correlation_oracle(p2, pts({x, y}), Embedding::underline, 30);
        double det = zw_kernel(x, x, p2) * zw_kernel(y, y, p2) -
                     zw_kernel(x, y, p2) * zw_kernel(y, x, p2);
        worst = std::max(worst, std::abs(det - oracle.value) / oracle.value);
    }
    report(9, "zw oracle vs determinant", worst < 1e-4, fmt("max rel %.2e", worst));
}

// ---- criterion 10: Neretin suite ----
void criterion_10() {
    auto prm = ZABParams::make(Complex(0.3, 0.0), Complex(0.6, 0.0), 0.5, 0.25, 8);
    auto rep = neretin_report(prm, 5);
    bool ok = rep.norm_rel_err_max < 1e-6 && rep.leading_rel_err < 1e-10 &&
              rep.gw_ratio_dev < 1e-10;
    report(10, "Neretin suite", ok,
           fmt("norms %.1e leading %.1e g~w %.1e", rep.norm_rel_err_max,
               rep.leading_rel_err, rep.gw_ratio_dev));
}

// ---- criterion 11: large-N limits ----
void criterion_11() {
    const std::vector<Probe> probes = {{0.5, 1.5}, {-1.5, 0.5}, {0.5, 2.5},
                                       {-0.5, 1.5}};
    auto zw = ZWParams::make(Complex(0.3, 0.0), Complex(0.6, 0.0),
                             Complex(0.2, 0.0), Complex(0.5, 0.0), 1);
    auto t1 = run_scan(ScanSpec::n_ladder_zw(zw, {40, 80, 160}, probes));
    auto zab = ZABParams::make(Complex(0.3, 0.0), Complex(0.6, 0.0), 0.5, 0.25, 1);
    auto t2 = run_scan(ScanSpec::n_ladder_zab(zab, {40, 80, 160}, probes));
    report(11, "large-N limits", t1.decreasing() && t2.decreasing(),
           fmt("zw final %.2e zab final %.2e", t1.final_max, t2.final_max));
}

// ---- criterion 12: tail suite ----
void criterion_12() {
    Complex z(0.3, 0.0), zp(0.6, 0.0);
    std::vector<Probe> first_probes = {{0.0, 0.7}, {0.3, 1.1}};
    auto t1 = run_scan(ScanSpec::tail_ladder(z, zp, KernelForm::first, {4, 6, 8},
                                             first_probes));
    std::vector<Probe> mixed = {{0.0, 0.7, true, false}, {0.2, 0.9, false, true}};
    auto t2 = run_scan(ScanSpec::tail_ladder(z, zp, KernelForm::second, {4, 6, 8},
                                             mixed));
    bool tails_ok = t1.decreasing() && t1.final_max < 1e-2 && t2.decreasing() &&
                    t2.final_max < 1e-2;

    auto base = ZXiParams::make(z, zp, 0.5);
    auto t3 = run_scan(ScanSpec::coupled(base, KernelForm::first, 0.3,
                                         {2.0, 3.0, 4.0}, {{0.0, 0.7}}));
    auto t4 = run_scan(ScanSpec::coupled(base, KernelForm::second, 0.3,
                                         {2.0, 3.0, 4.0},
                                         {{0.0, 0.7, true, false}}));
    bool coupled_ok = t3.decreasing() && t4.decreasing();

    double sym_worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        double u = -1.9 + 0.2 * k;
        auto sym = fourier_symbols(u, z, zp);
        Complex cc = sym.c * std::conj(sym.c);
        sym_worst = std::max(sym_worst, std::abs(sym.a - cc / (1.0 + cc)));
        sym_worst = std::max(sym_worst, std::abs(sym.b - sym.c / (1.0 + cc)));
    }
    double quad_worst = 0.0;
    for (double u : {0.0, 0.5, 1.0}) {
        auto f = [&](double sv) {
            return std::exp(Complex(0.0, u * sv)) * l_tail(true, false, sv, 0.0, z, zp);
        };
        Complex quad = testutil::simpson(f, -420.0, 420.0, 168000);
        quad_worst = std::max(quad_worst,
                              std::abs(quad - fourier_symbols(-u, z, zp).c));
    }
    bool fourier_ok = sym_worst < 1e-12 && quad_worst < 1e-6;
    report(12, "tail suite", tails_ok && coupled_ok && fourier_ok,
           fmt("tail %.1e coupled %.1e/%.1e sym %.1e quad %.1e", t1.final_max,
               t3.final_max, t4.final_max, sym_worst, quad_worst));
}

// ---- criterion 13: sampling ----
void criterion_13() {
    Complex z(0.4, 0.7), zp(0.4, -0.7);
    auto k = WindowMatrix::build(KernelId::gamma(KernelForm::first, z, zp), 10);
    const int draws = 20000;
    auto batch = sample_dpp(k, 90210, draws);
    bool ok = batch.max_clip < 1e-6;
    double worst_units = 0.0;
    std::vector<double> emp(k.points.size(), 0.0);
    for (const auto& d : batch.draws)
        for (std::size_t i = 0; i < k.points.size(); ++i)
            if (d.contains(k.points[i])) emp[i] += 1.0;
    for (std::size_t i = 0; i < k.points.size(); ++i) {
        double p = k.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i));
        double se = std::sqrt(std::max(p * (1.0 - p), 1e-12) / draws);
        worst_units = std::max(worst_units, std::abs(emp[i] / draws - p) / se);
    }
    ok = ok && worst_units < 4.0;
    // ten pair determinants
    double worst_pair = 0.0;
    for (std::size_t i = 0; i < 10; ++i) {
        std::size_t a = i, b = i + 5;
        double hits = 0.0;
        for (const auto& d : batch.draws)
            if (d.contains(k.points[a]) && d.contains(k.points[b])) hits += 1.0;
        auto ia = static_cast<Eigen::Index>(a), ib = static_cast<Eigen::Index>(b);
        double rho = k.entries(ia, ia) * k.entries(ib, ib) -
                     k.entries(ia, ib) * k.entries(ib, ia);
        double se = std::sqrt(std::max(rho * (1.0 - rho), 1e-12) / draws);
        worst_pair = std::max(worst_pair, std::abs(hits / draws - rho) / se);
    }
    ok = ok && worst_pair < 4.0;
    report(13, "DPP sampling", ok,
           fmt("clip %.1e density %.2f sigma pairs %.2f sigma", batch.max_clip,
               worst_units, worst_pair));
}

// ---- criterion 14: Plancherel degeneration ----
void criterion_14() {
    double theta = 1.0;
    bool ok = true;
    double final_worst = 0.0;
    for (const auto& lam : {YoungDiagram{}, YoungDiagram({1}), YoungDiagram({2, 1})}) {
        double target = plancherel_weight(theta, lam);
        double prev = 1e100;
        for (double t : {1e3, 1e4}) {
            auto prm = ZXiParams::make(Complex(t, 0.0), Complex(t, 0.0),
                                       theta / (t * t));
            double err = std::abs(z_weight(prm, lam).value() - target);
            if (!(err < prev)) ok = false;
            prev = err;
        }
        final_worst = std::max(final_worst, prev);
    }
    report(14, "Plancherel degeneration", ok, fmt("final err %.2e", final_worst));
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    criterion_13();
    criterion_14();
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
