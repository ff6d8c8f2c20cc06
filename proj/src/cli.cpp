#include "zmlab/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "zmlab/dpp.hpp"
#include "zmlab/errors.hpp"
#include "zmlab/limits.hpp"
#include "zmlab/opkernels.hpp"
#include "zmlab/oracle.hpp"
#include "zmlab/serialize.hpp"

namespace zmlab {

namespace {

// "0.4+0.7i", "-0.5i", "0.3" -> complex
Complex parse_complex(const std::string& s) {
    if (s.empty()) throw DomainError("empty complex literal");
    std::string t = s;
    bool has_i = t.back() == 'i' || t.back() == 'j';
    if (!has_i) return Complex(std::stod(t), 0.0);
    t.pop_back();
    // split into real and imaginary at the last +/- that is not an exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t k = t.size(); k-- > 1;) {
        if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) {
        std::string im = t;
        if (im.empty() || im == "+" || im == "-") im += "1";
        return Complex(0.0, std::stod(im));
    }
    std::string re = t.substr(0, split);
    std::string im = t.substr(split);
    if (im == "+" || im == "-") im += "1";
    return Complex(std::stod(re), std::stod(im));
}

[[maybe_unused]] std::string complex_str(Complex z) {
    std::ostringstream os;
    os << format_double(z.real());
    if (z.imag() != 0.0)
        os << (z.imag() > 0 ? "+" : "") << format_double(z.imag()) << "i";
    return os.str();
}

std::vector<double> parse_doubles(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stod(item));
    return out;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    for (double v : parse_doubles(s)) out.push_back(static_cast<int>(std::llround(v)));
    return out;
}

PointSet parse_points(const std::string& s) {
    std::vector<HalfInteger> pts;
    for (double v : parse_doubles(s)) pts.push_back(HalfInteger::from_double(v));
    return PointSet(std::move(pts));
}

YoungDiagram parse_diagram(const std::string& s) {
    if (s.empty() || s == "0" || s == "empty") return YoungDiagram{};
    return YoungDiagram(parse_ints(s));
}

struct CommonOpts {
    std::string z = "0.3", zp, w = "0.2", wp;
    double xi = 0.5, a = 0.5, b = 0.25, theta = 1.0;
    int n = 1;
    std::string out;
    std::string fmt = "csv";
};

// conjugate pair auto-completion: a lone complex z implies z' = conj z
Complex complete_pair(const std::string& given, Complex z) {
    if (!given.empty()) return parse_complex(given);
    if (z.imag() != 0.0) return std::conj(z);
    throw DomainError("real z needs an explicit partner parameter");
}

ZXiParams zxi_of(const CommonOpts& o) {
    Complex z = parse_complex(o.z);
    return ZXiParams::make(z, complete_pair(o.zp, z), o.xi);
}

ZWParams zw_of(const CommonOpts& o) {
    Complex z = parse_complex(o.z);
    Complex w = parse_complex(o.w);
    return ZWParams::make(z, complete_pair(o.zp, z), w, complete_pair(o.wp, w), o.n);
}

ZABParams zab_of(const CommonOpts& o) {
    Complex z = parse_complex(o.z);
    return ZABParams::make(z, complete_pair(o.zp, z), o.a, o.b, o.n);
}

void echo_params(OutputRecord& rec, const CommonOpts& o) {
    rec.inputs["z"] = o.z;
    if (!o.zp.empty()) rec.inputs["zp"] = o.zp;
}

int emit(const OutputRecord& rec, const CommonOpts& o) {
    std::ostringstream body;
    if (o.fmt == "json")
        write_json(rec, body);
    else
        write_csv(rec, body);
    if (o.out.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream f(o.out);
        if (!f) throw DomainError("cannot open output file " + o.out);
        f << body.str();
    }
    return rec.all_pass() ? 0 : 1;
}

const std::map<std::string, KernelFamily> kernel_families = {
    {"hypergeom_first", KernelFamily::hypergeom_first},
    {"hypergeom_second", KernelFamily::hypergeom_second},
    {"gamma_first", KernelFamily::gamma_first},
    {"gamma_second", KernelFamily::gamma_second},
    {"psi", KernelFamily::psi},
    {"a_xi", KernelFamily::a_xi},
    {"a_limit", KernelFamily::a_limit},
    {"l_xi", KernelFamily::l_xi},
    {"l_limit", KernelFamily::l_limit},
    {"tail_first", KernelFamily::tail_first},
    {"tail_second", KernelFamily::tail_second},
    {"l_tail", KernelFamily::l_tail},
};

KernelId kernel_id_of(const std::string& family, const CommonOpts& o) {
    auto it = kernel_families.find(family);
    if (it == kernel_families.end())
        throw DomainError("unknown kernel family " + family);
    KernelId id;
    id.family = it->second;
    Complex z = parse_complex(o.z);
    id.z = z;
    id.zp = complete_pair(o.zp, z);
    switch (id.family) {
        case KernelFamily::hypergeom_first:
        case KernelFamily::hypergeom_second:
        case KernelFamily::a_xi:
        case KernelFamily::l_xi:
            id.zxi = ZXiParams::make(id.z, id.zp, o.xi);
            id.zxi->require_kernel_class();
            break;
        case KernelFamily::psi:
            if (id.z.imag() != 0.0) throw DomainError("psi kernel needs real z");
            id.zp = id.z;
            break;
        default:
            break;
    }
    return id;
}

// ---- subcommand payloads ----

int cmd_weight(const CommonOpts& o, const std::string& family,
               const std::string& lambda_s, const std::string& sig_s) {
    OutputRecord rec;
    rec.subcommand = "weight";
    rec.inputs["family"] = family;
    echo_params(rec, o);
    rec.columns = {"log_magnitude", "sign", "value"};
    WeightValue wv{};
    if (family == "zxi") {
        rec.inputs["lambda"] = lambda_s;
        rec.inputs["xi"] = format_double(o.xi);
        wv = z_weight(zxi_of(o), parse_diagram(lambda_s));
    } else if (family == "zw") {
        rec.inputs["sig"] = sig_s;
        auto prm = zw_of(o);
        wv = zw_weight(Signature(prm.n, parse_ints(sig_s)), prm);
    } else if (family == "zab") {
        rec.inputs["sig"] = sig_s;
        auto prm = zab_of(o);
        wv = zab_weight(Signature(prm.n, parse_ints(sig_s)), prm);
    } else if (family == "plancherel") {
        rec.inputs["lambda"] = lambda_s;
        rec.inputs["theta"] = format_double(o.theta);
        double v = plancherel_weight(o.theta, parse_diagram(lambda_s));
        wv = {std::log(v), Complex(1.0, 0.0)};
    } else {
        throw DomainError("weight: unknown family " + family);
    }
    rec.rows.push_back({wv.log_magnitude, wv.phase_or_sign.real(), wv.value()});
    return emit(rec, o);
}

int cmd_correlation(const CommonOpts& o, const std::string& family,
                    const std::string& points_s, const std::string& embedding_s,
                    int cutoff, double tol) {
    PointSet points = parse_points(points_s);
    Embedding emb = embedding_s == "frobenius" ? Embedding::frobenius
                                               : Embedding::underline;
    OutputRecord rec;
    rec.subcommand = "correlation";
    rec.inputs["family"] = family;
    rec.inputs["points"] = points_s;
    rec.inputs["embedding"] = embedding_s;
    echo_params(rec, o);
    rec.columns = {"oracle", "determinant", "abs_diff", "tail_bound"};

    double oracle = 0.0, tail = 0.0, det = 0.0;
    const auto m = static_cast<Eigen::Index>(points.size());
    auto det_of = [&](auto&& entry) {
        Eigen::MatrixXd sub(m, m);
        for (Eigen::Index i = 0; i < m; ++i)
            for (Eigen::Index j = 0; j < m; ++j)
                sub(i, j) = entry(points.points()[static_cast<std::size_t>(i)],
                                  points.points()[static_cast<std::size_t>(j)]);
        return m == 0 ? 1.0 : sub.determinant();
    };

    if (family == "zxi") {
        auto prm = zxi_of(o);
        rec.inputs["xi"] = format_double(o.xi);
        auto r = correlation_oracle(prm, points, emb, cutoff, tol);
        oracle = r.value;
        tail = r.tail_bound;
        KernelForm form = emb == Embedding::underline ? KernelForm::first
                                                      : KernelForm::second;
        det = det_of([&](HalfInteger x, HalfInteger y) {
            return hyperg_kernel(form, x.value(), y.value(), prm);
        });
    } else if (family == "zw" || family == "zab") {
        const bool is_zw = family == "zw";
        auto kernel = [&](double x, double y) {
            return is_zw ? zw_kernel(x, y, zw_of(o)) : zab_kernel(x, y, zab_of(o));
        };
        int n = o.n;
        if (is_zw) {
            auto r = correlation_oracle(zw_of(o), points, emb, cutoff, tol);
            oracle = r.value;
            tail = r.tail_bound;
        } else {
            auto r = correlation_oracle(zab_of(o), points, emb, cutoff, tol);
            oracle = r.value;
            tail = r.tail_bound;
        }
        if (emb == Embedding::underline) {
            det = det_of([&](HalfInteger x, HalfInteger y) {
                return kernel(x.value(), y.value());
            });
        } else {
            // particle/hole flip on {-1/2,...,-N+1/2} relates the two pictures
            PointSet flip = signature_flip_set(n);
            det = det_of([&](HalfInteger x, HalfInteger y) {
                double v = kernel(x.value(), y.value());
                if (flip.contains(x)) v = (x == y ? 1.0 : 0.0) - v;
                return v;
            });
        }
    } else {
        throw DomainError("correlation: unknown family " + family);
    }
    rec.rows.push_back({oracle, det, std::abs(oracle - det), tail});
    return emit(rec, o);
}

int cmd_kernel(const CommonOpts& o, const std::string& family, double x, double y,
               int radius, const std::string& branch) {
    OutputRecord rec;
    rec.subcommand = "kernel";
    rec.inputs["family"] = family;
    echo_params(rec, o);
    KernelId id = kernel_id_of(family, o);
    if (id.family == KernelFamily::tail_first ||
        id.family == KernelFamily::tail_second ||
        id.family == KernelFamily::l_tail) {
        bool xp = branch.empty() || branch[0] == 'p';
        bool yp = branch.size() < 2 || branch[1] == 'p';
        rec.columns = {"s", "t", "value"};
        double v = id.family == KernelFamily::l_tail
                       ? l_tail(xp, yp, x, y, id.z, id.zp)
                       : tail_kernel(id.family == KernelFamily::tail_first
                                         ? KernelForm::first
                                         : KernelForm::second,
                                     xp, yp, x, y, id.z, id.zp);
        rec.rows.push_back({x, y, v});
        return emit(rec, o);
    }
    rec.columns = {"x", "y", "value"};
    if (radius > 0) {
        for (const auto& px : symmetric_window(radius))
            for (const auto& py : symmetric_window(radius))
                rec.rows.push_back({px.value(), py.value(),
                                    eval_kernel(id, px.value(), py.value())});
    } else {
        rec.rows.push_back({x, y, eval_kernel(id, x, y)});
    }
    return emit(rec, o);
}

Probe parse_probe(const std::string& s) {
    // "x:y" with optional sign suffix "x:y:pm"
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() < 2) throw DomainError("probe must look like x:y or x:y:pm");
    Probe p{std::stod(parts[0]), std::stod(parts[1])};
    if (parts.size() > 2 && parts[2].size() == 2) {
        p.x_positive = parts[2][0] == 'p';
        p.y_positive = parts[2][1] == 'p';
    }
    return p;
}

std::vector<Probe> parse_probes(const std::vector<std::string>& specs) {
    std::vector<Probe> out;
    for (const auto& s : specs) out.push_back(parse_probe(s));
    return out;
}

void table_into(const ErrorTable& t, OutputRecord& rec) {
    rec.columns = {"ladder", "x", "y", "err"};
    for (const auto& r : t.rows) rec.rows.push_back({r.ladder, r.x, r.y, r.err});
    rec.verdicts["trend"] = t.verdict == "decreasing"
                                ? "pass"
                                : (t.verdict == "exploratory" ? "exploratory" : "fail");
}

int cmd_scan(const CommonOpts& o, const std::string& type,
             const std::string& ladder_s, const std::vector<std::string>& probe_specs,
             double eps, const std::string& form_s) {
    OutputRecord rec;
    rec.subcommand = "scan";
    rec.inputs["type"] = type;
    rec.inputs["ladder"] = ladder_s;
    echo_params(rec, o);
    KernelForm form = form_s == "second" ? KernelForm::second : KernelForm::first;
    std::vector<double> ladder = parse_doubles(ladder_s);
    std::vector<Probe> probes = parse_probes(probe_specs);
    if (probes.empty())
        probes = {{0.5, 1.5}, {-1.5, 0.5}, {0.5, 2.5}, {-0.5, 1.5}};

    ErrorTable t;
    if (type == "xi") {
        t = run_scan(ScanSpec::xi_ladder(zxi_of(o), form, ladder, probes));
    } else if (type == "nzw") {
        t = run_scan(ScanSpec::n_ladder_zw(zw_of(o), ladder, probes));
    } else if (type == "nzab") {
        t = run_scan(ScanSpec::n_ladder_zab(zab_of(o), ladder, probes));
    } else if (type == "tail") {
        Complex z = parse_complex(o.z);
        t = run_scan(ScanSpec::tail_ladder(z, complete_pair(o.zp, z), form, ladder, probes));
    } else if (type == "coupled") {
        t = run_scan(ScanSpec::coupled(zxi_of(o), form, eps, ladder, probes));
    } else if (type == "prob76") {
        t = run_scan(ScanSpec::prob76(zw_of(o), eps, ladder, probes));
    } else if (type == "density") {
        Complex z = parse_complex(o.z);
        KernelId id = KernelId::gamma(form, z, complete_pair(o.zp, z));
        t = density_profile(id, ladder);
    } else if (type == "cross") {
        std::vector<int> ns;
        for (double v : ladder) ns.push_back(static_cast<int>(std::llround(v)));
        t = cross_decay(zw_of(o), ns);
    } else {
        throw DomainError("scan: unknown type " + type);
    }
    table_into(t, rec);
    rec.inputs["final_max"] = format_double(t.final_max);
    return emit(rec, o);
}

int cmd_ortho(const CommonOpts& o, const std::string& family, int n_max) {
    OutputRecord rec;
    rec.subcommand = "ortho";
    rec.inputs["family"] = family;
    echo_params(rec, o);
    if (family == "zw") {
        auto rep = askey_lesky_report(zw_of(o));
        rec.columns = {"ortho_residual", "norm_rel_err", "trace_abs_err", "window"};
        rec.rows.push_back({rep.ortho_residual, rep.norm_rel_err, rep.trace_abs_err,
                            rep.window});
        rec.verdicts["orthogonality"] = rep.ortho_residual < 1e-6 ? "pass" : "fail";
        rec.verdicts["norm"] = rep.norm_rel_err < 1e-6 ? "pass" : "fail";
        rec.verdicts["trace"] = rep.trace_abs_err < 1e-3 ? "pass" : "fail";
    } else if (family == "zab") {
        auto rep = neretin_report(zab_of(o), n_max);
        rec.columns = {"norm_rel_err_max", "leading_rel_err", "gw_ratio_dev",
                       "trace_abs_err"};
        rec.rows.push_back({rep.norm_rel_err_max, rep.leading_rel_err,
                            rep.gw_ratio_dev, rep.trace_abs_err});
        rec.verdicts["norms"] = rep.norm_rel_err_max < 1e-6 ? "pass" : "fail";
        rec.verdicts["leading"] = rep.leading_rel_err < 1e-10 ? "pass" : "fail";
        rec.verdicts["g_prop_w"] = rep.gw_ratio_dev < 1e-10 ? "pass" : "fail";
        rec.verdicts["trace"] = rep.trace_abs_err < 1e-3 ? "pass" : "fail";
    } else {
        throw DomainError("ortho: unknown family " + family);
    }
    return emit(rec, o);
}

int cmd_sample(const CommonOpts& o, const std::string& family, int radius,
               int count, std::uint64_t seed, const std::string& dump) {
    OutputRecord rec;
    rec.subcommand = "sample";
    rec.inputs["family"] = family;
    rec.inputs["seed"] = std::to_string(seed);
    rec.inputs["count"] = std::to_string(count);
    echo_params(rec, o);
    KernelId id = kernel_id_of(family, o);
    WindowMatrix k = WindowMatrix::build(id, radius);
    SampleBatch batch = sample_dpp(k, seed, count);
    rec.inputs["max_clip"] = format_double(batch.max_clip);
    rec.columns = {"x", "empirical_density", "kernel_density", "stderr_units"};
    bool ok = true;
    for (std::size_t i = 0; i < k.points.size(); ++i) {
        double hits = 0.0;
        for (const auto& d : batch.draws)
            if (d.contains(k.points[i])) hits += 1.0;
        double emp = hits / static_cast<double>(count);
        double p = k.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i));
        double se = std::sqrt(std::max(p * (1.0 - p), 1e-12) /
                              static_cast<double>(count));
        double units = std::abs(emp - p) / se;
        if (units > 4.0) ok = false;
        rec.rows.push_back({k.points[i].value(), emp, p, units});
    }
    rec.verdicts["density_4sigma"] = ok ? "pass" : "fail";
    if (!dump.empty()) {
        std::ofstream f(dump);
        for (const auto& d : batch.draws) {
            for (std::size_t j = 0; j < d.points().size(); ++j)
                f << (j ? "," : "") << format_double(d.points()[j].value());
            f << "\n";
        }
    }
    return emit(rec, o);
}

int cmd_identity(const CommonOpts& o, const std::string& suite, int window,
                 std::uint64_t seed) {
    OutputRecord rec;
    rec.subcommand = "identity";
    rec.inputs["suite"] = suite;
    echo_params(rec, o);
    rec.columns = {"check", "max_dev", "tolerance"};
    auto push = [&](const std::string& name, double dev, double tol) {
        rec.rows.push_back({static_cast<double>(rec.rows.size()), dev, tol});
        rec.verdicts[name] = dev < tol ? "pass" : "fail";
    };

    if (suite == "thm42" || suite == "thm44") {
        auto pts = symmetric_window(window / 2);
        Eigen::MatrixXd first, second;
        if (suite == "thm42") {
            auto prm = zxi_of(o);
            first = kernel_window(KernelId::hypergeom(KernelForm::first, prm), pts);
            second = kernel_window(KernelId::hypergeom(KernelForm::second, prm), pts);
        } else {
            Complex z = parse_complex(o.z);
            Complex zp = complete_pair(o.zp, z);
            first = kernel_window(KernelId::gamma(KernelForm::first, z, zp), pts);
            second = kernel_window(KernelId::gamma(KernelForm::second, z, zp), pts);
        }
        double dev = (circ_transform(second, pts) - first).cwiseAbs().maxCoeff();
        push("form_relation", dev, 1e-10);
    } else if (suite == "prop45") {
        auto prm = zxi_of(o);
        double h = 1e-5;
        double worst = 0.0;
        for (const auto& p : std::vector<std::pair<double, double>>{
                 {0.5, 1.5}, {-1.5, 0.5}, {2.5, -0.5}, {0.5, 2.5}, {-2.5, 1.5},
                 {1.5, 3.5}, {-0.5, -1.5}, {3.5, 0.5}, {-3.5, 2.5}, {1.5, -2.5}}) {
            ZXiParams up = ZXiParams::make(prm.z, prm.zp, prm.xi + h);
            ZXiParams dn = ZXiParams::make(prm.z, prm.zp, prm.xi - h);
            double fd = (hyperg_kernel(KernelForm::first, p.first, p.second, up) -
                         hyperg_kernel(KernelForm::first, p.first, p.second, dn)) /
                        (2.0 * h);
            double an = dxi_kernel(p.first, p.second, prm);
            worst = std::max(worst, std::abs(fd - an) / std::max(1e-30, std::abs(an)));
        }
        push("dxi_formula", worst, 1e-6);
    } else if (suite == "prop51") {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> gauss(0.0, 1.0);
        double worst = 0.0;
        for (int rep = 0; rep < 3; ++rep) {
            int m = 20;
            Eigen::MatrixXd a(m, m);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) a(i, j) = gauss(rng);
            Eigen::MatrixXd l = Eigen::MatrixXd::Zero(2 * m, 2 * m);
            // negative points first in the window ordering
            l.block(m, 0, m, m) = a;
            l.block(0, m, m, m) = -a.transpose();
            std::vector<HalfInteger> pts = symmetric_window(m);
            WindowMatrix lw(pts, l);
            WindowMatrix kw = k_from_l(lw);
            auto blocks = circ_blocks(kw);
            double d1 = (blocks.k_circ + blocks.circ_k -
                         Eigen::MatrixXd::Identity(2 * m, 2 * m)).cwiseAbs().maxCoeff();
            double d2 = (blocks.k_circ * blocks.circ_k).cwiseAbs().maxCoeff();
            double d3 = (blocks.k_circ * blocks.k_circ - blocks.k_circ)
                            .cwiseAbs().maxCoeff();
            worst = std::max({worst, d1, d2, d3});
        }
        push("projection_algebra", worst, 1e-12);
    } else if (suite == "prop66") {
        Complex z = parse_complex(o.z);
        Complex zp = complete_pair(o.zp, z);
        double worst = 0.0;
        for (int k = 0; k < 20; ++k) {
            double u = -2.0 + 4.0 * k / 19.0;
            auto sym = fourier_symbols(u, z, zp);
            Complex cc = sym.c * std::conj(sym.c);
            worst = std::max(worst, std::abs(sym.a - cc / (1.0 + cc)));
            worst = std::max(worst, std::abs(sym.b - sym.c / (1.0 + cc)));
        }
        push("symbol_identities", worst, 1e-12);
    } else {
        throw DomainError("identity: unknown suite " + suite);
    }
    return emit(rec, o);
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"z-measure / determinantal kernel laboratory"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string family = "zxi", lambda_s, sig_s = "0", points_s = "0.5";
    std::string embedding = "underline", type = "xi", suite = "thm42";
    std::string ladder_s = "0.9,0.99,0.999", branch = "pp", dump, form_s = "first";
    std::vector<std::string> probe_specs;
    double x = 0.5, y = 1.5, eps = 0.3, tol = 1e-6;
    int cutoff = 24, radius = 0, window = 30, n_max = 3, count = 1000;
    std::uint64_t seed = 1;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--z", o.z, "z parameter (e.g. 0.3 or 0.4+0.7i)");
        c->add_option("--zp", o.zp, "z' parameter; defaults to conj(z)");
        c->add_option("--w", o.w, "w parameter (signature families)");
        c->add_option("--wp", o.wp, "w' parameter; defaults to conj(w)");
        c->add_option("--xi", o.xi, "xi in (0,1)");
        c->add_option("--a", o.a, "a > -1");
        c->add_option("--b", o.b, "b > -1");
        c->add_option("--theta", o.theta, "Plancherel theta");
        c->add_option("--N", o.n, "signature length N");
        c->add_option("--out", o.out, "write the record to a file");
        c->add_option("--format", o.fmt, "csv or json");
    };

    auto* wcmd = app.add_subcommand("weight", "evaluate a measure weight");
    add_common(wcmd);
    wcmd->add_option("--family", family, "zxi | zw | zab | plancherel");
    wcmd->add_option("--lambda", lambda_s, "partition, e.g. 3,1");
    wcmd->add_option("--sig", sig_s, "signature entries, e.g. 2,-1");

    auto* ccmd = app.add_subcommand("correlation", "oracle vs determinant");
    add_common(ccmd);
    ccmd->add_option("--family", family, "zxi | zw | zab");
    ccmd->add_option("--points", points_s, "comma-separated half-integers");
    ccmd->add_option("--embedding", embedding, "underline | frobenius");
    ccmd->add_option("--cutoff", cutoff, "enumeration cutoff (size or entry bound)");
    ccmd->add_option("--tol", tol, "tail tolerance");

    auto* kcmd = app.add_subcommand("kernel", "evaluate a kernel");
    add_common(kcmd);
    kcmd->add_option("--family", family, "kernel family name");
    kcmd->add_option("--x", x, "first point");
    kcmd->add_option("--y", y, "second point");
    kcmd->add_option("--grid", radius, "emit a full window of this radius");
    kcmd->add_option("--branch", branch, "tail sign branch: pp, pm, mp, mm");

    auto* scmd = app.add_subcommand("scan", "limit-theorem scans");
    add_common(scmd);
    scmd->add_option("--type", type,
                     "xi | nzw | nzab | tail | coupled | prob76 | density | cross");
    scmd->add_option("--ladder", ladder_s, "comma-separated ladder values");
    scmd->add_option("--probe", probe_specs, "probe x:y or x:y:pm (repeatable)");
    scmd->add_option("--eps", eps, "coupling exponent for coupled scans");
    scmd->add_option("--form", form_s, "first | second");

    auto* ocmd = app.add_subcommand("ortho", "orthogonal-polynomial suite checks");
    add_common(ocmd);
    ocmd->add_option("--family", family, "zw | zab");
    ocmd->add_option("--nmax", n_max, "norms checked up to this degree (zab)");

    auto* mcmd = app.add_subcommand("sample", "exact DPP sampling");
    add_common(mcmd);
    mcmd->add_option("--family", family, "symmetric kernel family");
    mcmd->add_option("--radius", radius, "window radius")->required();
    mcmd->add_option("--count", count, "number of draws");
    mcmd->add_option("--seed", seed, "RNG seed")->required();
    mcmd->add_option("--dump-draws", dump, "write raw draws to a file");

    auto* icmd = app.add_subcommand("identity", "kernel identity suites");
    add_common(icmd);
    icmd->add_option("--suite", suite, "thm42 | thm44 | prop45 | prop51 | prop66");
    icmd->add_option("--window", window, "window size (points)");
    icmd->add_option("--seed", seed, "seed for randomized checks");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (wcmd->parsed()) return cmd_weight(o, family, lambda_s, sig_s);
        if (ccmd->parsed()) return cmd_correlation(o, family, points_s, embedding, cutoff, tol);
        if (kcmd->parsed()) return cmd_kernel(o, family, x, y, radius, branch);
        if (scmd->parsed()) return cmd_scan(o, type, ladder_s, probe_specs, eps, form_s);
        if (ocmd->parsed()) return cmd_ortho(o, family, n_max);
        if (mcmd->parsed()) return cmd_sample(o, family, radius, count, seed, dump);
        if (icmd->parsed()) return cmd_identity(o, suite, window, seed);
    } catch (const BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args);
}

} // namespace zmlab
