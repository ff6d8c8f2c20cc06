#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zmlab/kernels.hpp"
#include "zmlab/opkernels.hpp"

namespace zmlab {

enum class Coupling {
    xi_ladder,      // hypergeometric -> gamma as xi goes up the ladder
    n_ladder_zw,    // 3F2 ensemble -> gamma(-z,-z') as N grows
    n_ladder_zab,   // 4F3 ensemble -> gamma(-z,-z') as N grows
    tail_s0_ladder, // gamma -> tail under x = (+/-) e^{s0+s}
    coupled_xi_s0,  // hypergeometric -> tail with e^{s0} = (1-xi)^{-eps}
    n_tail_coupled, // 3F2 ensemble -> tail with e^{s0} = N^eps (open problem;
                    // emitted as data, never asserted)
};

struct Probe {
    double x, y;               // lattice probes, or (s,t) for tail targets
    bool x_positive = true;    // branch selectors for second-form tails
    bool y_positive = true;
};

struct ScanSpec {
    Coupling coupling;
    KernelForm form = KernelForm::first;
    std::vector<double> ladder;
    std::vector<Probe> probes;
    // parameter records; which ones are read depends on the coupling
    std::optional<ZXiParams> zxi;   // xi families (xi field is overridden by the ladder)
    std::optional<ZWParams> zw;
    std::optional<ZABParams> zab;
    Complex z{}, zp{};              // gamma/tail parameters
    double coupling_eps = 0.0;      // coupled scans: 0 < eps < 1 - |Re(z-z')|

    static ScanSpec xi_ladder(const ZXiParams& base, KernelForm form,
                              std::vector<double> ladder, std::vector<Probe> probes);
    static ScanSpec n_ladder_zw(const ZWParams& base, std::vector<double> ns,
                                std::vector<Probe> probes);
    static ScanSpec n_ladder_zab(const ZABParams& base, std::vector<double> ns,
                                 std::vector<Probe> probes);
    static ScanSpec tail_ladder(Complex z, Complex zp, KernelForm form,
                                std::vector<double> s0s, std::vector<Probe> probes);
    static ScanSpec coupled(const ZXiParams& base, KernelForm form, double eps,
                            std::vector<double> s0s, std::vector<Probe> probes);
    static ScanSpec prob76(const ZWParams& base, double eps,
                           std::vector<double> ns, std::vector<Probe> probes);
};

struct ErrorTable {
    struct Row {
        double ladder;
        double x, y;
        double err;
    };
    std::vector<Row> rows;
    double max_err = 0.0;
    double final_max = 0.0;   // max error at the last ladder value
    std::string verdict;      // "decreasing", "not-decreasing", or "exploratory"

    bool decreasing() const { return verdict == "decreasing"; }
};

ErrorTable run_scan(const ScanSpec& spec);

// x K(x,x) against the density constant (z-z') sin(pi z) sin(pi z')
// / (pi sin(pi(z-z'))).
ErrorTable density_profile(const KernelId& id, const std::vector<double>& xs);
double density_constant(Complex z, Complex zp);

// max |K(x,y)| between a neighborhood of 0 and a neighborhood of -N,
// tabulated along an N-ladder.
ErrorTable cross_decay(const ZWParams& base, const std::vector<int>& ns,
                       int neighborhood = 3);

} // namespace zmlab
