#pragma once

#include <array>

#include "zmlab/params.hpp"
#include "zmlab/scaled.hpp"

namespace zmlab {

// ---- 3F2 (Askey-Lesky) suite on Z' ----

// Weight f(x) = 1 / (G(z-x+1/2) G(z'-x+1/2) G(w+x+N+1/2) G(w'+x+N+1/2)).
double askey_lesky_weight_log(double x, const ZWParams& params);
double askey_lesky_weight(double x, const ZWParams& params);

// Monic orthogonal polynomials of degree N and N-1 (deg selects which).
// Scaled values stay finite for N in the hundreds.
ScaledComplex askey_lesky_scaled(int deg, double x, const ZWParams& params);
double askey_lesky_eval(int deg, double x, const ZWParams& params);

// h_{N-1} = ||p_{N-1}||^2 closed form.
double askey_lesky_norm(const ZWParams& params);

// Christoffel-Darboux kernel with the square-rooted weight attached.
// Diagonal by finite-difference l'Hospital.
double zw_kernel(double x, double y, const ZWParams& params);

// ---- 4F3 (Wilson-Neretin) suite on Z ----

struct NeretinBasis {
    std::array<Complex, 4> a;
    Complex alpha;

    // Racah-type identification: t = N+x-1/2, alpha = eps, a1 = 1-eps,
    // a2 = b+1-eps, a3 = z+N+eps, a4 = z'+N+eps.
    static NeretinBasis from_zab(const ZABParams& params);

    Complex sum() const { return a[0] + a[1] + a[2] + a[3]; }
};

// w(t) = (alpha+t) / prod_j G(a_j+alpha+t) G(a_j-alpha-t); zero at the
// denominator poles.
ScaledComplex neretin_weight_scaled(double t, const NeretinBasis& basis);
Complex neretin_weight(double t, const NeretinBasis& basis);

// Q_n((t+alpha)^2) and the closed-form norm H_n = sum_t Q_n^2 w(t).
ScaledComplex neretin_eval_scaled(int n, double t, const NeretinBasis& basis);
Complex neretin_eval(int n, double t, const NeretinBasis& basis);
ScaledComplex neretin_norm_scaled(int n, const NeretinBasis& basis);
Complex neretin_norm(int n, const NeretinBasis& basis);

// Truncated-sum route for H_n (shell growth until the tail is negligible);
// rejects configurations whose tail does not decay.
Complex neretin_norm_sum(int n, const NeretinBasis& basis, double tol = 1e-9);

// Highest coefficient k_n = (n+3-a1-a2-a3-a4)_n of Q_n.
ScaledComplex neretin_leading_scaled(int n, const NeretinBasis& basis);

// Weight g(x) of the nonnegative-signature ensemble; vanishes for
// x <= -(N+1/2).
double zab_g_weight(double x, const ZABParams& params);

// Kernel of the nonnegative-signature ensemble, assembled from the Neretin
// basis by monic rescaling.
double zab_kernel(double x, double y, const ZABParams& params);

// ---- verification-style reports shared by tests and the CLI ----

struct AskeyLeskyReport {
    double ortho_residual; // |<p_N, p_{N-1}>| / (||p_N|| ||p_{N-1}||)
    double norm_rel_err;   // truncated ||p_{N-1}||^2 vs closed-form h_{N-1}
    double trace_abs_err;  // |sum_x K(x,x) - N|
    double window;         // |x| bound reached by the shell heuristic
};
AskeyLeskyReport askey_lesky_report(const ZWParams& params,
                                    double shell_tol = 1e-4,
                                    double x_cap = 1e4);

struct NeretinReport {
    double norm_rel_err_max; // closed form vs truncated sum over n <= n_max
    double leading_rel_err;  // two-point slope of Q_1 vs k_1
    double gw_ratio_dev;     // relative spread of g(x)/w(t(x)) over probes
    double trace_abs_err;    // |sum_x K(x,x) - N|
};
NeretinReport neretin_report(const ZABParams& params, int n_max);

} // namespace zmlab
