#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "zmlab/halfint.hpp"
#include "zmlab/params.hpp"

namespace zmlab {

// The P, Q building blocks of the lattice hypergeometric kernel.  Defined in
// a neighborhood of the lattice, so x is a plain real here.
double p_func(double x, const ZXiParams& params);
double q_func(double x, const ZXiParams& params);

// Closed-form xi-derivatives of P and Q.
double dp_dxi(double x, const ZXiParams& params);
double dq_dxi(double x, const ZXiParams& params);

enum class KernelForm { first, second };

// Discrete hypergeometric kernel; first form (particle/hole picture) is
// (P(x)Q(y)-Q(x)P(y))/(x-y), second form (Frobenius picture) dispatches on
// the signs of x and y.  The diagonal is the l'Hospital value, evaluated by
// central differences of P and Q in x.
double hyperg_kernel(KernelForm form, double x, double y, const ZXiParams& params);

// Gamma kernel (xi -> 1 limit) and its z = z' psi-kernel degeneration.
// Diagonal values use the closed psi-function formulas.
double gamma_kernel(KernelForm form, double x, double y, Complex z, Complex zp);
double psi_kernel(double x, double y, double z);

// Analytic d/dxi of the first-form hypergeometric kernel:
// (P(x)Q(y) + Q(x)P(y)) / (2 xi).
double dxi_kernel(double x, double y, const ZXiParams& params);

// A(x,y) on Z'_+ x Z'_-, and its xi->1 limit.
double a_kernel(double x, double y, const ZXiParams& params);
double a_kernel_limit(double x, double y, Complex z, Complex zp);

// Antisymmetric block assembly: 0 on (+,+) and (-,-), A on (+,-), -A^T on (-,+).
double l_kernel(double x, double y, const ZXiParams& params);
double l_kernel_limit(double x, double y, Complex z, Complex zp);

// Translation-invariant tail kernels of the logarithmic scaling regime.
// The second form carries a sign pair selecting the case branch.
double tail_kernel(KernelForm form, bool x_positive, bool y_positive,
                   double s, double t, Complex z, Complex zp);
double l_tail(bool x_positive, bool y_positive, double s, double t,
              Complex z, Complex zp);

// Fourier symbols c(u), a(u), b(u) of the tail L- and K-kernels; requires
// |z + z'| < 1 and an admissible pair.
struct FourierSymbols {
    Complex c, a, b;
};
FourierSymbols fourier_symbols(double u, Complex z, Complex zp);

// ---- window assembly ----

enum class KernelFamily {
    hypergeom_first,
    hypergeom_second,
    gamma_first,
    gamma_second,
    psi,
    a_xi,
    a_limit,
    l_xi,
    l_limit,
    tail_first,
    tail_second,
    l_tail,
};

struct KernelId {
    KernelFamily family;
    std::optional<ZXiParams> zxi; // for the xi families
    Complex z{}, zp{};            // for the limit families

    static KernelId hypergeom(KernelForm form, const ZXiParams& p);
    static KernelId gamma(KernelForm form, Complex z, Complex zp);
    static KernelId psi(double z);
};

// Pointwise evaluation (tail families take (s, t) with the positive branch).
double eval_kernel(const KernelId& id, double x, double y);

// Dense window matrix over the given lattice points.
Eigen::MatrixXd kernel_window(const KernelId& id, const std::vector<HalfInteger>& pts);

// The particle/hole transform on a window matrix: rows at flipped points x
// become delta_{xy} - K(x,y), then conjugation by the sign map
// eps(x) = 1 on Z'_+, (-1)^k at x = -(k+1/2).  The default flip set is Z'_-.
Eigen::MatrixXd circ_transform(const Eigen::MatrixXd& k,
                               const std::vector<HalfInteger>& pts);
// Generalized transform flipping an arbitrary point set (no sign map).
Eigen::MatrixXd circ_transform_on(const Eigen::MatrixXd& k,
                                  const std::vector<HalfInteger>& pts,
                                  const PointSet& flip);

// Sign map of the form-relation theorems.
double circ_sign(HalfInteger x);

} // namespace zmlab
