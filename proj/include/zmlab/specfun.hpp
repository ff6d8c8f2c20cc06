#pragma once

#include <complex>
#include <memory>

#include "zmlab/scaled.hpp"

namespace zmlab {

constexpr double euler_gamma = 0.57721566490153286060651209;

// Value plus a heuristic absolute error estimate (last-term magnitude and a
// cancellation bound).  The estimate is not rigorous; acceptance tests rely
// on independent oracles instead.
struct EvalResult {
    Complex value;
    double abs_error_estimate;
};

// sin(pi z), cos(pi z) with argument reduction on the real part.
Complex sin_pi(Complex z);
Complex cos_pi(Complex z);

// Principal-style log Gamma (Lanczos, reflection for Re z < 1/2).
// exp(log_gamma(z)) recovers Gamma(z) on all non-pole arguments.
Complex log_gamma(Complex z);

// log|Gamma(x)| and the sign of Gamma(x) for real non-pole x.
struct SignedLogGamma {
    double log_abs;
    int sign;
};
SignedLogGamma log_gamma_real(double x);

Complex digamma(Complex z);
Complex trigamma(Complex z);

// (z)_k = z(z+1)...(z+k-1)
Complex pochhammer(Complex z, long k);

// Regularized Gauss series F(a,b;c;w)/Gamma(c) for w <= 0, entire in c.
// Evaluation path: Pfaff map w -> w/(w-1) in [0,1), then the regularized
// series in the transformed argument.  When c is a nonpositive integer the
// leading terms of the regularized expansion vanish and the summation
// starts past the Gamma(c) pole.
EvalResult hyp2f1_reg(Complex a, Complex b, Complex c, double w);

// The raw regularized series sum_k (a)_k (b)_k v^k / (k! Gamma(c+k)) for
// 0 <= v < 1.  Exposed so the Pfaff identity can be cross-checked through a
// second route.
EvalResult hyp2f1_reg_series(Complex a, Complex b, Complex c, double v);

// Terminating 3F2[-n, a1, a2; b1, b2; 1] and 4F3[-n, x1, x2, x3; u, v, w; 1].
// Exact finite sums; small n runs compensated in double, large n in extended
// precision (the alternating (-n)_k/k! weights cancel ~2^n of significance).
EvalResult hyp3f2_term(Complex a1, Complex a2, long n, Complex b1, Complex b2);
EvalResult hyp4f3_term(Complex x1, Complex x2, Complex x3, long n,
                       Complex u, Complex v, Complex w);

ScaledComplex hyp3f2_term_scaled(Complex a1, Complex a2, long n,
                                 Complex b1, Complex b2);
ScaledComplex hyp4f3_term_scaled(Complex x1, Complex x2, Complex x3, long n,
                                 Complex u, Complex v, Complex w);

// Opaque extended-precision complex value.  Large-n terminating sums are
// hypersensitive to their parameters (condition ~ 2^n), so the
// Christoffel-Darboux brackets p_N(x) p_{N-1}(y) - p_{N-1}(x) p_N(y) must be
// combined at working precision before any collapse to double; these
// handles carry the full-precision values across that combination.
class BigComplex {
public:
    BigComplex();
    BigComplex mul(const BigComplex& o) const;
    BigComplex sub(const BigComplex& o) const;
    BigComplex times(Complex s) const;
    ScaledComplex to_scaled() const;

private:
    struct Impl;
    explicit BigComplex(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
    friend BigComplex hyp3f2_term_big(Complex, Complex, long, Complex, Complex);
    friend BigComplex hyp4f3_term_big(Complex, Complex, Complex, long, Complex,
                                      Complex, Complex);
};

BigComplex hyp3f2_term_big(Complex a1, Complex a2, long n, Complex b1, Complex b2);
BigComplex hyp4f3_term_big(Complex x1, Complex x2, Complex x3, long n,
                           Complex u, Complex v, Complex w);

} // namespace zmlab
