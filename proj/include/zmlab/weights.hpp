#pragma once

#include "zmlab/params.hpp"
#include "zmlab/partitions.hpp"

namespace zmlab {

// A nonnegative measure weight kept as log-magnitude and a unit phase/sign.
struct WeightValue {
    double log_magnitude; // -inf encodes an exact zero
    Complex phase_or_sign;

    double value() const {
        if (std::isinf(log_magnitude) && log_magnitude < 0.0) return 0.0;
        return std::exp(log_magnitude) * phase_or_sign.real();
    }
};

// M(lambda) = (1-xi)^{zz'} (z)_l (z')_l (dim/|l|!)^2 xi^{|l|}.
// Evaluates both the row form and the Frobenius-coordinate form and insists
// they agree.
WeightValue z_weight(const ZXiParams& params, const YoungDiagram& lambda);

// pi(n) = (1-xi)^{zz'} (zz')_n xi^n / n!  (negative binomial mixing weights)
double mixing_weight(long n, const ZXiParams& params);

// Unnormalized weight M'(lambda) of the signature family.
WeightValue zw_weight(const Signature& lambda, const ZWParams& params);

// Unnormalized weight of the nonnegative-signature family.
WeightValue zab_weight(const Signature& lambda, const ZABParams& params);

// Poissonized Plancherel weight exp(-theta) (dim/|l|!)^2 theta^{|l|}.
double plancherel_weight(double theta, const YoungDiagram& lambda);

// Normalizing constant by shell-doubled truncation: entries bounded by L,
// L doubled until the outermost shell contributes less than tol of the
// running total (or the cap is hit).
struct NormConstResult {
    double value;
    double last_shell; // mass of the outermost shell at the final bound
    int bound_used;
};
NormConstResult zw_const(const ZWParams& params, int initial_bound,
                         double tol = 1e-10, int cap = 4096);
NormConstResult zab_const(const ZABParams& params, int initial_bound,
                          double tol = 1e-10, int cap = 4096);

} // namespace zmlab
