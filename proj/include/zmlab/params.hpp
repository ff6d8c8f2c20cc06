#pragma once

#include <complex>

#include "zmlab/scaled.hpp"

namespace zmlab {

// Admissibility of a parameter pair (z, z'): the nonnegativity classes of
// the pochhammer product (z)_lambda (z')_lambda.
enum class AdmissibilityClass {
    principal,     // (i)  non-real complex conjugates
    complementary, // (ii) both real, same open unit interval (m, m+1)
    degenerate,    // (iii) integer z with real z' of the same sign, |z'| > |z|-1
    inadmissible,
};

AdmissibilityClass classify(Complex z, Complex zp);

const char* admissibility_name(AdmissibilityClass c);

// Parameters of the measure family on partitions.
struct ZXiParams {
    Complex z, zp;
    double xi;
    AdmissibilityClass cls;

    static ZXiParams make(Complex z, Complex zp, double xi);
    // throws unless cls is principal or complementary (kernel hypotheses)
    void require_kernel_class() const;
    double zzp() const { return (z * zp).real(); } // real > 0 in classes (i)/(ii)
    ZXiParams negated() const;                     // (-z, -z', xi)
};

// Parameters of the measure family on signatures (four gamma weights).
struct ZWParams {
    Complex z, zp, w, wp;
    int n;
    double sigma; // Re of z+z'+w+w' (the sum is real in admissible classes)

    static ZWParams make(Complex z, Complex zp, Complex w, Complex wp, int n);
    ZWParams with_n(int n2) const { return make(z, zp, w, wp, n2); }
    ZWParams swapped() const { return make(w, wp, z, zp, n); } // (z,z') <-> (w,w')
};

// Parameters of the measure family on nonnegative signatures.
struct ZABParams {
    Complex z, zp;
    double a, b;
    int n;
    double eps; // (a + b + 1) / 2

    static ZABParams make(Complex z, Complex zp, double a, double b, int n);
    ZABParams with_n(int n2) const { return make(z, zp, a, b, n2); }
    // order-N polynomial suite needs the 4N-th moment: z + z' > 1 - b
    void require_moment_condition() const;
};

} // namespace zmlab
