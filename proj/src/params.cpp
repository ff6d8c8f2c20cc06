#include "zmlab/params.hpp"

#include <cmath>

#include "zmlab/errors.hpp"

namespace zmlab {

namespace {

bool is_real(Complex z) { return z.imag() == 0.0; }

bool is_integer(double x) { return x == std::round(x); }

bool degenerate_pair(Complex z, Complex zp) {
    // z a nonzero integer, z' real of the same sign with |z'| > |z| - 1
    if (!is_real(z) || !is_real(zp)) return false;
    double x = z.real(), y = zp.real();
    if (!is_integer(x) || x == 0.0) return false;
    if (x > 0.0 ? y <= 0.0 : y >= 0.0) return false;
    return std::abs(y) > std::abs(x) - 1.0;
}

} // namespace

AdmissibilityClass classify(Complex z, Complex zp) {
    if (z == Complex(0.0, 0.0) || zp == Complex(0.0, 0.0))
        throw DomainError("classify: parameters must be nonzero");
    if (!is_real(z) || !is_real(zp)) {
        bool conj = std::abs(zp - std::conj(z)) <=
                    1e-12 * std::max(1.0, std::abs(z));
        return (!is_real(z) && conj) ? AdmissibilityClass::principal
                                     : AdmissibilityClass::inadmissible;
    }
    double x = z.real(), y = zp.real();
    if (!is_integer(x) && !is_integer(y) && std::floor(x) == std::floor(y))
        return AdmissibilityClass::complementary;
    if (degenerate_pair(z, zp) || degenerate_pair(zp, z))
        return AdmissibilityClass::degenerate;
    return AdmissibilityClass::inadmissible;
}

const char* admissibility_name(AdmissibilityClass c) {
    switch (c) {
        case AdmissibilityClass::principal: return "principal";
        case AdmissibilityClass::complementary: return "complementary";
        case AdmissibilityClass::degenerate: return "degenerate";
        default: return "inadmissible";
    }
}

ZXiParams ZXiParams::make(Complex z, Complex zp, double xi) {
    if (!(xi > 0.0 && xi < 1.0))
        throw DomainError("ZXiParams: xi must lie in (0,1)");
    AdmissibilityClass cls = classify(z, zp);
    if (cls == AdmissibilityClass::inadmissible)
        throw DomainError("ZXiParams: inadmissible (z, z') pair");
    return {z, zp, xi, cls};
}

void ZXiParams::require_kernel_class() const {
    if (cls != AdmissibilityClass::principal &&
        cls != AdmissibilityClass::complementary)
        throw DomainError("kernel operation requires a non-integer class (i)/(ii) pair");
}

ZXiParams ZXiParams::negated() const { return make(-z, -zp, xi); }

ZWParams ZWParams::make(Complex z, Complex zp, Complex w, Complex wp, int n) {
    if (n < 1) throw DomainError("ZWParams: N must be a positive integer");
    auto cz = classify(z, zp), cw = classify(w, wp);
    auto ok = [](AdmissibilityClass c) {
        return c == AdmissibilityClass::principal ||
               c == AdmissibilityClass::complementary;
    };
    if (!ok(cz) || !ok(cw))
        throw DomainError("ZWParams: both pairs must be class (i) or (ii)");
    Complex s = z + zp + w + wp;
    if (s.real() <= -1.0)
        throw DomainError("ZWParams: requires Re(z+z'+w+w') > -1");
    return {z, zp, w, wp, n, s.real()};
}

ZABParams ZABParams::make(Complex z, Complex zp, double a, double b, int n) {
    if (n < 1) throw DomainError("ZABParams: N must be a positive integer");
    if (!(a > -1.0) || !(b > -1.0))
        throw DomainError("ZABParams: requires a > -1 and b > -1");
    auto c = classify(z, zp);
    if (c != AdmissibilityClass::principal && c != AdmissibilityClass::complementary)
        throw DomainError("ZABParams: (z, z') must be class (i) or (ii)");
    // sufficient existence condition, applied to both members of the pair
    if (!(z.real() > -(1.0 + b) / 2.0) || !(zp.real() > -(1.0 + b) / 2.0))
        throw DomainError("ZABParams: requires Re z > -(1+b)/2");
    return {z, zp, a, b, n, (a + b + 1.0) / 2.0};
}

void ZABParams::require_moment_condition() const {
    if (!((z + zp).real() > 1.0 - b))
        throw DomainError("ZABParams: moment condition z + z' > 1 - b fails");
}

} // namespace zmlab
