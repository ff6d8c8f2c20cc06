#pragma once

#include <vector>

#include "zmlab/halfint.hpp"
#include "zmlab/scaled.hpp"

namespace zmlab {

// A partition / Young diagram: weakly decreasing positive parts.
class YoungDiagram {
public:
    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    long size() const; // |lambda|
    int part(int i) const { // 1-based, 0 past the last row
        return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0;
    }
    YoungDiagram transpose() const;
    bool operator==(const YoungDiagram&) const = default;

private:
    std::vector<int> parts_;
};

// Frobenius coordinates (p_1 > ... > p_d >= 0 | q_1 > ... > q_d >= 0).
struct FrobeniusCoords {
    std::vector<int> p, q;
    int d() const { return static_cast<int>(p.size()); }
};

FrobeniusCoords frobenius(const YoungDiagram& lambda);

// Membership in the infinite configuration {lambda_i - i + 1/2 : i >= 1}
// (co-finite below; never materialized).
bool underline_contains(const YoungDiagram& lambda, HalfInteger x);

// Window restriction of the underline configuration to [lo, hi].
PointSet underline_window(const YoungDiagram& lambda, HalfInteger lo, HalfInteger hi);

// X(lambda) = {p_i + 1/2} u {-(q_i + 1/2)} from modified Frobenius coordinates.
PointSet x_config(const YoungDiagram& lambda);

// dim(lambda)/|lambda|! through the Frobenius-coordinate formula.
double dim_ratio(const YoungDiagram& lambda);
// Same quantity through the row product formula (independent route).
double dim_ratio_rows(const YoungDiagram& lambda);

// (z)_lambda as the content product over boxes.
Complex pochhammer_lambda(Complex z, const YoungDiagram& lambda);

// All partitions of n (exactly n boxes).
std::vector<YoungDiagram> enum_partitions(int n);

// A signature: weakly decreasing integer N-tuple.
class Signature {
public:
    Signature(int n, std::vector<int> entries);

    int length() const { return n_; }
    const std::vector<int>& entries() const { return entries_; }
    int entry(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; } // 1-based
    bool nonnegative() const { return entries_.back() >= 0; }
    bool operator==(const Signature&) const = default;

private:
    int n_ = 0;
    std::vector<int> entries_;
};

// Exhaustive signatures with |entries| <= bound (or 0 <= entries <= bound).
std::vector<Signature> enum_signatures(int n, int bound, bool nonneg);

// {lambda_i - i + 1/2 : i = 1..N}; exactly N points.
PointSet signature_underline(const Signature& lambda);

// The positive/negative split (lambda^+, lambda^-); zeros go to neither.
std::pair<YoungDiagram, YoungDiagram> signature_split(const Signature& lambda);

// X(lambda) = {p+ + 1/2} u {-q+ - 1/2} u {-p- - N - 1/2} u {q- - N + 1/2}.
PointSet signature_x_config(const Signature& lambda);

// {-1/2, -3/2, ..., -N + 1/2}: the flip set relating the two signature
// configurations by symmetric difference.
PointSet signature_flip_set(int n);

} // namespace zmlab
