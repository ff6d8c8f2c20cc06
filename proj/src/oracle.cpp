#include "zmlab/oracle.hpp"

#include <cmath>

#include "zmlab/errors.hpp"

namespace zmlab {

namespace {

bool underline_contains_all(const YoungDiagram& lambda, const PointSet& pts) {
    for (const auto& x : pts.points())
        if (!underline_contains(lambda, x)) return false;
    return true;
}

// Geometric bound on sum_{n > cutoff} pi(n).
double zxi_tail(const ZXiParams& params, int cutoff) {
    double tail = 0.0;
    long n = cutoff + 1;
    double w = std::abs(mixing_weight(n, params));
    double zz = params.zzp();
    for (; n <= cutoff + 600; ++n) {
        tail += w;
        double ratio = params.xi * std::abs(zz + static_cast<double>(n)) /
                       (static_cast<double>(n) + 1.0);
        w *= ratio;
        if (w < 1e-300) return tail;
    }
    double ratio = params.xi * (std::abs(zz) / static_cast<double>(n) + 1.0);
    if (ratio < 1.0) tail += w / (1.0 - ratio);
    return tail;
}

} // namespace

OracleResult correlation_oracle(const ZXiParams& params, const PointSet& points,
                                Embedding embedding, int size_cutoff, double tol) {
    if (points.empty()) return {1.0, 0.0};
    double tail = zxi_tail(params, size_cutoff);
    if (tail > tol) throw BudgetError("correlation_oracle: negative-binomial tail too large");
    double acc = 0.0;
    for (int n = 0; n <= size_cutoff; ++n) {
        for (const auto& lambda : enum_partitions(n)) {
            bool hit = embedding == Embedding::underline
                           ? underline_contains_all(lambda, points)
                           : x_config(lambda).contains_all(points);
            if (hit) acc += z_weight(params, lambda).value();
        }
    }
    return {acc, tail};
}

namespace {

template <typename Params, typename WeightFn>
OracleResult signature_oracle(const Params& params, const PointSet& points,
                              Embedding embedding, int entry_bound, double tol,
                              bool nonneg, WeightFn weight) {
    double total = 0.0, hits = 0.0, shell = 0.0;
    for (const auto& sig : enum_signatures(params.n, entry_bound, nonneg)) {
        double wv = weight(sig, params);
        total += wv;
        int maxabs = 0;
        for (int e : sig.entries()) maxabs = std::max(maxabs, std::abs(e));
        if (maxabs == entry_bound) shell += wv;
        if (points.empty()) continue;
        PointSet conf = embedding == Embedding::underline
                            ? signature_underline(sig)
                            : signature_x_config(sig);
        if (conf.contains_all(points)) hits += wv;
    }
    if (total <= 0.0) throw DomainError("correlation_oracle: vanishing normalization");
    // polynomial-decay surrogate: outermost shell mass scaled by the bound
    double tail = shell / total * static_cast<double>(entry_bound);
    if (tail > tol) throw BudgetError("correlation_oracle: truncation tail too large");
    if (points.empty()) return {1.0, tail};
    return {hits / total, tail};
}

} // namespace

OracleResult correlation_oracle(const ZWParams& params, const PointSet& points,
                                Embedding embedding, int entry_bound, double tol) {
    return signature_oracle(params, points, embedding, entry_bound, tol, false,
                            [](const Signature& s, const ZWParams& p) {
                                return zw_weight(s, p).value();
                            });
}

OracleResult correlation_oracle(const ZABParams& params, const PointSet& points,
                                Embedding embedding, int entry_bound, double tol) {
    return signature_oracle(params, points, embedding, entry_bound, tol, true,
                            [](const Signature& s, const ZABParams& p) {
                                return zab_weight(s, p).value();
                            });
}

} // namespace zmlab
