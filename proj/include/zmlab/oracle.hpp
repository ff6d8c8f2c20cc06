#pragma once

#include "zmlab/weights.hpp"

namespace zmlab {

// Which lattice picture a configuration is read in.
enum class Embedding { underline, frobenius };

struct OracleResult {
    double value;      // rho_m(points) by exhaustive enumeration
    double tail_bound; // truncation-tail estimate (heuristic for §7/§8)
};

// Brute-force correlation functions: sum of normalized weights over all
// enumerated diagrams/signatures whose embedded configuration contains the
// requested points.  These are the reference values the determinantal side
// must reproduce.
OracleResult correlation_oracle(const ZXiParams& params, const PointSet& points,
                                Embedding embedding, int size_cutoff,
                                double tol = 1e-8);
OracleResult correlation_oracle(const ZWParams& params, const PointSet& points,
                                Embedding embedding, int entry_bound,
                                double tol = 1e-3);
OracleResult correlation_oracle(const ZABParams& params, const PointSet& points,
                                Embedding embedding, int entry_bound,
                                double tol = 1e-3);

} // namespace zmlab
