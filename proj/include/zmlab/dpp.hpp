#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "zmlab/kernels.hpp"
#include "zmlab/partitions.hpp"

namespace zmlab {

// A dense kernel section over an explicit, sorted list of lattice points.
struct WindowMatrix {
    std::vector<HalfInteger> points;
    Eigen::MatrixXd entries;

    WindowMatrix(std::vector<HalfInteger> pts, Eigen::MatrixXd m);
    static WindowMatrix build(const KernelId& id, int radius);
    static WindowMatrix build(const KernelId& id, std::vector<HalfInteger> pts);

    Eigen::Index index_of(HalfInteger x) const; // throws if x is outside
    Eigen::Index size() const { return entries.rows(); }
};

// det of the submatrix indexed by the points; empty set gives 1.
double corr_det(const WindowMatrix& k, const PointSet& points);

// K = L (1 + L)^{-1} and the inverse transform L = K (1 - K)^{-1}.
WindowMatrix k_from_l(const WindowMatrix& l);
WindowMatrix l_from_k(const WindowMatrix& k);

// The complementary projections built from K = L(1+L)^{-1} of an
// antisymmetric block L: K-circ keeps rows at x > 0 and flips rows at x < 0,
// circ-K is its complement.  Both are orthogonal projections.
struct CircBlocks {
    Eigen::MatrixXd k_circ;
    Eigen::MatrixXd circ_k;
};
CircBlocks circ_blocks(const WindowMatrix& k);

// M(lambda) = det L_{X(lambda)} / det(1 + L) on a finite window.
double measure_from_l(const WindowMatrix& l, const YoungDiagram& lambda);

// Largest |eigenvalue| of (K^2 - K) restricted to an interior block (the
// boundary rows carry the truncation error).  By default the block is the
// middle half of the window; trend scans over growing windows should pass a
// fixed interior_radius so the observation region stays put while the
// section grows.
double projection_residual(const WindowMatrix& k, double interior_radius = -1.0);

struct SampleBatch {
    std::uint64_t seed;
    std::vector<PointSet> draws;
    std::vector<HalfInteger> window;
    double max_clip; // largest spectrum clip applied before sampling
};

// Exact spectral sampling of the determinantal measure of a symmetric
// window kernel with spectrum in [0,1].  Draw i uses an independent stream
// derived from (seed, i) by SplitMix64, so batches are reproducible and
// order-independent.
SampleBatch sample_dpp(const WindowMatrix& k, std::uint64_t seed, int count,
                       double clip_tol = 1e-6);

} // namespace zmlab
