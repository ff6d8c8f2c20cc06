#include "zmlab/dpp.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "zmlab/errors.hpp"

namespace zmlab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

WindowMatrix::WindowMatrix(std::vector<HalfInteger> pts, Eigen::MatrixXd m)
    : points(std::move(pts)), entries(std::move(m)) {
    if (entries.rows() != entries.cols() ||
        entries.rows() != static_cast<Eigen::Index>(points.size()))
        throw DomainError("WindowMatrix: points/matrix size mismatch");
    for (std::size_t i = 1; i < points.size(); ++i)
        if (!(points[i - 1] < points[i]))
            throw DomainError("WindowMatrix: points must be strictly increasing");
}

WindowMatrix WindowMatrix::build(const KernelId& id, int radius) {
    auto pts = symmetric_window(radius);
    return WindowMatrix(pts, kernel_window(id, pts));
}

WindowMatrix WindowMatrix::build(const KernelId& id, std::vector<HalfInteger> pts) {
    std::sort(pts.begin(), pts.end());
    auto m = kernel_window(id, pts);
    return WindowMatrix(std::move(pts), std::move(m));
}

Eigen::Index WindowMatrix::index_of(HalfInteger x) const {
    auto it = std::lower_bound(points.begin(), points.end(), x);
    if (it == points.end() || !(*it == x))
        throw DomainError("WindowMatrix: point outside the window");
    return static_cast<Eigen::Index>(it - points.begin());
}

double corr_det(const WindowMatrix& k, const PointSet& points) {
    const auto m = static_cast<Eigen::Index>(points.size());
    if (m == 0) return 1.0;
    Eigen::MatrixXd sub(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j)
            sub(i, j) = k.entries(k.index_of(points.points()[static_cast<std::size_t>(i)]),
                                  k.index_of(points.points()[static_cast<std::size_t>(j)]));
    return sub.determinant();
}

WindowMatrix k_from_l(const WindowMatrix& l) {
    const auto n = l.size();
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n) + l.entries;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
    double rcond = lu.rcond();
    if (rcond < 1e-14)
        throw DomainError("k_from_l: 1 + L is numerically singular");
    // L and (1+L)^{-1} commute, so this is L(1+L)^{-1} as well
    return WindowMatrix(l.points, lu.solve(l.entries));
}

WindowMatrix l_from_k(const WindowMatrix& k) {
    const auto n = k.size();
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n) - k.entries;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
    if (lu.rcond() < 1e-14)
        throw DomainError("l_from_k: 1 - K is numerically singular");
    return WindowMatrix(k.points, lu.solve(k.entries));
}

CircBlocks circ_blocks(const WindowMatrix& k) {
    const auto n = k.size();
    Eigen::MatrixXd kc = k.entries;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (k.points[static_cast<std::size_t>(i)].twice < 0) {
            kc.row(i) = -k.entries.row(i);
            kc(i, i) += 1.0;
        }
    }
    return {kc, Eigen::MatrixXd::Identity(n, n) - kc};
}

double measure_from_l(const WindowMatrix& l, const YoungDiagram& lambda) {
    // boundary-row heuristic: mass on the outermost shell signals a window
    // too small for det(1+L) to have converged
    const auto n = l.size();
    double boundary = l.entries.row(0).cwiseAbs().sum() +
                      l.entries.row(n - 1).cwiseAbs().sum();
    if (boundary > 1e-6)
        throw BudgetError("measure_from_l: window too small (boundary rows carry mass)");
    PointSet conf = x_config(lambda);
    for (const auto& x : conf.points())
        (void)l.index_of(x); // throws if outside
    const auto m = static_cast<Eigen::Index>(conf.size());
    Eigen::MatrixXd sub(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j)
            sub(i, j) = l.entries(l.index_of(conf.points()[static_cast<std::size_t>(i)]),
                                  l.index_of(conf.points()[static_cast<std::size_t>(j)]));
    double det_sub = m == 0 ? 1.0 : sub.determinant();
    Eigen::MatrixXd one_plus = Eigen::MatrixXd::Identity(n, n) + l.entries;
    return det_sub / one_plus.determinant();
}

double projection_residual(const WindowMatrix& k, double interior_radius) {
    Eigen::MatrixXd r = k.entries * k.entries - k.entries;
    std::int64_t maxtw = 0;
    for (const auto& p : k.points)
        maxtw = std::max<std::int64_t>(maxtw, std::llabs(p.twice));
    std::int64_t cut = interior_radius > 0.0
                           ? static_cast<std::int64_t>(2.0 * interior_radius)
                           : maxtw / 2;
    std::vector<Eigen::Index> keep;
    for (std::size_t i = 0; i < k.points.size(); ++i)
        if (std::llabs(k.points[i].twice) <= cut)
            keep.push_back(static_cast<Eigen::Index>(i));
    const auto m = static_cast<Eigen::Index>(keep.size());
    if (m == 0) throw DomainError("projection_residual: window too small");
    Eigen::MatrixXd sub(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j)
            sub(i, j) = r(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)]);
    Eigen::MatrixXd sym = 0.5 * (sub + sub.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

SampleBatch sample_dpp(const WindowMatrix& k, std::uint64_t seed, int count,
                       double clip_tol) {
    const auto n = k.size();
    double asym = (k.entries - k.entries.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-8)
        throw DomainError("sample_dpp: kernel window is not symmetric");
    Eigen::MatrixXd sym = 0.5 * (k.entries + k.entries.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
    Eigen::VectorXd lam = es.eigenvalues();
    double clip = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        clip = std::max({clip, -lam(i), lam(i) - 1.0});
        lam(i) = std::clamp(lam(i), 0.0, 1.0);
    }
    if (clip > clip_tol)
        throw DomainError("sample_dpp: spectrum leaves [0,1] beyond the clip tolerance");

    SampleBatch batch{seed, {}, k.points, clip};
    batch.draws.reserve(static_cast<std::size_t>(count));
    for (int d = 0; d < count; ++d) {
        std::mt19937_64 rng(splitmix64(seed ^ (0x5851f42d4c957f2dULL *
                                               static_cast<std::uint64_t>(d + 1))));
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        // Bernoulli selection of eigenvectors
        std::vector<Eigen::Index> sel;
        for (Eigen::Index i = 0; i < n; ++i)
            if (unif(rng) < lam(i)) sel.push_back(i);
        Eigen::MatrixXd v(n, static_cast<Eigen::Index>(sel.size()));
        for (Eigen::Index j = 0; j < v.cols(); ++j)
            v.col(j) = es.eigenvectors().col(sel[static_cast<std::size_t>(j)]);
        // sequential conditional sampling with Gram-Schmidt updates
        std::vector<HalfInteger> pts;
        while (v.cols() > 0) {
            const auto cols = v.cols();
            double total = static_cast<double>(cols);
            double r = unif(rng) * total, acc = 0.0;
            Eigen::Index pick = n - 1;
            for (Eigen::Index i = 0; i < n; ++i) {
                acc += v.row(i).squaredNorm();
                if (acc >= r) { pick = i; break; }
            }
            pts.push_back(k.points[static_cast<std::size_t>(pick)]);
            // project the columns onto the complement of e_pick
            Eigen::Index jmax = 0;
            double amp = v.row(pick).cwiseAbs().maxCoeff(&jmax);
            if (amp < 1e-12) {
                // roundoff landed on a zero-mass site; take the heaviest row
                Eigen::Index best = 0;
                v.rowwise().squaredNorm().maxCoeff(&best);
                pick = best;
                pts.back() = k.points[static_cast<std::size_t>(pick)];
                v.row(pick).cwiseAbs().maxCoeff(&jmax);
            }
            Eigen::VectorXd u = v.col(jmax) / v(pick, jmax);
            for (Eigen::Index j = 0; j < cols; ++j)
                if (j != jmax) v.col(j) -= u * v(pick, j);
            // drop the consumed column
            v.block(0, jmax, n, cols - 1 - jmax) = v.rightCols(cols - 1 - jmax);
            v.conservativeResize(n, cols - 1);
            // re-orthonormalize for stability
            if (v.cols() > 0) {
                Eigen::HouseholderQR<Eigen::MatrixXd> qr(v);
                Eigen::MatrixXd q = qr.householderQ() *
                                    Eigen::MatrixXd::Identity(n, v.cols());
                v = q;
            }
        }
        batch.draws.emplace_back(std::move(pts));
    }
    return batch;
}

} // namespace zmlab
