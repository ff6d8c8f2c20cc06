#include "zmlab/partitions.hpp"

#include <cmath>
#include <numeric>

#include "zmlab/errors.hpp"
#include "zmlab/specfun.hpp"

namespace zmlab {

YoungDiagram::YoungDiagram(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw DomainError("YoungDiagram: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw DomainError("YoungDiagram: parts must be weakly decreasing");
    }
}

long YoungDiagram::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

YoungDiagram YoungDiagram::transpose() const {
    if (parts_.empty()) return {};
    std::vector<int> t(static_cast<std::size_t>(parts_[0]), 0);
    for (int col = 1; col <= parts_[0]; ++col) {
        int cnt = 0;
        for (int p : parts_)
            if (p >= col) ++cnt;
        t[static_cast<std::size_t>(col - 1)] = cnt;
    }
    return YoungDiagram(std::move(t));
}

FrobeniusCoords frobenius(const YoungDiagram& lambda) {
    FrobeniusCoords fc;
    YoungDiagram lt = lambda.transpose();
    for (int i = 1; i <= lambda.rows(); ++i) {
        if (lambda.part(i) >= i) {
            fc.p.push_back(lambda.part(i) - i);
            fc.q.push_back(lt.part(i) - i);
        } else {
            break;
        }
    }
    return fc;
}

bool underline_contains(const YoungDiagram& lambda, HalfInteger x) {
    int ell = lambda.rows();
    // rows i <= ell contribute lambda_i - i + 1/2; the zero tail fills
    // everything at or below -(ell + 1/2)
    if (x.twice <= -(2 * ell + 1)) return true;
    for (int i = 1; i <= ell; ++i)
        if (2L * (lambda.part(i) - i) + 1 == x.twice) return true;
    return false;
}

PointSet underline_window(const YoungDiagram& lambda, HalfInteger lo, HalfInteger hi) {
    std::vector<HalfInteger> pts;
    for (std::int64_t tw = lo.twice; tw <= hi.twice; tw += 2) {
        HalfInteger x(tw);
        if (underline_contains(lambda, x)) pts.push_back(x);
    }
    return PointSet(std::move(pts));
}

PointSet x_config(const YoungDiagram& lambda) {
    FrobeniusCoords fc = frobenius(lambda);
    std::vector<HalfInteger> pts;
    for (int i = 0; i < fc.d(); ++i) {
        pts.push_back(HalfInteger::from_int_plus_half(fc.p[static_cast<std::size_t>(i)]));
        pts.push_back(-HalfInteger::from_int_plus_half(fc.q[static_cast<std::size_t>(i)]));
    }
    return PointSet(std::move(pts));
}

double dim_ratio(const YoungDiagram& lambda) {
    // dim/|lambda|! = prod_{i<j} (p_i-p_j)(q_i-q_j)
    //              / (prod_{i,j} (p_i+q_j+1) prod_i p_i! q_i!)
    FrobeniusCoords fc = frobenius(lambda);
    int d = fc.d();
    if (d == 0) return 1.0;
    double lg = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            lg += std::log(static_cast<double>(fc.p[i] - fc.p[j])) +
                  std::log(static_cast<double>(fc.q[i] - fc.q[j]));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            lg -= std::log(static_cast<double>(fc.p[i] + fc.q[j] + 1));
    for (int i = 0; i < d; ++i)
        lg -= std::lgamma(fc.p[i] + 1.0) + std::lgamma(fc.q[i] + 1.0);
    return std::exp(lg);
}

double dim_ratio_rows(const YoungDiagram& lambda) {
    // dim/|lambda|! = prod_{i<j<=k} (lambda_i - lambda_j + j - i)
    //              / prod_{i<=k} (lambda_i + k - i)!   with k = #rows
    int k = lambda.rows();
    if (k == 0) return 1.0;
    double lg = 0.0;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            lg += std::log(static_cast<double>(lambda.part(i) - lambda.part(j) + j - i));
    for (int i = 1; i <= k; ++i)
        lg -= std::lgamma(static_cast<double>(lambda.part(i) + k - i) + 1.0);
    return std::exp(lg);
}

Complex pochhammer_lambda(Complex z, const YoungDiagram& lambda) {
    Complex prod(1.0, 0.0);
    for (int i = 1; i <= lambda.rows(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j)
            prod *= z + static_cast<double>(j - i);
    return prod;
}

namespace {

void gen_partitions(int remaining, int maxpart, std::vector<int>& cur,
                    std::vector<YoungDiagram>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, maxpart); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<YoungDiagram> enum_partitions(int n) {
    if (n < 0) throw DomainError("enum_partitions: negative n");
    if (n > 60) throw BudgetError("enum_partitions: n > 60 exceeds budget");
    std::vector<YoungDiagram> out;
    std::vector<int> cur;
    gen_partitions(n, n == 0 ? 1 : n, cur, out);
    return out;
}

Signature::Signature(int n, std::vector<int> entries)
    : n_(n), entries_(std::move(entries)) {
    if (n_ <= 0 || static_cast<int>(entries_.size()) != n_)
        throw DomainError("Signature: entry count must equal N >= 1");
    for (std::size_t i = 1; i < entries_.size(); ++i)
        if (entries_[i] > entries_[i - 1])
            throw DomainError("Signature: entries must be weakly decreasing");
}

std::vector<Signature> enum_signatures(int n, int bound, bool nonneg) {
    if (n < 1 || bound < 0) throw DomainError("enum_signatures: bad arguments");
    double budget = std::pow(2.0 * bound + 1.0, n);
    if (budget > 1e7) throw BudgetError("enum_signatures: enumeration budget exceeded");
    std::vector<Signature> out;
    std::vector<int> cur;
    int lo = nonneg ? 0 : -bound;
    auto rec = [&](auto&& self, int depth, int hi) -> void {
        if (depth == n) {
            out.emplace_back(n, cur);
            return;
        }
        for (int v = hi; v >= lo; --v) {
            cur.push_back(v);
            self(self, depth + 1, v);
            cur.pop_back();
        }
    };
    rec(rec, 0, bound);
    return out;
}

PointSet signature_underline(const Signature& lambda) {
    std::vector<HalfInteger> pts;
    for (int i = 1; i <= lambda.length(); ++i)
        pts.push_back(HalfInteger(2L * (lambda.entry(i) - i) + 1));
    return PointSet(std::move(pts));
}

std::pair<YoungDiagram, YoungDiagram> signature_split(const Signature& lambda) {
    std::vector<int> plus, minus;
    for (int e : lambda.entries())
        if (e > 0) plus.push_back(e);
    for (auto it = lambda.entries().rbegin(); it != lambda.entries().rend(); ++it)
        if (*it < 0) minus.push_back(-*it);
    return {YoungDiagram(std::move(plus)), YoungDiagram(std::move(minus))};
}

PointSet signature_x_config(const Signature& lambda) {
    auto [lp, lm] = signature_split(lambda);
    FrobeniusCoords fp = frobenius(lp), fm = frobenius(lm);
    long n = lambda.length();
    std::vector<HalfInteger> pts;
    for (int i = 0; i < fp.d(); ++i) {
        pts.push_back(HalfInteger(2L * fp.p[static_cast<std::size_t>(i)] + 1));
        pts.push_back(HalfInteger(-2L * fp.q[static_cast<std::size_t>(i)] - 1));
    }
    for (int j = 0; j < fm.d(); ++j) {
        pts.push_back(HalfInteger(-2L * (fm.p[static_cast<std::size_t>(j)] + n) - 1));
        pts.push_back(HalfInteger(2L * (fm.q[static_cast<std::size_t>(j)] - n) + 1));
    }
    return PointSet(std::move(pts));
}

PointSet signature_flip_set(int n) {
    std::vector<HalfInteger> pts;
    for (int k = 1; k <= n; ++k) pts.push_back(HalfInteger(-2L * k + 1));
    return PointSet(std::move(pts));
}

} // namespace zmlab
