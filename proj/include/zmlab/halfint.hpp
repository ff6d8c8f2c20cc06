#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <vector>

#include "zmlab/errors.hpp"

namespace zmlab {

// A point of the half-integer lattice Z' = Z + 1/2, stored as its doubled
// (odd) integer so lattice arithmetic stays exact.
struct HalfInteger {
    std::int64_t twice;

    constexpr HalfInteger() : twice(1) {}
    constexpr explicit HalfInteger(std::int64_t tw) : twice(tw) {}

    static HalfInteger from_twice(std::int64_t tw) {
        if (tw % 2 == 0) throw DomainError("HalfInteger: doubled value must be odd");
        return HalfInteger(tw);
    }
    // k + 1/2
    static HalfInteger from_int_plus_half(std::int64_t k) { return HalfInteger(2 * k + 1); }
    static HalfInteger from_double(double v) {
        double tw = 2.0 * v;
        double r = std::round(tw);
        if (std::abs(tw - r) > 1e-9 || static_cast<std::int64_t>(r) % 2 == 0)
            throw DomainError("HalfInteger: value is not a proper half-integer");
        return HalfInteger(static_cast<std::int64_t>(r));
    }

    double value() const { return 0.5 * static_cast<double>(twice); }
    bool positive() const { return twice > 0; }
    HalfInteger operator-() const { return HalfInteger(-twice); }

    auto operator<=>(const HalfInteger&) const = default;
};

// A finite subset of Z', strictly increasing and duplicate-free.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<HalfInteger> pts) : pts_(std::move(pts)) {
        std::sort(pts_.begin(), pts_.end());
        for (std::size_t i = 1; i < pts_.size(); ++i)
            if (pts_[i] == pts_[i - 1])
                throw DomainError("PointSet: duplicate point");
    }

    const std::vector<HalfInteger>& points() const { return pts_; }
    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    bool contains(HalfInteger x) const {
        return std::binary_search(pts_.begin(), pts_.end(), x);
    }
    bool contains_all(const PointSet& other) const {
        for (auto& x : other.pts_)
            if (!contains(x)) return false;
        return true;
    }

    PointSet symmetric_difference(const PointSet& other) const {
        std::vector<HalfInteger> out;
        std::set_symmetric_difference(pts_.begin(), pts_.end(),
                                      other.pts_.begin(), other.pts_.end(),
                                      std::back_inserter(out));
        return PointSet(std::move(out));
    }

    bool operator==(const PointSet&) const = default;

private:
    std::vector<HalfInteger> pts_;
};

// The symmetric lattice window {-(R-1/2), ..., -1/2, 1/2, ..., R-1/2};
// 2R points in ascending order.
inline std::vector<HalfInteger> symmetric_window(int radius) {
    if (radius <= 0) throw DomainError("symmetric_window: radius must be positive");
    std::vector<HalfInteger> pts;
    pts.reserve(2 * static_cast<std::size_t>(radius));
    for (int k = -radius; k < radius; ++k)
        pts.push_back(HalfInteger::from_int_plus_half(k));
    return pts;
}

} // namespace zmlab
