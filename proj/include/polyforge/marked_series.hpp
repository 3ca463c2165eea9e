#pragma once

#include <map>
#include <utility>
#include <vector>

#include "polyforge/series.hpp"

namespace polyforge {

// Polynomial in the statistic markers x and y with exact rational
// coefficients.  Negative exponents are tolerated transiently (the
// site-perimeter substitution works through y^{-1}) and must be gone from any
// finished generating function.
class MarkedPoly {
public:
    using Key = std::pair<int, int>; // (x exponent, y exponent)

    MarkedPoly() = default;
    static MarkedPoly constant(Rational v) { return monomial(std::move(v), 0, 0); }
    static MarkedPoly monomial(Rational v, int xe, int ye) {
        MarkedPoly p;
        if (!v.is_zero()) p.t_[{xe, ye}] = std::move(v);
        return p;
    }

    const std::map<Key, Rational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const {
        return t_.empty() || (t_.size() == 1 && t_.begin()->first == Key{0, 0});
    }
    Rational constant_value() const {
        auto it = t_.find({0, 0});
        return it == t_.end() ? Rational(0) : it->second;
    }
    Rational coeff(int xe, int ye) const {
        auto it = t_.find({xe, ye});
        return it == t_.end() ? Rational(0) : it->second;
    }

    friend MarkedPoly operator+(const MarkedPoly& a, const MarkedPoly& b) {
        MarkedPoly r = a;
        for (const auto& [k, v] : b.t_) r.add_term(k, v);
        return r;
    }
    friend MarkedPoly operator-(const MarkedPoly& a, const MarkedPoly& b) {
        MarkedPoly r = a;
        for (const auto& [k, v] : b.t_) r.add_term(k, -v);
        return r;
    }
    friend MarkedPoly operator*(const MarkedPoly& a, const MarkedPoly& b) {
        MarkedPoly r;
        for (const auto& [ka, va] : a.t_)
            for (const auto& [kb, vb] : b.t_)
                r.add_term({ka.first + kb.first, ka.second + kb.second}, va * vb);
        return r;
    }
    MarkedPoly scaled(const Rational& f) const {
        MarkedPoly r;
        if (f.is_zero()) return r;
        for (const auto& [k, v] : t_) r.t_[k] = v * f;
        return r;
    }
    friend bool operator==(const MarkedPoly& a, const MarkedPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const MarkedPoly& a, const MarkedPoly& b) { return !(a == b); }

private:
    std::map<Key, Rational> t_;

    void add_term(const Key& k, const Rational& v) {
        auto it = t_.find(k);
        if (it == t_.end()) {
            if (!v.is_zero()) t_[k] = v;
        } else {
            it->second += v;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
};

// Truncated power series in z whose coefficients are marker polynomials.
class MarkedSeries {
public:
    explicit MarkedSeries(int order) : c_(order + 1) {
        if (order < 0) fail(errc::bad_input, "MarkedSeries: negative order");
    }
    static MarkedSeries embed(const Series& s) {
        MarkedSeries r(s.order());
        for (int n = 0; n <= s.order(); ++n) r.c_[n] = MarkedPoly::constant(s.coeff(n));
        return r;
    }
    static MarkedSeries monomial(Rational v, int xe, int ye, int zdeg, int order) {
        MarkedSeries r(order);
        if (zdeg <= order) r.c_[zdeg] = MarkedPoly::monomial(std::move(v), xe, ye);
        return r;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const MarkedPoly& coeff(int n) const { return c_[n]; }

    friend MarkedSeries operator+(const MarkedSeries& a, const MarkedSeries& b) {
        MarkedSeries r(std::min(a.order(), b.order()));
        for (int n = 0; n <= r.order(); ++n) r.c_[n] = a.c_[n] + b.c_[n];
        return r;
    }
    friend MarkedSeries operator-(const MarkedSeries& a, const MarkedSeries& b) {
        MarkedSeries r(std::min(a.order(), b.order()));
        for (int n = 0; n <= r.order(); ++n) r.c_[n] = a.c_[n] - b.c_[n];
        return r;
    }
    friend MarkedSeries operator*(const MarkedSeries& a, const MarkedSeries& b) {
        MarkedSeries r(std::min(a.order(), b.order()));
        for (int i = 0; i <= r.order(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; i + j <= r.order(); ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    // the divisor's z^0 coefficient must be a nonzero constant
    friend MarkedSeries operator/(const MarkedSeries& a, const MarkedSeries& b) {
        if (!b.c_[0].is_constant() || b.c_[0].constant_value().is_zero())
            fail(errc::division_by_non_unit, "MarkedSeries: divisor constant term is not a unit");
        Rational inv = Rational(1) / b.c_[0].constant_value();
        MarkedSeries r(std::min(a.order(), b.order()));
        for (int n = 0; n <= r.order(); ++n) {
            MarkedPoly acc = a.c_[n];
            for (int k = 0; k < n; ++k) acc = acc - r.c_[k] * b.c_[n - k];
            r.c_[n] = acc.scaled(inv);
        }
        return r;
    }
    friend bool operator==(const MarkedSeries& a, const MarkedSeries& b) { return a.c_ == b.c_; }

    MarkedSeries sqrt() const {
        if (!(c_[0].is_constant() && c_[0].constant_value() == Rational(1)))
            fail(errc::sqrt_of_non_unit, "MarkedSeries: sqrt needs constant term 1");
        MarkedSeries r(order());
        r.c_[0] = MarkedPoly::constant(Rational(1));
        Rational half(BigInt(1), BigInt(2));
        for (int n = 1; n <= order(); ++n) {
            MarkedPoly acc = c_[n];
            for (int k = 1; k < n; ++k) acc = acc - r.c_[k] * r.c_[n - k];
            r.c_[n] = acc.scaled(half);
        }
        return r;
    }

private:
    std::vector<MarkedPoly> c_;
};

enum class MarkedName { toprow_pd, toprow_d, width_height, corners_out, corners_in, site };

namespace detail {

// T_c = (1 + (1-x)z - sqrt((1 + (1-x)z)^2 - 4z)) / 2: the tree series with
// first children marked, used by both corner generating functions.
inline MarkedSeries corners_tree_series(int order) {
    MarkedSeries one = MarkedSeries::monomial(Rational(1), 0, 0, 0, order);
    MarkedSeries lin = one + MarkedSeries::monomial(Rational(1), 0, 0, 1, order) -
                       MarkedSeries::monomial(Rational(1), 1, 0, 1, order); // 1 + (1-x) z
    MarkedSeries rad = (lin * lin - MarkedSeries::monomial(Rational(4), 0, 0, 1, order)).sqrt();
    MarkedSeries half = MarkedSeries::monomial(Rational(BigInt(1), BigInt(2)), 0, 0, 0, order);
    return (lin - rad) * half;
}

inline MarkedSeries corners_denominator(int order) {
    MarkedSeries tc = corners_tree_series(order);
    MarkedSeries one = MarkedSeries::monomial(Rational(1), 0, 0, 0, order);
    MarkedSeries two = MarkedSeries::monomial(Rational(2), 0, 0, 0, order);
    MarkedSeries x = MarkedSeries::monomial(Rational(1), 1, 0, 0, order);
    return one - two * tc + (one - x) * tc * tc;
}

} // namespace detail

// Joint generating functions of the directed convex statistics; marker
// conventions per name are listed in the CLI documentation.
inline MarkedSeries gf_marked(MarkedName name, int order) {
    switch (name) {
        case MarkedName::toprow_pd: {
            // x, y: sizes of the top row / rightmost column of P_D
            MarkedSeries s = MarkedSeries::embed(detail::sqrt_one_minus_4z(order));
            MarkedSeries one = MarkedSeries::monomial(Rational(1), 0, 0, 0, order);
            MarkedSeries two = MarkedSeries::monomial(Rational(2), 0, 0, 0, order);
            MarkedSeries xy_sum = MarkedSeries::monomial(Rational(1), 1, 0, 0, order) +
                                  MarkedSeries::monomial(Rational(1), 0, 1, 0, order);
            MarkedSeries num = MarkedSeries::monomial(Rational(2), 1, 1, 2, order);
            return num / (two - xy_sum * (one - s));
        }
        case MarkedName::toprow_d: {
            // x, y: sizes of the top row / rightmost column of D itself
            Series sq = detail::sqrt_one_minus_4z(order);
            Series tser = (Series::constant(Rational(1), order) - sq) /
                          Series::constant(Rational(2), order);
            MarkedSeries t = MarkedSeries::embed(tser);
            MarkedSeries one = MarkedSeries::monomial(Rational(1), 0, 0, 0, order);
            MarkedSeries x = MarkedSeries::monomial(Rational(1), 1, 0, 0, order);
            MarkedSeries y = MarkedSeries::monomial(Rational(1), 0, 1, 0, order);
            MarkedSeries tail = MarkedSeries::embed(Series::monomial(Rational(1), 2, order) / sq);
            MarkedSeries omt = one - t;
            return x * y * omt * omt * tail / ((one - x * t) * (one - y * t));
        }
        case MarkedName::width_height: {
            // x: width, y: height
            MarkedSeries one = MarkedSeries::monomial(Rational(1), 0, 0, 0, order);
            MarkedSeries lin = one - MarkedSeries::monomial(Rational(1), 1, 0, 1, order) -
                               MarkedSeries::monomial(Rational(1), 0, 1, 1, order); // 1 - (x+y) z
            MarkedSeries rad =
                (lin * lin - MarkedSeries::monomial(Rational(4), 1, 1, 2, order)).sqrt();
            return MarkedSeries::monomial(Rational(1), 1, 1, 2, order) / rad;
        }
        case MarkedName::corners_out:
            // x: number of outside corners
            return MarkedSeries::monomial(Rational(1), 4, 0, 2, order) /
                   detail::corners_denominator(order);
        case MarkedName::corners_in:
            // x: number of inside corners
            return MarkedSeries::monomial(Rational(1), 0, 0, 2, order) /
                   detail::corners_denominator(order);
        case MarkedName::site: {
            // y: site-perimeter, via D_c(y^{-1}, y^2 z) on the inside-corner series
            MarkedSeries dc = gf_marked(MarkedName::corners_in, order);
            MarkedSeries out(order);
            for (int n = 0; n <= order; ++n) {
                for (const auto& [key, v] : dc.coeff(n).terms()) {
                    int a = key.first; // inside corners
                    int ye = 2 * n - a;
                    if (ye < 0)
                        fail(errc::negative_exponent_residue,
                             "gf_marked(site): negative y exponent survived the substitution");
                    out = out + MarkedSeries::monomial(v, 0, ye, n, order);
                }
            }
            return out;
        }
    }
    fail(errc::unknown_name, "gf_marked: unknown name");
}

} // namespace polyforge
