#pragma once

#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polyforge/bigint.hpp"
#include "polyforge/error.hpp"

namespace polyforge {

// Exact integer polynomial in z, coefficients indexed by exponent.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPoly constant(BigInt v) { return IntPoly({std::move(v)}); }
    static IntPoly monomial(BigInt v, int deg) {
        std::vector<BigInt> c(deg + 1);
        c[deg] = std::move(v);
        return IntPoly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    BigInt coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : BigInt(); }
    const std::vector<BigInt>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return IntPoly(std::move(c));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        return IntPoly(std::move(c));
    }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return IntPoly(std::move(c));
    }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    double evaluate(double z) const {
        double v = 0;
        for (size_t i = c_.size(); i-- > 0;) v = v * z + c_[i].to_double();
        return v;
    }

private:
    std::vector<BigInt> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

// Fibonacci polynomials: F_0 = 0, F_1 = 1, F_{k+2} = F_{k+1} - z F_k.
inline IntPoly fibonacci_poly(int k) {
    if (k < 0) fail(errc::bad_k, "fibonacci_poly: k must be >= 0");
    IntPoly fprev;                       // F_0
    IntPoly f = IntPoly::constant(1);    // F_1
    if (k == 0) return fprev;
    IntPoly z = IntPoly::monomial(1, 1);
    for (int i = 1; i < k; ++i) {
        IntPoly next = f - z * fprev;
        fprev = std::move(f);
        f = std::move(next);
    }
    return f;
}

// Truncated power series with exact rational coefficients.  Arithmetic
// results carry the smaller truncation order of the operands.
class Series {
public:
    explicit Series(int order) : c_(order + 1) {
        if (order < 0) fail(errc::bad_input, "Series: negative order");
    }
    static Series constant(Rational v, int order) {
        Series s(order);
        s.c_[0] = std::move(v);
        return s;
    }
    static Series monomial(Rational v, int deg, int order) {
        Series s(order);
        if (deg <= order) s.c_[deg] = std::move(v);
        return s;
    }
    static Series from_poly(const IntPoly& p, int order) {
        Series s(order);
        for (int i = 0; i <= std::min(order, p.degree()); ++i) s.c_[i] = Rational(p.coeff(i));
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int n) const { return c_[n]; }

    friend Series operator+(const Series& a, const Series& b) {
        Series r(std::min(a.order(), b.order()));
        for (int i = 0; i <= r.order(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) {
        Series r(std::min(a.order(), b.order()));
        for (int i = 0; i <= r.order(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend Series operator*(const Series& a, const Series& b) {
        Series r(std::min(a.order(), b.order()));
        for (int i = 0; i <= r.order(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; i + j <= r.order(); ++j)
                if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }
    friend Series operator/(const Series& a, const Series& b) {
        if (b.c_[0].is_zero()) fail(errc::division_by_non_unit, "Series: divisor has zero constant term");
        Series r(std::min(a.order(), b.order()));
        for (int n = 0; n <= r.order(); ++n) {
            Rational acc = a.c_[n];
            for (int k = 0; k < n; ++k)
                if (!r.c_[k].is_zero() && n - k <= b.order()) acc -= r.c_[k] * b.c_[n - k];
            r.c_[n] = acc / b.c_[0];
        }
        return r;
    }
    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    Series sqrt() const {
        if (c_[0] != Rational(1)) fail(errc::sqrt_of_non_unit, "Series: sqrt needs constant term 1");
        Series r(order());
        r.c_[0] = Rational(1);
        for (int n = 1; n <= order(); ++n) {
            Rational acc = c_[n];
            for (int k = 1; k < n; ++k) acc -= r.c_[k] * r.c_[n - k];
            r.c_[n] = acc / Rational(2);
        }
        return r;
    }

    // substitution a(b(z)); the inner series must vanish at z = 0
    Series compose(const Series& inner) const {
        if (!inner.c_[0].is_zero())
            fail(errc::compose_nonzero_constant, "Series: compose needs inner constant term 0");
        int ord = std::min(order(), inner.order());
        Series r = Series::constant(c_[order()], ord);
        for (int k = order() - 1; k >= 0; --k) {
            r = r * inner;
            r.c_[0] += c_[k];
        }
        return r;
    }

    Series shift(int k) const { // multiply by z^k
        Series r(order());
        for (int n = k; n <= order(); ++n) r.c_[n] = c_[n - k];
        return r;
    }

    // divide by z^k: the k lowest coefficients must vanish.  Order drops by k
    // since nothing is known about the tail.
    Series shift_down(int k) const {
        for (int n = 0; n < k; ++n)
            if (!c_[n].is_zero()) fail(errc::bad_input, "Series: shift_down of nonzero low coefficients");
        Series r(order() - k);
        for (int n = 0; n <= r.order(); ++n) r.c_[n] = c_[n + k];
        return r;
    }

    Series truncate(int new_order) const {
        Series r(std::min(new_order, order()));
        for (int n = 0; n <= r.order(); ++n) r.c_[n] = c_[n];
        return r;
    }

    // true when every coefficient is an integer
    bool is_integral() const {
        for (const auto& q : c_)
            if (!q.is_integer()) return false;
        return true;
    }

private:
    std::vector<Rational> c_;
};

// --- univariate generating functions -----------------------------------------

enum class GfName { directed, symmetric, trees_le, trees_eq, kpar, kdir, dk_minus, fd_flat, zconvex };

inline bool gf_needs_k(GfName name) {
    switch (name) {
        case GfName::trees_le:
        case GfName::trees_eq:
        case GfName::kpar:
        case GfName::kdir:
        case GfName::dk_minus:
        case GfName::fd_flat: return true;
        default: return false;
    }
}

namespace detail {

inline Series fib_series(int k, int order) { return Series::from_poly(fibonacci_poly(k), order); }

inline Series sqrt_one_minus_4z(int order) {
    return Series::from_poly(IntPoly({BigInt(1), BigInt(-4)}), order).sqrt();
}

} // namespace detail

// Exact z-expansion of the named generating function.  Every closed form is
// expanded by truncated arithmetic on the Fibonacci polynomials; none of the
// coefficients are floating point.
inline Series gf_univariate(GfName name, int k, int order) {
    using detail::fib_series;
    const Series z2 = Series::monomial(Rational(1), 2, order);
    auto require_k = [&](int lo) {
        if (k < lo) fail(errc::bad_k, "gf_univariate: k out of range for this family");
    };
    Series out(order);
    switch (name) {
        case GfName::directed:
            out = z2 / detail::sqrt_one_minus_4z(order);
            break;
        case GfName::symmetric: {
            Series s = Series::from_poly(IntPoly({BigInt(1), BigInt(0), BigInt(-4)}), order).sqrt();
            out = z2 / s;
            break;
        }
        case GfName::trees_le: {
            require_k(1);
            out = Series::from_poly(fibonacci_poly(k), order).shift(1) / fib_series(k + 1, order);
            break;
        }
        case GfName::trees_eq: {
            require_k(1);
            Series num = Series::monomial(Rational(1), k, order);
            out = num / (fib_series(k, order) * fib_series(k + 1, order));
            break;
        }
        case GfName::kpar: {
            require_k(1);
            Series a = fib_series(k + 2, order) / fib_series(k + 3, order);
            Series b = fib_series(k + 1, order) / fib_series(k + 2, order);
            Series d = a - b;
            out = (z2 * a * a) - (z2 * d * d);
            break;
        }
        case GfName::kdir: {
            require_k(0);
            if (k == 0) {
                out = Series::from_poly(IntPoly({BigInt(1), BigInt(1)}), order).shift(2) /
                      Series::from_poly(IntPoly({BigInt(1), BigInt(-1)}), order);
            } else {
                Series a = fib_series(k + 2, order) / fib_series(2 * k + 3, order);
                out = z2 * a * a * fib_series(2 * k + 2, order);
            }
            break;
        }
        case GfName::dk_minus: {
            require_k(1);
            IntPoly den = fibonacci_poly(k + 2) - IntPoly::monomial(1, 1) * fibonacci_poly(k);
            out = fib_series(k + 1, order).shift(2) / Series::from_poly(den, order);
            break;
        }
        case GfName::fd_flat: {
            require_k(1);
            Series a = Series::monomial(Rational(1), k + 1, order) / fib_series(2 * k + 3, order);
            IntPoly den = fibonacci_poly(k + 3) - IntPoly::monomial(1, 1) * fibonacci_poly(k + 1);
            out = z2 * a * a * (fib_series(k + 2, order) / Series::from_poly(den, order));
            break;
        }
        case GfName::zconvex: {
            Series s = detail::sqrt_one_minus_4z(order);
            Series one = Series::constant(Rational(1), order);
            Series d = (one - Series::from_poly(IntPoly({BigInt(0), BigInt(2)}), order) - s) /
                       Series::constant(Rational(2), order);
            Series num1 = Series::from_poly(IntPoly({BigInt(0), BigInt(0), BigInt(0), BigInt(0), BigInt(2)}), order) *
                          Series::from_poly(IntPoly({BigInt(1), BigInt(-2)}) * IntPoly({BigInt(1), BigInt(-2)}), order) * d;
            Series den1 = Series::from_poly(IntPoly({BigInt(1), BigInt(-4)}) * IntPoly({BigInt(1), BigInt(-4)}) *
                                                IntPoly({BigInt(1), BigInt(-3)}) * IntPoly({BigInt(1), BigInt(-1)}),
                                            order);
            Series num2 = Series::from_poly(
                IntPoly({BigInt(1), BigInt(-6), BigInt(10), BigInt(-2), BigInt(-1)}), order)
                              .shift(2);
            Series den2 = Series::from_poly(
                IntPoly({BigInt(1), BigInt(-4)}) * IntPoly({BigInt(1), BigInt(-3)}) * IntPoly({BigInt(1), BigInt(-1)}),
                order);
            out = num1 / den1 + num2 / den2;
            break;
        }
    }
    if (!out.is_integral()) fail(errc::bad_input, "gf_univariate: non-integral coefficient (internal fault)");
    return out;
}

// --- closed-form counting sequences ------------------------------------------

// Number of convex polyominoes with semi-perimeter sp.
inline BigInt closed_form_convex(int sp) {
    if (sp < 2) fail(errc::bad_input, "closed_form_convex: sp must be >= 2");
    int m = sp - 2;
    if (m == 0) return BigInt(1);
    if (m == 1) return BigInt(2);
    unsigned n = static_cast<unsigned>(m - 2);
    return BigInt(2 * static_cast<long long>(n) + 11) * BigInt::pow(BigInt(4), n) -
           BigInt(4) * BigInt(2 * static_cast<long long>(n) + 1) * BigInt::binomial(2 * n, n);
}

// l_0, l_1, ..., l_{max_sp-2}: counts of L-convex polyominoes with
// semi-perimeter n+2, via the recurrence l_{n+2} = 4 l_{n+1} - 2 l_n.
inline std::vector<BigInt> lconvex_seq(int max_sp) {
    if (max_sp < 2) fail(errc::bad_input, "lconvex_seq: max_sp must be >= 2");
    std::vector<BigInt> l{BigInt(1)};
    if (max_sp >= 3) l.push_back(BigInt(2));
    if (max_sp >= 4) l.push_back(BigInt(7));
    for (int n = 3; n <= max_sp - 2; ++n) l.push_back(BigInt(4) * l[n - 1] - BigInt(2) * l[n - 2]);
    return l;
}

// --- identity battery ---------------------------------------------------------

struct IdentityCheck {
    std::string name;
    bool pass;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

inline IdentityReport identities_check(int k_max, int order) {
    IdentityReport rep;
    auto add = [&](std::string name, bool ok) { rep.checks.push_back({std::move(name), ok}); };

    // F_k^2 - F_{k+1} F_{k-1} = z^{k-1}, exact polynomials
    {
        bool ok = true;
        for (int k = 1; k <= k_max; ++k) {
            IntPoly lhs = fibonacci_poly(k) * fibonacci_poly(k) -
                          fibonacci_poly(k + 1) * fibonacci_poly(k - 1);
            if (lhs != IntPoly::monomial(1, k - 1)) ok = false;
        }
        add("fibonacci_two_way", ok);
    }
    // F_{k+m-1} = F_k F_m - z F_{k-1} F_{m-1}
    {
        bool ok = true;
        int lim = std::min(k_max, 12);
        for (int k = 1; k <= lim; ++k)
            for (int m = 1; m <= lim; ++m) {
                IntPoly rhs = fibonacci_poly(k) * fibonacci_poly(m) -
                              IntPoly::monomial(1, 1) * fibonacci_poly(k - 1) * fibonacci_poly(m - 1);
                if (fibonacci_poly(k + m - 1) != rhs) ok = false;
            }
        add("fibonacci_index_sum", ok);
    }
    // T_{<=k} - T_{<=k-1} = z^k / (F_k F_{k+1}) as series
    {
        bool ok = true;
        for (int k = 2; k <= std::min(k_max, 10); ++k) {
            Series lhs = gf_univariate(GfName::trees_le, k, order) -
                         gf_univariate(GfName::trees_le, k - 1, order);
            if (lhs != gf_univariate(GfName::trees_eq, k, order)) ok = false;
        }
        add("tree_height_difference", ok);
    }
    // first-order closed form of F_k through sqrt(1-4z)
    {
        bool ok = true;
        Series s = detail::sqrt_one_minus_4z(order);
        Series one = Series::constant(Rational(1), order);
        Series half = Series::constant(Rational(BigInt(1), BigInt(2)), order);
        Series p = (one + s) * half;
        Series q = (one - s) * half;
        Series pk = one, qk = one;
        for (int k = 0; k <= std::min(k_max, 16); ++k) {
            Series rhs = (pk - qk) / s;
            if (rhs != Series::from_poly(fibonacci_poly(k), order).truncate(order)) ok = false;
            pk = pk * p;
            qk = qk * q;
        }
        add("fibonacci_closed_form", ok);
    }
    // F_k = (1 - (z C^2)^k) / (C^k sqrt(1-4z)), C the Catalan series
    {
        bool ok = true;
        int ord = order - 1; // one coefficient is lost dividing (1 - sqrt) by 2z
        Series s = detail::sqrt_one_minus_4z(order);
        Series one = Series::constant(Rational(1), ord);
        Series catalan =
            ((Series::constant(Rational(1), order) - s) / Series::constant(Rational(2), order))
                .shift_down(1);
        Series st = s.truncate(ord);
        Series zc2 = Series::monomial(Rational(1), 1, ord) * catalan * catalan;
        Series ck = one, zc2k = one;
        for (int k = 0; k <= std::min(k_max, 16); ++k) {
            Series rhs = (one - zc2k) / (ck * st);
            if (rhs != Series::from_poly(fibonacci_poly(k), ord)) ok = false;
            ck = ck * catalan;
            zc2k = zc2k * zc2;
        }
        add("fibonacci_catalan_form", ok);
    }
    return rep;
}

// --- asymptotics ---------------------------------------------------------------

struct AsymptoticInfo {
    double mu;   // growth rate 4 cos^2(pi / (2k+3))
    double root; // smallest positive real root of F_{2k+3}
};

inline AsymptoticInfo asymptotic_mu(int k) {
    if (k < 1) fail(errc::bad_k, "asymptotic_mu: k must be >= 1");
    double mu = 4.0 * std::pow(std::cos(M_PI / (2.0 * k + 3.0)), 2);
    IntPoly f = fibonacci_poly(2 * k + 3);
    double lo = 0.0, hi = 1.0;
    // F(0) = 1 > 0; scan for the first sign change
    double step = 1e-4, prev = f.evaluate(0.0), t = step;
    for (; t <= 1.0; t += step) {
        double v = f.evaluate(t);
        if ((prev > 0) != (v > 0)) {
            lo = t - step;
            hi = t;
            break;
        }
        prev = v;
    }
    for (int it = 0; it < 200; ++it) {
        double mid = (lo + hi) / 2;
        if ((f.evaluate(lo) > 0) != (f.evaluate(mid) > 0))
            hi = mid;
        else
            lo = mid;
    }
    return {mu, (lo + hi) / 2};
}

// Empirical check that [z^n] kdir(k) ~ C mu^n n: the ratios d_n / (mu^n n)
// between n_lo and n_hi, and their maximal relative drift.
struct RatioDrift {
    double ratio_lo;
    double ratio_hi;
    double max_drift;
};

inline RatioDrift asymptotic_ratio_drift(int k, int n_lo, int n_hi) {
    Series d = gf_univariate(GfName::kdir, k, n_hi);
    double mu = asymptotic_mu(k).mu;
    double base = 0, last = 0, drift = 0;
    for (int n = n_lo; n <= n_hi; ++n) {
        double r = d.coeff(n).to_double() / (std::pow(mu, n) * n);
        if (n == n_lo)
            base = r;
        else
            drift = std::max(drift, std::abs(r / base - 1.0));
        last = r;
    }
    return {base, last, drift};
}

} // namespace polyforge
