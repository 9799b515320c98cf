#ifndef PARAMFEAS_UNIPOLY_HPP
#define PARAMFEAS_UNIPOLY_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "paramfeas/rational.hpp"

namespace paramfeas {

/// Dense univariate polynomial, coeffs[i] the coefficient of t^i.
/// Trailing zeros are trimmed; the zero polynomial has no coefficients.
struct UniPoly {
    std::vector<Rat> coeffs;

    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> c) : coeffs(std::move(c)) { trim(); }

    static UniPoly constant(Rat c) { return UniPoly({std::move(c)}); }

    void trim() {
        while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    }

    bool is_zero() const { return coeffs.empty(); }

    /// Degree, -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    const Rat& leading() const {
        if (coeffs.empty()) throw std::domain_error("UniPoly: zero polynomial has no leading coefficient");
        return coeffs.back();
    }

    Rat eval(const Rat& t) const {
        Rat acc(0);
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    UniPoly derivative() const {
        std::vector<Rat> d;
        for (std::size_t i = 1; i < coeffs.size(); ++i) d.push_back(coeffs[i] * Rat(Int(i)));
        return UniPoly(std::move(d));
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rat> c(std::max(a.coeffs.size(), b.coeffs.size()), Rat(0));
        for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
        for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] += b.coeffs[i];
        return UniPoly(std::move(c));
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<Rat> c(std::max(a.coeffs.size(), b.coeffs.size()), Rat(0));
        for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
        for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] -= b.coeffs[i];
        return UniPoly(std::move(c));
    }

    UniPoly operator-() const {
        std::vector<Rat> c;
        for (const auto& x : coeffs) c.push_back(-x);
        return UniPoly(std::move(c));
    }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<Rat> c(a.coeffs.size() + b.coeffs.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.coeffs.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
        return UniPoly(std::move(c));
    }

    friend UniPoly operator*(const UniPoly& a, const Rat& s) {
        std::vector<Rat> c;
        for (const auto& x : a.coeffs) c.push_back(x * s);
        return UniPoly(std::move(c));
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs == b.coeffs; }

    std::string to_string(const std::string& var = "t") const {
        if (coeffs.empty()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const Rat& c = coeffs[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            if (out.empty())
                out += c.sign() < 0 ? "-" : "";
            else
                out += c.sign() < 0 ? " - " : " + ";
            Rat a = c.abs();
            if (i == 0) {
                out += a.to_string();
            } else {
                if (!(a == Rat(1))) {
                    out += a.to_string();
                    out += '*';
                }
                out += var;
                if (i > 1) out += '^' + std::to_string(i);
            }
        }
        return out;
    }
};

/// Euclidean division, returns {quotient, remainder}.
inline std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
    UniPoly r = a;
    std::vector<Rat> q(a.coeffs.size() > b.coeffs.size() ? a.coeffs.size() - b.coeffs.size() + 1 : 1,
                       Rat(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
        Rat factor = r.leading() / b.leading();
        q[shift] += factor;
        for (std::size_t i = 0; i < b.coeffs.size(); ++i)
            r.coeffs[i + shift] -= factor * b.coeffs[i];
        r.trim();
    }
    return {UniPoly(std::move(q)), r};
}

/// Exact quotient; throws if the division leaves a remainder.
inline UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::logic_error("UniPoly: inexact division");
    return q;
}

/// Canonical Sturm chain: s0 = q, s1 = q', then negated remainders.
inline std::vector<UniPoly> sturm_chain(const UniPoly& q) {
    if (q.is_zero()) throw std::domain_error("sturm_chain: zero polynomial");
    std::vector<UniPoly> chain{q};
    UniPoly d = q.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (true) {
        const UniPoly& a = chain[chain.size() - 2];
        const UniPoly& b = chain[chain.size() - 1];
        UniPoly rem = divrem(a, b).second;
        if (rem.is_zero()) break;
        chain.push_back(-rem);
    }
    return chain;
}

inline int sign_variations(const std::vector<int>& signs) {
    int count = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

/// Number of distinct real roots of q in the open ray (t0, +inf).
/// Requires q(t0) != 0.
inline int sturm_count_above(const UniPoly& q, const Rat& t0) {
    if (q.is_zero()) throw std::domain_error("sturm_count_above: zero polynomial");
    if (q.eval(t0).is_zero())
        throw std::domain_error("sturm_count_above: polynomial vanishes at the endpoint");
    auto chain = sturm_chain(q);
    std::vector<int> at_t0, at_inf;
    for (const auto& s : chain) {
        at_t0.push_back(s.eval(t0).sign());
        at_inf.push_back(s.is_zero() ? 0 : s.leading().sign());
    }
    return sign_variations(at_t0) - sign_variations(at_inf);
}

/// Cauchy root bound: every real root of q has absolute value
/// < 1 + max_i |a_i| / |a_n|. Exact rational; requires degree >= 1.
inline Rat cauchy_root_bound(const UniPoly& q) {
    if (q.degree() < 1) throw std::domain_error("cauchy_root_bound: degree < 1");
    Rat lead = q.leading().abs();
    Rat best(0);
    for (std::size_t i = 0; i + 1 < q.coeffs.size(); ++i) {
        Rat ratio = q.coeffs[i].abs() / lead;
        if (ratio > best) best = ratio;
    }
    return Rat(1) + best;
}

/// True iff q(t) > 0 for every real t >= t0, decided exactly: q(t0) must
/// be positive and the Sturm count on (t0, inf) must be zero.
inline bool univ_positive_on_ray(const UniPoly& q, const Rat& t0) {
    if (q.is_zero()) throw std::domain_error("univ_positive_on_ray: zero polynomial");
    Rat v0 = q.eval(t0);
    if (v0.sign() <= 0) return false;  // covers a root at t0 as well
    if (q.degree() == 0) return true;
    return sturm_count_above(q, t0) == 0;
}

/// Total number of distinct real roots.
inline int sturm_count_all(const UniPoly& q) {
    if (q.is_zero()) throw std::domain_error("sturm_count_all: zero polynomial");
    if (q.degree() < 1) return 0;
    Rat c = cauchy_root_bound(q);
    return sturm_count_above(q, -c);  // all roots lie in (-c, c), and q(-c) != 0
}

/// Smallest integer M such that q has no real root in (M, +inf); the
/// sentinel is the Cauchy-bound floor when q has no real roots at all.
/// Used by the exact branch-point mode.
inline Int sturm_integer_root_ceiling(const UniPoly& q) {
    if (q.is_zero()) throw std::domain_error("sturm_integer_root_ceiling: zero polynomial");
    if (q.degree() < 1) return 0;
    Rat c = cauchy_root_bound(q);
    Int lo = (-c).floor() - 1;  // no roots <= lo
    Int hi = c.ceil();          // no roots above hi
    if (sturm_count_all(q) == 0) return lo;
    // Predicate P(M): no roots in (M, inf). Monotone in M; binary search.
    auto no_roots_above = [&q](const Int& m) {
        Rat point(m);
        if (!q.eval(point).is_zero()) return sturm_count_above(q, point) == 0;
        // m itself is a root; probe just to the right, dodging the finitely
        // many roots between m and m+1.
        for (int denom = 2; denom <= q.degree() + 3; ++denom) {
            Rat probe = Rat(m) + Rat(Int(1), Int(denom));
            if (!q.eval(probe).is_zero()) return sturm_count_above(q, probe) == 0;
        }
        throw std::logic_error("sturm_integer_root_ceiling: probe failure");
    };
    while (lo < hi) {
        Int mid = (lo + hi) / 2;
        if (lo < 0 && hi > 0 && (lo + hi) % 2 != 0) mid = (lo + hi - 1) / 2;  // floor division
        if (no_roots_above(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    return hi;
}

}  // namespace paramfeas

#endif
