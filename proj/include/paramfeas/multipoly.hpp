#ifndef PARAMFEAS_MULTIPOLY_HPP
#define PARAMFEAS_MULTIPOLY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "paramfeas/rational.hpp"

namespace paramfeas {

/// Name of the reserved symbol standing for the binomial coefficient
/// binom(r+k, k). It is carried around formally and may be expanded only
/// once k is fixed to a concrete nonnegative integer.
inline constexpr std::string_view kBinomSymbol = "B";

/// Immutable list of symbol names shared by every polynomial of one
/// problem. Exponent vectors are dense with this fixed arity.
class SymbolTable {
public:
    explicit SymbolTable(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw std::invalid_argument("SymbolTable: duplicate symbol " + names_[i]);
    }

    std::size_t arity() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

    std::optional<std::size_t> binom_index() const { return index_of(kBinomSymbol); }

    bool operator==(const SymbolTable& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
};

using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

inline SymbolTablePtr make_symbols(std::vector<std::string> names) {
    return std::make_shared<const SymbolTable>(std::move(names));
}

/// binom(r+k, k), exactly. Both arguments must be nonnegative.
inline Int binom_eval(const Int& r, const Int& k) {
    if (r < 0 || k < 0) throw std::domain_error("binom_eval: negative argument");
    Int result = 1;
    for (Int i = 1; i <= k; ++i) {
        result *= r + i;
        result /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return result;
}

using Exponents = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial with exact rational coefficients over a
/// fixed symbol table. Zero coefficients are never stored, so structural
/// equality is semantic equality.
class MultiPoly {
public:
    explicit MultiPoly(SymbolTablePtr syms) : syms_(std::move(syms)) {
        if (!syms_) throw std::invalid_argument("MultiPoly: null symbol table");
    }

    static MultiPoly constant(SymbolTablePtr syms, Rat value) {
        MultiPoly p(std::move(syms));
        if (!value.is_zero()) p.terms_.emplace(Exponents(p.syms_->arity(), 0), std::move(value));
        return p;
    }

    static MultiPoly variable(SymbolTablePtr syms, std::size_t index) {
        MultiPoly p(std::move(syms));
        if (index >= p.syms_->arity()) throw std::invalid_argument("MultiPoly: bad variable index");
        Exponents e(p.syms_->arity(), 0);
        e[index] = 1;
        p.terms_.emplace(std::move(e), Rat(1));
        return p;
    }

    static MultiPoly variable(const SymbolTablePtr& syms, std::string_view name) {
        auto idx = syms->index_of(name);
        if (!idx) throw std::invalid_argument("MultiPoly: unknown symbol " + std::string(name));
        return variable(syms, *idx);
    }

    const SymbolTablePtr& symbols() const { return syms_; }
    const std::map<Exponents, Rat>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        const auto& e = terms_.begin()->first;
        return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
    }

    /// Value of a constant polynomial (zero polynomial gives 0).
    Rat constant_value() const {
        if (!is_constant()) throw std::logic_error("MultiPoly: not a constant");
        return terms_.empty() ? Rat(0) : terms_.begin()->second;
    }

    std::uint32_t degree_in(std::size_t var) const {
        std::uint32_t d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
        return d;
    }

    bool uses(std::size_t var) const { return degree_in(var) > 0; }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        a.require_same_table(b);
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        a.require_same_table(b);
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    MultiPoly operator-() const {
        MultiPoly r(syms_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.require_same_table(b);
        MultiPoly r(a.syms_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const Rat& c) {
        MultiPoly r(a.syms_);
        if (c.is_zero()) return r;
        for (const auto& [e, v] : a.terms_) r.terms_.emplace(e, v * c);
        return r;
    }
    friend MultiPoly operator*(const Rat& c, const MultiPoly& a) { return a * c; }

    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly pow(std::uint32_t e) const {
        MultiPoly r = constant(syms_, Rat(1));
        for (std::uint32_t i = 0; i < e; ++i) r *= *this;
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return *a.syms_ == *b.syms_ && a.terms_ == b.terms_;
    }

    /// Formal partial derivative. The binomial symbol cannot be
    /// differentiated; specialize k first.
    MultiPoly derivative(std::size_t var) const {
        if (syms_->binom_index() == var)
            throw std::domain_error("MultiPoly: cannot differentiate with respect to " +
                                    std::string(kBinomSymbol));
        MultiPoly r(syms_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponents d(e);
            --d[var];
            r.add_term(d, c * Rat(Int(e[var])));
        }
        return r;
    }

    MultiPoly derivative(std::string_view var) const {
        auto idx = syms_->index_of(var);
        if (!idx) throw std::invalid_argument("MultiPoly: unknown symbol " + std::string(var));
        return derivative(*idx);
    }

    /// Exact evaluation. The assignment must cover every symbol that
    /// occurs. If B occurs, r and k must be assigned nonnegative integers
    /// and B is forced to binom(r+k, k); a caller-supplied B value that
    /// disagrees is rejected.
    Rat eval(const std::map<std::string, Rat>& assignment) const {
        std::vector<std::optional<Rat>> values(syms_->arity());
        for (const auto& [name, v] : assignment) {
            if (auto idx = syms_->index_of(name)) values[*idx] = v;
        }
        auto bidx = syms_->binom_index();
        if (bidx && uses(*bidx)) {
            auto ridx = syms_->index_of("r");
            auto kidx = syms_->index_of("k");
            if (!ridx || !values[*ridx] || !kidx || !values[*kidx])
                throw std::invalid_argument("MultiPoly::eval: B requires integer values for r and k");
            const Rat& rv = *values[*ridx];
            const Rat& kv = *values[*kidx];
            if (!rv.is_integer() || !kv.is_integer())
                throw std::invalid_argument("MultiPoly::eval: B requires integer values for r and k");
            Rat forced = Rat(binom_eval(rv.num(), kv.num()));
            if (values[*bidx] && *values[*bidx] != forced)
                throw std::invalid_argument("MultiPoly::eval: inconsistent value for B");
            values[*bidx] = forced;
        }
        Rat total(0);
        for (const auto& [e, c] : terms_) {
            Rat term = c;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!values[i])
                    throw std::invalid_argument("MultiPoly::eval: missing symbol " + syms_->name(i));
                for (std::uint32_t j = 0; j < e[i]; ++j) term *= *values[i];
            }
            total += term;
        }
        return total;
    }

    /// Substitute a rational value for one symbol.
    MultiPoly substitute(std::size_t var, const Rat& value) const {
        MultiPoly r(syms_);
        for (const auto& [e, c] : terms_) {
            Rat coeff = c;
            for (std::uint32_t j = 0; j < e[var]; ++j) coeff *= value;
            Exponents d(e);
            d[var] = 0;
            r.add_term(d, coeff);
        }
        return r;
    }

    MultiPoly substitute(std::string_view var, const Rat& value) const {
        auto idx = syms_->index_of(var);
        if (!idx) throw std::invalid_argument("MultiPoly: unknown symbol " + std::string(var));
        return substitute(*idx, value);
    }

    /// Coefficient polynomial of var^1, with var removed from the
    /// monomials. Requires degree <= 1 in var.
    MultiPoly linear_coefficient(std::size_t var) const {
        MultiPoly r(syms_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            if (e[var] > 1) throw std::logic_error("MultiPoly: not affine in " + syms_->name(var));
            Exponents d(e);
            d[var] = 0;
            r.add_term(d, c);
        }
        return r;
    }

    /// Canonical rendering, terms in descending lexicographic exponent
    /// order; reparses under the problem grammar.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Rat& c = it->second;
            const bool first = out.empty();
            if (first)
                out += c.sign() < 0 ? "-" : "";
            else
                out += c.sign() < 0 ? " - " : " + ";
            std::string mono = monomial_string(it->first);
            Rat a = c.abs();
            if (mono.empty()) {
                out += a.to_string();
            } else {
                if (!(a == Rat(1))) {
                    out += a.to_string();
                    out += '*';
                }
                out += mono;
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
        return os << p.to_string();
    }

private:
    void require_same_table(const MultiPoly& o) const {
        if (syms_ != o.syms_ && !(*syms_ == *o.syms_))
            throw std::invalid_argument("MultiPoly: mixed symbol tables");
    }

    void add_term(const Exponents& e, const Rat& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::string monomial_string(const Exponents& e) const {
        std::string s;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!s.empty()) s += '*';
            s += syms_->name(i);
            if (e[i] > 1) {
                s += '^';
                s += std::to_string(e[i]);
            }
        }
        return s;
    }

    SymbolTablePtr syms_;
    std::map<Exponents, Rat> terms_;
};

/// binom(r + k0, k0) as a polynomial in r over the given table:
/// (r+1)(r+2)...(r+k0) / k0!.
inline MultiPoly binom_expansion_poly(const SymbolTablePtr& syms, const Int& k_value) {
    auto ridx = syms->index_of("r");
    if (!ridx) throw std::invalid_argument("binom_expansion_poly: table lacks symbol r");
    MultiPoly prod = MultiPoly::constant(syms, Rat(1));
    Int factorial = 1;
    for (Int i = 1; i <= k_value; ++i) {
        prod *= MultiPoly::variable(syms, *ridx) + MultiPoly::constant(syms, Rat(i));
        factorial *= i;
    }
    return prod * Rat(Int(1), factorial);
}

/// Specialize k to a fixed nonnegative integer, replacing every power of
/// B by the matching product formula. The result involves only r and the
/// remaining symbols.
inline MultiPoly expand_binom(const MultiPoly& p, const Int& k_value) {
    if (k_value < 0) throw std::domain_error("expand_binom: negative k");
    const auto& syms = p.symbols();
    auto bidx = syms->binom_index();
    auto kidx = syms->index_of("k");

    MultiPoly step = p;
    if (kidx) step = step.substitute(*kidx, Rat(k_value));
    if (!bidx || !step.uses(*bidx)) return step;

    MultiPoly bpoly = binom_expansion_poly(syms, k_value);
    MultiPoly out(syms);
    for (const auto& [e, c] : step.terms()) {
        Exponents d(e);
        const std::uint32_t be = d[*bidx];
        d[*bidx] = 0;
        MultiPoly mono(syms);
        mono = MultiPoly::constant(syms, Rat(1));
        for (std::size_t i = 0; i < d.size(); ++i)
            for (std::uint32_t j = 0; j < d[i]; ++j) mono *= MultiPoly::variable(syms, i);
        out += mono * c * bpoly.pow(be);
    }
    return out;
}

/// Spec-level alias: exact evaluation with forced B.
inline Rat poly_eval(const MultiPoly& p, const std::map<std::string, Rat>& assignment) {
    return p.eval(assignment);
}

inline MultiPoly poly_derivative(const MultiPoly& p, std::string_view var) {
    return p.derivative(var);
}

}  // namespace paramfeas

#endif
