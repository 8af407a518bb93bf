#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "crnbinom/network.hpp"
#include "crnbinom/rational.hpp"

namespace crnbinom {

/// Sparse exponent vector: (variable index, exponent) pairs, ascending by
/// index, exponents >= 1.
using ExponentVec = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

namespace detail {

inline std::uint64_t total_degree(const ExponentVec& e) {
    std::uint64_t d = 0;
    for (const auto& [var, exp] : e) d += exp;
    return d;
}

/// Lexicographic comparison of the dense vectors the sparse form stands for.
/// Returns <0, 0, >0 like strcmp.
inline int lex_compare(const ExponentVec& a, const ExponentVec& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first != b[j].first)
            return a[i].first < b[j].first ? 1 : -1;  // present beats absent
        if (a[i].second != b[j].second) return a[i].second > b[j].second ? 1 : -1;
        ++i, ++j;
    }
    if (i < a.size()) return 1;
    if (j < b.size()) return -1;
    return 0;
}

/// Degree-lexicographic: total degree first, then lex. Returns <0, 0, >0.
inline int deglex_compare(const ExponentVec& a, const ExponentVec& b) {
    const auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db ? 1 : -1;
    return lex_compare(a, b);
}

inline ExponentVec merge_exponents(const ExponentVec& a, const ExponentVec& b) {
    ExponentVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) out.push_back(a[i++]);
        else if (b[j].first < a[i].first) out.push_back(b[j++]);
        else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i, ++j;
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return out;
}

}  // namespace detail

/// Product of rate-constant symbols and species symbols, both to non-negative
/// integer powers. Rate and species indices live in separate spaces.
struct Monomial {
    ExponentVec rates;
    ExponentVec species;

    friend bool operator==(const Monomial&, const Monomial&) = default;

    Monomial times(const Monomial& other) const {
        return {detail::merge_exponents(rates, other.rates),
                detail::merge_exponents(species, other.species)};
    }

    static Monomial one() { return {}; }
    static Monomial rate_symbol(std::uint32_t index) { return {{{index, 1}}, {}}; }
    static Monomial species_symbol(std::uint32_t index) { return {{}, {{index, 1}}}; }
};

/// Canonical term order: degree-lexicographic over species exponents, ties
/// broken degree-lexicographically over rate exponents. Used both for the
/// term map and for printing (descending).
struct MonomialOrderDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (int c = detail::deglex_compare(a.species, b.species); c != 0) return c > 0;
        return detail::deglex_compare(a.rates, b.rates) > 0;
    }
};

/// Polynomial in species concentrations and rate-constant symbols with exact
/// rational coefficients. Zero coefficients are never stored.
class SymbolicPolynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrderDescending>;

    SymbolicPolynomial() = default;

    static SymbolicPolynomial constant(const Rational& c) {
        SymbolicPolynomial p;
        p.add_term(Monomial::one(), c);
        return p;
    }

    static SymbolicPolynomial term(Monomial m, const Rational& c) {
        SymbolicPolynomial p;
        p.add_term(std::move(m), c);
        return p;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    SymbolicPolynomial& operator+=(const SymbolicPolynomial& other) {
        for (const auto& [m, c] : other.terms_) add_term(m, c);
        return *this;
    }

    SymbolicPolynomial& operator-=(const SymbolicPolynomial& other) {
        for (const auto& [m, c] : other.terms_) add_term(m, -c);
        return *this;
    }

    SymbolicPolynomial& operator*=(const Rational& scalar) {
        if (scalar == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= scalar;
        return *this;
    }

    friend SymbolicPolynomial operator+(SymbolicPolynomial a, const SymbolicPolynomial& b) {
        a += b;
        return a;
    }
    friend SymbolicPolynomial operator-(SymbolicPolynomial a, const SymbolicPolynomial& b) {
        a -= b;
        return a;
    }
    friend SymbolicPolynomial operator*(SymbolicPolynomial a, const Rational& s) {
        a *= s;
        return a;
    }
    friend SymbolicPolynomial operator*(const Rational& s, SymbolicPolynomial a) {
        a *= s;
        return a;
    }

    friend SymbolicPolynomial operator*(const SymbolicPolynomial& a,
                                        const SymbolicPolynomial& b) {
        SymbolicPolynomial out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma.times(mb), ca * cb);
        return out;
    }

    SymbolicPolynomial operator-() const {
        SymbolicPolynomial out(*this);
        for (auto& [m, c] : out.terms_) c = -c;
        return out;
    }

    friend bool operator==(const SymbolicPolynomial&, const SymbolicPolynomial&) = default;

private:
    TermMap terms_;
};

/// The monomial of a complex: the product of species symbols raised to their
/// stoichiometric coefficients, with coefficient one. The empty complex maps
/// to the constant 1.
inline SymbolicPolynomial complex_monomial(const Complex& c) {
    Monomial m;
    for (const auto& [species, coeff] : c.terms()) m.species.emplace_back(species, coeff);
    return SymbolicPolynomial::term(std::move(m), 1);
}

/// Rate symbol table for a network: reaction i owns indices 2i (forward)
/// and 2i+1 (backward).
inline std::vector<std::string> rate_symbol_names(const ReactionNetwork& net) {
    std::vector<std::string> names;
    names.reserve(2 * net.reaction_count());
    for (const auto& rx : net.reactions) {
        names.push_back(rx.forward_label);
        names.push_back(rx.backward_label);
    }
    return names;
}

namespace detail {

inline void print_symbols(std::ostringstream& out, const ExponentVec& exps,
                          const std::vector<std::string>& names, bool& any) {
    for (const auto& [var, exp] : exps) {
        if (any) out << '*';
        any = true;
        out << names.at(var);
        if (exp != 1) out << '^' << exp;
    }
}

}  // namespace detail

/// Deterministic pretty-printer; terms in descending canonical order,
/// e.g. "-k32*A*D^2 - k12*A*B + k21*C + k23*C".
inline std::string to_string(const SymbolicPolynomial& p,
                             const std::vector<std::string>& species_names,
                             const std::vector<std::string>& rate_names) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out << '-';
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        const bool unit_monomial = m.rates.empty() && m.species.empty();
        bool any = false;
        if (mag != 1 || unit_monomial) {
            out << mag.get_str();
            any = true;
        }
        detail::print_symbols(out, m.rates, rate_names, any);
        detail::print_symbols(out, m.species, species_names, any);
    }
    return out.str();
}

}  // namespace crnbinom
