#ifndef LATFACT_POLY_HPP
#define LATFACT_POLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "latfact/numbers.hpp"

namespace latfact {

// Polynomial in one indeterminate t with arbitrary-precision integer
// coefficients and exact rational exponents (generalized rank functions can
// produce non-integral exponents). Zero coefficients are never stored, so
// operator== is exact term-by-term equality.
class ExactPoly {
public:
    ExactPoly() = default;
    explicit ExactPoly(Integer constant) { add_term(Rational(0), constant); }

    static ExactPoly monomial(const Rational& exp, Integer coeff = 1) {
        ExactPoly p;
        p.add_term(exp, std::move(coeff));
        return p;
    }
    static ExactPoly zero() { return ExactPoly(); }
    static ExactPoly one() { return ExactPoly(Integer(1)); }
    // t - c
    static ExactPoly linear(const Integer& c);

    void add_term(const Rational& exp, const Integer& coeff);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Integer coeff(const Rational& exp) const;
    Integer constant_term() const { return coeff(Rational(0)); }
    // Largest exponent (0 for the zero polynomial).
    Rational degree() const;

    ExactPoly& operator+=(const ExactPoly& o);
    ExactPoly& operator-=(const ExactPoly& o);
    friend ExactPoly operator+(ExactPoly a, const ExactPoly& b) { a += b; return a; }
    friend ExactPoly operator-(ExactPoly a, const ExactPoly& b) { a -= b; return a; }
    friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b);
    ExactPoly& operator*=(const ExactPoly& o) { *this = *this * o; return *this; }
    ExactPoly times(const Integer& c) const;
    ExactPoly shifted(const Rational& dexp) const; // multiply by t^dexp
    ExactPoly pow(unsigned k) const;

    friend bool operator==(const ExactPoly& a, const ExactPoly& b) {
        return a.terms_ == b.terms_;
    }

    // Exact evaluation; requires every exponent to be a non-negative integer
    // unless the point is 0 or 1.
    Rational evaluate(const Rational& t) const;

    // Terms in descending exponent order.
    std::vector<std::pair<Rational, Integer>> terms_descending() const;

    // "t^3 - 6*t^2 + 10*t - 5"; rational exponents print as t^(p/q).
    std::string to_string() const;

private:
    std::map<Rational, Integer> terms_;
};

} // namespace latfact

#endif
