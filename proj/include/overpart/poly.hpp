#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "overpart/numth.hpp"

namespace overpart {

/// Dense univariate polynomial over the rationals.
///
/// Coefficients are stored in ascending degree with no trailing zeros, so the
/// zero polynomial has an empty coefficient list and equality is structural.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs);

    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree, with -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Coefficient of x^i; zero past the degree.
    Rational coeff(std::size_t i) const;
    const Rational& leading() const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Rational& scalar);
    Poly operator-() const;

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(Poly lhs, const Rational& s) { return lhs *= s; }
    friend Poly operator*(const Rational& s, Poly rhs) { return rhs *= s; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend bool operator==(const Poly& lhs, const Poly& rhs) = default;

    /// Multiplies by x^k.
    Poly shifted_up(std::size_t k) const;

    std::string to_string() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

Poly formal_derivative(const Poly& p);

/// Exact Horner evaluation.
Rational eval_rat(const Poly& p, const Rational& x);

/// Sign of p(x) as -1, 0 or +1.
int sign_at(const Poly& p, const Rational& x);

/// Quotient and remainder of polynomial long division. Throws on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);

/// Monic greatest common divisor (zero if both are zero).
Poly gcd(Poly a, Poly b);

/// p / gcd(p, p'): same roots as p, all simple.
Poly square_free_part(const Poly& p);

/// p(x + c).
Poly taylor_shift(const Poly& p, const Rational& c);

/// Positive rescaling with integer, content-free coefficients.
std::vector<Integer> primitive_integer_coeffs(const Poly& p);

}  // namespace overpart
