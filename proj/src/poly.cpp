#include "overpart/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace overpart {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> coeffs(degree + 1);
    coeffs[degree] = c;
    return Poly(std::move(coeffs));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& Poly::leading() const {
    if (coeffs_.empty())
        throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_)
        c *= scalar;
    return *this;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero())
        return {};
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return Poly(std::move(out));
}

Poly Poly::shifted_up(std::size_t k) const {
    if (is_zero())
        return {};
    std::vector<Rational> out(k);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(out));
}

std::string Poly::to_string() const {
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0)
            continue;
        Rational mag = abs(c);
        if (out.empty())
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? " - " : " + ";
        bool unit = (mag == 1);
        if (!unit || i == 0)
            out += overpart::to_string(mag);
        if (i >= 1) {
            if (!unit)
                out += "*";
            out += "x";
            if (i >= 2)
                out += "^" + std::to_string(i);
        }
    }
    return out;
}

Poly formal_derivative(const Poly& p) {
    const auto& c = p.coeffs();
    if (c.size() <= 1)
        return {};
    std::vector<Rational> out(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i)
        out[i - 1] = c[i] * static_cast<unsigned long>(i);
    return Poly(std::move(out));
}

Rational eval_rat(const Poly& p, const Rational& x) {
    Rational acc = 0;
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc *= x;
        acc += c[i];
    }
    return acc;
}

int sign_at(const Poly& p, const Rational& x) { return sgn(eval_rat(p, x)); }

std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
    if (den.is_zero())
        throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = num.coeffs();
    const auto& d = den.coeffs();
    if (rem.size() < d.size())
        return {Poly{}, num};
    std::vector<Rational> quot(rem.size() - d.size() + 1);
    const Rational& lead = d.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rational q = rem[k + d.size() - 1] / lead;
        quot[k] = q;
        if (q == 0)
            continue;
        for (std::size_t j = 0; j < d.size(); ++j)
            rem[k + j] -= q * d[j];
    }
    rem.resize(d.size() - 1);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero())
        return a;
    Rational inv = 1 / a.leading();
    return a * inv;
}

Poly square_free_part(const Poly& p) {
    if (p.degree() <= 0)
        return p;
    Poly g = gcd(p, formal_derivative(p));
    return divmod(p, g).first;
}

Poly taylor_shift(const Poly& p, const Rational& c) {
    // Horner-style repeated synthetic division.
    std::vector<Rational> a = p.coeffs();
    const std::size_t n = a.size();
    if (c == 0 || n <= 1)
        return p;
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j-- > i;)
            a[j] += c * a[j + 1];
    return Poly(std::move(a));
}

std::vector<Integer> primitive_integer_coeffs(const Poly& p) {
    Integer lcm = 1;
    for (const auto& c : p.coeffs())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> out;
    out.reserve(p.coeffs().size());
    Integer content = 0;
    for (const auto& c : p.coeffs()) {
        Integer v = c.get_num() * (lcm / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        out.push_back(std::move(v));
    }
    if (content > 1)
        for (auto& v : out)
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
    return out;
}

}  // namespace overpart
