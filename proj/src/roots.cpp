#include "overpart/roots.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "overpart/parallel.hpp"
#include "overpart/pbar.hpp"

namespace overpart {

int sign_variations(const std::vector<Rational>& coeffs) {
    int changes = 0, last = 0;
    for (const auto& c : coeffs) {
        const int s = sgn(c);
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

int descartes_bound(const Poly& p, const Rational& lo, const Rational& hi) {
    // (1+x)^d p((lo + hi x)/(1+x)) has the coefficients of R(x+1) reversed,
    // where R is the reversal of p(lo + (hi-lo) x).
    std::vector<Rational> c = taylor_shift(p, lo).coeffs();
    const Rational span = hi - lo;
    Rational scale = 1;
    for (auto& ci : c) {
        ci *= scale;
        scale *= span;
    }
    std::reverse(c.begin(), c.end());
    return sign_variations(taylor_shift(Poly(std::move(c)), Rational(1)).coeffs());
}

Rational cauchy_bound(const Poly& p) {
    if (p.degree() < 1)
        throw std::domain_error("cauchy_bound: polynomial must be non-constant");
    const Rational lead = abs(p.leading());
    Rational best = 0;
    for (std::size_t i = 0; i + 1 < p.coeffs().size(); ++i) {
        Rational ratio = abs(p.coeffs()[i]) / lead;
        if (ratio > best)
            best = ratio;
    }
    return best + 1;
}

namespace {

struct Isolated {
    Rational lo;
    Rational hi;
    bool exact = false;
};

// Minimum interval width before the search gives up; far below any width the
// suite requests.
const Rational kSearchFloor = Rational(1, 1) / (Integer(1) << 200);

std::optional<Isolated> largest_in(const Poly& q, const Rational& lo, const Rational& hi) {
    const int v = descartes_bound(q, lo, hi);
    if (v == 0)
        return std::nullopt;
    if (v == 1)
        return Isolated{lo, hi, false};
    if (hi - lo < kSearchFloor)
        throw std::runtime_error("root isolation did not converge");
    const Rational mid = (lo + hi) / 2;
    if (auto right = largest_in(q, mid, hi))
        return right;
    if (sign_at(q, mid) == 0)
        return Isolated{mid, mid, true};
    return largest_in(q, lo, mid);
}

// Counts Descartes-clean tiles of (lo, hi); nullopt if some tile has a root.
std::optional<int> clean_cover(const Poly& q, const Rational& lo, const Rational& hi) {
    const int v = descartes_bound(q, lo, hi);
    if (v == 0)
        return 1;
    if (v == 1 || hi - lo < kSearchFloor)
        return std::nullopt;
    const Rational mid = (lo + hi) / 2;
    if (sign_at(q, mid) == 0)
        return std::nullopt;
    auto left = clean_cover(q, lo, mid);
    if (!left)
        return std::nullopt;
    auto right = clean_cover(q, mid, hi);
    if (!right)
        return std::nullopt;
    return *left + *right;
}

}  // namespace

RootBracket isolate_max_root(const Poly& p, const Rational& width) {
    if (p.degree() < 1)
        throw std::domain_error("isolate_max_root: polynomial must be non-constant");
    if (p.leading() <= 0)
        throw std::domain_error("isolate_max_root: leading coefficient must be positive");
    if (width <= 0)
        throw std::domain_error("isolate_max_root: width must be positive");

    Poly q = square_free_part(p);
    const bool zero_is_root = q.coeff(0) == 0;
    if (zero_is_root) {
        auto c = q.coeffs();
        c.erase(c.begin());
        q = Poly(std::move(c));
    }

    RootBracket out;
    std::optional<Isolated> found;
    Rational bound = 1;
    if (q.degree() >= 1) {
        bound = cauchy_bound(q);
        found = largest_in(q, Rational(0), bound);
    }
    if (!found) {
        out.lo = out.hi = 0;
        out.has_root = zero_is_root;
        out.exact = zero_is_root;
    } else if (found->exact) {
        out.lo = out.hi = found->lo;
        out.exact = true;
    } else {
        Rational lo = found->lo, hi = found->hi;
        while (hi - lo > width) {
            const Rational mid = (lo + hi) / 2;
            if (sign_at(q, mid) == 0) {
                lo = hi = mid;
                out.exact = true;
                break;
            }
            if (descartes_bound(q, mid, hi) == 1)
                lo = mid;
            else
                hi = mid;
        }
        out.lo = lo;
        out.hi = hi;
    }

    if (sign_variations(taylor_shift(p, out.hi).coeffs()) == 0) {
        out.certificate = "shift";
    } else if (q.degree() >= 1) {
        if (auto tiles = clean_cover(q, out.hi, bound))
            out.certificate = "cover:" + std::to_string(*tiles);
        else
            throw std::logic_error("isolate_max_root: could not certify the upper end");
    }
    return out;
}

std::string round_decimal(const Rational& value, int decimals) {
    Integer scale = 1;
    for (int i = 0; i < decimals; ++i)
        scale *= 10;
    const Rational scaled = abs(value) * scale + Rational(1, 2);
    Integer units;
    mpz_fdiv_q(units.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    std::string digits = units.get_str();
    if (static_cast<int>(digits.size()) <= decimals)
        digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
    std::string out = (value < 0 && units != 0) ? "-" : "";
    out += digits.substr(0, digits.size() - static_cast<std::size_t>(decimals));
    if (decimals > 0)
        out += "." + digits.substr(digits.size() - static_cast<std::size_t>(decimals));
    return out;
}

RootRecord root_record(std::uint64_t a, std::uint64_t b, const Rational& width) {
    const Poly gap = product_gap_poly(a, b);
    const RootBracket bracket = isolate_max_root(gap, width);
    RootRecord rec;
    rec.a = a;
    rec.b = b;
    rec.bracket_lo = bracket.lo;
    rec.bracket_hi = bracket.hi;
    rec.rounded = round_decimal((bracket.lo + bracket.hi) / 2, 2);
    rec.sign_lo = sign_at(gap, bracket.lo);
    rec.sign_hi = sign_at(gap, bracket.hi);
    rec.has_root = bracket.has_root;
    rec.certificate = bracket.certificate;
    return rec;
}

std::vector<RootRecord> roots_table(std::uint64_t a_max, std::uint64_t b_max,
                                    const Rational& width) {
    pbar_poly_prefix(a_max + b_max);
    std::vector<RootRecord> out(a_max * b_max);
    parallel_for(out.size(), [&](std::size_t idx) {
        out[idx] = root_record(idx / b_max + 1, idx % b_max + 1, width);
    });
    return out;
}

std::vector<RootRecord> roots_table_serial(std::uint64_t a_max, std::uint64_t b_max,
                                           const Rational& width) {
    std::vector<RootRecord> out;
    out.reserve(a_max * b_max);
    for (std::uint64_t a = 1; a <= a_max; ++a)
        for (std::uint64_t b = 1; b <= b_max; ++b)
            out.push_back(root_record(a, b, width));
    return out;
}

}  // namespace overpart
