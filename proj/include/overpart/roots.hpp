#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "overpart/numth.hpp"
#include "overpart/poly.hpp"

namespace overpart {

/// Bracket around the largest non-negative real root of a polynomial.
struct RootBracket {
    Rational lo;
    Rational hi;
    /// False when the polynomial has no root in [0, inf); lo = hi = 0 then.
    bool has_root = true;
    /// lo == hi is the root itself.
    bool exact = false;
    /// How "no root above hi" was established: "shift" when p(x + hi) has no
    /// sign variations, "cover:N" when N Descartes-clean subintervals tile
    /// (hi, cauchy_bound).
    std::string certificate;
};

/// Number of sign variations in a coefficient sequence, zeros skipped.
int sign_variations(const std::vector<Rational>& coeffs);

/// Descartes bound on the number of roots of p in the open interval (lo, hi),
/// via the Moebius transform x -> (lo + hi x) / (1 + x).
int descartes_bound(const Poly& p, const Rational& lo, const Rational& hi);

/// 1 + max |c_i / c_n|; every real root lies strictly below it in absolute value.
Rational cauchy_bound(const Poly& p);

/// Brackets the largest non-negative real root of p to within width.
///
/// p must be non-constant with a positive leading coefficient. Isolation runs
/// Vincent-Collins-Akritas bisection on the square-free part, right half first,
/// and refinement keeps exactly one root inside by Descartes counts, so the
/// bracket is certified in exact arithmetic.
RootBracket isolate_max_root(const Poly& p, const Rational& width);

struct RootRecord {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    Rational bracket_lo;
    Rational bracket_hi;
    /// Bracket midpoint rounded half away from zero to two decimals.
    std::string rounded;
    int sign_lo = 0;
    int sign_hi = 0;
    bool has_root = true;
    std::string certificate;

    friend bool operator==(const RootRecord&, const RootRecord&) = default;
};

/// Rounds a rational half away from zero to the given number of decimals.
std::string round_decimal(const Rational& value, int decimals);

/// Largest-root records for the gap polynomials P_a P_b - P_{a+b},
/// 1 <= a <= a_max, 1 <= b <= b_max, in row-major order. Cells run in parallel.
std::vector<RootRecord> roots_table(std::uint64_t a_max, std::uint64_t b_max,
                                    const Rational& width);

/// Reference loop for roots_table.
std::vector<RootRecord> roots_table_serial(std::uint64_t a_max, std::uint64_t b_max,
                                           const Rational& width);

/// One cell of the table.
RootRecord root_record(std::uint64_t a, std::uint64_t b, const Rational& width);

}  // namespace overpart
