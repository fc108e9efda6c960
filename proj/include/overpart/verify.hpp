#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "overpart/numth.hpp"

namespace overpart {

/// Outcome of checking one claim over a finite range.
///
/// holds is true only when no counterexample and no inconclusive comparison
/// turned up, and the exceptions found are exactly the claim's declared
/// exceptions that fall inside the range.
struct VerifyReport {
    std::string claim;
    std::string range;
    bool holds = false;
    std::vector<std::string> exceptions;
    std::optional<std::string> counterexample;
    std::uint64_t checked = 0;
    /// Smallest relative margin (lhs - rhs) / max(|lhs|, |rhs|) over
    /// floating-point comparisons; absent for exact claims.
    std::optional<double> min_slack;
    std::string min_slack_at;
    /// Comparisons whose relative margin fell inside the inconclusive band.
    std::uint64_t inconclusive = 0;
    std::map<std::string, std::string> details;

    friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

/// Relative margin below which a floating-point comparison is not trusted.
inline constexpr double kInconclusiveBand = 1e-9;

/// Declared exception sets, written as "(a,b)" or "(a,b,x)".
const std::set<std::string>& declared_exceptions(const std::string& claim);

/// p(a) p(b) > p(a+b) for a >= b >= 1, a + b <= n_max, in exact integers.
VerifyReport check_th1(std::uint64_t n_max);

/// P_a(x) P_b(x) > P_{a+b}(x) for all a, b >= 1 with a + b <= sum_max and x in xs,
/// in exact rationals. Cells run in parallel.
VerifyReport check_th4_grid(std::uint64_t sum_max, const std::vector<Rational>& xs);
VerifyReport check_th4_grid_serial(std::uint64_t sum_max, const std::vector<Rational>& xs);

/// p_k(a) p_k(b) > p_k(a+b) for a, b >= 1, a + b <= sum_max, k in ks (k >= 2),
/// where p_k(n) = P_n(k).
VerifyReport check_colored(std::uint64_t sum_max, const std::vector<std::uint64_t>& ks);

/// p(n) > 1 + ln(2n) for 1 <= n <= n_max.
VerifyReport check_le3(std::uint64_t n_max);

/// P_n(x) < P_{n+1}(x) and 2 <= P_n'(x) < P_{n+1}'(x) for 1 <= n < n_max.
VerifyReport check_th3_grid(std::uint64_t n_max, const std::vector<Rational>& xs);

/// A point x in (0, 1) with P_{n+1}(x) < P_n(x), found by halving from 1/2.
///
/// Needs n + 1 = 2^s with s > 1 (std::domain_error otherwise); throws
/// std::runtime_error when no such x exists down to 2^-40.
Rational find_descent_x(std::uint64_t n);

VerifyReport check_descent(const std::vector<std::uint64_t>& ns);

/// Lower and upper analytic bounds around p(n), with mu = pi sqrt(n), plus the
/// one-term main part of the convergent series and its remainder bound.
struct BoundTriple {
    std::uint64_t n = 0;
    double mu = 0;
    double lower = 0;
    double upper = 0;
    Integer exact;
    /// (mu cosh mu - sinh mu) / (4 pi n^(3/2)).
    double main_term = 0;
    /// 2^(5/2) sinh(mu/2) / (n mu).
    double remainder_bound = 0;
    /// |p(n) - main_term|, evaluated with 50 significant digits.
    double main_term_error = 0;
    bool sandwich_holds = false;
    bool remainder_holds = false;
    /// Relative margins of the three comparisons (lower, upper, remainder).
    double lower_slack = 0;
    double upper_slack = 0;
    double remainder_slack = 0;

    friend bool operator==(const BoundTriple&, const BoundTriple&) = default;
};

BoundTriple sandwich(std::uint64_t n);

/// The sandwich and remainder bound over n_lo <= n <= n_hi. The remainder
/// bound is only checked from n = 2.
VerifyReport check_ie7(std::uint64_t n_lo, std::uint64_t n_hi);

/// exp(pi sqrt(a) / 3) > (1 + ln 2a)(1 + a) 2 / (1 - 1/sqrt(a)) for a_lo <= a <= a_hi.
///
/// holds means every a >= 94 in range passes; details carry the first passing
/// a and the start of the final passing run.
VerifyReport check_ie11(std::uint64_t a_lo, std::uint64_t a_hi);

/// p(a+b-k) > (1 + ln 2a) p(b-k) for all 1 <= k < b <= a <= a_max. The
/// logarithm is rounded upward. Rows of a run in parallel.
VerifyReport check_ie8(std::uint64_t a_max);
VerifyReport check_ie8_serial(std::uint64_t a_max);

/// p(n)^2 >= p(n-1) p(n+1) for 2 <= n <= n_max; equality cells are listed in
/// details.
VerifyReport check_logconcave(std::uint64_t n_max);

/// Closed form of d/dn [sinh(pi sqrt n) / sqrt n].
double sinh_ratio_derivative(double n);

}  // namespace overpart
