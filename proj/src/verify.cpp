#include "overpart/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "overpart/parallel.hpp"
#include "overpart/pbar.hpp"

namespace overpart {

namespace {

using Wide = boost::multiprecision::cpp_bin_float_50;

std::string cell(std::uint64_t a, std::uint64_t b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::string cell(std::uint64_t a, std::uint64_t b, const Rational& x) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + to_string(x) + ")";
}

double relative_margin(double lhs, double rhs) {
    const double scale = std::max({std::abs(lhs), std::abs(rhs), std::numeric_limits<double>::min()});
    return (lhs - rhs) / scale;
}

// Partial result of one independent slice of a check; slices merge in order.
struct Partial {
    std::uint64_t checked = 0;
    std::vector<std::string> exceptions;
    std::optional<std::string> counterexample;
    std::optional<double> min_slack;
    std::string min_slack_at;
    std::uint64_t inconclusive = 0;

    // Records a strict floating-point comparison lhs > rhs.
    void compare(double lhs, double rhs, const std::string& where) {
        ++checked;
        const double margin = relative_margin(lhs, rhs);
        if (!min_slack || margin < *min_slack) {
            min_slack = margin;
            min_slack_at = where;
        }
        if (std::abs(margin) <= kInconclusiveBand)
            ++inconclusive;
        else if (margin < 0 && !counterexample)
            counterexample = where;
    }

    void merge(const Partial& other) {
        checked += other.checked;
        exceptions.insert(exceptions.end(), other.exceptions.begin(), other.exceptions.end());
        if (!counterexample && other.counterexample)
            counterexample = other.counterexample;
        if (other.min_slack && (!min_slack || *other.min_slack < *min_slack)) {
            min_slack = other.min_slack;
            min_slack_at = other.min_slack_at;
        }
        inconclusive += other.inconclusive;
    }
};

Partial run_slices(std::size_t count, const std::function<Partial(std::size_t)>& slice,
                   bool parallel) {
    std::vector<Partial> parts(count);
    if (parallel)
        parallel_for(count, [&](std::size_t i) { parts[i] = slice(i); });
    else
        for (std::size_t i = 0; i < count; ++i)
            parts[i] = slice(i);
    Partial total;
    for (const auto& p : parts)
        total.merge(p);
    return total;
}

VerifyReport finish(std::string claim, std::string range, Partial partial,
                    const std::set<std::string>& expected) {
    VerifyReport report;
    report.claim = std::move(claim);
    report.range = std::move(range);
    report.checked = partial.checked;
    report.exceptions = std::move(partial.exceptions);
    report.counterexample = std::move(partial.counterexample);
    report.min_slack = partial.min_slack;
    report.min_slack_at = std::move(partial.min_slack_at);
    report.inconclusive = partial.inconclusive;
    const std::set<std::string> found(report.exceptions.begin(), report.exceptions.end());
    report.holds = !report.counterexample && report.inconclusive == 0 && found == expected;
    if (found != expected && !report.counterexample)
        report.details["exception_mismatch"] = "found set differs from declared set";
    return report;
}

double to_double(const Integer& v) { return v.get_d(); }

}  // namespace

const std::set<std::string>& declared_exceptions(const std::string& claim) {
    static const std::map<std::string, std::set<std::string>> table{
        {"th1", {"(1,1)", "(2,1)"}},
        {"th4", {"(1,1,1)", "(2,1,1)", "(1,2,1)"}},
    };
    static const std::set<std::string> empty;
    auto it = table.find(claim);
    return it == table.end() ? empty : it->second;
}

VerifyReport check_th1(std::uint64_t n_max) {
    const auto p = pbar_prefix(n_max);
    Partial partial;
    std::set<std::string> expected;
    for (std::uint64_t sum = 2; sum <= n_max; ++sum) {
        for (std::uint64_t b = 1; 2 * b <= sum; ++b) {
            const std::uint64_t a = sum - b;
            ++partial.checked;
            const Integer product = p[a] * p[b];
            const int order = cmp(product, p[sum]);
            const std::string where = cell(a, b);
            if (declared_exceptions("th1").contains(where))
                expected.insert(where);
            if (order == 0)
                partial.exceptions.push_back(where);
            else if (order < 0 && !partial.counterexample)
                partial.counterexample = where;
        }
    }
    return finish("th1", "a>=b>=1, a+b<=" + std::to_string(n_max), std::move(partial), expected);
}

namespace {

VerifyReport th4_impl(std::uint64_t sum_max, const std::vector<Rational>& xs, bool parallel) {
    if (xs.empty())
        throw std::invalid_argument("check_th4_grid: no grid points");
    for (const auto& x : xs)
        if (x < 1)
            throw std::invalid_argument("check_th4_grid: grid points must be >= 1");
    const auto polys = pbar_poly_prefix(sum_max);
    std::vector<std::vector<Rational>> values(xs.size());
    for (std::size_t xi = 0; xi < xs.size(); ++xi)
        for (const auto& poly : polys)
            values[xi].push_back(eval_rat(poly, xs[xi]));

    std::set<std::string> expected;
    for (const auto& x : xs)
        for (std::uint64_t sum = 2; sum <= sum_max; ++sum)
            for (std::uint64_t a = 1; a < sum; ++a)
                if (declared_exceptions("th4").contains(cell(a, sum - a, x)))
                    expected.insert(cell(a, sum - a, x));

    // One slice per (x, a) row.
    const std::size_t rows_per_x = sum_max >= 2 ? sum_max - 1 : 0;
    auto slice = [&](std::size_t idx) {
        Partial part;
        const std::size_t xi = idx / rows_per_x;
        const std::uint64_t a = idx % rows_per_x + 1;
        const auto& v = values[xi];
        for (std::uint64_t b = 1; a + b <= sum_max; ++b) {
            ++part.checked;
            const int c = cmp(v[a] * v[b], v[a + b]);
            if (c > 0)
                continue;
            const std::string where = cell(a, b, xs[xi]);
            if (c == 0)
                part.exceptions.push_back(where);
            else if (!part.counterexample)
                part.counterexample = where;
        }
        return part;
    };
    Partial total = run_slices(xs.size() * rows_per_x, slice, parallel);

    std::string grid;
    for (const auto& x : xs)
        grid += (grid.empty() ? "" : ",") + to_string(x);
    return finish("th4", "a,b>=1, a+b<=" + std::to_string(sum_max) + ", x in {" + grid + "}",
                  std::move(total), expected);
}

}  // namespace

VerifyReport check_th4_grid(std::uint64_t sum_max, const std::vector<Rational>& xs) {
    return th4_impl(sum_max, xs, true);
}

VerifyReport check_th4_grid_serial(std::uint64_t sum_max, const std::vector<Rational>& xs) {
    return th4_impl(sum_max, xs, false);
}

VerifyReport check_colored(std::uint64_t sum_max, const std::vector<std::uint64_t>& ks) {
    const auto polys = pbar_poly_prefix(sum_max);
    Partial partial;
    std::string kset;
    for (auto k : ks) {
        if (k < 2)
            throw std::invalid_argument("check_colored: k must be >= 2");
        kset += (kset.empty() ? "" : ",") + std::to_string(k);
        std::vector<Rational> v;
        for (const auto& poly : polys)
            v.push_back(eval_rat(poly, Rational(k)));
        for (std::uint64_t sum = 2; sum <= sum_max; ++sum) {
            for (std::uint64_t a = 1; a < sum; ++a) {
                const std::uint64_t b = sum - a;
                ++partial.checked;
                const std::string where =
                    "(" + std::to_string(a) + "," + std::to_string(b) + ",k=" + std::to_string(k) + ")";
                if (v[a].get_den() != 1 || v[b].get_den() != 1 || v[sum].get_den() != 1) {
                    if (!partial.counterexample)
                        partial.counterexample = where + " non-integer count";
                    continue;
                }
                if (cmp(v[a] * v[b], v[sum]) <= 0 && !partial.counterexample)
                    partial.counterexample = where;
            }
        }
    }
    return finish("th5", "a,b>=1, a+b<=" + std::to_string(sum_max) + ", k in {" + kset + "}",
                  std::move(partial), {});
}

VerifyReport check_le3(std::uint64_t n_max) {
    const auto p = pbar_prefix(n_max);
    Partial partial;
    for (std::uint64_t n = 1; n <= n_max; ++n)
        partial.compare(to_double(p[n]), 1.0 + std::log(2.0 * static_cast<double>(n)),
                        "n=" + std::to_string(n));
    return finish("le3", "1<=n<=" + std::to_string(n_max), std::move(partial), {});
}

VerifyReport check_th3_grid(std::uint64_t n_max, const std::vector<Rational>& xs) {
    for (const auto& x : xs)
        if (x < 1)
            throw std::invalid_argument("check_th3_grid: grid points must be >= 1");
    const auto polys = pbar_poly_prefix(n_max);
    std::vector<Poly> derivs(n_max + 1);
    for (std::uint64_t n = 1; n <= n_max; ++n)
        derivs[n] = pbar_derivative(n);

    Partial partial;
    for (const auto& x : xs) {
        for (std::uint64_t n = 1; n < n_max; ++n) {
            ++partial.checked;
            const Rational d_n = eval_rat(derivs[n], x);
            const bool ok = eval_rat(polys[n], x) < eval_rat(polys[n + 1], x) && d_n >= 2 &&
                            d_n < eval_rat(derivs[n + 1], x);
            if (!ok && !partial.counterexample)
                partial.counterexample = "(n=" + std::to_string(n) + ",x=" + to_string(x) + ")";
        }
    }
    std::string grid;
    for (const auto& x : xs)
        grid += (grid.empty() ? "" : ",") + to_string(x);
    return finish("th3", "1<=n<" + std::to_string(n_max) + ", x in {" + grid + "}",
                  std::move(partial), {});
}

Rational find_descent_x(std::uint64_t n) {
    if (n < 3 || ((n + 1) & n) != 0)
        throw std::domain_error("find_descent_x: n+1 must be 2^s with s > 1, got n=" +
                                std::to_string(n));
    const Poly delta = pbar_poly(n + 1) - pbar_poly(n);
    Rational x(1, 2);
    for (int halvings = 1; halvings <= 40; ++halvings) {
        if (sign_at(delta, x) < 0)
            return x;
        x /= 2;
    }
    throw std::runtime_error("find_descent_x: no descent point down to 2^-40 for n=" +
                             std::to_string(n));
}

VerifyReport check_descent(const std::vector<std::uint64_t>& ns) {
    Partial partial;
    VerifyReport report;
    std::string list;
    for (auto n : ns) {
        list += (list.empty() ? "" : ",") + std::to_string(n);
        ++partial.checked;
        try {
            const Rational x = find_descent_x(n);
            const Rational gap = eval_rat(pbar_poly(n + 1) - pbar_poly(n), x);
            report.details["n=" + std::to_string(n)] =
                "x=" + to_string(x) + " delta=" + to_string(gap);
        } catch (const std::exception& e) {
            if (!partial.counterexample)
                partial.counterexample = "n=" + std::to_string(n) + ": " + e.what();
        }
    }
    auto details = std::move(report.details);
    report = finish("descent", "n in {" + list + "}", std::move(partial), {});
    report.details.merge(details);
    return report;
}

double sinh_ratio_derivative(double n) {
    const double mu = std::numbers::pi * std::sqrt(n);
    return (mu * std::cosh(mu) - std::sinh(mu)) / (2.0 * std::pow(n, 1.5));
}

BoundTriple sandwich(std::uint64_t n) {
    if (n == 0)
        throw std::domain_error("sandwich: n must be positive");
    BoundTriple t;
    t.n = n;
    const double nd = static_cast<double>(n);
    t.mu = std::numbers::pi * std::sqrt(nd);
    const double prefactor = std::exp(t.mu) / (8.0 * nd);
    t.lower = prefactor * (1.0 - 1.0 / std::sqrt(nd));
    t.upper = prefactor * (1.0 + 1.0 / nd);
    t.exact = pbar_exact(n);
    const double exact = to_double(t.exact);
    t.lower_slack = relative_margin(exact, t.lower);
    t.upper_slack = relative_margin(t.upper, exact);
    t.sandwich_holds = t.lower_slack > kInconclusiveBand && t.upper_slack > kInconclusiveBand;

    // The main term nearly cancels p(n), so its error is formed in 50 digits.
    const Wide pi = boost::math::constants::pi<Wide>();
    const Wide wn(n);
    const Wide mu = pi * sqrt(wn);
    const Wide main = (mu * cosh(mu) - sinh(mu)) / (4 * pi * wn * sqrt(wn));
    const Wide bound = pow(Wide(2), Wide(2.5)) * sinh(mu / 2) / (wn * mu);
    const Wide error = abs(Wide(t.exact.get_str()) - main);
    t.main_term = main.convert_to<double>();
    t.remainder_bound = bound.convert_to<double>();
    t.main_term_error = error.convert_to<double>();
    t.remainder_slack = ((bound - error) / bound).convert_to<double>();
    t.remainder_holds = t.remainder_slack > kInconclusiveBand;
    return t;
}

VerifyReport check_ie7(std::uint64_t n_lo, std::uint64_t n_hi) {
    if (n_lo == 0)
        throw std::invalid_argument("check_ie7: n must be positive");
    const std::size_t count = n_hi >= n_lo ? n_hi - n_lo + 1 : 0;
    pbar_prefix(n_hi);
    auto slice = [&](std::size_t idx) {
        Partial part;
        const std::uint64_t n = n_lo + idx;
        const BoundTriple t = sandwich(n);
        const double exact = to_double(t.exact);
        const std::string at = "n=" + std::to_string(n);
        part.compare(exact, t.lower, at + " lower");
        part.compare(t.upper, exact, at + " upper");
        if (n >= 2) {
            // Margin already relative to the bound, and formed in 50 digits.
            ++part.checked;
            if (!part.min_slack || t.remainder_slack < *part.min_slack) {
                part.min_slack = t.remainder_slack;
                part.min_slack_at = at + " remainder";
            }
            if (std::abs(t.remainder_slack) <= kInconclusiveBand)
                ++part.inconclusive;
            else if (t.remainder_slack < 0 && !part.counterexample)
                part.counterexample = at + " remainder";
        }
        return part;
    };
    return finish("ie7", std::to_string(n_lo) + "<=n<=" + std::to_string(n_hi),
                  run_slices(count, slice, true), {});
}

VerifyReport check_ie11(std::uint64_t a_lo, std::uint64_t a_hi) {
    if (a_lo < 2)
        throw std::invalid_argument("check_ie11: a must be >= 2");
    constexpr std::uint64_t kClaimFrom = 94;
    Partial claim;
    // 0 marks "none yet"; every a here is at least 2.
    std::uint64_t first_pass = 0, run_start = 0;
    std::uint64_t fails_below = 0;
    for (std::uint64_t a = a_lo; a <= a_hi; ++a) {
        const double ad = static_cast<double>(a);
        const double lhs = std::exp(std::numbers::pi * std::sqrt(ad) / 3.0);
        const double rhs = (1.0 + std::log(2.0 * ad)) * (1.0 + ad) * 2.0 / (1.0 - 1.0 / std::sqrt(ad));
        const double margin = relative_margin(lhs, rhs);
        const bool pass = margin > kInconclusiveBand;
        if (pass && first_pass == 0)
            first_pass = a;
        if (pass && run_start == 0)
            run_start = a;
        if (!pass)
            run_start = 0;
        if (a >= kClaimFrom)
            claim.compare(lhs, rhs, "a=" + std::to_string(a));
        else if (!pass)
            ++fails_below;
    }
    VerifyReport report = finish("ie11", std::to_string(a_lo) + "<=a<=" + std::to_string(a_hi),
                                 std::move(claim), {});
    report.details["first_pass"] = first_pass ? std::to_string(first_pass) : "none";
    report.details["holds_from"] = run_start ? std::to_string(run_start) : "none";
    report.details["fails_below_94"] = std::to_string(fails_below);
    return report;
}

namespace {

VerifyReport ie8_impl(std::uint64_t a_max, bool parallel) {
    const auto p = pbar_prefix(2 * a_max);
    std::vector<double> pd(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        pd[i] = to_double(p[i]);

    // Row a covers every (b, k) with 1 <= k < b <= a.
    auto slice = [&](std::size_t idx) {
        Partial part;
        const std::uint64_t a = idx + 1;
        const double ad = static_cast<double>(a);
        const double inf = std::numeric_limits<double>::infinity();
        const double factor = std::nextafter(std::nextafter(1.0 + std::log(2.0 * ad), inf), inf);
        for (std::uint64_t b = 2; b <= a; ++b)
            for (std::uint64_t k = 1; k < b; ++k)
                part.compare(pd[a + b - k], factor * pd[b - k],
                             "(a=" + std::to_string(a) + ",b=" + std::to_string(b) +
                                 ",k=" + std::to_string(k) + ")");
        return part;
    };
    return finish("ie8", "1<=k<b<=a<=" + std::to_string(a_max),
                  run_slices(a_max, slice, parallel), {});
}

}  // namespace

VerifyReport check_ie8(std::uint64_t a_max) { return ie8_impl(a_max, true); }

VerifyReport check_ie8_serial(std::uint64_t a_max) { return ie8_impl(a_max, false); }

VerifyReport check_logconcave(std::uint64_t n_max) {
    const auto p = pbar_prefix(n_max + 1);
    Partial partial;
    std::string equalities;
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        ++partial.checked;
        const int c = cmp(p[n] * p[n], p[n - 1] * p[n + 1]);
        if (c == 0)
            equalities += (equalities.empty() ? "" : ",") + std::to_string(n);
        else if (c < 0 && !partial.counterexample)
            partial.counterexample = "n=" + std::to_string(n);
    }
    VerifyReport report = finish("logconcave", "2<=n<=" + std::to_string(n_max),
                                 std::move(partial), {});
    report.details["equality_at"] = equalities.empty() ? "none" : equalities;
    return report;
}

}  // namespace overpart
