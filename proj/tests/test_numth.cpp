#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "overpart/numth.hpp"

using namespace overpart;

namespace {

// Divisor sums by scanning every candidate divisor; independent of the
// square-root trial division in the library.
std::uint64_t sigma_scan(std::uint64_t n) {
    std::uint64_t s = 0;
    for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0)
            s += d;
    return s;
}

std::int64_t tau_scan(std::uint64_t n) {
    std::int64_t s = 0;
    for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0)
            s += ((n / d) % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(d);
    return s;
}

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

TEST_CASE("rationals are canonical") {
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
    CHECK(to_string(make_rational(0, 7)) == "0");
    CHECK(make_rational(0, 7).get_den() == 1);
    CHECK(to_string(parse_rational("10/4")) == "5/2");
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(parse_rational("7/1") == 7);
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
    for (const char* bad : {"", " 7", "1/0", "1//2", "abc", "1.5", "2/x", "/3"})
        CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
}

TEST_CASE("divisor sums on small inputs") {
    CHECK(sigma(1) == 1);
    CHECK(sigma(3) == 4);
    CHECK(sigma(6) == 12);
    CHECK(tau_alt(1) == -1);
    CHECK(tau_alt(3) == -4);
    CHECK(tau_alt(6) == -4);
    CHECK(sigma_bar(1) == 2);
    CHECK(sigma_bar(2) == 4);
    CHECK(sigma_bar(6) == 16);
    CHECK_THROWS_AS(sigma(0), std::domain_error);
    CHECK_THROWS_AS(tau_alt(0), std::domain_error);
    CHECK_THROWS_AS(sigma_bar(0), std::domain_error);
}

TEST_CASE("divisor sums agree with a full scan") {
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        CHECK(sigma(n) == sigma_scan(n));
        CHECK(tau_alt(n) == tau_scan(n));
    }
}

TEST_CASE("sigma minus tau is sigma_bar") {
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        const std::int64_t diff = static_cast<std::int64_t>(sigma(n)) - tau_alt(n);
        REQUIRE(diff == static_cast<std::int64_t>(sigma_bar(n)));
    }
}

TEST_CASE("sigma_bar(n) >= 2n with equality only at powers of two") {
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        REQUIRE(sigma_bar(n) >= 2 * n);
        REQUIRE((sigma_bar(n) == 2 * n) == is_power_of_two(n));
    }
    for (int s = 2; s <= 14; ++s) {
        const std::uint64_t n = (std::uint64_t{1} << s) - 1;
        CHECK(sigma_bar(n) >= 2 * n + 2);
    }
}

TEST_CASE("sigma(m) <= m (1 + ln m)") {
    for (std::uint64_t m = 1; m <= 1000; ++m) {
        const double md = static_cast<double>(m);
        const double rhs = md * (1.0 + std::log(md));
        CHECK(static_cast<double>(sigma(m)) <= rhs * (1.0 + 1e-9));
    }
}

TEST_CASE("overpartition counts") {
    const std::uint64_t known[] = {1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232};
    for (std::uint64_t n = 0; n < std::size(known); ++n)
        CHECK(pbar_exact(n) == known[n]);

    const auto prefix = pbar_prefix(500);
    REQUIRE(prefix.size() == 501);
    for (std::size_t n = 1; n < prefix.size(); ++n)
        CHECK(prefix[n] > prefix[n - 1]);
    CHECK(prefix[186] == Integer("2659213817204208"));
}
