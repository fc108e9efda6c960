#include <doctest.h>

#include "overpart/pbar.hpp"
#include "overpart/roots.hpp"

using namespace overpart;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

const Rational kWidth = q(1, 10000);

Poly from_roots(const std::vector<Rational>& roots) {
    Poly p{1};
    for (const auto& r : roots)
        p = p * Poly{-r, 1};
    return p;
}

}  // namespace

TEST_CASE("sign variations and Descartes counts") {
    CHECK(sign_variations({q(1), q(0), q(-2), q(3), q(0), q(5)}) == 2);
    CHECK(sign_variations({}) == 0);
    const Poly p = from_roots({q(1, 3), q(1, 2), q(2)});
    CHECK(descartes_bound(p, 0, 1) == 2);
    CHECK(descartes_bound(p, 1, 3) == 1);
    CHECK(descartes_bound(p, 3, 10) == 0);
    CHECK(cauchy_bound(p) > 2);
}

TEST_CASE("isolation on the small gap polynomials") {
    const RootBracket r11 = isolate_max_root(Poly{0, -2, 2}, kWidth);
    CHECK(r11.lo <= 1);
    CHECK(r11.hi >= 1);
    const RootBracket r12 = isolate_max_root(Poly{0, q(-8, 3), 0, q(8, 3)}, kWidth);
    CHECK(r12.lo <= 1);
    CHECK(r12.hi >= 1);
    const RootRecord r22 = root_record(2, 2, kWidth);
    CHECK(r22.rounded == "0.84");
    CHECK(r22.sign_lo < 0);
    CHECK(r22.sign_hi > 0);
}

TEST_CASE("isolation recovers planted roots") {
    const std::vector<std::vector<Rational>> cases{
        {q(1, 3), q(1, 2), q(2)},
        {q(-5), q(7, 10)},
        {q(0), q(0), q(3, 7), q(3, 7)},
        {q(-1), q(-2)},
        {q(0)},
        {q(99, 100), q(1)},
    };
    for (const auto& roots : cases) {
        const Poly p = from_roots(roots);
        Rational top = -1;
        for (const auto& r : roots)
            if (r >= 0 && r > top)
                top = r;
        const RootBracket b = isolate_max_root(p, kWidth);
        CHECK(b.hi - b.lo <= kWidth);
        if (top < 0) {
            CHECK_FALSE(b.has_root);
            CHECK(b.lo == 0);
            CHECK(b.hi == 0);
        } else {
            CHECK(b.has_root);
            CHECK(b.lo <= top);
            CHECK(top <= b.hi);
            if (b.exact)
                CHECK(b.lo == top);
        }
        CHECK_FALSE(b.certificate.empty());
    }
}

TEST_CASE("isolation preconditions") {
    CHECK_THROWS_AS(isolate_max_root(Poly{3}, kWidth), std::domain_error);
    CHECK_THROWS_AS(isolate_max_root(Poly{0, -1}, kWidth), std::domain_error);
    CHECK_THROWS_AS(isolate_max_root(Poly{0, 1}, 0), std::domain_error);
}

TEST_CASE("rounding is half away from zero") {
    CHECK(round_decimal(q(1), 2) == "1.00");
    CHECK(round_decimal(q(5, 1000), 2) == "0.01");
    CHECK(round_decimal(q(-5, 1000), 2) == "-0.01");
    CHECK(round_decimal(q(4999, 1000000), 2) == "0.00");
    CHECK(round_decimal(q(-1, 1000), 2) == "0.00");
    CHECK(round_decimal(q(1234, 100), 0) == "12");
    CHECK(round_decimal(q(835, 1000), 2) == "0.84");
}

TEST_CASE("table records are sound") {
    const auto table = roots_table(10, 10, kWidth);
    REQUIRE(table.size() == 100);
    for (const auto& rec : table) {
        CAPTURE(rec.a);
        CAPTURE(rec.b);
        const Poly gap = product_gap_poly(rec.a, rec.b);
        CHECK(rec.has_root);
        CHECK(rec.bracket_hi - rec.bracket_lo <= kWidth);
        CHECK(sign_at(gap, rec.bracket_lo) == rec.sign_lo);
        CHECK(sign_at(gap, rec.bracket_hi) == rec.sign_hi);
        if (rec.bracket_lo != rec.bracket_hi) {
            CHECK(rec.sign_lo < 0);
            CHECK(rec.sign_hi > 0);
        }
        if (rec.certificate == "shift")
            CHECK(sign_variations(taylor_shift(gap, rec.bracket_hi).coeffs()) == 0);
        else
            CHECK(rec.certificate.rfind("cover:", 0) == 0);
        const auto& mirror = table[(rec.b - 1) * 10 + (rec.a - 1)];
        CHECK(mirror.rounded == rec.rounded);
    }
    CHECK(table[0].rounded == "1.00");
    CHECK(table[1].rounded == "1.00");
    CHECK(table[10].rounded == "1.00");
    CHECK(table[11].rounded == "0.84");
    CHECK(table[22].rounded == "0.57");
    CHECK(table[99].rounded == "0.30");
}

TEST_CASE("gap polynomials are positive past the rounded root") {
    const std::vector<Rational> grid{q(1, 4), q(1, 2), q(3, 4), q(1), q(3, 2), q(2), q(3)};
    for (const auto& rec : roots_table(10, 10, kWidth)) {
        const Rational cut = parse_rational(rec.rounded.substr(0, rec.rounded.find('.')) +
                                            rec.rounded.substr(rec.rounded.find('.') + 1) + "/100") +
                             q(1, 100);
        const Poly gap = product_gap_poly(rec.a, rec.b);
        for (const auto& x : grid)
            if (x > cut)
                CHECK(sign_at(gap, x) > 0);
    }
}
