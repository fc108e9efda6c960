#include "overpart/pbar.hpp"

#include <mutex>
#include <stdexcept>

namespace overpart {

namespace {

struct PolyMemo {
    std::mutex mutex;
    std::vector<Poly> values{Poly::constant(1)};

    void extend_to(std::uint64_t n) {
        values.reserve(n + 1);
        while (values.size() <= n) {
            const std::uint64_t m = values.size();
            Poly acc;
            for (std::uint64_t k = 1; k <= m; ++k)
                acc += values[m - k] * Rational(sigma_bar(k));
            acc *= Rational(1, m);
            values.push_back(acc.shifted_up(1));
        }
    }
};

PolyMemo& poly_memo() {
    static PolyMemo memo;
    return memo;
}

}  // namespace

Poly pbar_poly(std::uint64_t n) {
    auto& memo = poly_memo();
    std::lock_guard lock(memo.mutex);
    memo.extend_to(n);
    return memo.values[n];
}

std::vector<Poly> pbar_poly_prefix(std::uint64_t n) {
    auto& memo = poly_memo();
    std::lock_guard lock(memo.mutex);
    memo.extend_to(n);
    return {memo.values.begin(), memo.values.begin() + static_cast<std::ptrdiff_t>(n + 1)};
}

Poly pbar_derivative(std::uint64_t n) {
    if (n == 0)
        throw std::domain_error("pbar_derivative: n must be positive");
    auto prefix = pbar_poly_prefix(n);
    Poly acc;
    for (std::uint64_t k = 1; k <= n; ++k)
        acc += prefix[n - k] * make_rational(Integer(sigma_bar(k)), Integer(k));
    return acc;
}

Poly product_gap_poly(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0)
        throw std::domain_error("product_gap_poly: a and b must be positive");
    auto prefix = pbar_poly_prefix(a + b);
    return prefix[a] * prefix[b] - prefix[a + b];
}

SeriesTable series_expand(std::uint64_t order) {
    // A(q) = x * sum sigma_bar(n) q^n / n, so k a_k = sigma_bar(k) x.
    std::vector<Poly> weighted(order + 1);
    for (std::uint64_t k = 1; k <= order; ++k)
        weighted[k] = Poly::monomial(Rational(sigma_bar(k)), 1);

    SeriesTable table{order, {Poly::constant(1)}};
    table.coeff_polys.reserve(order + 1);
    for (std::uint64_t n = 1; n <= order; ++n) {
        Poly acc;
        for (std::uint64_t k = 1; k <= n; ++k)
            acc += weighted[k] * table.coeff_polys[n - k];
        acc *= Rational(1, n);
        table.coeff_polys.push_back(std::move(acc));
    }
    return table;
}

namespace {

// series <- series * factor, both truncated at q^n.
void multiply_truncated(std::vector<Integer>& series, const std::vector<Integer>& factor) {
    const std::size_t len = series.size();
    std::vector<Integer> out(len);
    for (std::size_t i = 0; i < len; ++i) {
        if (series[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < len; ++j)
            if (factor[j] != 0)
                out[i + j] += series[i] * factor[j];
    }
    series = std::move(out);
}

}  // namespace

Integer colored_count_via_product(std::uint64_t n, std::uint64_t k) {
    if (k == 0)
        throw std::domain_error("colored_count_via_product: k must be positive");
    const std::size_t len = n + 1;
    std::vector<Integer> series(len);
    series[0] = 1;
    for (std::uint64_t m = 1; m <= n; ++m) {
        // (1+q^m)^k: binomial coefficients at multiples of m.
        std::vector<Integer> plus(len);
        // 1/(1-q^m)^k: C(j+k-1, k-1) at q^{jm}.
        std::vector<Integer> minus(len);
        for (std::uint64_t j = 0; j * m <= n; ++j) {
            if (j <= k)
                mpz_bin_uiui(plus[j * m].get_mpz_t(), k, j);
            mpz_bin_uiui(minus[j * m].get_mpz_t(), j + k - 1, k - 1);
        }
        multiply_truncated(series, plus);
        multiply_truncated(series, minus);
    }
    return series[n];
}

}  // namespace overpart
