#pragma once

#include <cstdint>
#include <vector>

#include "overpart/numth.hpp"
#include "overpart/poly.hpp"

namespace overpart {

/// The overpartition polynomial of index n, from
/// P_0 = 1, P_n(x) = (x/n) sum_{k=1..n} sigma_bar(k) P_{n-k}(x).
///
/// P_n(k) counts k-colored overpartitions of n. The prefix 0..n is memoized
/// behind a mutex; the returned value is a copy.
Poly pbar_poly(std::uint64_t n);

/// Copy of P_0..P_n.
std::vector<Poly> pbar_poly_prefix(std::uint64_t n);

/// sum_{k=1..n} (sigma_bar(k)/k) P_{n-k}(x), which must agree with the formal
/// derivative of pbar_poly(n).
Poly pbar_derivative(std::uint64_t n);

/// P_a P_b - P_{a+b}.
Poly product_gap_poly(std::uint64_t a, std::uint64_t b);

/// Truncated q-series whose coefficients are polynomials in x.
struct SeriesTable {
    std::uint64_t order = 0;
    std::vector<Poly> coeff_polys;  // index 0..order
};

/// exp(x * sum_{n<=N} sigma_bar(n) q^n / n), truncated at q^N.
///
/// Uses n c_n = sum_k (k a_k) c_{n-k} for exp of a series A with A(0) = 0.
SeriesTable series_expand(std::uint64_t order);

/// Coefficient of q^n in prod_{m=1..n} ((1+q^m)/(1-q^m))^k, expanded as an
/// integer series.
Integer colored_count_via_product(std::uint64_t n, std::uint64_t k);

}  // namespace overpart
