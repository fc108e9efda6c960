#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace overpart {

/// Arbitrary-precision integer. Non-negative where the domain calls for a count.
using Integer = mpz_class;

/// Exact fraction kept in lowest terms with a positive denominator.
///
/// GMP re-canonicalizes after every arithmetic operation; values built from a
/// raw numerator/denominator pair must go through make_rational().
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

std::uint64_t sigma(std::uint64_t n);

/// Alternating divisor sum, sum over d | n of (-1)^(n/d) d.
std::int64_t tau_alt(std::uint64_t n);

/// 2^(m+1) sigma(l) for n = 2^m l with l odd.
std::uint64_t sigma_bar(std::uint64_t n);

/// Number of overpartitions of n.
///
/// Backed by a process-wide memo of the prefix 0..n built with the integer
/// recursion n p(n) = sum_k sigma_bar(k) p(n-k). The memo is mutex-guarded, so
/// calls are safe from any thread.
Integer pbar_exact(std::uint64_t n);

/// Copy of p(0..n).
std::vector<Integer> pbar_prefix(std::uint64_t n);

}  // namespace overpart
