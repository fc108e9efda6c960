#include "overpart/numth.hpp"

#include <bit>
#include <mutex>
#include <stdexcept>
#include <string>

namespace overpart {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool parse_integer(std::string_view text, Integer& out) {
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size())
        return false;
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            return false;
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    Integer num, den = 1;
    auto slash = text.find('/');
    std::string_view num_text = text.substr(0, slash);
    bool ok = parse_integer(num_text, num);
    if (ok && slash != std::string_view::npos) {
        std::string_view den_text = text.substr(slash + 1);
        ok = !den_text.empty() && den_text[0] != '-' && den_text[0] != '+' &&
             parse_integer(den_text, den);
    }
    if (!ok)
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    return make_rational(num, den);
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::uint64_t sigma(std::uint64_t n) {
    if (n == 0)
        throw std::domain_error("sigma: n must be positive");
    std::uint64_t total = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        total += d;
        if (d != n / d)
            total += n / d;
    }
    return total;
}

std::int64_t tau_alt(std::uint64_t n) {
    if (n == 0)
        throw std::domain_error("tau_alt: n must be positive");
    std::int64_t total = 0;
    auto term = [n](std::uint64_t d) {
        auto value = static_cast<std::int64_t>(d);
        return ((n / d) % 2 == 0) ? value : -value;
    };
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        total += term(d);
        if (d != n / d)
            total += term(n / d);
    }
    return total;
}

std::uint64_t sigma_bar(std::uint64_t n) {
    if (n == 0)
        throw std::domain_error("sigma_bar: n must be positive");
    int m = std::countr_zero(n);
    std::uint64_t odd = n >> m;
    return (std::uint64_t{2} << m) * sigma(odd);
}

namespace {

struct PbarMemo {
    std::mutex mutex;
    std::vector<Integer> values{Integer(1)};

    void extend_to(std::uint64_t n) {
        values.reserve(n + 1);
        while (values.size() <= n) {
            const std::uint64_t m = values.size();
            Integer acc = 0;
            for (std::uint64_t k = 1; k <= m; ++k)
                acc += values[m - k] * sigma_bar(k);
            Integer quotient, remainder;
            mpz_fdiv_qr_ui(quotient.get_mpz_t(), remainder.get_mpz_t(), acc.get_mpz_t(), m);
            if (remainder != 0)
                throw std::logic_error("pbar recursion: inexact division at n=" +
                                       std::to_string(m));
            values.push_back(std::move(quotient));
        }
    }
};

PbarMemo& pbar_memo() {
    static PbarMemo memo;
    return memo;
}

}  // namespace

Integer pbar_exact(std::uint64_t n) {
    auto& memo = pbar_memo();
    std::lock_guard lock(memo.mutex);
    memo.extend_to(n);
    return memo.values[n];
}

std::vector<Integer> pbar_prefix(std::uint64_t n) {
    auto& memo = pbar_memo();
    std::lock_guard lock(memo.mutex);
    memo.extend_to(n);
    return {memo.values.begin(), memo.values.begin() + static_cast<std::ptrdiff_t>(n + 1)};
}

}  // namespace overpart
