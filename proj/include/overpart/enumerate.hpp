#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace overpart {

/// One part of a (k-colored) overpartition. Uncolored parts use color 1.
struct Part {
    int size = 1;
    int color = 1;
    bool overlined = false;

    friend bool operator==(const Part&, const Part&) = default;
    friend auto operator<=>(const Part&, const Part&) = default;
};

/// True when lhs sorts before rhs in canonical order: size descending, then
/// color descending, then the plain copy before the overlined one.
bool canonical_before(const Part& lhs, const Part& rhs);

/// A k-colored overpartition kept in canonical order.
struct Overpartition {
    std::vector<Part> parts;
    int colors = 1;

    int weight() const;
    bool empty() const { return parts.empty(); }

    friend bool operator==(const Overpartition&, const Overpartition&) = default;
    friend auto operator<=>(const Overpartition&, const Overpartition&) = default;
};

/// Forbidden (size, color) pairs. A ban applies to plain copies only; the
/// overlined copy of a banned pair is always allowed.
struct Constraint {
    std::set<std::pair<int, int>> forbidden;

    static Constraint none() { return {}; }
    /// Bans plain parts of the given size in color 1..colors.
    static Constraint no_plain_size(int size, int colors = 1);
    static Constraint no_plain(std::initializer_list<std::pair<int, int>> pairs);

    bool allows(const Part& part) const;
    bool allows(const Overpartition& op) const;
    std::string to_string() const;

    friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// Largest weight that may be enumerated for each color count.
struct EnumerationCaps {
    int max_weight_k1 = 25;
    int max_weight_k2 = 12;
    int max_weight_k3 = 8;
    int max_weight_higher = 6;

    int limit_for(int colors) const;
};

/// Raised when a request exceeds the configured enumeration caps.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sorts parts into canonical order and validates them.
///
/// Throws std::invalid_argument when a (size, color) pair carries more than
/// one overline, a size is non-positive, or a color is outside 1..colors.
Overpartition canonicalize(std::vector<Part> parts, int colors);

/// True when parts are already canonical and valid.
bool is_canonical(const Overpartition& op);

/// Calls visit on every k-colored overpartition of n allowed by constraint.
///
/// Parts are generated in canonical order without a sort pass, and the
/// sequence is deterministic. Throws ResourceError past the caps.
void for_each_ops(int n, int colors, const Constraint& constraint,
                  const std::function<void(const Overpartition&)>& visit,
                  const EnumerationCaps& caps = {});

std::vector<Overpartition> enumerate_ops(int n, int colors, const Constraint& constraint,
                                         const EnumerationCaps& caps = {});

std::uint64_t count_ops(int n, int colors, const Constraint& constraint,
                        const EnumerationCaps& caps = {});

/// Plain text form such as "(4_3, 4_2, 4'_2)" or "(3, 1')" for k = 1; an
/// apostrophe marks the overline.
std::string to_string(const Overpartition& op);

}  // namespace overpart
