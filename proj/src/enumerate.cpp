#include "overpart/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace overpart {

bool canonical_before(const Part& lhs, const Part& rhs) {
    if (lhs.size != rhs.size)
        return lhs.size > rhs.size;
    if (lhs.color != rhs.color)
        return lhs.color > rhs.color;
    return !lhs.overlined && rhs.overlined;
}

int Overpartition::weight() const {
    return std::accumulate(parts.begin(), parts.end(), 0,
                           [](int acc, const Part& p) { return acc + p.size; });
}

Constraint Constraint::no_plain_size(int size, int colors) {
    Constraint c;
    for (int color = 1; color <= colors; ++color)
        c.forbidden.emplace(size, color);
    return c;
}

Constraint Constraint::no_plain(std::initializer_list<std::pair<int, int>> pairs) {
    Constraint c;
    c.forbidden.insert(pairs.begin(), pairs.end());
    return c;
}

bool Constraint::allows(const Part& part) const {
    return part.overlined || !forbidden.contains({part.size, part.color});
}

bool Constraint::allows(const Overpartition& op) const {
    return std::all_of(op.parts.begin(), op.parts.end(),
                       [this](const Part& p) { return allows(p); });
}

std::string Constraint::to_string() const {
    if (forbidden.empty())
        return "none";
    std::string out;
    for (const auto& [size, color] : forbidden) {
        if (!out.empty())
            out += ",";
        out += std::to_string(size) + ":" + std::to_string(color);
    }
    return "no plain " + out;
}

int EnumerationCaps::limit_for(int colors) const {
    switch (colors) {
    case 1: return max_weight_k1;
    case 2: return max_weight_k2;
    case 3: return max_weight_k3;
    default: return max_weight_higher;
    }
}

namespace {

void check_parts(const std::vector<Part>& parts, int colors) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const Part& p = parts[i];
        if (p.size < 1)
            throw std::invalid_argument("part size must be positive");
        if (p.color < 1 || p.color > colors)
            throw std::invalid_argument("part color " + std::to_string(p.color) +
                                        " outside 1.." + std::to_string(colors));
        if (i > 0 && parts[i - 1] == p && p.overlined)
            throw std::invalid_argument("two overlined parts of size " +
                                        std::to_string(p.size) + " color " +
                                        std::to_string(p.color));
    }
}

}  // namespace

Overpartition canonicalize(std::vector<Part> parts, int colors) {
    if (colors < 1)
        throw std::invalid_argument("colors must be positive");
    std::sort(parts.begin(), parts.end(), canonical_before);
    check_parts(parts, colors);
    return {std::move(parts), colors};
}

bool is_canonical(const Overpartition& op) {
    if (!std::is_sorted(op.parts.begin(), op.parts.end(), canonical_before))
        return false;
    try {
        check_parts(op.parts, op.colors);
    } catch (const std::invalid_argument&) {
        return false;
    }
    return true;
}

namespace {

struct Generator {
    int colors;
    const Constraint& constraint;
    const std::function<void(const Overpartition&)>& visit;
    Overpartition current;

    // Slots run over (size, color) pairs in canonical order: size from high to
    // low, color from high to low within a size.
    void descend(int remaining, int size, int color) {
        if (remaining == 0) {
            visit(current);
            return;
        }
        if (size == 0)
            return;
        int next_size = size, next_color = color - 1;
        if (next_color == 0) {
            next_size = size - 1;
            next_color = colors;
        }
        if (size > remaining) {
            descend(remaining, remaining, colors);
            return;
        }
        const bool plain_ok = !constraint.forbidden.contains({size, color});
        const int max_plain = plain_ok ? remaining / size : 0;
        const std::size_t mark = current.parts.size();
        for (int plain = 0; plain <= max_plain; ++plain) {
            const int left = remaining - plain * size;
            descend(left, next_size, next_color);
            if (left >= size) {
                current.parts.push_back({size, color, true});
                descend(left - size, next_size, next_color);
                current.parts.pop_back();
            }
            current.parts.push_back({size, color, false});
        }
        current.parts.resize(mark);
    }
};

}  // namespace

void for_each_ops(int n, int colors, const Constraint& constraint,
                  const std::function<void(const Overpartition&)>& visit,
                  const EnumerationCaps& caps) {
    if (n < 0)
        throw std::invalid_argument("weight must be non-negative");
    if (colors < 1)
        throw std::invalid_argument("colors must be positive");
    const int limit = caps.limit_for(colors);
    if (n > limit)
        throw ResourceError("enumeration cap exceeded: weight " + std::to_string(n) +
                            " with " + std::to_string(colors) + " colors (cap " +
                            std::to_string(limit) + ")");
    Generator gen{colors, constraint, visit, Overpartition{{}, colors}};
    gen.descend(n, n, colors);
}

std::vector<Overpartition> enumerate_ops(int n, int colors, const Constraint& constraint,
                                         const EnumerationCaps& caps) {
    std::vector<Overpartition> out;
    for_each_ops(n, colors, constraint, [&out](const Overpartition& op) { out.push_back(op); },
                 caps);
    return out;
}

std::uint64_t count_ops(int n, int colors, const Constraint& constraint,
                        const EnumerationCaps& caps) {
    std::uint64_t count = 0;
    for_each_ops(n, colors, constraint, [&count](const Overpartition&) { ++count; }, caps);
    return count;
}

std::string to_string(const Overpartition& op) {
    std::string out = "(";
    for (std::size_t i = 0; i < op.parts.size(); ++i) {
        const Part& p = op.parts[i];
        if (i > 0)
            out += ", ";
        out += std::to_string(p.size);
        if (p.overlined)
            out += "'";
        if (op.colors > 1)
            out += "_" + std::to_string(p.color);
    }
    return out + ")";
}

}  // namespace overpart
