#include "overpart/biject.hpp"

#include <array>
#include <map>
#include <set>
#include <stdexcept>

#include "overpart/parallel.hpp"

namespace overpart {

std::string to_string(const ImagePair& pair) {
    return to_string(pair.left) + ";" + to_string(pair.right);
}

namespace {

constexpr Part plain(int size, int color = 1) { return {size, color, false}; }
constexpr Part over(int size, int color = 1) { return {size, color, true}; }

std::vector<Part> head(const Overpartition& op, std::size_t count) {
    return {op.parts.begin(), op.parts.begin() + static_cast<std::ptrdiff_t>(count)};
}

std::vector<Part> tail_from(const Overpartition& op, std::size_t start) {
    return {op.parts.begin() + static_cast<std::ptrdiff_t>(start), op.parts.end()};
}

std::vector<Part> with(std::vector<Part> parts, std::initializer_list<Part> extra) {
    parts.insert(parts.end(), extra.begin(), extra.end());
    return parts;
}

std::vector<Part> with_ones(std::vector<Part> parts, int count) {
    for (int j = 0; j < count; ++j)
        parts.push_back(plain(1));
    return parts;
}

ImagePair make_pair_of(std::vector<Part> left, std::vector<Part> right, int colors) {
    return {canonicalize(std::move(left), colors), canonicalize(std::move(right), colors)};
}

// Checks that exactly one guard holds and returns its 1-based index.
template <std::size_t N>
int select_case(const char* map_name, const std::array<bool, N>& guards, const Overpartition& op,
                CaseTrace* trace) {
    int fired = 0, hits = 0;
    for (std::size_t c = 0; c < N; ++c) {
        if (guards[c]) {
            ++hits;
            if (fired == 0)
                fired = static_cast<int>(c) + 1;
        }
    }
    if (trace)
        *trace = {fired, hits};
    if (hits != 1)
        throw std::logic_error(std::string(map_name) + ": " + std::to_string(hits) +
                               " cases apply to " + to_string(op));
    return fired;
}

void require(bool condition, const std::string& message) {
    if (!condition)
        throw std::domain_error(message);
}

void require_member(const Overpartition& op, int weight, int colors, const Constraint& c,
                    const char* map_name) {
    require(op.colors == colors, std::string(map_name) + ": expected " + std::to_string(colors) +
                                     " colors");
    require(is_canonical(op), std::string(map_name) + ": input not canonical");
    require(op.weight() == weight,
            std::string(map_name) + ": input weight must be " + std::to_string(weight));
    require(c.allows(op), std::string(map_name) + ": input violates " + c.to_string());
}

}  // namespace

SplitPoint split_point(const Overpartition& lambda, int b) {
    if (b < 1)
        throw std::domain_error("split_point: b must be positive");
    if (lambda.weight() < b)
        throw std::domain_error("split_point: weight below b");
    int tail = 0;
    for (std::size_t j = lambda.parts.size(); j-- > 0;) {
        const int size = lambda.parts[j].size;
        if (tail + size >= b) {
            const int x = b - tail;
            return {j + 1, x, size - x};
        }
        tail += size;
    }
    throw std::logic_error("split_point: unreachable");
}

ImagePair map_f(const Overpartition& lambda, int a, int b, CaseTrace* trace) {
    require(b >= 2 && a >= b, "map_f: needs a >= b >= 2");
    require_member(lambda, a + b, 1, Constraint::no_plain({{1, 1}, {2, 1}}), "map_f");

    const auto [i, x, y] = split_point(lambda, b);
    const Part& cut = lambda.parts[i - 1];
    const Part* prev = i >= 2 ? &lambda.parts[i - 2] : nullptr;

    const std::array<bool, 5> guards{
        y == 0,
        y >= 1 && cut.overlined,
        y >= 2 && !cut.overlined,
        y == 1 && !cut.overlined && prev && !prev->overlined,
        y == 1 && !cut.overlined && prev && prev->overlined,
    };
    const auto rest = tail_from(lambda, i);
    switch (select_case("map_f", guards, lambda, trace)) {
    case 1:
        return make_pair_of(head(lambda, i - 1), tail_from(lambda, i - 1), 1);
    case 2:
        return make_pair_of(with(head(lambda, i - 1), {over(y)}), with_ones(rest, x), 1);
    case 3:
        return make_pair_of(with(head(lambda, i - 1), {plain(y)}), with_ones(rest, x), 1);
    case 4: {
        const int ceil_half = (prev->size + 2) / 2, floor_half = (prev->size + 1) / 2;
        return make_pair_of(with(head(lambda, i - 2), {plain(ceil_half), plain(floor_half)}),
                            with_ones(rest, x), 1);
    }
    default: {
        const int ceil_half = (prev->size + 2) / 2, floor_half = (prev->size + 1) / 2;
        return make_pair_of(with(head(lambda, i - 2), {over(ceil_half), plain(floor_half)}),
                            with_ones(rest, x), 1);
    }
    }
}

ImagePair map_g1(const Overpartition& lambda, int a, CaseTrace* trace) {
    require(a >= 1, "map_g1: needs a >= 1");
    require_member(lambda, a + 1, 1, Constraint::no_plain({{1, 1}}), "map_g1");

    const std::size_t t = lambda.parts.size();
    const Part& last = lambda.parts[t - 1];
    const std::array<bool, 4> guards{
        last.size >= 2 && last.overlined,
        last.size >= 3 && !last.overlined,
        last.size == 2 && !last.overlined,
        last.size == 1 && last.overlined,
    };
    const auto init = head(lambda, t - 1);
    switch (select_case("map_g1", guards, lambda, trace)) {
    case 1: return make_pair_of(with(init, {over(last.size - 1)}), {plain(1)}, 1);
    case 2: return make_pair_of(with(init, {plain(last.size - 1)}), {plain(1)}, 1);
    case 3: return make_pair_of(with(init, {over(1)}), {over(1)}, 1);
    default: return make_pair_of(init, {last}, 1);
    }
}

ImagePair map_g2(const Overpartition& lambda, int a, CaseTrace* trace) {
    require(a >= 2, "map_g2: needs a >= 2");
    require_member(lambda, a + 2, 1, Constraint::no_plain({{1, 1}}), "map_g2");

    const std::size_t t = lambda.parts.size();
    const Part& last = lambda.parts[t - 1];
    const Part* prev = t >= 2 ? &lambda.parts[t - 2] : nullptr;
    const bool last_is_one_bar = last.size == 1 && last.overlined;
    const std::array<bool, 8> guards{
        last.size >= 3 && last.overlined,
        last.size >= 4 && !last.overlined,
        last.size == 3 && !last.overlined,
        last.size == 2 && !last.overlined,
        last.size == 2 && last.overlined,
        last_is_one_bar && prev && prev->overlined,
        last_is_one_bar && prev && !prev->overlined && prev->size == 2,
        last_is_one_bar && prev && !prev->overlined && prev->size >= 3,
    };
    const int fired = select_case("map_g2", guards, lambda, trace);
    const auto init = head(lambda, t - 1);
    switch (fired) {
    case 1: return make_pair_of(with(init, {over(last.size - 2)}), {plain(2)}, 1);
    case 2: return make_pair_of(with(init, {plain(last.size - 2)}), {plain(2)}, 1);
    case 3: return make_pair_of(with(init, {over(1)}), {over(2)}, 1);
    case 4: return make_pair_of(init, {plain(1), plain(1)}, 1);
    case 5: return make_pair_of(init, {over(2)}, 1);
    default: break;
    }
    const auto init2 = head(lambda, t - 2);
    switch (fired) {
    case 6: return make_pair_of(with(init2, {over(prev->size - 1)}), {plain(1), over(1)}, 1);
    case 7: return make_pair_of(with(init2, {over(1)}), {plain(1), plain(1)}, 1);
    default: return make_pair_of(with(init2, {plain(prev->size - 1)}), {plain(1), over(1)}, 1);
    }
}

ImagePair map_fk(const Overpartition& lambda, int a, int b, int k, CaseTrace* trace) {
    require(a >= 2 && b >= 1 && k >= 2, "map_fk: needs a >= 2, b >= 1, k >= 2");
    require_member(lambda, a + b, k, Constraint::no_plain({{1, 1}, {1, 2}}), "map_fk");

    const auto [i, x, y] = split_point(lambda, b);
    const Part& cut = lambda.parts[i - 1];
    const Part* prev = i >= 2 ? &lambda.parts[i - 2] : nullptr;
    const bool plain_cut_color1 = y == 1 && !cut.overlined && cut.color == 1 && prev;

    const std::array<bool, 7> guards{
        y == 0,
        y >= 1 && cut.overlined,
        y >= 2 && !cut.overlined,
        y == 1 && !cut.overlined && cut.color != 1,
        plain_cut_color1 && *prev == plain(2, 1),
        plain_cut_color1 && !prev->overlined && *prev != plain(2, 1),
        plain_cut_color1 && prev->overlined,
    };
    const int fired = select_case("map_fk", guards, lambda, trace);
    if (fired == 1)
        return make_pair_of(head(lambda, i - 1), tail_from(lambda, i - 1), k);

    const auto right = with_ones(tail_from(lambda, i), x);
    switch (fired) {
    case 2: return make_pair_of(with(head(lambda, i - 1), {over(y, cut.color)}), right, k);
    case 3: return make_pair_of(with(head(lambda, i - 1), {plain(y, cut.color)}), right, k);
    case 4: return make_pair_of(with(head(lambda, i - 1), {plain(1, cut.color)}), right, k);
    case 5:
        return make_pair_of(with(head(lambda, i - 2), {plain(1, 2), plain(1, 2), over(1, 1)}),
                            right, k);
    case 6:
        return make_pair_of(with(head(lambda, i - 2),
                                 {plain(prev->size - 1, prev->color), plain(1, 2), plain(1, 2)}),
                            right, k);
    default:
        return make_pair_of(with(head(lambda, i - 2),
                                 {over(prev->size - 1, prev->color), plain(1, 2), plain(1, 2)}),
                            right, k);
    }
}

ImagePair map_gk(const Overpartition& lambda, int a, int k, CaseTrace* trace) {
    require(a >= 2 && k >= 2, "map_gk: needs a >= 2, k >= 2");
    require_member(lambda, a + 1, k, Constraint::no_plain({{1, 1}}), "map_gk");

    const std::size_t t = lambda.parts.size();
    const Part& last = lambda.parts[t - 1];
    const Part* prev = t >= 2 ? &lambda.parts[t - 2] : nullptr;
    const bool last_is_2_1 = last == plain(2, 1);
    const std::array<bool, 6> guards{
        last.size >= 2 && last.overlined,
        last.size >= 2 && !last.overlined && !last_is_2_1,
        last_is_2_1 && prev && prev->overlined,
        last_is_2_1 && prev && !prev->overlined && *prev != plain(2, 1),
        last_is_2_1 && prev && *prev == plain(2, 1),
        last.size == 1,
    };
    const int fired = select_case("map_gk", guards, lambda, trace);
    const std::vector<Part> one_1{plain(1, 1)};
    switch (fired) {
    case 1:
        return make_pair_of(with(head(lambda, t - 1), {over(last.size - 1, last.color)}), one_1, k);
    case 2:
        return make_pair_of(with(head(lambda, t - 1), {plain(last.size - 1, last.color)}), one_1,
                            k);
    case 3:
        return make_pair_of(with(head(lambda, t - 2),
                                 {over(prev->size - 1, prev->color), plain(1, 2), plain(1, 2)}),
                            one_1, k);
    case 4:
        return make_pair_of(with(head(lambda, t - 2),
                                 {plain(prev->size - 1, prev->color), plain(1, 2), plain(1, 2)}),
                            one_1, k);
    case 5:
        return make_pair_of(with(head(lambda, t - 2), {plain(1, 2), plain(1, 2), over(1, 1)}),
                            one_1, k);
    default: return make_pair_of(head(lambda, t - 1), {last}, k);
    }
}

int case_count(const std::string& map_name) {
    if (map_name == "f")
        return 5;
    if (map_name == "g1")
        return 4;
    if (map_name == "g2")
        return 8;
    if (map_name == "fk")
        return 7;
    if (map_name == "gk")
        return 6;
    throw std::invalid_argument("unknown map '" + map_name + "'");
}

namespace {

struct AuditPlan {
    int colors = 1;
    int domain_weight = 0;
    Constraint domain;
    int left_weight = 0;
    Constraint left;
    int right_weight = 0;
    Constraint right;
    std::function<ImagePair(const Overpartition&, CaseTrace*)> apply;
};

AuditPlan plan_for(const std::string& name, int a, int b, int k) {
    const auto no = [](std::initializer_list<std::pair<int, int>> pairs) {
        return Constraint::no_plain(pairs);
    };
    if (name == "f") {
        if (!(b >= 2 && a >= b))
            throw std::invalid_argument("audit f: needs a >= b >= 2");
        return {1, a + b, no({{1, 1}, {2, 1}}), a, no({{1, 1}}), b, no({{2, 1}}),
                [a, b](const Overpartition& op, CaseTrace* t) { return map_f(op, a, b, t); }};
    }
    if (name == "g1") {
        if (a < 1)
            throw std::invalid_argument("audit g1: needs a >= 1");
        return {1, a + 1, no({{1, 1}}), a, no({{1, 1}}), 1, Constraint::none(),
                [a](const Overpartition& op, CaseTrace* t) { return map_g1(op, a, t); }};
    }
    if (name == "g2") {
        if (a < 2)
            throw std::invalid_argument("audit g2: needs a >= 2");
        return {1, a + 2, no({{1, 1}}), a, no({{1, 1}}), 2, Constraint::none(),
                [a](const Overpartition& op, CaseTrace* t) { return map_g2(op, a, t); }};
    }
    if (name == "fk") {
        if (!(a >= 2 && b >= 1 && k >= 2))
            throw std::invalid_argument("audit fk: needs a >= 2, b >= 1, k >= 2");
        return {k, a + b, no({{1, 1}, {1, 2}}), a, no({{1, 1}}), b, no({{1, 2}}),
                [a, b, k](const Overpartition& op, CaseTrace* t) { return map_fk(op, a, b, k, t); }};
    }
    if (name == "gk") {
        if (!(a >= 2 && k >= 2))
            throw std::invalid_argument("audit gk: needs a >= 2, k >= 2");
        return {k, a + 1, no({{1, 1}}), a, no({{1, 1}}), 1, Constraint::none(),
                [a, k](const Overpartition& op, CaseTrace* t) { return map_gk(op, a, k, t); }};
    }
    throw std::invalid_argument("unknown map '" + name + "'");
}

}  // namespace

AuditReport audit(const std::string& map_name, int a, int b, int k, const EnumerationCaps& caps) {
    const AuditPlan plan = plan_for(map_name, a, b, k);

    AuditReport report;
    report.map_name = map_name;
    report.a = a;
    report.b = (map_name == "g1" || map_name == "gk") ? 1 : (map_name == "g2" ? 2 : b);
    report.k = plan.colors;
    report.case_counts.assign(static_cast<std::size_t>(case_count(map_name)), 0);

    const auto left_list = enumerate_ops(plan.left_weight, plan.colors, plan.left, caps);
    const auto right_list = enumerate_ops(plan.right_weight, plan.colors, plan.right, caps);
    const std::set<Overpartition> left_set(left_list.begin(), left_list.end());
    const std::set<Overpartition> right_set(right_list.begin(), right_list.end());
    report.codomain_size = left_list.size() * right_list.size();

    report.well_defined = true;
    report.exclusive_cases = true;
    std::map<ImagePair, Overpartition> preimage;
    for_each_ops(
        plan.domain_weight, plan.colors, plan.domain,
        [&](const Overpartition& op) {
            ++report.domain_size;
            CaseTrace trace;
            ImagePair image;
            try {
                image = plan.apply(op, &trace);
            } catch (const std::exception& e) {
                if (trace.guards_true != 1)
                    report.exclusive_cases = false;
                if (report.well_defined) {
                    report.ill_defined_witness = op;
                    report.ill_defined_reason = e.what();
                }
                report.well_defined = false;
                return;
            }
            ++report.case_counts[static_cast<std::size_t>(trace.fired - 1)];
            if (!left_set.contains(image.left) || !right_set.contains(image.right)) {
                if (report.well_defined) {
                    report.ill_defined_witness = op;
                    report.ill_defined_reason = "image " + to_string(image) + " outside codomain";
                }
                report.well_defined = false;
            }
            auto [it, inserted] = preimage.emplace(std::move(image), op);
            if (!inserted && !report.collision_witness)
                report.collision_witness = std::make_pair(it->second, op);
        },
        caps);

    report.image_size = preimage.size();
    report.injective = report.image_size == report.domain_size;
    report.surjective = report.well_defined && report.image_size == report.codomain_size;
    if (!report.surjective) {
        for (const auto& l : left_list) {
            for (const auto& r : right_list) {
                ImagePair candidate{l, r};
                if (!preimage.contains(candidate)) {
                    report.unhit_witness = std::move(candidate);
                    break;
                }
            }
            if (report.unhit_witness)
                break;
        }
    }
    return report;
}

std::vector<AuditReport> audit_many(std::span<const AuditCell> cells, const EnumerationCaps& caps) {
    std::vector<AuditReport> out(cells.size());
    parallel_for(cells.size(), [&](std::size_t i) { out[i] = audit(cells[i], caps); });
    return out;
}

std::vector<AuditReport> audit_many_serial(std::span<const AuditCell> cells,
                                           const EnumerationCaps& caps) {
    std::vector<AuditReport> out;
    out.reserve(cells.size());
    for (const auto& cell : cells)
        out.push_back(audit(cell, caps));
    return out;
}

}  // namespace overpart
