#include <doctest.h>

#include <set>

#include "overpart/biject.hpp"

using namespace overpart;

namespace {

Part P(int size, int color = 1) { return Part{size, color, false}; }
Part O(int size, int color = 1) { return Part{size, color, true}; }

Overpartition op(std::vector<Part> parts, int colors = 1) {
    return canonicalize(std::move(parts), colors);
}

ImagePair pair(std::vector<Part> left, std::vector<Part> right, int colors = 1) {
    return ImagePair{op(std::move(left), colors), op(std::move(right), colors)};
}

EnumerationCaps wide_caps() {
    EnumerationCaps caps;
    caps.max_weight_k3 = 12;
    return caps;
}

// Re-derives the image set of a map from scratch for a property check.
std::set<ImagePair> image_of(const std::string& name, int a, int b, int k) {
    std::set<ImagePair> out;
    Constraint dom;
    int n = 0;
    if (name == "f") {
        dom = Constraint::no_plain({{1, 1}, {2, 1}});
        n = a + b;
    } else if (name == "g1") {
        dom = Constraint::no_plain_size(1);
        n = a + 1;
    } else if (name == "g2") {
        dom = Constraint::no_plain_size(1);
        n = a + 2;
    } else if (name == "fk") {
        dom = Constraint::no_plain({{1, 1}, {1, 2}});
        n = a + b;
    } else {
        dom = Constraint::no_plain({{1, 1}});
        n = a + 1;
    }
    for (const auto& lambda : enumerate_ops(n, k, dom, wide_caps())) {
        if (name == "f")
            out.insert(map_f(lambda, a, b));
        else if (name == "g1")
            out.insert(map_g1(lambda, a));
        else if (name == "g2")
            out.insert(map_g2(lambda, a));
        else if (name == "fk")
            out.insert(map_fk(lambda, a, b, k));
        else
            out.insert(map_gk(lambda, a, k));
    }
    return out;
}

}  // namespace

TEST_CASE("split point") {
    CHECK(split_point(op({P(4)}), 2) == SplitPoint{1, 2, 2});
    CHECK(split_point(op({P(3), O(1)}), 2) == SplitPoint{1, 1, 2});
    CHECK(split_point(op({O(2, 1), O(1, 2)}, 2), 1) == SplitPoint{2, 1, 0});
    CHECK_THROWS_AS(split_point(op({P(2)}), 3), std::domain_error);
}

TEST_CASE("split point invariants") {
    for (int b = 1; b <= 6; ++b)
        for (const auto& lambda : enumerate_ops(10, 1, Constraint::none())) {
            const SplitPoint s = split_point(lambda, b);
            const auto& parts = lambda.parts;
            REQUIRE(s.i >= 1);
            REQUIRE(s.i <= parts.size());
            int tail = 0;
            for (std::size_t j = s.i; j < parts.size(); ++j)
                tail += parts[j].size;
            CHECK(s.x > 0);
            CHECK(s.x <= parts[s.i - 1].size);
            CHECK(s.x + tail == b);
            CHECK(s.y == parts[s.i - 1].size - s.x);
        }
}

TEST_CASE("map f on hand-traced inputs") {
    CHECK(map_f(op({P(4)}), 2, 2) == pair({P(2)}, {P(1), P(1)}));
    CHECK(map_f(op({O(4)}), 2, 2) == pair({O(2)}, {P(1), P(1)}));
    CHECK(map_f(op({O(3), O(1)}), 2, 2) == pair({O(2)}, {P(1), O(1)}));
    CHECK_THROWS_AS(map_f(op({P(4)}), 3, 1), std::domain_error);
    CHECK_THROWS_AS(map_f(op({P(2), P(2)}), 2, 2), std::domain_error);
}

TEST_CASE("map g1 on hand-traced inputs") {
    CHECK(map_g1(op({P(4)}), 3) == pair({P(3)}, {P(1)}));
    CHECK(map_g1(op({P(2), P(2)}), 3) == pair({P(2), O(1)}, {O(1)}));
    CHECK(map_g1(op({P(3), O(1)}), 3) == pair({P(3)}, {O(1)}));
}

TEST_CASE("map g2 on hand-traced inputs") {
    CHECK(map_g2(op({P(4)}), 2) == pair({P(2)}, {P(2)}));
    CHECK(map_g2(op({P(2), O(2)}), 2) == pair({P(2)}, {O(2)}));
    CHECK(map_g2(op({O(3), O(1)}), 2) == pair({O(2)}, {P(1), O(1)}));
}

TEST_CASE("map fk on hand-traced inputs") {
    CHECK(map_fk(op({P(3, 2)}, 2), 2, 1, 2) == pair({P(2, 2)}, {P(1, 1)}, 2));
    CHECK(map_fk(op({O(2, 1), O(1, 2)}, 2), 2, 1, 2) == pair({O(2, 1)}, {O(1, 2)}, 2));
    CHECK(map_fk(op({O(3, 1)}, 2), 2, 1, 2) == pair({O(2, 1)}, {P(1, 1)}, 2));
    CHECK_THROWS_AS(map_fk(op({P(2, 2)}, 2), 1, 1, 2), std::domain_error);
}

TEST_CASE("map gk on hand-traced inputs") {
    CHECK(map_gk(op({P(3, 1)}, 2), 2, 2) == pair({P(2, 1)}, {P(1, 1)}, 2));
    CHECK(map_gk(op({P(2, 1), O(1, 1)}, 2), 2, 2) == pair({P(2, 1)}, {O(1, 1)}, 2));
    CHECK(map_gk(op({O(2, 2), P(1, 2)}, 2), 2, 2) == pair({O(2, 2)}, {P(1, 2)}, 2));
}

TEST_CASE("every image conserves weight and fires one case") {
    for (int a = 2; a <= 7; ++a)
        for (int b = 2; b <= a; ++b)
            for (const auto& lambda : enumerate_ops(a + b, 1, Constraint::no_plain({{1, 1}, {2, 1}}))) {
                CaseTrace t;
                const ImagePair img = map_f(lambda, a, b, &t);
                CHECK(img.left.weight() == a);
                CHECK(img.right.weight() == b);
                CHECK(t.guards_true == 1);
                CHECK(t.fired >= 1);
                CHECK(t.fired <= case_count("f"));
            }
    for (int a = 2; a <= 5; ++a)
        for (const auto& lambda : enumerate_ops(a + 1, 3, Constraint::no_plain({{1, 1}}))) {
            CaseTrace t;
            const ImagePair img = map_gk(lambda, a, 3, &t);
            CHECK(img.left.weight() == a);
            CHECK(img.right.weight() == 1);
            CHECK(t.guards_true == 1);
            CHECK(is_canonical(img.left));
            CHECK(is_canonical(img.right));
        }
}

TEST_CASE("audit of f at a = b = 2") {
    const AuditReport r = audit("f", 2, 2, 1);
    CHECK(r.well_defined);
    CHECK(r.injective);
    CHECK_FALSE(r.surjective);
    CHECK(r.domain_size == 4);
    CHECK(r.codomain_size == 6);
    CHECK(r.exclusive_cases);
    REQUIRE(r.unhit_witness);
    CHECK(*r.unhit_witness == pair({O(2)}, {O(2)}));
    CHECK_FALSE(image_of("f", 2, 2, 1).contains(pair({O(2)}, {O(2)})));
}

TEST_CASE("audit of g1 at a = 3 misses (2', 1'; 1')") {
    const AuditReport r = audit("g1", 3, 0, 1);
    CHECK(r.injective);
    CHECK_FALSE(r.surjective);
    REQUIRE(r.unhit_witness);
    CHECK_FALSE(image_of("g1", 3, 0, 1).contains(pair({O(2), O(1)}, {O(1)})));
}

TEST_CASE("g1 is onto for a = 1, 2") {
    CHECK(audit("g1", 1, 0, 1).surjective);
    CHECK(audit("g1", 2, 0, 1).surjective);
}

TEST_CASE("audit report invariants") {
    std::vector<AuditCell> cells;
    for (int a = 2; a <= 8; ++a)
        for (int b = 2; b <= a; ++b)
            cells.push_back({"f", a, b, 1});
    for (int a = 1; a <= 12; ++a)
        cells.push_back({"g1", a, 0, 1});
    for (int a = 2; a <= 12; ++a)
        cells.push_back({"g2", a, 0, 1});
    for (int k = 2; k <= 3; ++k)
        for (int a = 2; a <= 6; ++a) {
            cells.push_back({"gk", a, 0, k});
            for (int b = 1; b <= a; ++b)
                cells.push_back({"fk", a, b, k});
        }
    const auto reports = audit_many(cells, wide_caps());
    REQUIRE(reports.size() == cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto& r = reports[i];
        CAPTURE(r.map_name);
        CAPTURE(r.a);
        CAPTURE(r.b);
        CAPTURE(r.k);
        CHECK(r.map_name == cells[i].map_name);
        CHECK(r.well_defined);
        CHECK(r.injective);
        CHECK(r.exclusive_cases);
        CHECK(r.injective == (r.image_size == r.domain_size));
        CHECK_FALSE(r.collision_witness);
        std::uint64_t fired = 0;
        for (auto c : r.case_counts)
            fired += c;
        CHECK(fired == r.domain_size);
        CHECK(r.case_counts.size() == static_cast<std::size_t>(case_count(r.map_name)));
        const bool strict = !(r.map_name == "g1" && r.a <= 2);
        if (strict) {
            CHECK_FALSE(r.surjective);
            CHECK(r.unhit_witness);
        }
        if (r.unhit_witness) {
            CHECK_FALSE(image_of(r.map_name, r.a, r.b, r.k).contains(*r.unhit_witness));
        }
    }
}

TEST_CASE("colored base case count") {
    for (int k = 2; k <= 3; ++k) {
        const auto no11 = Constraint::no_plain({{1, 1}});
        const std::int64_t lhs = static_cast<std::int64_t>(count_ops(2, k, no11) *
                                                           count_ops(2, k, Constraint::none())) -
                                 static_cast<std::int64_t>(count_ops(4, k, no11));
        CHECK(3 * lhs == 10 * k * k * k * k + 4 * k * k * k - 10 * k * k + 2 * k);
    }
}

TEST_CASE("bad audit requests") {
    CHECK_THROWS_AS(audit("h", 2, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(audit("f", 2, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(audit("gk", 1, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(audit("fk", 7, 7, 3), ResourceError);
}
