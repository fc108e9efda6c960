#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "overpart/enumerate.hpp"

namespace overpart {

/// Where an overpartition of weight >= b is cut so that the tail weighs b.
///
/// i is the largest 1-based index whose tail sum lambda_i + ... + lambda_t is
/// at least b; lambda_i = x + y with x + (tail after i) = b.
struct SplitPoint {
    std::size_t i = 0;
    int x = 0;
    int y = 0;

    friend bool operator==(const SplitPoint&, const SplitPoint&) = default;
};

/// An element (left; right) of a product set A (+) B.
struct ImagePair {
    Overpartition left;
    Overpartition right;

    friend bool operator==(const ImagePair&, const ImagePair&) = default;
    friend auto operator<=>(const ImagePair&, const ImagePair&) = default;
};

std::string to_string(const ImagePair& pair);

/// Filled in by a map: the 1-based case that produced the image and how many
/// case guards held for the input (always 1 when the definition is sound).
struct CaseTrace {
    int fired = 0;
    int guards_true = 0;
};

SplitPoint split_point(const Overpartition& lambda, int b);

/// f: P(a+b | no plain 1, no plain 2) -> P(a | no plain 1) (+) P(b | no plain 2),
/// for a >= b >= 2 and one color.
ImagePair map_f(const Overpartition& lambda, int a, int b, CaseTrace* trace = nullptr);

/// g1: P(a+1 | no plain 1) -> P(a | no plain 1) (+) P(1), for a >= 1.
ImagePair map_g1(const Overpartition& lambda, int a, CaseTrace* trace = nullptr);

/// g2: P(a+2 | no plain 1) -> P(a | no plain 1) (+) P(2), for a >= 2.
ImagePair map_g2(const Overpartition& lambda, int a, CaseTrace* trace = nullptr);

/// f_k on k-colored overpartitions of a+b with no plain 1_1 and no plain 1_2,
/// landing in P_k(a | no plain 1_1) (+) P_k(b | no plain 1_2). Needs a >= 2,
/// b >= 1, k >= 2.
ImagePair map_fk(const Overpartition& lambda, int a, int b, int k, CaseTrace* trace = nullptr);

/// g_k: P_k(a+1 | no plain 1_1) -> P_k(a | no plain 1_1) (+) P_k(1), for
/// a >= 2 and k >= 2.
ImagePair map_gk(const Overpartition& lambda, int a, int k, CaseTrace* trace = nullptr);

/// Number of cases in each map's definition.
int case_count(const std::string& map_name);

struct AuditReport {
    std::string map_name;
    int a = 0;
    int b = 0;
    int k = 1;
    std::uint64_t domain_size = 0;
    std::uint64_t image_size = 0;
    std::uint64_t codomain_size = 0;
    bool well_defined = false;
    bool injective = false;
    bool surjective = false;
    /// Every domain element fired exactly one case.
    bool exclusive_cases = false;
    /// Hits per case, index 0 is case 1.
    std::vector<std::uint64_t> case_counts;
    std::optional<std::pair<Overpartition, Overpartition>> collision_witness;
    std::optional<ImagePair> unhit_witness;
    std::optional<Overpartition> ill_defined_witness;
    std::string ill_defined_reason;

    friend bool operator==(const AuditReport&, const AuditReport&) = default;
};

/// One audit request. b is ignored for g1/g2/gk, k is ignored for f/g1/g2.
struct AuditCell {
    std::string map_name;
    int a = 0;
    int b = 0;
    int k = 1;
};

/// Exhaustively applies a map to its whole domain and compares the image with
/// the declared codomain. Throws ResourceError past the caps and
/// std::invalid_argument for an unknown map or parameters outside the map's
/// domain of definition.
AuditReport audit(const std::string& map_name, int a, int b, int k,
                  const EnumerationCaps& caps = {});

inline AuditReport audit(const AuditCell& cell, const EnumerationCaps& caps = {}) {
    return audit(cell.map_name, cell.a, cell.b, cell.k, caps);
}

/// Runs many audits, one cell per OpenMP task.
std::vector<AuditReport> audit_many(std::span<const AuditCell> cells,
                                    const EnumerationCaps& caps = {});

/// Reference loop for audit_many.
std::vector<AuditReport> audit_many_serial(std::span<const AuditCell> cells,
                                           const EnumerationCaps& caps = {});

}  // namespace overpart
