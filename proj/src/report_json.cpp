#include "overpart/report_json.hpp"

namespace overpart {

namespace {

Integer integer_from(const Json& j) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0)
        throw std::invalid_argument("malformed integer in JSON");
    return v;
}

}  // namespace

Json poly_to_json(const Poly& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs())
        out.push_back(to_string(c));
    return out;
}

Poly poly_from_json(const Json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j)
        coeffs.push_back(parse_rational(c.get<std::string>()));
    return Poly(std::move(coeffs));
}

void to_json(Json& j, const Part& p) { j = Json::array({p.size, p.color, p.overlined}); }

void from_json(const Json& j, Part& p) {
    p.size = j.at(0).get<int>();
    p.color = j.at(1).get<int>();
    p.overlined = j.at(2).get<bool>();
}

void to_json(Json& j, const Overpartition& op) {
    j = Json{{"colors", op.colors}, {"parts", op.parts}, {"text", to_string(op)}};
}

void from_json(const Json& j, Overpartition& op) {
    op.colors = j.at("colors").get<int>();
    op.parts = j.at("parts").get<std::vector<Part>>();
}

void to_json(Json& j, const ImagePair& pair) {
    j = Json{{"left", pair.left}, {"right", pair.right}};
}

void from_json(const Json& j, ImagePair& pair) {
    pair.left = j.at("left").get<Overpartition>();
    pair.right = j.at("right").get<Overpartition>();
}

void to_json(Json& j, const AuditReport& r) {
    j = Json{{"type", "audit"},
             {"map", r.map_name},
             {"a", r.a},
             {"b", r.b},
             {"k", r.k},
             {"domain_size", r.domain_size},
             {"image_size", r.image_size},
             {"codomain_size", r.codomain_size},
             {"well_defined", r.well_defined},
             {"injective", r.injective},
             {"surjective", r.surjective},
             {"exclusive_cases", r.exclusive_cases},
             {"case_counts", r.case_counts},
             {"collision_witness", nullptr},
             {"unhit_witness", nullptr},
             {"ill_defined_witness", nullptr},
             {"ill_defined_reason", r.ill_defined_reason}};
    if (r.collision_witness)
        j["collision_witness"] = Json::array({r.collision_witness->first, r.collision_witness->second});
    if (r.unhit_witness)
        j["unhit_witness"] = *r.unhit_witness;
    if (r.ill_defined_witness)
        j["ill_defined_witness"] = *r.ill_defined_witness;
}

void from_json(const Json& j, AuditReport& r) {
    r.map_name = j.at("map").get<std::string>();
    r.a = j.at("a").get<int>();
    r.b = j.at("b").get<int>();
    r.k = j.at("k").get<int>();
    r.domain_size = j.at("domain_size").get<std::uint64_t>();
    r.image_size = j.at("image_size").get<std::uint64_t>();
    r.codomain_size = j.at("codomain_size").get<std::uint64_t>();
    r.well_defined = j.at("well_defined").get<bool>();
    r.injective = j.at("injective").get<bool>();
    r.surjective = j.at("surjective").get<bool>();
    r.exclusive_cases = j.at("exclusive_cases").get<bool>();
    r.case_counts = j.at("case_counts").get<std::vector<std::uint64_t>>();
    r.collision_witness.reset();
    if (const auto& c = j.at("collision_witness"); !c.is_null())
        r.collision_witness = std::make_pair(c.at(0).get<Overpartition>(), c.at(1).get<Overpartition>());
    r.unhit_witness.reset();
    if (const auto& u = j.at("unhit_witness"); !u.is_null())
        r.unhit_witness = u.get<ImagePair>();
    r.ill_defined_witness.reset();
    if (const auto& w = j.at("ill_defined_witness"); !w.is_null())
        r.ill_defined_witness = w.get<Overpartition>();
    r.ill_defined_reason = j.at("ill_defined_reason").get<std::string>();
}

void to_json(Json& j, const VerifyReport& r) {
    j = Json{{"type", "verify"},
             {"claim", r.claim},
             {"range", r.range},
             {"holds", r.holds},
             {"exceptions", r.exceptions},
             {"counterexample", nullptr},
             {"checked", r.checked},
             {"min_slack", nullptr},
             {"min_slack_at", r.min_slack_at},
             {"inconclusive", r.inconclusive},
             {"details", r.details}};
    if (r.counterexample)
        j["counterexample"] = *r.counterexample;
    if (r.min_slack)
        j["min_slack"] = *r.min_slack;
}

void from_json(const Json& j, VerifyReport& r) {
    r.claim = j.at("claim").get<std::string>();
    r.range = j.at("range").get<std::string>();
    r.holds = j.at("holds").get<bool>();
    r.exceptions = j.at("exceptions").get<std::vector<std::string>>();
    r.counterexample.reset();
    if (const auto& c = j.at("counterexample"); !c.is_null())
        r.counterexample = c.get<std::string>();
    r.checked = j.at("checked").get<std::uint64_t>();
    r.min_slack.reset();
    if (const auto& s = j.at("min_slack"); !s.is_null())
        r.min_slack = s.get<double>();
    r.min_slack_at = j.at("min_slack_at").get<std::string>();
    r.inconclusive = j.at("inconclusive").get<std::uint64_t>();
    r.details = j.at("details").get<std::map<std::string, std::string>>();
}

void to_json(Json& j, const RootRecord& r) {
    j = Json{{"type", "root"},
             {"a", r.a},
             {"b", r.b},
             {"bracket_lo", to_string(r.bracket_lo)},
             {"bracket_hi", to_string(r.bracket_hi)},
             {"rounded", r.rounded},
             {"sign_lo", r.sign_lo},
             {"sign_hi", r.sign_hi},
             {"has_root", r.has_root},
             {"certificate", r.certificate}};
}

void from_json(const Json& j, RootRecord& r) {
    r.a = j.at("a").get<std::uint64_t>();
    r.b = j.at("b").get<std::uint64_t>();
    r.bracket_lo = parse_rational(j.at("bracket_lo").get<std::string>());
    r.bracket_hi = parse_rational(j.at("bracket_hi").get<std::string>());
    r.rounded = j.at("rounded").get<std::string>();
    r.sign_lo = j.at("sign_lo").get<int>();
    r.sign_hi = j.at("sign_hi").get<int>();
    r.has_root = j.at("has_root").get<bool>();
    r.certificate = j.at("certificate").get<std::string>();
}

void to_json(Json& j, const BoundTriple& t) {
    j = Json{{"type", "bounds"},
             {"n", t.n},
             {"mu", t.mu},
             {"lower", t.lower},
             {"upper", t.upper},
             {"exact", t.exact.get_str()},
             {"main_term", t.main_term},
             {"remainder_bound", t.remainder_bound},
             {"main_term_error", t.main_term_error},
             {"sandwich_holds", t.sandwich_holds},
             {"remainder_holds", t.remainder_holds},
             {"lower_slack", t.lower_slack},
             {"upper_slack", t.upper_slack},
             {"remainder_slack", t.remainder_slack}};
}

void from_json(const Json& j, BoundTriple& t) {
    t.n = j.at("n").get<std::uint64_t>();
    t.mu = j.at("mu").get<double>();
    t.lower = j.at("lower").get<double>();
    t.upper = j.at("upper").get<double>();
    t.exact = integer_from(j.at("exact"));
    t.main_term = j.at("main_term").get<double>();
    t.remainder_bound = j.at("remainder_bound").get<double>();
    t.main_term_error = j.at("main_term_error").get<double>();
    t.sandwich_holds = j.at("sandwich_holds").get<bool>();
    t.remainder_holds = j.at("remainder_holds").get<bool>();
    t.lower_slack = j.at("lower_slack").get<double>();
    t.upper_slack = j.at("upper_slack").get<double>();
    t.remainder_slack = j.at("remainder_slack").get<double>();
}

}  // namespace overpart
