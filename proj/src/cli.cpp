#include "overpart/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <set>
#include <stdexcept>

#include "overpart/biject.hpp"
#include "overpart/enumerate.hpp"
#include "overpart/parallel.hpp"
#include "overpart/pbar.hpp"
#include "overpart/report_json.hpp"
#include "overpart/roots.hpp"
#include "overpart/verify.hpp"

namespace overpart {

namespace {

// Raised for bad input that CLI11 cannot see, such as a malformed config file.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Settings {
    EnumerationCaps caps;
    std::string width = "1/10000";
    std::vector<std::string> xs;
    std::vector<std::uint64_t> ks;
    std::optional<int> threads;
};

template <class T>
void take(const Json& obj, const char* key, T& into) {
    if (auto it = obj.find(key); it != obj.end())
        into = it->get<T>();
}

// Keys absent from the file keep their defaults; unknown keys are rejected so
// a typo cannot silently fall back to a default.
void apply_config(const std::string& path, Settings& s) {
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot read config file " + path);
    Json cfg;
    try {
        cfg = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw UsageError("config " + path + ": " + e.what());
    }
    if (!cfg.is_object())
        throw UsageError("config " + path + ": top level must be an object");
    static const std::set<std::string> known{"caps", "width", "xs", "ks", "threads"};
    for (const auto& [key, value] : cfg.items())
        if (!known.contains(key))
            throw UsageError("config " + path + ": unknown key '" + key + "'");
    try {
        if (auto it = cfg.find("caps"); it != cfg.end()) {
            static const std::set<std::string> cap_keys{"k1", "k2", "k3", "higher"};
            for (const auto& [key, value] : it->items())
                if (!cap_keys.contains(key))
                    throw UsageError("config " + path + ": unknown cap '" + key + "'");
            take(*it, "k1", s.caps.max_weight_k1);
            take(*it, "k2", s.caps.max_weight_k2);
            take(*it, "k3", s.caps.max_weight_k3);
            take(*it, "higher", s.caps.max_weight_higher);
        }
        take(cfg, "width", s.width);
        take(cfg, "xs", s.xs);
        take(cfg, "ks", s.ks);
        if (cfg.contains("threads"))
            s.threads = cfg["threads"].get<int>();
    } catch (const Json::type_error& e) {
        throw UsageError("config " + path + ": " + e.what());
    }
}

std::vector<Rational> parse_grid(const std::vector<std::string>& raw) {
    std::vector<Rational> out;
    for (const auto& r : raw)
        out.push_back(parse_rational(r));
    return out;
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

Rational positive_width(const std::string& raw) {
    Rational w = parse_rational(raw);
    if (w <= 0)
        throw std::invalid_argument("width must be positive");
    return w;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Overpartition polynomials: exact counts, inequality checks, root tables", "overpart"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    Settings s;
    std::string config_path;
    std::optional<int> threads;
    std::optional<int> cap_k1, cap_k2, cap_k3, cap_higher;
    app.add_option("--config", config_path, "JSON file overriding caps, width, xs, ks, threads")
        ->check(CLI::ExistingFile);
    app.add_option("--threads", threads, "Worker count (overrides OVERPART_THREADS)")
        ->check(CLI::PositiveNumber);
    app.add_option("--cap-k1", cap_k1, "Largest enumerable weight with one color");
    app.add_option("--cap-k2", cap_k2, "Largest enumerable weight with two colors");
    app.add_option("--cap-k3", cap_k3, "Largest enumerable weight with three colors");
    app.add_option("--cap-higher", cap_higher, "Largest enumerable weight with more colors");

    // poly
    auto* poly = app.add_subcommand("poly", "Overpartition polynomial of index N");
    std::uint64_t poly_n = 0;
    std::optional<std::string> poly_eval;
    bool poly_derivative = false;
    std::string poly_format = "text";
    poly->add_option("N", poly_n, "Index")->required();
    poly->add_option("--eval", poly_eval, "Evaluate at an exact rational p/q");
    poly->add_flag("--derivative", poly_derivative, "Use the derivative recursion instead");
    poly->add_option("--format", poly_format)->check(CLI::IsMember({"text", "json"}));

    // series
    auto* series = app.add_subcommand("series", "Generating function expanded to order N");
    std::uint64_t series_order = 12;
    std::string series_format = "json";
    series->add_option("--order", series_order, "Truncation order");
    series->add_option("--format", series_format)->check(CLI::IsMember({"text", "json"}));

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "List k-colored overpartitions of N");
    int enum_n = 0, enum_colors = 1;
    std::vector<std::string> enum_bans;
    bool enum_count = false;
    std::string enum_format = "json";
    enumerate->add_option("N", enum_n, "Weight")->required()->check(CLI::NonNegativeNumber);
    enumerate->add_option("--colors,-k", enum_colors, "Number of colors")
        ->check(CLI::PositiveNumber);
    enumerate->add_option("--no-plain", enum_bans, "Ban plain parts SIZE or SIZE:COLOR");
    enumerate->add_flag("--count", enum_count, "Print only the count");
    enumerate->add_option("--format", enum_format)->check(CLI::IsMember({"text", "json"}));

    // bijection
    auto* bijection = app.add_subcommand("bijection", "Exhaustively audit one map");
    std::string map_name;
    int map_a = 0, map_b = 0, map_k = 1;
    bijection->add_option("MAP", map_name, "f, g1, g2, fk or gk")
        ->required()
        ->check(CLI::IsMember({"f", "g1", "g2", "fk", "gk"}));
    bijection->add_option("--a", map_a)->required();
    bijection->add_option("--b", map_b, "Second weight (f and fk)");
    bijection->add_option("--k", map_k, "Colors (fk and gk)");

    // verify
    auto* verify = app.add_subcommand("verify", "Check one claim over a finite range");
    std::string claim;
    std::optional<std::uint64_t> v_nmin, v_nmax, v_amax, v_alo, v_ahi;
    std::vector<std::string> v_xs;
    std::vector<std::uint64_t> v_ks, v_ns;
    verify
        ->add_option("CLAIM", claim)
        ->required()
        ->check(CLI::IsMember(
            {"th1", "th3", "th4", "th5", "le3", "ie7", "ie8", "ie11", "logconcave", "descent"}));
    verify->add_option("--nmin", v_nmin, "Lower end of n (ie7)");
    verify->add_option("--nmax", v_nmax, "Upper end of n (th1, th3, le3, ie7, logconcave)");
    verify->add_option("--amax", v_amax, "Bound on a (ie8) or on a+b (th4, th5)");
    verify->add_option("--alo", v_alo, "Lower end of a (ie11)");
    verify->add_option("--ahi", v_ahi, "Upper end of a (ie11)");
    verify->add_option("--xs", v_xs, "Grid points p/q (th3, th4)")->delimiter(',');
    verify->add_option("--ks", v_ks, "Color counts (th5)")->delimiter(',');
    verify->add_option("--ns", v_ns, "Indices n with n+1 a power of two (descent)")
        ->delimiter(',');

    // roots
    auto* roots = app.add_subcommand("roots", "Largest real roots of the gap polynomials");
    std::uint64_t r_amax = 10, r_bmax = 10;
    std::optional<std::string> r_width;
    std::string r_format = "json";
    roots->add_option("--amax", r_amax)->check(CLI::PositiveNumber);
    roots->add_option("--bmax", r_bmax)->check(CLI::PositiveNumber);
    roots->add_option("--width", r_width, "Bracket width p/q");
    roots->add_option("--format", r_format)->check(CLI::IsMember({"csv", "json", "text"}));

    // bounds
    auto* bounds = app.add_subcommand("bounds", "Analytic bounds around p(n)");
    std::uint64_t b_nmin = 1, b_nmax = 10;
    bounds->add_option("--nmin", b_nmin)->check(CLI::PositiveNumber);
    bounds->add_option("--nmax", b_nmax)->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (!config_path.empty())
            apply_config(config_path, s);
        if (cap_k1)
            s.caps.max_weight_k1 = *cap_k1;
        if (cap_k2)
            s.caps.max_weight_k2 = *cap_k2;
        if (cap_k3)
            s.caps.max_weight_k3 = *cap_k3;
        if (cap_higher)
            s.caps.max_weight_higher = *cap_higher;
        apply_worker_env();
        if (threads)
            s.threads = threads;
        if (s.threads)
            set_worker_count(*s.threads);

        if (poly->parsed()) {
            const Poly p = poly_derivative ? pbar_derivative(poly_n) : pbar_poly(poly_n);
            if (poly_eval) {
                const Rational x = parse_rational(*poly_eval);
                const std::string value = to_string(eval_rat(p, x));
                if (poly_format == "json")
                    emit(out, Json{{"type", "poly_eval"},
                                   {"n", poly_n},
                                   {"derivative", poly_derivative},
                                   {"x", to_string(x)},
                                   {"value", value}});
                else
                    out << value << '\n';
            } else if (poly_format == "json") {
                emit(out, Json{{"type", "poly"},
                               {"n", poly_n},
                               {"derivative", poly_derivative},
                               {"coeffs", poly_to_json(p)}});
            } else {
                out << p.to_string() << '\n';
            }
            return kExitOk;
        }

        if (series->parsed()) {
            const SeriesTable t = series_expand(series_order);
            for (std::uint64_t n = 0; n <= t.order; ++n) {
                if (series_format == "json")
                    emit(out, Json{{"type", "series"}, {"n", n}, {"coeffs", poly_to_json(t.coeff_polys[n])}});
                else
                    out << "q^" << n << ": " << t.coeff_polys[n].to_string() << '\n';
            }
            return kExitOk;
        }

        if (enumerate->parsed()) {
            Constraint c;
            for (const auto& ban : enum_bans) {
                const auto colon = ban.find(':');
                try {
                    const int size = std::stoi(ban.substr(0, colon));
                    if (colon == std::string::npos) {
                        const auto all = Constraint::no_plain_size(size, enum_colors);
                        c.forbidden.insert(all.forbidden.begin(), all.forbidden.end());
                    } else {
                        c.forbidden.insert({size, std::stoi(ban.substr(colon + 1))});
                    }
                } catch (const std::logic_error&) {
                    throw std::invalid_argument("malformed --no-plain value '" + ban + "'");
                }
            }
            if (enum_count) {
                const auto n = count_ops(enum_n, enum_colors, c, s.caps);
                if (enum_format == "json")
                    emit(out, Json{{"type", "count"},
                                   {"n", enum_n},
                                   {"colors", enum_colors},
                                   {"constraint", c.to_string()},
                                   {"count", n}});
                else
                    out << n << '\n';
                return kExitOk;
            }
            for_each_ops(
                enum_n, enum_colors, c,
                [&](const Overpartition& op) {
                    if (enum_format == "json")
                        emit(out, op);
                    else
                        out << to_string(op) << '\n';
                },
                s.caps);
            return kExitOk;
        }

        if (bijection->parsed()) {
            const AuditReport r = audit(map_name, map_a, map_b, map_k, s.caps);
            emit(out, r);
            return r.well_defined && r.injective && r.exclusive_cases ? kExitOk : kExitFailed;
        }

        if (verify->parsed()) {
            auto xs_or = [&](std::vector<std::string> fallback) {
                if (!v_xs.empty())
                    return parse_grid(v_xs);
                if (!s.xs.empty())
                    return parse_grid(s.xs);
                return parse_grid(fallback);
            };
            VerifyReport r;
            if (claim == "th1") {
                r = check_th1(v_nmax.value_or(120));
            } else if (claim == "th3") {
                r = check_th3_grid(v_nmax.value_or(40), xs_or({"1", "3/2", "2", "3"}));
            } else if (claim == "th4") {
                r = check_th4_grid(v_amax.value_or(40), xs_or({"1", "3/2", "2", "5/2", "3"}));
            } else if (claim == "th5") {
                std::vector<std::uint64_t> ks = !v_ks.empty() ? v_ks : !s.ks.empty() ? s.ks
                                                                                  : std::vector<std::uint64_t>{2, 3};
                r = check_colored(v_amax.value_or(40), ks);
            } else if (claim == "le3") {
                r = check_le3(v_nmax.value_or(500));
            } else if (claim == "ie7") {
                r = check_ie7(v_nmin.value_or(1), v_nmax.value_or(500));
            } else if (claim == "ie8") {
                r = check_ie8(v_amax.value_or(93));
            } else if (claim == "ie11") {
                r = check_ie11(v_alo.value_or(2), v_ahi.value_or(500));
            } else if (claim == "logconcave") {
                r = check_logconcave(v_nmax.value_or(500));
            } else {
                r = check_descent(!v_ns.empty() ? v_ns : std::vector<std::uint64_t>{3, 7, 15, 31});
            }
            emit(out, r);
            return r.holds ? kExitOk : kExitFailed;
        }

        if (roots->parsed()) {
            const Rational width = positive_width(r_width.value_or(s.width));
            const auto table = roots_table(r_amax, r_bmax, width);
            if (r_format == "csv") {
                out << "a,b,root\n";
                for (const auto& rec : table)
                    out << rec.a << ',' << rec.b << ',' << rec.rounded << '\n';
            } else if (r_format == "json") {
                for (const auto& rec : table)
                    emit(out, rec);
            } else {
                out << "a\\b";
                for (std::uint64_t b = 1; b <= r_bmax; ++b)
                    out << std::setw(6) << b;
                out << '\n';
                for (std::uint64_t a = 1; a <= r_amax; ++a) {
                    out << std::setw(3) << a;
                    for (std::uint64_t b = 1; b <= r_bmax; ++b)
                        out << std::setw(6) << table[(a - 1) * r_bmax + (b - 1)].rounded;
                    out << '\n';
                }
            }
            const bool sound = std::all_of(table.begin(), table.end(), [](const RootRecord& rec) {
                return rec.bracket_lo == rec.bracket_hi || rec.sign_lo * rec.sign_hi <= 0;
            });
            return sound ? kExitOk : kExitFailed;
        }

        if (bounds->parsed()) {
            if (b_nmin > b_nmax)
                throw std::invalid_argument("--nmin exceeds --nmax");
            bool ok = true;
            for (std::uint64_t n = b_nmin; n <= b_nmax; ++n) {
                const BoundTriple t = sandwich(n);
                emit(out, t);
                ok = ok && t.sandwich_holds && (n < 2 || t.remainder_holds);
            }
            return ok ? kExitOk : kExitFailed;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "invalid input: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << '\n';
        return kExitFailed;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

}  // namespace overpart
