#pragma once

// JSON-emitting command-line front end.  Every subcommand prints a single
// CommandResult object; all numbers that are exact are emitted as strings
// ("p/q" for rationals) so golden tests can diff byte-exactly.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "staircase/selfcheck.hpp"

namespace staircase::cli {

using nlohmann::json;

struct CommandResult {
    std::string command;
    json inputs;
    json output;
    long elapsed_ms = 0;
    int exit_code = 0;
};

// ---- JSON encodings -------------------------------------------------------

inline json to_json(const Permutation& p) {
    return json{{"n", p.size()}, {"values", p.values}};
}

inline const char* label_name(CellLabel l) {
    switch (l) {
        case CellLabel::Av213: return "Av213";
        case CellLabel::Av132: return "Av132";
        default: return "Empty";
    }
}

inline json to_json(const GriddedPermutation& g) {
    json labels = json::array();
    for (const auto& col : g.labels) {
        json row = json::array();
        for (CellLabel l : col) row.push_back(label_name(l));
        labels.push_back(row);
    }
    return json{{"perm", to_json(g.perm)}, {"cols", g.cols}, {"rows", g.rows}, {"labels", labels}};
}

inline json to_json(const Domino& d) {
    return json{{"perm", to_json(d.perm)}, {"threshold", d.threshold}};
}

inline json to_json(const ArchConfiguration& c) {
    std::string sides;
    for (Side s : c.sides) sides += s == Side::Upper ? 'U' : 'L';
    json up = json::array(), low = json::array();
    for (auto [i, j] : c.upper.arcs) up.push_back(json::array({i, j}));
    for (auto [i, j] : c.lower.arcs) low.push_back(json::array({i, j}));
    return json{{"n", c.n}, {"sides", sides}, {"upper", up}, {"lower", low}};
}

inline json to_json(const Certificate& c) {
    return json{{"alpha", to_fraction_string(c.params.alpha)},
                {"beta", to_fraction_string(c.params.beta)},
                {"gamma", c.params.gamma},
                {"kappa", c.params.kappa},
                {"z0", c.params.z0},
                {"q0", c.q0},
                {"q_pole", c.q_pole},
                {"G", c.G},
                {"bound", c.bound},
                {"valid", c.valid},
                {"reason", c.reason}};
}

inline json series_to_json(const IntSeries& s) {
    json a = json::array();
    for (const BigInt& c : s.a) a.push_back(c.get_str());
    return a;
}

inline json series_to_json(const MarkedSeries& s) {
    json a = json::array();
    for (const IntPoly& p : s.a) {
        json row = json::array();
        for (int c = 0; c <= p.degree(); ++c) row.push_back(p.coeff(c).get_str());
        if (row.empty()) row.push_back("0");
        a.push_back(row);
    }
    return a;
}

// ---- series cache ---------------------------------------------------------

inline constexpr int kCacheFormatVersion = 1;

inline json compute_series_payload(const std::string& target, int order) {
    if (target == "domino") return series_to_json(domino_count_series(order));
    if (target == "leaves") return series_to_json(leaf_marked_series(order));
    if (target == "strips") return series_to_json(strip_marked_series(order));
    if (target == "split") return series_to_json(split_marked_series(order));
    throw std::invalid_argument("unknown series target: " + target);
}

inline json cached_series(const std::string& target, int order) {
    const char* dir = std::getenv("STAIRCASE_CACHE_DIR");
    if (!dir || !*dir) return compute_series_payload(target, order);
    std::string path =
        std::string(dir) + "/series-" + target + "-" + std::to_string(order) + ".json";
    {
        std::ifstream in(path);
        if (in) {
            json j;
            in >> j;
            if (j.value("format_version", 0) == kCacheFormatVersion && j.value("target", "") == target &&
                j.value("order", -1) == order && j.contains("coefficients"))
                return j["coefficients"];
        }
    }
    json coeffs = compute_series_payload(target, order);
    std::ofstream outf(path);
    if (outf)
        outf << json{{"format_version", kCacheFormatVersion},
                     {"target", target},
                     {"order", order},
                     {"coefficients", coeffs}};
    return coeffs;
}

// ---- command implementations ----------------------------------------------

struct GlobalOpts {
    bool pretty = false;
    int threads = 0;  // 0: use hardware concurrency
    int precision = 64;
    unsigned seed = 1;

    int effective_threads() const {
        if (threads > 0) return threads;
        unsigned hw = std::thread::hardware_concurrency();
        return hw ? static_cast<int>(hw) : 1;
    }
};

inline CommandResult run(const std::vector<std::string>& args) {
    CommandResult res;
    GlobalOpts g;

    CLI::App app{"staircase: bounds on the growth rate of 1324-avoiding permutations"};
    app.require_subcommand(1);
    app.add_flag("--pretty", g.pretty, "indent JSON output");
    app.add_option("--threads", g.threads, "worker threads for enumeration (default: cores)");
    app.add_option("--precision", g.precision, "floating mantissa: 64 or 128")
        ->check(CLI::IsMember({64, 128}));
    app.add_option("--seed", g.seed, "RNG seed for optimizer restarts");

    // avoid count
    auto* avoid = app.add_subcommand("avoid", "pattern avoidance counting");
    auto* avoid_count = avoid->add_subcommand("count", "count avoiders of a pattern");
    std::string pattern = "1324";
    int n = 0;
    avoid_count->add_option("--pattern", pattern, "pattern in one-line notation");
    avoid_count->add_option("--n", n, "permutation length")->required();

    // grid
    auto* grid = app.add_subcommand("grid", "greedy staircase gridding");
    std::string perm_text;
    grid->add_option("--perm", perm_text, "permutation in one-line notation")->required();

    // domino count | stats
    auto* domino = app.add_subcommand("domino", "domino enumeration and statistics");
    auto* domino_count = domino->add_subcommand("count", "count dominoes of a size");
    auto* domino_stats = domino->add_subcommand("stats", "leaf/empty-strip totals of a size");
    int dn = 0;
    domino_count->add_option("--n", dn, "domino size")->required();
    int sn = 0;
    domino_stats->add_option("--n", sn, "domino size")->required();

    // arch roundtrip
    auto* arch = app.add_subcommand("arch", "arch systems and configurations");
    auto* arch_rt = arch->add_subcommand("roundtrip", "exhaustive bijection round trips");
    int an = 0;
    arch_rt->add_option("--n", an, "point count")->required();

    // series
    auto* series = app.add_subcommand("series", "functional-equation series");
    std::string target = "domino";
    int order = 10;
    bool check_minpoly = false;
    series->add_option("--target", target, "domino, leaves, strips, or split")
        ->check(CLI::IsMember({"domino", "leaves", "strips", "split"}));
    series->add_option("--order", order, "truncation order")->required();
    series->add_flag("--check-minpoly", check_minpoly, "verify algebraic relations");

    // bounds upper | lower
    auto* bounds = app.add_subcommand("bounds", "growth-rate bounds");
    auto* upper = bounds->add_subcommand("upper", "injection-backed upper bound");
    int un = 6;
    upper->add_option("--n", un, "exhaustive injectivity ceiling");
    auto* lower = bounds->add_subcommand("lower", "lower bounds");
    bool simple = false, certify = false, optimize = false;
    std::string params_file;
    int budget = 2000;
    lower->add_flag("--simple", simple, "exact 81/8 identity and p_1");
    lower->add_flag("--certify", certify, "numeric certificate at given or default parameters");
    lower->add_flag("--optimize", optimize, "search gamma/kappa for the best certified bound");
    lower->add_option("--params", params_file, "JSON file with certificate parameters");
    lower->add_option("--budget", budget, "optimizer evaluation budget");

    // self-test
    auto* selftest = app.add_subcommand("self-test", "run the build-gating checks");
    std::string level = "quick";
    selftest->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        res.command = "usage";
        res.output = json{{"error", e.what()}, {"synopsis", app.help()}};
        res.exit_code = 2;
        return res;
    }

    auto started = std::chrono::steady_clock::now();
    try {
        if (avoid_count->parsed()) {
            res.command = "avoid count";
            res.inputs = {{"pattern", pattern}, {"n", n}};
            Permutation p = Permutation::from_text(pattern);
            res.output = {{"count", count_avoiders(n, p).get_str()}};
        } else if (grid->parsed()) {
            res.command = "grid";
            res.inputs = {{"perm", perm_text}};
            Permutation p = Permutation::from_text(perm_text);
            GriddedPermutation gg = greedy_grid(p);
            json j = to_json(gg);
            j["cells_used"] = cells_used(gg);
            j["valid"] = validate_gridding(gg);
            res.output = j;
        } else if (domino_count->parsed()) {
            res.command = "domino count";
            res.inputs = {{"n", dn}, {"threads", g.effective_threads()}};
            BigInt brute = count_dominoes_brute(dn, g.effective_threads());
            BigInt formula = domino_count_formula(dn);
            res.output = {{"count", brute.get_str()},
                          {"formula", formula.get_str()},
                          {"match", brute == formula}};
        } else if (domino_stats->parsed()) {
            res.command = "domino stats";
            res.inputs = {{"n", sn}};
            BigInt leaves = 0, empties = 0, total = 0;
            // totals for the top cell; the bottom cell matches by rotation
            enumerate_dominoes(sn, [&](const Domino& d) {
                DominoStats s = stats(d);
                leaves += s.top.leaves;
                empties += s.top.empty_medial;
                total += 1;
                return true;
            });
            res.output = {{"dominoes", total.get_str()},
                          {"top_leaf_total", leaves.get_str()},
                          {"top_empty_strip_total", empties.get_str()},
                          {"leaf_total_formula", leaf_total_formula(sn).get_str()},
                          {"empty_strip_total_formula", strip_total_formula(sn).get_str()},
                          {"expected_leaves", to_fraction_string(expected_leaves(sn))},
                          {"expected_empty_strips", to_fraction_string(expected_empty_strips(sn))},
                          {"match", leaves == leaf_total_formula(sn) &&
                                        empties == strip_total_formula(sn)}};
        } else if (arch_rt->parsed()) {
            res.command = "arch roundtrip";
            res.inputs = {{"n", an}};
            long systems = 0;
            bool lambda_pi_ok = true;
            enumerate_arch_systems(an, [&](const ArchSystem& a) {
                ++systems;
                if (!(lambda_map(pi_213(a)) == a) || !(lambda_map(pi_132(a)) == a))
                    lambda_pi_ok = false;
                return true;
            });
            bool config_ok = true;
            long pattern_free = 0;
            enumerate_arch_configs(an, [&](const ArchConfiguration& c) {
                if (has_forbidden_pattern(c)) return true;
                ++pattern_free;
                if (!(arch_config_of_domino(domino_of_arch_config(c)) == c)) config_ok = false;
                return true;
            });
            res.output = {{"systems", systems},
                          {"catalan", catalan(an).get_str()},
                          {"lambda_pi_roundtrip", lambda_pi_ok},
                          {"pattern_free_configurations", pattern_free},
                          {"domino_formula", domino_count_formula(an).get_str()},
                          {"config_domino_roundtrip", config_ok},
                          {"ok", lambda_pi_ok && config_ok && BigInt(systems) == catalan(an) &&
                                     BigInt(pattern_free) == domino_count_formula(an)}};
        } else if (series->parsed()) {
            res.command = "series";
            res.inputs = {{"target", target}, {"order", order}};
            if (order < 0 || order > 64)
                throw std::invalid_argument("order must lie in 0..64");
            json out;
            out["coefficients"] = cached_series(target, order);
            if (check_minpoly) {
                json checks;
                if (target == "domino") {
                    IntSeries s = domino_count_series(order);
                    checks["cubic"] = check_minimal_polynomial(s, domino_minimal_cubic());
                    checks["rejected_quadratic"] =
                        check_minimal_polynomial(s, domino_quadratic_candidate());
                } else if (target == "leaves") {
                    MarkedSeries s = leaf_marked_series(order);
                    checks["first_moment_cubic"] =
                        check_minimal_polynomial(mark_derivative_at_one(s, 1), leaf_total_cubic());
                    checks["second_moment_cubic"] = check_minimal_polynomial(
                        mark_derivative_at_one(s, 2), leaf_second_moment_cubic());
                } else if (target == "strips") {
                    MarkedSeries s = strip_marked_series(order);
                    checks["first_moment_cubic"] =
                        check_minimal_polynomial(mark_derivative_at_one(s, 1), strip_total_cubic());
                    checks["second_moment_cubic"] = check_minimal_polynomial(
                        mark_derivative_at_one(s, 2), strip_second_moment_cubic());
                } else {  // split: no algebraic relation is recorded; cross-check row sums
                    MarkedSeries s = split_marked_series(order);
                    bool ok = true;
                    for (int i = 0; i <= order; ++i) {
                        BigInt row = 0;
                        for (int t = 0; t <= i; ++t) row += s.coeff(i).coeff(t);
                        if (row != domino_count_formula(i)) ok = false;
                    }
                    checks["row_sums_match_domino_counts"] = ok;
                }
                out["checks"] = checks;
            }
            res.output = out;
        } else if (upper->parsed()) {
            res.command = "bounds upper";
            res.inputs = {{"n", un}};
            bool injective = true;
            Permutation p1324 = Permutation::from_text("1324");
            for (int m = 0; m <= un && injective; ++m) {
                std::set<SplitImage> images;
                long total = 0;
                enumerate_avoiders(m, p1324, [&](const Permutation& s) {
                    SplitImage img = split_avoider(s);
                    if (!(unsplit(img) == s)) injective = false;
                    images.insert(img);
                    ++total;
                    return injective;
                });
                injective = injective && static_cast<long>(images.size()) == total;
            }
            res.output = {{"bound", to_fraction_string(upper_bound_value())},
                          {"injection_checked_to", un},
                          {"injective", injective}};
            if (!injective) res.exit_code = 1;
        } else if (lower->parsed()) {
            res.command = "bounds lower";
            if (simple + certify + optimize != 1)
                throw CLI::ValidationError("bounds lower",
                                           "choose exactly one of --simple/--certify/--optimize");
            if (simple) {
                res.inputs = {{"mode", "simple"}};
                SimpleLowerBound s = simple_lower_bound_identity();
                MarkedSeries split = split_marked_series(28);
                res.output = {{"bound", to_fraction_string(s.value)},
                              {"pow3_sum", to_fraction_string(s.pow3_sum)},
                              {"pow2_sum", to_fraction_string(s.pow2_sum)},
                              {"identity_ok", s.ok},
                              {"balanced_14", split.coeff(28).coeff(14).get_str()},
                              {"p_1", p_k_count(1, split).get_str()}};
            } else {
                BoundParams p;
                if (!params_file.empty()) {
                    std::ifstream in(params_file);
                    if (!in) throw std::invalid_argument("cannot read " + params_file);
                    json j;
                    in >> j;
                    if (j.contains("alpha")) p.alpha = parse_fraction(j["alpha"].get<std::string>());
                    if (j.contains("beta")) p.beta = parse_fraction(j["beta"].get<std::string>());
                    if (j.contains("gamma")) p.gamma = j["gamma"].get<double>();
                    if (j.contains("kappa")) p.kappa = j["kappa"].get<double>();
                    if (j.contains("z0")) p.z0 = j["z0"].get<double>();
                }
                using Quad = boost::multiprecision::cpp_bin_float_quad;
                if (certify) {
                    res.inputs = {{"mode", "certify"}, {"precision", g.precision}};
                    Certificate c = g.precision == 128 ? certify_lower_bound<Quad>(p)
                                                       : certify_lower_bound<double>(p);
                    res.output = to_json(c);
                    if (!c.valid) res.exit_code = 1;
                } else {
                    res.inputs = {{"mode", "optimize"},
                                  {"budget", budget},
                                  {"precision", g.precision},
                                  {"seed", g.seed}};
                    Certificate c = g.precision == 128
                                        ? optimize_lower_bound<Quad>(p, budget, g.seed)
                                        : optimize_lower_bound<double>(p, budget, g.seed);
                    res.output = to_json(c);
                    if (!c.valid) res.exit_code = 1;
                }
            }
        } else if (selftest->parsed()) {
            res.command = "self-test";
            res.inputs = {{"level", level}, {"threads", g.effective_threads()}};
            auto criteria = run_criteria(level == "full" ? CheckLevel::Full : CheckLevel::Quick,
                                         g.effective_threads());
            json arr = json::array();
            bool all = true;
            for (const auto& c : criteria) {
                arr.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
                all = all && c.pass;
            }
            res.output = {{"criteria", arr}, {"all_pass", all}};
            if (!all) res.exit_code = 1;
        }
    } catch (const CLI::ParseError& e) {
        res.output = json{{"error", e.what()}, {"synopsis", app.help()}};
        res.exit_code = 2;
    } catch (const std::exception& e) {
        res.output = json{{"error", e.what()}};
        res.exit_code = 1;
    }
    res.elapsed_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                           std::chrono::steady_clock::now() - started)
                                           .count());
    // stash the pretty flag for the printer
    res.inputs["__pretty"] = g.pretty;
    return res;
}

inline int run_and_print(const std::vector<std::string>& args, std::ostream& os) {
    CommandResult res = run(args);
    bool pretty = res.inputs.is_object() && res.inputs.value("__pretty", false);
    if (res.inputs.is_object()) res.inputs.erase("__pretty");
    json j{{"command", res.command},
           {"inputs", res.inputs},
           {"output", res.output},
           {"elapsed_ms", res.elapsed_ms}};
    os << (pretty ? j.dump(2) : j.dump()) << "\n";
    return res.exit_code;
}

}  // namespace staircase::cli
