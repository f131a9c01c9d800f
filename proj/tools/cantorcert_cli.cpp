// Command-line front end: construction, verification, independence checks,
// ternary-set utilities, sigma digits, homeomorphism transport, greedy closure
// pairs, field certificates, and coordinate export for external plotters.
//
// Exit codes: 0 success, 1 verification failure or I/O error, 2 usage error.

#include "cantorcert/builder.hpp"
#include "cantorcert/fields.hpp"
#include "cantorcert/homeo.hpp"
#include "cantorcert/json_io.hpp"
#include "cantorcert/polyenum.hpp"
#include "cantorcert/ternary.hpp"
#include "cantorcert/vonneumann.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

namespace cc = cantorcert;

namespace {

long default_budget() {
    if (const char* env = std::getenv("CANTORCERT_BUDGET")) {
        try {
            const long b = std::stol(env);
            if (b > 0) return b;
        } catch (...) {
        }
        std::cerr << "warning: ignoring malformed CANTORCERT_BUDGET\n";
    }
    return 100000;
}

cc::jsonio::LoadedTree load_tree(const std::string& path) {
    return cc::jsonio::tree_from_json(cc::jsonio::read_file(path));
}

std::vector<cc::Rational> parse_point_list(const std::string& csv) {
    std::vector<cc::Rational> pts;
    std::istringstream is(csv);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (!item.empty()) pts.push_back(cc::parse_rational(item));
    }
    return pts;
}

int run_build(int depth, int nmax, long budget, long poly_prefix, const std::string& mode_name,
              const std::string& target_path, const std::string& out_path) {
    const auto mode = cc::builder::mode_from_name(mode_name);
    std::optional<cc::builder::CantorApproximation> target;
    if (mode == cc::builder::Mode::target_embedded) {
        if (target_path.empty()) {
            std::cerr << "build: target mode requires --target\n";
            return 2;
        }
        target = load_tree(target_path).approx;
    }
    cc::builder::BuilderCaps caps;
    caps.k_max = depth;
    caps.n_max = nmax;
    caps.budget = budget;
    caps.poly_prefix = poly_prefix;

    auto approx = cc::builder::new_approximation(mode, target, caps);
    while (approx.depth() < depth) approx = cc::builder::extend_level(approx);
    if (depth == 1)
        std::cerr << "note: a depth-1 tree carries no certificates; extend to depth >= 2\n";

    const std::string ledger_path = out_path + ".ledger.jsonl";
    cc::jsonio::write_file(out_path, cc::jsonio::tree_to_json(approx, ledger_path));
    cc::jsonio::write_file(ledger_path, cc::jsonio::ledger_to_jsonl(approx.ledger));
    std::cout << "built depth-" << approx.depth() << " " << mode_name << " tree, "
              << approx.ledger.size() << " certificates\n"
              << "tree:   " << out_path << "\n"
              << "ledger: " << ledger_path << "\n";
    return 0;
}

// The recorded ledger path is tried as-is, then by name next to the tree file.
std::string resolve_ledger_path(const std::string& tree_path, const std::string& ledger_file) {
    try {
        cc::jsonio::read_file(ledger_file);
        return ledger_file;
    } catch (const std::exception&) {
        const auto tree_slash = tree_path.find_last_of('/');
        if (tree_slash == std::string::npos) throw;
        const auto ledger_slash = ledger_file.find_last_of('/');
        const std::string base =
            ledger_slash == std::string::npos ? ledger_file : ledger_file.substr(ledger_slash + 1);
        return tree_path.substr(0, tree_slash + 1) + base;
    }
}

int run_verify(const std::string& tree_path, int stage, int nmax) {
    auto loaded = load_tree(tree_path);
    const auto& a = loaded.approx;

    const auto problems = cc::builder::check_invariants(a);
    for (const auto& p : problems) std::cout << "invariant violation: " << p << "\n";

    bool ledger_ok = true;
    std::size_t replayed = 0;
    try {
        const auto ledger = cc::jsonio::ledger_from_jsonl(
            cc::jsonio::read_file(resolve_ledger_path(tree_path, loaded.ledger_file)));
        for (const auto& cert : ledger) {
            ++replayed;
            // the recorded box must be exactly the tree's intervals
            for (std::size_t i = 0; i < cert.phi.size(); ++i) {
                const auto& iv = a.levels.at(static_cast<std::size_t>(cert.level - 1))
                                     .at(static_cast<std::size_t>(cert.phi[i] - 1));
                if (iv != cert.box.factors.at(i)) {
                    std::cout << "ledger mismatch: entry " << replayed
                              << " box differs from tree intervals\n";
                    ledger_ok = false;
                }
            }
            const auto poly = cc::polyenum::enumerate(cert.n_vars, cert.m_index);
            const auto enclosure = poly.evaluate_interval(cert.box);
            if (enclosure.contains_zero() || !cert.certified) {
                std::cout << "ledger replay failure: entry " << replayed << " (n=" << cert.n_vars
                          << ", m=" << cert.m_index << ")\n";
                ledger_ok = false;
            }
        }
    } catch (const std::exception& e) {
        std::cout << "ledger unavailable: " << e.what() << "\n";
        ledger_ok = false;
    }

    const int use_stage = stage > 0 ? stage : a.depth();
    const int use_nmax = nmax > 0 ? nmax : a.caps.n_max;
    const auto report = cc::builder::verify_conditions(a, use_stage, use_nmax);
    std::cout << "conditions checked: " << report.checked << " (stages 1.." << use_stage
              << ", n <= " << use_nmax << "), ledger entries replayed: " << replayed << "\n";
    for (const auto& f : report.failures) {
        std::cout << "condition failure: stage " << f.level << " n=" << f.n << " m=" << f.m
                  << " enclosure [" << cc::to_string(f.enclosure.lo) << ", "
                  << cc::to_string(f.enclosure.hi) << "]\n";
    }
    const bool ok = problems.empty() && ledger_ok && report.all_certified();
    std::cout << (ok ? "VERIFIED" : "FAILED") << "\n";
    return ok ? 0 : 1;
}

int run_independence(const std::string& tree_path, const std::string& points_csv,
                     const std::string& rule_name, int nmax, long mmax) {
    std::vector<cc::Rational> points;
    if (!tree_path.empty()) {
        const auto loaded = load_tree(tree_path);
        const auto rule = (rule_name == "left") ? cc::builder::SampleRule::left_endpoint
                                                : cc::builder::SampleRule::midpoint;
        points = cc::builder::sample_points(loaded.approx, rule);
    }
    for (const auto& p : parse_point_list(points_csv)) points.push_back(p);
    if (points.empty()) {
        std::cerr << "independence: no points (need --tree or --points)\n";
        return 2;
    }
    const auto report = cc::builder::independence_check(points, nmax, cc::Integer(mmax));
    std::cout << "points: " << points.size() << ", exact evaluations: " << report.evaluations
              << ", annihilations: " << report.zeros.size() << "\n";
    for (const auto& z : report.zeros) {
        std::cout << "zero: n=" << z.n << " m=" << z.m << " poly="
                  << cc::polyenum::enumerate(z.n, z.m).to_string() << " at (";
        for (std::size_t i = 0; i < z.tuple.size(); ++i)
            std::cout << (i ? ", " : "") << cc::to_string(z.tuple[i]);
        std::cout << ")\n";
    }
    return report.zeros.empty() ? 0 : 1;
}

int run_ternary(const CLI::App& cmd, int k, long long j, const std::string& decompose_y, int depth,
                bool partition_squares, const std::string& pattern_path, bool scan_squares,
                long long test_depth) {
    if (cmd.count("--interval-k")) {
        try {
            const auto iv = cc::ternary::standard_interval(k, j);
            std::cout << "[" << cc::to_string(iv.lo) << ", " << cc::to_string(iv.hi) << "]\n";
            return 0;
        } catch (const std::logic_error& e) {
            std::cerr << "ternary: " << e.what() << "\n";
            return 2;
        }
    }
    if (!decompose_y.empty()) {
        const auto d = cc::ternary::sum_decompose(cc::parse_rational(decompose_y), depth);
        std::cout << "first:  " << cc::jsonio::digits_to_json(d.a);
        std::cout << "second: " << cc::jsonio::digits_to_json(d.b);
        std::cout << "remainder: " << cc::to_string(d.remainder) << "\n";
        return 0;
    }
    if (partition_squares || !pattern_path.empty()) {
        cc::ternary::TernaryDigits pattern;
        if (partition_squares)
            pattern = cc::ternary::materialize_even_pattern(cc::vonneumann::select_irrational_cell(),
                                                            depth);
        else
            pattern = cc::jsonio::digits_from_json(cc::jsonio::read_file(pattern_path));
        for (const auto& iv : cc::ternary::partition_cell(pattern, depth))
            std::cout << "[" << cc::to_string(iv.lo) << ", " << cc::to_string(iv.hi) << "]\n";
        return 0;
    }
    if (scan_squares) {
        const auto verdict =
            cc::ternary::cell_contains_rational(cc::vonneumann::select_irrational_cell(), test_depth);
        if (verdict.yes)
            std::cout << "yes (period " << verdict.period << ", preperiod " << verdict.preperiod
                      << ")\n";
        else
            std::cout << "no-up-to-depth (" << test_depth << ")\n";
        return 0;
    }
    std::cerr << "ternary: choose one of --interval-k/--interval-j, --decompose, "
                 "--partition-squares/--pattern, --scan-squares\n";
    return 2;
}

int run_sigma(const std::string& x_text, const std::string& probe_csv, long long terms,
              unsigned cap_bits) {
    if (!probe_csv.empty()) {
        const auto xs = parse_point_list(probe_csv);
        const auto report = cc::vonneumann::injectivity_probe(xs, terms, cap_bits);
        for (const auto& p : report.pairs) {
            std::cout << cc::to_string(p.first) << " vs " << cc::to_string(p.second) << ": "
                      << (p.distinct ? "distinct" : "indistinguishable at this depth") << "\n";
        }
        return report.all_distinct() ? 0 : 1;
    }
    if (x_text.empty()) {
        std::cerr << "sigma: need --x or --probe\n";
        return 2;
    }
    const auto v = cc::vonneumann::sigma_digits(cc::parse_rational(x_text), terms, cap_bits);
    std::cout << cc::jsonio::sigma_to_json(v);
    return 0;
}

int run_homeo(const std::string& from_path, const std::string& to_path,
              const std::string& out_path) {
    const auto src = load_tree(from_path).approx;
    const auto dst = load_tree(to_path).approx;
    const auto g0 = cc::homeo::gaps_of(src);
    const auto g1 = cc::homeo::gaps_of(dst);
    const auto pairing = cc::homeo::order_isomorphism(g0, g1);
    const auto f = cc::homeo::increasing_bijection(pairing, g0, g1);
    cc::jsonio::write_file(out_path, cc::jsonio::plmap_to_json(f));
    std::cout << "map with " << f.breakpoints.size() << " breakpoints written to " << out_path
              << "\n";
    return 0;
}

int run_greedy(const std::string& input_path, const std::string& out_path, int audit_samples,
               std::uint64_t seed) {
    const auto input = cc::jsonio::greedy_input_from_json(cc::jsonio::read_file(input_path));
    if (audit_samples > 0) {
        std::cout << "audit seed: " << seed << "\n";
        const auto audit = cc::closure::audit_closure(input.system, audit_samples, seed);
        for (const auto& v : audit.violations) std::cout << "closure axiom violation: " << v << "\n";
        if (!audit.clean()) return 1;
    }
    const auto outcome = cc::closure::greedy_pair_build(input.system, input.family);
    const auto text = cc::jsonio::greedy_outcome_to_json(outcome);
    if (!out_path.empty())
        cc::jsonio::write_file(out_path, text);
    else
        std::cout << text;
    if (outcome.ok) {
        cc::closure::ElementSet both = outcome.a;
        both.insert(outcome.b.begin(), outcome.b.end());
        const auto witness = cc::closure::independence_witness(input.system, both);
        std::cout << "independent: " << (witness.independent ? "yes" : "NO") << "\n";
        return witness.independent ? 0 : 1;
    }
    std::cout << "family member " << outcome.failed_index << " exhausted at step '"
              << outcome.failed_step << "'\n";
    return 0;
}

int run_fields(int t_count, const std::string& out_path) {
    std::vector<std::string> s_syms = {"s1"};
    std::vector<std::string> t_syms;
    for (int i = 1; i <= t_count; ++i) t_syms.push_back("t" + std::to_string(i));

    // all subsets of T
    std::vector<std::set<std::string>> subsets;
    for (unsigned long mask = 0; mask < (1ul << t_count); ++mask) {
        std::set<std::string> u;
        for (int i = 0; i < t_count; ++i)
            if ((mask >> i) & 1ul) u.insert(t_syms[static_cast<std::size_t>(i)]);
        subsets.push_back(std::move(u));
    }

    std::ostringstream out;
    long certified = 0, equal = 0;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        for (std::size_t j = 0; j < subsets.size(); ++j) {
            const auto gv = cc::fields::g_map(s_syms, t_syms, subsets[i]);
            const auto gw = cc::fields::g_map(s_syms, t_syms, subsets[j]);
            const auto outcome = cc::fields::distinctness_certificate(gv, gw);
            if (outcome.equal)
                ++equal;
            else if (outcome.certificate && outcome.certificate->verified())
                ++certified;
            else {
                std::cout << "certificate failed for pair (" << i << "," << j << ")\n";
                return 1;
            }
            if (i < j) out << cc::jsonio::distinctness_to_json(outcome);
        }
    }
    if (!out_path.empty()) cc::jsonio::write_file(out_path, out.str());

    cc::polyenum::IntPolynomial cubic(1);
    cubic.set_term({3}, 1);
    cubic.set_term({0}, -2);
    std::cout << "eisenstein(X^3-2, 2): " << (cc::fields::eisenstein_check(cubic, 2) ? "true" : "false")
              << "\n";
    std::cout << "pairs: " << certified << " certified distinct, " << equal << " equal\n";
    return 0;
}

int run_export(const std::string& tree_path, const std::string& what,
               const std::string& out_path) {
    const auto a = load_tree(tree_path).approx;
    std::ostringstream os;
    if (what == "intervals") {
        os << "level\tindex\tlo\thi\n";
        for (int k = 1; k <= a.depth(); ++k) {
            const auto& level = a.levels[static_cast<std::size_t>(k - 1)];
            for (std::size_t j = 0; j < level.size(); ++j)
                os << k << "\t" << (j + 1) << "\t" << cc::to_string(level[j].lo) << "\t"
                   << cc::to_string(level[j].hi) << "\n";
        }
    } else if (what == "gaps") {
        const auto g = cc::homeo::gaps_of(a);
        os << "index\tlo\thi\n";
        for (std::size_t i = 0; i < g.gaps.size(); ++i)
            os << (i + 1) << "\t" << cc::to_string(g.gaps[i].first) << "\t"
               << cc::to_string(g.gaps[i].second) << "\n";
    } else {
        std::cerr << "export: --what must be intervals or gaps\n";
        return 2;
    }
    cc::jsonio::write_file(out_path, os.str());
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified Cantor-set constructions over exact rational arithmetic"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "construct a certified nested-interval tree");
    int depth = 3, nmax = 2;
    long budget = default_budget(), poly_prefix = 50;
    std::string mode = "standard", target_path, out_path = "tree.json";
    build->add_option("--depth", depth, "final depth (levels)")->check(CLI::Range(1, 16));
    build->add_option("--nmax", nmax, "arity cap for avoidance conditions")->check(CLI::Range(1, 6));
    build->add_option("--budget", budget, "node budget per level extension");
    build->add_option("--poly-prefix", poly_prefix, "enumeration prefix certified on the final level");
    build->add_option("--mode", mode, "standard|free|target");
    build->add_option("--target", target_path, "target tree file (target mode)");
    build->add_option("--out", out_path, "output tree file")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "replay certificates and invariants for a tree");
    std::string verify_tree;
    int verify_stage = 0, verify_nmax = 0;
    verify->add_option("--tree", verify_tree)->required();
    verify->add_option("--m", verify_stage, "verify stages 1..m (default: depth)");
    verify->add_option("--nmax", verify_nmax, "arity cap (default: tree caps)");

    // independence
    auto* indep = app.add_subcommand("independence", "exact brute-force annihilation oracle");
    std::string indep_tree, indep_points, indep_rule = "midpoint";
    int indep_nmax = 2;
    long indep_mmax = 50;
    indep->add_option("--tree", indep_tree, "sample one point per deepest interval");
    indep->add_option("--points", indep_points, "comma-separated extra points (p/q)");
    indep->add_option("--rule", indep_rule, "midpoint|left");
    indep->add_option("--nmax", indep_nmax)->check(CLI::Range(1, 4));
    indep->add_option("--mmax", indep_mmax);

    // ternary
    auto* ter = app.add_subcommand("ternary", "middle-thirds utilities");
    int ter_k = 1, ter_depth = 3;
    long long ter_j = 1, ter_test_depth = 100;
    std::string ter_decompose, ter_pattern;
    bool ter_partition_squares = false, ter_scan_squares = false;
    ter->add_option("--interval-k", ter_k, "stage of a standard interval");
    ter->add_option("--interval-j", ter_j, "index of a standard interval");
    ter->add_option("--decompose", ter_decompose, "y in [0,2] to split into two set members");
    ter->add_option("--depth", ter_depth, "digit depth");
    ter->add_flag("--partition-squares", ter_partition_squares,
                  "partition cell of the squares pattern");
    ter->add_option("--pattern", ter_pattern, "sparse-digit JSON file for partition cell");
    ter->add_flag("--scan-squares", ter_scan_squares, "periodicity scan of the squares pattern");
    ter->add_option("--test-depth", ter_test_depth, "digits scanned for periodicity");

    // sigma
    auto* sigma = app.add_subcommand("sigma", "sparse digit image of the sigma map");
    std::string sigma_x, sigma_probe;
    long long sigma_terms = 3;
    unsigned sigma_cap = 100;
    sigma->add_option("--x", sigma_x, "positive rational p/q");
    sigma->add_option("--probe", sigma_probe, "comma-separated rationals for pairwise probe");
    sigma->add_option("--terms", sigma_terms)->check(CLI::Range(1LL, 64LL));
    sigma->add_option("--cap-bits", sigma_cap, "position cap 2^bits");

    // homeo
    auto* homeo_cmd = app.add_subcommand("homeo", "increasing bijection between two trees");
    std::string homeo_from, homeo_to, homeo_out = "map.json";
    homeo_cmd->add_option("--from", homeo_from)->required();
    homeo_cmd->add_option("--to", homeo_to)->required();
    homeo_cmd->add_option("--out", homeo_out)->required();

    // greedy
    auto* greedy = app.add_subcommand("greedy", "greedy disjoint independent pair over a closure system");
    std::string greedy_input, greedy_out;
    int greedy_audit = 0;
    std::uint64_t greedy_seed = 1;
    greedy->add_option("--input", greedy_input)->required();
    greedy->add_option("--out", greedy_out);
    greedy->add_option("--audit", greedy_audit, "sampled subsets for the closure-axiom audit");
    greedy->add_option("--seed", greedy_seed, "audit sampling seed (printed)");

    // fields
    auto* fields_cmd = app.add_subcommand("fields", "distinctness certificates for generator sets");
    int fields_t = 3;
    std::string fields_out;
    fields_cmd->add_option("--t-count", fields_t)->check(CLI::Range(1, 6));
    fields_cmd->add_option("--out", fields_out);

    // export
    auto* exp = app.add_subcommand("export", "coordinate tables for external plotters");
    std::string exp_tree, exp_what = "intervals", exp_out;
    exp->add_option("--tree", exp_tree)->required();
    exp->add_option("--what", exp_what, "intervals|gaps");
    exp->add_option("--out", exp_out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (build->parsed())
            return run_build(depth, nmax, budget, poly_prefix, mode, target_path, out_path);
        if (verify->parsed()) return run_verify(verify_tree, verify_stage, verify_nmax);
        if (indep->parsed())
            return run_independence(indep_tree, indep_points, indep_rule, indep_nmax, indep_mmax);
        if (ter->parsed())
            return run_ternary(*ter, ter_k, ter_j, ter_decompose, ter_depth, ter_partition_squares,
                               ter_pattern, ter_scan_squares, ter_test_depth);
        if (sigma->parsed()) return run_sigma(sigma_x, sigma_probe, sigma_terms, sigma_cap);
        if (homeo_cmd->parsed()) return run_homeo(homeo_from, homeo_to, homeo_out);
        if (greedy->parsed()) return run_greedy(greedy_input, greedy_out, greedy_audit, greedy_seed);
        if (fields_cmd->parsed()) return run_fields(fields_t, fields_out);
        if (exp->parsed()) return run_export(exp_tree, exp_what, exp_out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
