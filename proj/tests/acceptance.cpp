// Acceptance suite: runs every stated criterion end to end and prints one
// PASS/FAIL line per criterion. Exit code 0 iff all criteria pass.

#include "cantorcert/builder.hpp"
#include "cantorcert/fields.hpp"
#include "cantorcert/homeo.hpp"
#include "cantorcert/json_io.hpp"
#include "cantorcert/polyenum.hpp"
#include "cantorcert/ternary.hpp"
#include "cantorcert/vonneumann.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <sys/wait.h>

#ifndef CANTORCERT_CLI_PATH
#error "CANTORCERT_CLI_PATH must be defined"
#endif

using namespace cantorcert;

namespace {

const std::string kCli = CANTORCERT_CLI_PATH;
const std::string kDir = "/tmp/cantorcert_acceptance";

Rational q(long long n, long long d = 1) { return Rational(Integer(n), Integer(d)); }

int run_cli(const std::string& args) {
    const std::string cmd = kCli + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

struct Suite {
    int failures = 0;

    void run(int index, const std::string& title, const std::function<void()>& body) {
        try {
            body();
            std::cout << "PASS criterion " << index << ": " << title << "\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "FAIL criterion " << index << ": " << title << " -- " << e.what() << "\n";
        }
    }
};

void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

builder::CantorApproximation build_free(int depth) {
    builder::BuilderCaps caps;
    caps.k_max = depth;
    caps.n_max = 2;
    caps.budget = 200000;
    caps.poly_prefix = 50;
    auto a = builder::new_approximation(builder::Mode::free_form, std::nullopt, caps);
    while (a.depth() < depth) a = builder::extend_level(a);
    return a;
}

} // namespace

int main() {
    if (std::system(("rm -rf " + kDir + " && mkdir -p " + kDir).c_str()) != 0) {
        std::cerr << "cannot reset " << kDir << "\n";
        return 1;
    }
    Suite suite;
    const std::string tree_path = kDir + "/tree.json";

    // ------------------------------------------------------------------ 1
    suite.run(1, "construction soundness: depth-3 build under 60 s, verify replays clean", [&] {
        const auto t0 = std::chrono::steady_clock::now();
        require(run_cli("build --depth 3 --nmax 2 --budget 100000 --mode standard --out " +
                        tree_path) == 0,
                "build exited nonzero");
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        require(secs < 60.0, "build took " + std::to_string(secs) + " s");
        require(run_cli("verify --tree " + tree_path + " --m 3 --nmax 2") == 0,
                "verify exited nonzero");

        const auto loaded = jsonio::tree_from_json(jsonio::read_file(tree_path));
        require(loaded.approx.certified_through == 3, "stages 1..3 not certified");
        require(builder::check_invariants(loaded.approx).empty(), "structural invariants violated");
        const auto report = builder::verify_conditions(loaded.approx, 3, 2);
        require(report.all_certified(), "re-derived conditions failed");
        const auto ledger = jsonio::ledger_from_jsonl(jsonio::read_file(loaded.ledger_file));
        require(!ledger.empty(), "empty ledger");
        for (const auto& cert : ledger) {
            require(cert.certified, "uncertified ledger entry");
            const auto poly = polyenum::enumerate(cert.n_vars, cert.m_index);
            require(!poly.evaluate_interval(cert.box).contains_zero(), "ledger replay failure");
        }
    });

    // ------------------------------------------------------------------ 2
    suite.run(2, "independence oracle: zero annihilations on samples, one on the control pair", [&] {
        const auto loaded = jsonio::tree_from_json(jsonio::read_file(tree_path));
        const auto pts = builder::sample_points(loaded.approx, builder::SampleRule::midpoint);
        const auto clean = builder::independence_check(pts, 2, Integer(50));
        require(clean.zeros.empty(),
                "found " + std::to_string(clean.zeros.size()) + " annihilations");

        polyenum::IntPolynomial witness(2);
        witness.set_term({1, 0}, 1);
        witness.set_term({0, 1}, 1);
        witness.set_term({0, 0}, -1);
        const Integer m_witness = polyenum::index_of(witness);
        const auto control = builder::independence_check({q(1, 3), q(2, 3)}, 2, m_witness);
        require(control.zeros.size() == 1, "control produced " +
                                               std::to_string(control.zeros.size()) + " zeros");
        require(control.zeros[0].n == 2 && control.zeros[0].m == m_witness,
                "control zero at the wrong index");
    });

    // ------------------------------------------------------------------ 3
    suite.run(3, "standard embedding: every interval inside its middle-thirds host", [&] {
        require(ternary::standard_interval(1, 1) == RationalInterval(q(0), q(1, 3)),
                "host (1,1) mismatch");
        require(ternary::standard_interval(2, 3) == RationalInterval(q(2, 3), q(7, 9)),
                "host (2,3) mismatch");
        require(ternary::standard_interval(2, 4) == RationalInterval(q(8, 9), q(1)),
                "host (2,4) mismatch");
        const auto loaded = jsonio::tree_from_json(jsonio::read_file(tree_path));
        for (int k = 1; k <= 3; ++k) {
            const auto& level = loaded.approx.levels.at(static_cast<std::size_t>(k - 1));
            for (std::size_t j = 0; j < level.size(); ++j)
                require(ternary::standard_interval(k, static_cast<long long>(j + 1))
                            .contains(level[j]),
                        "interval escapes its host at level " + std::to_string(k));
        }
    });

    // ------------------------------------------------------------------ 4
    suite.run(4, "finite partition: 8 disjoint cells covering the depth-6 standard tree", [&] {
        const int depth = 3;
        std::set<std::pair<Rational, Rational>> expected;
        for (long long j = 1; j <= (1LL << (2 * depth)); ++j) {
            const auto iv = ternary::standard_interval(2 * depth, j);
            expected.insert({iv.lo, iv.hi});
        }
        std::set<std::pair<Rational, Rational>> got;
        int cells = 0;
        for (unsigned long mask = 0; mask < (1ul << depth); ++mask) {
            ternary::TernaryDigits x;
            for (int i = 0; i < depth; ++i)
                if ((mask >> i) & 1ul) x.set_digit(2 * (i + 1), 2);
            ++cells;
            for (const auto& iv : ternary::partition_cell(x, depth))
                require(got.insert({iv.lo, iv.hi}).second, "cells overlap");
        }
        require(cells == 8, "expected 8 cells");
        require(got == expected, "union differs from the depth-6 standard tree");
    });

    // ------------------------------------------------------------------ 5
    suite.run(5, "sum decomposition succeeds for every y = k/3^5 within 5 s", [&] {
        const auto t0 = std::chrono::steady_clock::now();
        const Integer den = pow3(5);
        for (Integer k = 0; k <= 2 * den; ++k) {
            const Rational y(k, den);
            const auto r = ternary::sum_decompose(y, 5);
            require(ternary::value_of(r.a, 5) + ternary::value_of(r.b, 5) + r.remainder == y,
                    "recomposition failed at k=" + k.str());
            require(r.a.is_cantor_member() && r.b.is_cantor_member(), "digit outside {0,2}");
            const bool exact = (k % 2 == 0) && (k <= 2 * den - 2);
            require((r.remainder == 0) == exact, "remainder not minimal at k=" + k.str());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        require(secs < 5.0, "took " + std::to_string(secs) + " s");
    });

    // ------------------------------------------------------------------ 6
    suite.run(6, "sigma digits match independently computed positions and separate", [&] {
        const std::vector<Rational> xs = {q(1, 2), q(3, 4), q(5, 2)};
        std::vector<std::set<Integer>> position_sets;
        for (const auto& x : xs) {
            const auto v = vonneumann::sigma_digits(x, 3);
            std::set<Integer> positions;
            Integer prev = 0;
            long long n = rational_floor(x).convert_to<long long>() + 1;
            for (const auto& [pos, digit] : v.digits.entries) {
                require(digit == 2, "digit not 2");
                require(pos > prev, "positions not strictly increasing");
                prev = pos;
                // independent recomputation of 2^(n^2) - 2^floor(n x)
                const Integer expected =
                    pow2((Integer(n) * n).convert_to<unsigned long>()) -
                    pow2(rational_floor(Rational(n) * x).convert_to<unsigned long>());
                require(pos == expected, "position differs from the exponent formula");
                positions.insert(pos);
                ++n;
            }
            position_sets.push_back(std::move(positions));
        }
        require(vonneumann::digit_position(q(1, 2), 2) == 14, "psi(1/2,2) != 14");
        for (std::size_t i = 0; i < position_sets.size(); ++i)
            for (std::size_t j = i + 1; j < position_sets.size(); ++j)
                require(position_sets[i] != position_sets[j], "digit sets collide");
    });

    // ------------------------------------------------------------------ 7
    suite.run(7, "homeomorphism transport between depth-4 trees", [&] {
        const auto src = builder::standard_tree(4);
        const auto dst = build_free(4);
        require(builder::check_invariants(dst).empty(), "free tree invariants violated");
        require(builder::verify_conditions(dst, 4, 2).all_certified(), "free tree not certified");

        const auto g0 = homeo::gaps_of(src);
        const auto g1 = homeo::gaps_of(dst);
        const auto f = homeo::increasing_bijection(homeo::order_isomorphism(g0, g1), g0, g1);

        const auto& s_level = src.levels.back();
        const auto& d_level = dst.levels.back();
        for (std::size_t j = 0; j < s_level.size(); ++j) {
            require(homeo::apply(f, s_level[j].lo) == d_level[j].lo, "lo endpoint not transported");
            require(homeo::apply(f, s_level[j].hi) == d_level[j].hi, "hi endpoint not transported");
        }

        std::mt19937 rng(90210u);
        std::uniform_int_distribution<int> num(-400, 400);
        std::vector<std::pair<Rational, Rational>> samples;
        for (int i = 0; i < 1000; ++i) {
            const Rational u = q(num(rng), 163);
            const Rational v = q(num(rng), 163);
            samples.emplace_back(u, v);
            if (u != v) {
                const bool increasing = (u < v) == (homeo::apply(f, u) < homeo::apply(f, v));
                require(increasing, "not strictly increasing on a sample pair");
            }
        }
        require(homeo::is_increasing_algebraic(f, samples), "monotonicity identity failed");
    });

    // ------------------------------------------------------------------ 8
    suite.run(8, "greedy closure pairs succeed on 200 randomized span systems", [&] {
        std::mt19937_64 rng(987654321u);
        for (int trial = 0; trial < 200; ++trial) {
            const int dim = 4 + static_cast<int>(rng() % 7);
            const auto sys = closure::make_span_gf2_system(dim);
            const int members = 2 + static_cast<int>(rng() % (dim / 2 - 1));
            closure::TargetFamily fam;
            for (int i = 0; i < members; ++i) {
                closure::ElementSet m;
                for (int b = 0; b < dim; ++b) m.insert(1u << b);
                for (int extra = 0; extra < 2 * dim; ++extra)
                    m.insert(static_cast<closure::ElementId>(1 + rng() % ((1u << dim) - 1)));
                fam.members.push_back(std::move(m));
            }
            const auto out = closure::greedy_pair_build(sys, fam);
            require(out.ok, "greedy build exhausted on trial " + std::to_string(trial));
            for (auto v : out.a)
                require(!out.b.count(v), "A and B intersect");
            for (const auto& member : fam.members) {
                bool hits_a = false, hits_b = false;
                for (auto v : member) {
                    hits_a = hits_a || out.a.count(v);
                    hits_b = hits_b || out.b.count(v);
                }
                require(hits_a && hits_b, "a family member misses A or B");
            }
            closure::ElementSet both = out.a;
            both.insert(out.b.begin(), out.b.end());
            require(closure::independence_witness(sys, both).independent,
                    "A union B not independent");
        }
    });

    // ------------------------------------------------------------------ 9
    suite.run(9, "field certificates: Eisenstein anchor, 28 pairs, 100 exact inverses", [&] {
        polyenum::IntPolynomial cubic(1);
        cubic.set_term({3}, 1);
        cubic.set_term({0}, -2);
        require(fields::eisenstein_check(cubic, 2), "Eisenstein anchor failed");

        const std::vector<std::string> s = {"s1"};
        const std::vector<std::string> t = {"t1", "t2", "t3"};
        std::vector<std::set<std::string>> subsets;
        for (unsigned mask = 0; mask < 8; ++mask) {
            std::set<std::string> u;
            for (int i = 0; i < 3; ++i)
                if ((mask >> i) & 1u) u.insert(t[static_cast<std::size_t>(i)]);
            subsets.push_back(std::move(u));
        }
        int distinct_pairs = 0, equal_pairs = 0;
        for (std::size_t i = 0; i < subsets.size(); ++i) {
            for (std::size_t j = i; j < subsets.size(); ++j) {
                const auto out = fields::distinctness_certificate(
                    fields::g_map(s, t, subsets[i]), fields::g_map(s, t, subsets[j]));
                if (i == j) {
                    require(out.equal, "identical subsets not reported Equal");
                    ++equal_pairs;
                } else {
                    require(!out.equal && out.certificate && out.certificate->verified(),
                            "pair certificate failed");
                    ++distinct_pairs;
                }
            }
        }
        require(distinct_pairs == 28 && equal_pairs == 8, "pair counts off");

        std::mt19937 rng(112233u);
        std::uniform_int_distribution<int> coef(-2, 2);
        const auto one = fields::ThetaElement::from_rational(2, 1);
        int checked = 0;
        while (checked < 100) {
            polyenum::IntPolynomial na(2), nb(2), nc(2);
            na.set_term({1, 0}, Integer(coef(rng)));
            na.add_term({0, 0}, Integer(coef(rng)));
            nb.set_term({0, 1}, Integer(coef(rng)));
            nb.add_term({0, 0}, Integer(coef(rng)));
            nc.set_term({0, 0}, Integer(coef(rng)));
            const auto den = polyenum::IntPolynomial::constant(2, 1 + (checked % 3));
            const fields::ThetaElement e(fields::MultivariateRational(na, den),
                                         fields::MultivariateRational(nb, den),
                                         fields::MultivariateRational(nc, den));
            if (e.is_zero()) continue;
            ++checked;
            require(e * e.inverse() == one, "inverse identity failed");
        }
    });

    // ------------------------------------------------------------------ 10
    suite.run(10, "determinism: repeated runs produce byte-identical artifacts", [&] {
        // CLI pipeline twice
        const std::string a = kDir + "/det_a.json";
        const std::string b = kDir + "/det_b.json";
        require(run_cli("build --depth 3 --nmax 2 --budget 100000 --mode standard --out " + a) == 0,
                "first build failed");
        require(run_cli("build --depth 3 --nmax 2 --budget 100000 --mode standard --out " + b) == 0,
                "second build failed");
        require(jsonio::read_file(a + ".ledger.jsonl") == jsonio::read_file(b + ".ledger.jsonl"),
                "ledgers differ");
        const auto la = jsonio::tree_from_json(jsonio::read_file(a)).approx;
        const auto lb = jsonio::tree_from_json(jsonio::read_file(b)).approx;
        require(jsonio::tree_to_json(la, "L") == jsonio::tree_to_json(lb, "L"), "trees differ");

        // in-process artifacts twice each
        const auto sigma1 = jsonio::sigma_to_json(vonneumann::sigma_digits(q(1, 2), 3));
        const auto sigma2 = jsonio::sigma_to_json(vonneumann::sigma_digits(q(1, 2), 3));
        require(sigma1 == sigma2, "sigma artifacts differ");

        auto homeo_artifact = [&] {
            const auto src = builder::standard_tree(4);
            const auto dst = build_free(4);
            const auto g0 = homeo::gaps_of(src);
            const auto g1 = homeo::gaps_of(dst);
            return jsonio::plmap_to_json(
                homeo::increasing_bijection(homeo::order_isomorphism(g0, g1), g0, g1));
        };
        require(homeo_artifact() == homeo_artifact(), "homeomorphism artifacts differ");

        auto greedy_artifact = [] {
            const auto sys = closure::make_span_gf2_system(5);
            closure::TargetFamily fam;
            fam.members.push_back({1, 2, 4, 8, 16});
            fam.members.push_back(closure::ElementSet(sys.universe.begin(), sys.universe.end()));
            return jsonio::greedy_outcome_to_json(closure::greedy_pair_build(sys, fam));
        };
        require(greedy_artifact() == greedy_artifact(), "greedy artifacts differ");

        auto fields_artifact = [] {
            const auto gv = fields::g_map({"s1"}, {"t1", "t2"}, {"t1"});
            const auto gw = fields::g_map({"s1"}, {"t1", "t2"}, {"t2"});
            return jsonio::distinctness_to_json(fields::distinctness_certificate(gv, gw));
        };
        require(fields_artifact() == fields_artifact(), "field artifacts differ");
    });

    std::cout << (suite.failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " ("
              << (10 - suite.failures) << "/10)\n";
    return suite.failures == 0 ? 0 : 1;
}
