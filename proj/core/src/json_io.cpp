#include "cantorcert/json_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cantorcert::jsonio {

using json = nlohmann::ordered_json;

namespace {

json interval_to_node(const RationalInterval& iv) {
    return json{{"lo", to_string(iv.lo)}, {"hi", to_string(iv.hi)}};
}

RationalInterval interval_from_node(const json& node) {
    return RationalInterval(parse_rational(node.at("lo").get<std::string>()),
                            parse_rational(node.at("hi").get<std::string>()));
}

json digits_to_node(const ternary::TernaryDigits& d) {
    json entries = json::array();
    for (const auto& [pos, digit] : d.entries)
        entries.push_back(json{{"pos", pos.str()}, {"digit", digit}});
    json out;
    out["entries"] = std::move(entries);
    if (d.depth)
        out["depth"] = d.depth->convert_to<long long>();
    else
        out["depth"] = "exact";
    return out;
}

ternary::TernaryDigits digits_from_node(const json& node) {
    ternary::TernaryDigits d;
    for (const auto& e : node.at("entries"))
        d.set_digit(Integer(e.at("pos").get<std::string>()), e.at("digit").get<int>());
    const auto& depth = node.at("depth");
    if (depth.is_string()) {
        if (depth.get<std::string>() != "exact")
            throw std::invalid_argument("digits: bad depth marker");
        d.depth = std::nullopt;
    } else {
        d.depth = Integer(depth.get<long long>());
    }
    return d;
}

json polynomial_to_node(const polyenum::IntPolynomial& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json exp = json::array();
        for (unsigned x : e) exp.push_back(x);
        terms.push_back(json{{"exp", std::move(exp)}, {"coef", c.str()}});
    }
    return json{{"n", p.n_vars()}, {"terms", std::move(terms)}};
}

polyenum::IntPolynomial polynomial_from_node(const json& node) {
    polyenum::IntPolynomial p(node.at("n").get<int>());
    for (const auto& t : node.at("terms")) {
        polyenum::ExponentVec e;
        for (const auto& x : t.at("exp")) e.push_back(x.get<unsigned>());
        p.add_term(e, Integer(t.at("coef").get<std::string>()));
    }
    return p;
}

json levels_to_node(const std::vector<std::vector<RationalInterval>>& levels) {
    json out = json::array();
    for (const auto& level : levels) {
        json l = json::array();
        for (const auto& iv : level) l.push_back(interval_to_node(iv));
        out.push_back(std::move(l));
    }
    return out;
}

std::vector<std::vector<RationalInterval>> levels_from_node(const json& node) {
    std::vector<std::vector<RationalInterval>> levels;
    for (const auto& l : node) {
        std::vector<RationalInterval> level;
        for (const auto& iv : l) level.push_back(interval_from_node(iv));
        levels.push_back(std::move(level));
    }
    return levels;
}

json certificate_to_node(const boxcert::Certificate& c) {
    json box = json::array();
    for (const auto& f : c.box.factors) box.push_back(interval_to_node(f));
    json phi = json::array();
    for (int j : c.phi) phi.push_back(j);
    return json{{"n", c.n_vars},
                {"m", c.m_index.str()},
                {"level", c.level},
                {"phi", std::move(phi)},
                {"box", std::move(box)},
                {"enclosure", interval_to_node(c.enclosure)},
                {"verdict", c.certified ? "certified" : "unknown"}};
}

boxcert::Certificate certificate_from_node(const json& node) {
    boxcert::Certificate c;
    c.n_vars = node.at("n").get<int>();
    c.m_index = Integer(node.at("m").get<std::string>());
    c.level = node.at("level").get<int>();
    for (const auto& j : node.at("phi")) c.phi.push_back(j.get<int>());
    for (const auto& f : node.at("box")) c.box.factors.push_back(interval_from_node(f));
    c.enclosure = interval_from_node(node.at("enclosure"));
    const auto verdict = node.at("verdict").get<std::string>();
    if (verdict != "certified" && verdict != "unknown")
        throw std::invalid_argument("certificate: bad verdict");
    c.certified = (verdict == "certified");
    return c;
}

} // namespace

std::string digits_to_json(const ternary::TernaryDigits& d) { return digits_to_node(d).dump(2) + "\n"; }

ternary::TernaryDigits digits_from_json(const std::string& text) {
    return digits_from_node(json::parse(text));
}

std::string polynomial_to_json(const polyenum::IntPolynomial& p) {
    return polynomial_to_node(p).dump(2) + "\n";
}

polyenum::IntPolynomial polynomial_from_json(const std::string& text) {
    return polynomial_from_node(json::parse(text));
}

std::string tree_to_json(const builder::CantorApproximation& a, const std::string& ledger_file) {
    json out;
    out["mode"] = builder::mode_name(a.mode);
    out["caps"] = json{{"k_max", a.caps.k_max},
                       {"n_max", a.caps.n_max},
                       {"budget", a.caps.budget},
                       {"poly_prefix", a.caps.poly_prefix}};
    out["certified_through"] = a.certified_through;
    out["levels"] = levels_to_node(a.levels);
    if (a.mode == builder::Mode::target_embedded)
        out["target_levels"] = levels_to_node(a.target_levels);
    out["ledger_file"] = ledger_file;
    return out.dump(2) + "\n";
}

LoadedTree tree_from_json(const std::string& text) {
    const json node = json::parse(text);
    LoadedTree out;
    out.approx.mode = builder::mode_from_name(node.at("mode").get<std::string>());
    const auto& caps = node.at("caps");
    out.approx.caps.k_max = caps.at("k_max").get<int>();
    out.approx.caps.n_max = caps.at("n_max").get<int>();
    out.approx.caps.budget = caps.at("budget").get<long>();
    out.approx.caps.poly_prefix = caps.at("poly_prefix").get<long>();
    out.approx.certified_through = node.at("certified_through").get<int>();
    out.approx.levels = levels_from_node(node.at("levels"));
    if (node.contains("target_levels"))
        out.approx.target_levels = levels_from_node(node.at("target_levels"));
    out.ledger_file = node.at("ledger_file").get<std::string>();
    return out;
}

std::string certificate_to_json(const boxcert::Certificate& c) {
    return certificate_to_node(c).dump();
}

boxcert::Certificate certificate_from_json(const std::string& line) {
    return certificate_from_node(json::parse(line));
}

std::string ledger_to_jsonl(const std::vector<boxcert::Certificate>& ledger) {
    std::ostringstream os;
    for (const auto& c : ledger) os << certificate_to_json(c) << "\n";
    return os.str();
}

std::vector<boxcert::Certificate> ledger_from_jsonl(const std::string& text) {
    std::vector<boxcert::Certificate> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        out.push_back(certificate_from_json(line));
    }
    return out;
}

std::string plmap_to_json(const homeo::PiecewiseLinearMap& f) {
    json bps = json::array();
    for (const auto& [x, y] : f.breakpoints)
        bps.push_back(json::array({to_string(x), to_string(y)}));
    return json{{"breakpoints", std::move(bps)}}.dump(2) + "\n";
}

homeo::PiecewiseLinearMap plmap_from_json(const std::string& text) {
    const json node = json::parse(text);
    homeo::PiecewiseLinearMap f;
    for (const auto& bp : node.at("breakpoints")) {
        if (!bp.is_array() || bp.size() != 2)
            throw std::invalid_argument("plmap: breakpoint must be a pair");
        f.breakpoints.emplace_back(parse_rational(bp[0].get<std::string>()),
                                   parse_rational(bp[1].get<std::string>()));
    }
    return f;
}

GreedyInput greedy_input_from_json(const std::string& text) {
    const json node = json::parse(text);
    GreedyInput out;
    const auto closure_name = node.at("closure").get<std::string>();
    if (closure_name == "span-gf2") {
        out.system = closure::make_span_gf2_system(node.at("dim").get<int>());
        if (node.contains("universe")) {
            // allow restricting the universe to a listed subset
            std::vector<closure::ElementId> universe;
            for (const auto& v : node.at("universe")) universe.push_back(v.get<closure::ElementId>());
            auto close = out.system.close;
            const closure::ElementSet allowed(universe.begin(), universe.end());
            out.system.universe = universe;
            out.system.close = [close, allowed](const closure::ElementSet& x) {
                closure::ElementSet full = close(x);
                closure::ElementSet restricted;
                for (auto v : full)
                    if (allowed.count(v)) restricted.insert(v);
                return restricted;
            };
        }
    } else if (closure_name == "identity") {
        std::vector<closure::ElementId> universe;
        for (const auto& v : node.at("universe")) universe.push_back(v.get<closure::ElementId>());
        out.system = closure::make_identity_system(std::move(universe));
    } else {
        throw std::invalid_argument("greedy input: unknown closure '" + closure_name + "'");
    }
    for (const auto& member : node.at("family")) {
        closure::ElementSet m;
        for (const auto& v : member) m.insert(v.get<closure::ElementId>());
        out.family.members.push_back(std::move(m));
    }
    return out;
}

std::string greedy_outcome_to_json(const closure::GreedyOutcome& outcome) {
    json a = json::array(), b = json::array();
    for (auto v : outcome.a) a.push_back(v);
    for (auto v : outcome.b) b.push_back(v);
    json out{{"ok", outcome.ok}, {"a", std::move(a)}, {"b", std::move(b)}};
    if (!outcome.ok) {
        out["failed_index"] = outcome.failed_index;
        out["failed_step"] = std::string(1, outcome.failed_step);
    }
    return out.dump(2) + "\n";
}

std::string sigma_to_json(const vonneumann::SigmaValue& v) {
    json out;
    out["x"] = to_string(v.x);
    out["terms"] = v.terms_used;
    out["digits"] = digits_to_node(v.digits);
    return out.dump(2) + "\n";
}

namespace {

json mrational_to_node(const fields::MultivariateRational& r) {
    return json{{"num", polynomial_to_node(r.num())}, {"den", polynomial_to_node(r.den())}};
}

} // namespace

std::string distinctness_to_json(const fields::DistinctnessOutcome& outcome) {
    if (outcome.equal) return json{{"equal", true}}.dump(2) + "\n";
    const auto& c = *outcome.certificate;
    json out;
    out["equal"] = false;
    out["witness"] = c.witness;
    out["witness_plain_in_first"] = c.witness_plain_in_first;
    out["quotient"] = json{{"a", mrational_to_node(c.quotient.a)},
                           {"b", mrational_to_node(c.quotient.b)},
                           {"c", mrational_to_node(c.quotient.c)}};
    out["quotient_is_theta"] = c.quotient_is_theta;
    out["eisenstein"] = json{{"poly", "X^3-2"}, {"prime", 2}, {"ok", c.eisenstein_ok}};
    return out.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << content;
    if (!os) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

} // namespace cantorcert::jsonio
