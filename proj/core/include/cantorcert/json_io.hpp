#pragma once

#include "cantorcert/builder.hpp"
#include "cantorcert/closure.hpp"
#include "cantorcert/fields.hpp"
#include "cantorcert/homeo.hpp"
#include "cantorcert/polyenum.hpp"
#include "cantorcert/ternary.hpp"
#include "cantorcert/vonneumann.hpp"

#include <string>
#include <vector>

namespace cantorcert::jsonio {

// Sparse-digit documents: {"entries":[{"pos":"<bigint>","digit":0|1|2}],"depth":<int>|"exact"}
std::string digits_to_json(const ternary::TernaryDigits& d);
ternary::TernaryDigits digits_from_json(const std::string& text);

// Polynomials: {"n":<int>,"terms":[{"exp":[..],"coef":"<bigint>"}]}; canonical
// term order on write, unsorted tolerated on read.
std::string polynomial_to_json(const polyenum::IntPolynomial& p);
polyenum::IntPolynomial polynomial_from_json(const std::string& text);

// Interval trees; ledger stored separately as JSON lines.
std::string tree_to_json(const builder::CantorApproximation& a, const std::string& ledger_file);

struct LoadedTree {
    builder::CantorApproximation approx;
    std::string ledger_file;
};
LoadedTree tree_from_json(const std::string& text);

std::string certificate_to_json(const boxcert::Certificate& c);
boxcert::Certificate certificate_from_json(const std::string& line);
std::string ledger_to_jsonl(const std::vector<boxcert::Certificate>& ledger);
std::vector<boxcert::Certificate> ledger_from_jsonl(const std::string& text);

// Piecewise-linear maps: {"breakpoints":[["p/q","p/q"],...]}
std::string plmap_to_json(const homeo::PiecewiseLinearMap& f);
homeo::PiecewiseLinearMap plmap_from_json(const std::string& text);

// Closure systems: {"universe":[ids],"closure":"span-gf2"|"identity","dim":..,"family":[[ids]..]}
struct GreedyInput {
    closure::ClosureSystem system;
    closure::TargetFamily family;
};
GreedyInput greedy_input_from_json(const std::string& text);
std::string greedy_outcome_to_json(const closure::GreedyOutcome& outcome);

std::string sigma_to_json(const vonneumann::SigmaValue& v);

std::string distinctness_to_json(const fields::DistinctnessOutcome& outcome);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

} // namespace cantorcert::jsonio
