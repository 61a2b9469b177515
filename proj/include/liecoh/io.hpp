#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "liecoh/cohomology.hpp"
#include "liecoh/families.hpp"
#include "liecoh/lie_algebra.hpp"

namespace liecoh {

/// Malformed input documents (syntax, ranges, rational literals).
class ParseError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Structurally valid input that fails a validation check (Jacobi).
class CheckError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseOptions {
    bool skip_jacobi = false;
};

/// JSON algebra document: {"dim": n, "labels": [...], "brackets":
/// [{"i": 1, "j": 2, "coeffs": {"3": "1"}}]}. Indices are 1-based in
/// documents and 0-based in memory; rationals travel as "p/q" strings.
LieAlgebra parse_algebra(const std::string& text, const ParseOptions& opts = {});
std::string serialize_algebra(const LieAlgebra& g);

/// JSON cochain document: {"degree": p, "dim": n, "entries":
/// [{"tuple": [...], "coeffs": {...}}]} with ascending 1-based tuples.
Cochain parse_cochain(const std::string& text, const LieAlgebra& g);
std::string serialize_cochain(const Cochain& c);

/// Textual family spec, e.g. {"A","n=10","k=4","lambda=1,0"} or
/// {"rh","k=4","h=3","lambda=1,1"}. Throws std::invalid_argument.
FamilySpec parse_family_spec(const std::vector<std::string>& tokens);

/// Command dispatch for the CLI. Exit codes: 0 success, 1 check failure,
/// 2 usage error, 3 input parse error.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err);

}  // namespace liecoh
