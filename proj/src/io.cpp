#include "liecoh/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

#include "liecoh/derivations.hpp"
#include "liecoh/reproduce.hpp"

namespace liecoh {

using json = nlohmann::ordered_json;

namespace {

std::string dump(const json& doc) {
    return doc.dump(2) + "\n";
}

json coeffs_to_json(const VectorQ& v) {
    json co = json::object();
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero())
            co[std::to_string(k + 1)] = v[k].to_string();
    return co;
}

Rational rational_from_json(const json& v, const char* what) {
    try {
        if (v.is_string())
            return Rational::from_string(v.get<std::string>());
        if (v.is_number_integer())
            return Rational(v.get<long>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
    throw ParseError(std::string(what) + ": expected a rational string");
}

VectorQ coeffs_from_json(const json& co, std::size_t dim, const char* what) {
    if (!co.is_object())
        throw ParseError(std::string(what) + ": coeffs must be an object");
    VectorQ v(dim);
    for (const auto& [key, value] : co.items()) {
        std::size_t idx = 0;
        try {
            idx = std::stoul(key);
        } catch (...) {
            throw ParseError(std::string(what) + ": bad index key '" + key + "'");
        }
        if (idx < 1 || idx > dim)
            throw ParseError(std::string(what) + ": index " + key + " out of range 1.." +
                             std::to_string(dim));
        v[idx - 1] = rational_from_json(value, what);
    }
    return v;
}

}  // namespace

std::string serialize_algebra(const LieAlgebra& g) {
    json doc;
    doc["dim"] = g.dim();
    doc["labels"] = g.labels();
    json brackets = json::array();
    for (const auto& [pair, coeffs] : g.constants()) {
        json rec;
        rec["i"] = pair.first + 1;
        rec["j"] = pair.second + 1;
        rec["coeffs"] = coeffs_to_json(coeffs);
        brackets.push_back(std::move(rec));
    }
    doc["brackets"] = std::move(brackets);
    return dump(doc);
}

LieAlgebra parse_algebra(const std::string& text, const ParseOptions& opts) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!doc.is_object() || !doc.contains("dim") || !doc["dim"].is_number_unsigned())
        throw ParseError("algebra document: missing or invalid \"dim\"");
    const std::size_t dim = doc["dim"].get<std::size_t>();
    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        if (!doc["labels"].is_array())
            throw ParseError("algebra document: \"labels\" must be an array");
        for (const auto& l : doc["labels"])
            labels.push_back(l.get<std::string>());
    }
    BracketTable table;
    if (doc.contains("brackets")) {
        if (!doc["brackets"].is_array())
            throw ParseError("algebra document: \"brackets\" must be an array");
        for (const auto& rec : doc["brackets"]) {
            if (!rec.contains("i") || !rec.contains("j") || !rec["i"].is_number_unsigned() ||
                !rec["j"].is_number_unsigned())
                throw ParseError("bracket record: \"i\" and \"j\" must be positive integers");
            const std::size_t i = rec["i"].get<std::size_t>();
            const std::size_t j = rec["j"].get<std::size_t>();
            if (i == j)
                throw ParseError("bracket record: i = j = " + std::to_string(i) +
                                 " (pairs must satisfy i < j)");
            if (i < 1 || j < 1 || i > dim || j > dim)
                throw ParseError("bracket record: indices (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ") out of range 1.." + std::to_string(dim));
            if (i > j)
                throw ParseError("bracket record: i > j; store the pair (j, i) negated");
            if (!rec.contains("coeffs"))
                throw ParseError("bracket record: missing \"coeffs\"");
            auto key = std::make_pair(static_cast<std::uint32_t>(i - 1),
                                      static_cast<std::uint32_t>(j - 1));
            if (table.count(key))
                throw ParseError("bracket record: duplicate pair (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ")");
            table[key] = coeffs_from_json(rec["coeffs"], dim, "bracket record");
        }
    }
    LieAlgebra g = [&] {
        try {
            return LieAlgebra::create(dim, std::move(labels), std::move(table));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }();
    if (!opts.skip_jacobi) {
        const auto violations = jacobi_check(g);
        if (!violations.empty()) {
            std::string msg = "Jacobi identity fails at triple(s):";
            for (std::size_t v = 0; v < violations.size() && v < 5; ++v)
                msg += " (" + std::to_string(violations[v].i + 1) + "," +
                       std::to_string(violations[v].j + 1) + "," +
                       std::to_string(violations[v].k + 1) + ")";
            if (violations.size() > 5)
                msg += " ...";
            throw CheckError(msg);
        }
    }
    return g;
}

std::string serialize_cochain(const Cochain& c) {
    json doc;
    doc["degree"] = c.degree();
    doc["dim"] = c.algebra().dim();
    json entries = json::array();
    for (const auto& [tuple, value] : c.entries()) {
        json rec;
        json t = json::array();
        for (auto i : tuple)
            t.push_back(i + 1);
        rec["tuple"] = std::move(t);
        rec["coeffs"] = coeffs_to_json(value);
        entries.push_back(std::move(rec));
    }
    doc["entries"] = std::move(entries);
    return dump(doc);
}

Cochain parse_cochain(const std::string& text, const LieAlgebra& g) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!doc.contains("degree") || !doc["degree"].is_number_unsigned())
        throw ParseError("cochain document: missing or invalid \"degree\"");
    if (!doc.contains("dim") || doc["dim"].get<std::size_t>() != g.dim())
        throw ParseError("cochain document: \"dim\" does not match the ambient algebra");
    Cochain c(g, doc["degree"].get<std::size_t>());
    if (doc.contains("entries"))
        for (const auto& rec : doc["entries"]) {
            std::vector<std::uint32_t> tuple;
            for (const auto& x : rec["tuple"]) {
                const std::size_t i = x.get<std::size_t>();
                if (i < 1 || i > g.dim())
                    throw ParseError("cochain entry: tuple index out of range");
                tuple.push_back(static_cast<std::uint32_t>(i - 1));
            }
            try {
                c.set(std::move(tuple), coeffs_from_json(rec["coeffs"], g.dim(), "cochain entry"));
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what());
            }
        }
    return c;
}

FamilySpec parse_family_spec(const std::vector<std::string>& tokens) {
    if (tokens.empty())
        throw std::invalid_argument("family spec: expected a tag (L, Q, A, B, C, rh)");
    FamilySpec spec;
    const std::string& tag = tokens[0];
    if (tag == "L")
        spec.tag = FamilySpec::Tag::L;
    else if (tag == "Q")
        spec.tag = FamilySpec::Tag::Q;
    else if (tag == "A")
        spec.tag = FamilySpec::Tag::A;
    else if (tag == "B")
        spec.tag = FamilySpec::Tag::B;
    else if (tag == "C")
        spec.tag = FamilySpec::Tag::C;
    else if (tag == "rh")
        spec.tag = FamilySpec::Tag::Rh;
    else
        throw std::invalid_argument("family spec: unknown tag '" + tag + "'");

    bool saw_n = false, saw_k = false, saw_h = false, saw_lambda = false;
    for (std::size_t t = 1; t < tokens.size(); ++t) {
        const std::string& tok = tokens[t];
        const auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("family spec: expected key=value, got '" + tok + "'");
        const std::string key = tok.substr(0, eq);
        const std::string value = tok.substr(eq + 1);
        auto parse_count = [&](const char* what) {
            try {
                const long v = std::stol(value);
                if (v < 0)
                    throw std::invalid_argument("");
                return static_cast<std::uint32_t>(v);
            } catch (...) {
                throw std::invalid_argument(std::string("family spec: bad value for ") + what);
            }
        };
        if (key == "n") {
            spec.n = parse_count("n");
            saw_n = true;
        } else if (key == "k") {
            spec.k = parse_count("k");
            saw_k = true;
        } else if (key == "h") {
            spec.h = parse_count("h");
            saw_h = true;
        } else if (key == "lambda") {
            std::stringstream ss(value);
            std::string part;
            while (std::getline(ss, part, ',')) {
                try {
                    spec.lambda.push_back(Rational::from_string(part));
                } catch (const std::invalid_argument&) {
                    throw std::invalid_argument("family spec: bad rational '" + part + "'");
                }
            }
            saw_lambda = true;
        } else {
            throw std::invalid_argument("family spec: unknown key '" + key + "'");
        }
    }
    using Tag = FamilySpec::Tag;
    auto require = [&](bool present, const char* what) {
        if (!present)
            throw std::invalid_argument(std::string("family spec: missing ") + what);
    };
    switch (spec.tag) {
        case Tag::L:
        case Tag::Q:
            require(saw_n, "n");
            break;
        case Tag::A:
        case Tag::B:
            require(saw_n, "n");
            require(saw_k, "k");
            require(saw_lambda, "lambda");
            break;
        case Tag::C:
            require(saw_n, "n");
            require(saw_lambda, "lambda");
            break;
        case Tag::Rh:
            require(saw_k, "k");
            require(saw_h, "h");
            require(saw_lambda, "lambda");
            break;
    }
    return spec;
}

namespace {

struct CommonOpts {
    std::string input;
    std::string output;
    std::string format = "json";
    bool skip_jacobi = false;
};

void add_common(CLI::App* sub, CommonOpts& opts, bool with_jacobi = true) {
    sub->add_option("--input", opts.input, "read the algebra from FILE instead of stdin");
    sub->add_option("--output", opts.output, "write the result to FILE instead of stdout");
    sub->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    if (with_jacobi)
        sub->add_flag("--skip-jacobi", opts.skip_jacobi, "skip the Jacobi check on input");
}

std::string slurp(const CommonOpts& opts, std::istream& in) {
    if (opts.input.empty()) {
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::ifstream f(opts.input);
    if (!f)
        throw ParseError("cannot open input file '" + opts.input + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void emit(const CommonOpts& opts, std::ostream& out, const std::string& text) {
    if (opts.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(opts.output);
    if (!f)
        throw ParseError("cannot open output file '" + opts.output + "'");
    f << text;
}

std::string render(const CommonOpts& opts, const json& doc) {
    if (opts.format == "json")
        return dump(doc);
    // flat table rendering: one "key: value" line per field
    std::string s;
    for (const auto& [key, value] : doc.items()) {
        s += key;
        s += ": ";
        s += value.is_string() ? value.get<std::string>() : value.dump();
        s += "\n";
    }
    return s;
}

json vector_to_json(const VectorQ& v) {
    json arr = json::array();
    for (const auto& x : v)
        arr.push_back(x.to_string());
    return arr;
}

json matrix_to_json(const MatrixQ& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        rows.push_back(vector_to_json(m.row(r)));
    return rows;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"exact Lie algebra cohomology toolkit"};
    app.name("liecoh");
    app.require_subcommand(1);

    CommonOpts opts;
    std::size_t degree = 0;
    std::vector<std::string> family_tokens;
    bool normalize_lambda = false;
    unsigned jobs = 1;

    auto* cmd_jacobi = app.add_subcommand("jacobi", "check the Jacobi identity");
    add_common(cmd_jacobi, opts, false);
    auto* cmd_coh = app.add_subcommand("cohomology", "Chevalley-Eilenberg cohomology dimensions");
    add_common(cmd_coh, opts);
    cmd_coh->add_option("--p", degree, "cochain degree")->required();
    auto* cmd_der = app.add_subcommand("derivations", "derivation algebra dimensions");
    add_common(cmd_der, opts);
    auto* cmd_rank = app.add_subcommand("rank", "diagonal torus and weight system");
    add_common(cmd_rank, opts);
    auto* cmd_complete = app.add_subcommand("complete", "completeness verdict (H^0 = H^1 = 0)");
    add_common(cmd_complete, opts);
    auto* cmd_family = app.add_subcommand("family", "construct a family algebra");
    add_common(cmd_family, opts, false);
    cmd_family->add_option("spec", family_tokens, "family spec, e.g.: A n=10 k=4 lambda=1,0")
        ->expected(-1);
    cmd_family->add_flag("--normalize-lambda", normalize_lambda,
                         "scale lambda so that lambda_1 = 1");
    auto* cmd_semi = app.add_subcommand("semidirect",
                                        "extend the input by its diagonal torus");
    add_common(cmd_semi, opts);
    auto* cmd_char = app.add_subcommand("char-seq", "characteristic sequence and filiform check");
    add_common(cmd_char, opts);
    auto* cmd_repro = app.add_subcommand("reproduce-paper", "run the full verification suite");
    add_common(cmd_repro, opts, false);
    cmd_repro->add_option("--jobs", jobs, "worker threads for the per-algebra fan-out");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (cmd_jacobi->parsed()) {
            const LieAlgebra g = parse_algebra(slurp(opts, in), {.skip_jacobi = true});
            const auto violations = jacobi_check(g);
            json doc;
            doc["jacobi"] = violations.empty() ? "pass" : "fail";
            json list = json::array();
            for (const auto& v : violations) {
                json rec;
                rec["triple"] = {v.i + 1, v.j + 1, v.k + 1};
                rec["residual"] = coeffs_to_json(v.residual);
                list.push_back(std::move(rec));
            }
            doc["violations"] = std::move(list);
            emit(opts, out, render(opts, doc));
            return violations.empty() ? 0 : 1;
        }
        if (cmd_coh->parsed()) {
            const LieAlgebra g = parse_algebra(slurp(opts, in), {.skip_jacobi = opts.skip_jacobi});
            const CohomologyDims d = cohomology_dims(g, degree);
            json doc;
            doc["p"] = d.p;
            doc["dim_cochains"] = d.dim_cochains;
            doc["dim_cocycles"] = d.dim_cocycles;
            doc["dim_coboundaries"] = d.dim_coboundaries;
            doc["dim_cohomology"] = d.dim_cohomology;
            emit(opts, out, render(opts, doc));
            return 0;
        }
        if (cmd_der->parsed()) {
            const LieAlgebra g = parse_algebra(slurp(opts, in), {.skip_jacobi = opts.skip_jacobi});
            const auto der = derivation_basis(g);
            const auto inner = inner_basis(g);
            json doc;
            doc["derivations"] = der.dim();
            doc["inner"] = inner.dim();
            doc["outer"] = der.dim() - inner.dim();
            emit(opts, out, render(opts, doc));
            return 0;
        }
        if (cmd_rank->parsed()) {
            const LieAlgebra g = parse_algebra(slurp(opts, in), {.skip_jacobi = opts.skip_jacobi});
            const RankCertificate cert = rank_certificate(g);
            const WeightSystem ws = weight_system(g, cert.torus);
            json doc;
            doc["rank_lower_bound"] = cert.rank_lower_bound;
            json tv = json::array();
            for (const auto& w : cert.torus.weight_vectors)
                tv.push_back(vector_to_json(w));
            doc["torus"] = std::move(tv);
            json weights = json::array();
            for (const auto& w : ws.weights)
                weights.push_back(vector_to_json(w));
            doc["weights"] = std::move(weights);
            json gens = json::array();
            for (auto i : ws.generators)
                gens.push_back(i + 1);
            doc["generators"] = std::move(gens);
            json zw = json::array();
            for (auto i : ws.zero_weight)
                zw.push_back(i + 1);
            doc["zero_weight"] = std::move(zw);
            emit(opts, out, render(opts, doc));
            return 0;
        }
        if (cmd_complete->parsed()) {
            const LieAlgebra g = parse_algebra(slurp(opts, in), {.skip_jacobi = opts.skip_jacobi});
            const CompletenessVerdict v = is_complete(g);
            json doc;
            doc["h0"] = v.h0;
            doc["h1"] = v.h1;
            doc["complete"] = v.complete;
            if (v.central_witness)
                doc["central_witness"] = vector_to_json(*v.central_witness);
            if (v.outer_witness)
                doc["outer_witness"] = matrix_to_json(*v.outer_witness);
            emit(opts, out, render(opts, doc));
            return 0;
        }
        if (cmd_family->parsed()) {
            FamilySpec spec = parse_family_spec(family_tokens);
            if (normalize_lambda) {
                if (spec.lambda.empty() || spec.lambda.front().is_zero())
                    throw std::invalid_argument(
                        "--normalize-lambda requires a nonzero lambda_1");
                const Rational inv = spec.lambda.front().reciprocal();
                for (auto& l : spec.lambda)
                    l *= inv;
            }
            const LieAlgebra g = build_family(spec);
            emit(opts, out, serialize_algebra(g));
            return 0;
        }
        if (cmd_semi->parsed()) {
            const LieAlgebra g = parse_algebra(slurp(opts, in), {.skip_jacobi = opts.skip_jacobi});
            const LieAlgebra sd = semidirect(g, diagonal_torus(g));
            emit(opts, out, serialize_algebra(sd));
            return 0;
        }
        if (cmd_char->parsed()) {
            const LieAlgebra g = parse_algebra(slurp(opts, in), {.skip_jacobi = opts.skip_jacobi});
            if (!is_nilpotent(g)) {
                err << "char-seq: algebra is not nilpotent\n";
                return 1;
            }
            const FiliformCertificate cert = is_filiform(g);
            json doc;
            doc["filiform_certified"] = cert.certified;
            if (cert.certified) {
                doc["witness"] = vector_to_json(cert.witness);
                json parts = json::array();
                for (auto p : characteristic_sequence_at(g, cert.witness).parts)
                    parts.push_back(p);
                doc["sequence"] = std::move(parts);
            }
            emit(opts, out, render(opts, doc));
            return 0;
        }
        if (cmd_repro->parsed()) {
            const ReproduceResult res = reproduce_paper(jobs);
            if (opts.format == "table") {
                std::string text;
                for (const auto& c : res.criteria) {
                    text += (c.pass ? "PASS" : "FAIL");
                    text += "  criterion " + std::to_string(c.id) + ": " + c.name + "\n";
                    for (const auto& d : c.details)
                        text += "      " + d + "\n";
                }
                text += res.all_pass ? "all criteria passed\n" : "criteria FAILED\n";
                emit(opts, out, text);
            } else {
                emit(opts, out, res.report_json);
            }
            return res.all_pass ? 0 : 1;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const CheckError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const FamilyError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace liecoh
