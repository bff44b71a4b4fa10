#include "ybme/cli.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ybme/harness.hpp"
#include "ybme/ideal.hpp"
#include "ybme/report.hpp"
#include "ybme/solve.hpp"

namespace ybme {
namespace {

using ordered_json = nlohmann::ordered_json;

/// Everything the subcommands can receive; which pieces were actually given
/// is read back off the parsed CLI11 subcommand.
struct Opts {
    std::string field;
    std::string matrix;
    std::string format = "plain";
    std::string out_path;
    unsigned c1 = 0, c2 = 0, c = 0, a = 0, b = 0;
    unsigned theorem = 0;
    unsigned max_q = kDefaultScanBound;
    std::uint64_t seed = kDefaultSeed;
    bool check = false;
    bool all = false;
};

void add_common_flags(CLI::App* sub, Opts& o) {
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    sub->add_option("--out", o.out_path, "write output to this file");
}

void add_field_flag(CLI::App* sub, Opts& o, bool required) {
    CLI::Option* opt =
        sub->add_option("--field", o.field, "field spec, e.g. 7 or 2^3");
    if (required) opt->required();
}

void add_matrix_flags(CLI::App* sub, Opts& o) {
    sub->add_option("--matrix", o.matrix, "matrix literal [[a,b],[c,d]]");
    sub->add_option("--c1", o.c1, "diagonal entry c1 (c2 defaults to 0)");
    sub->add_option("--c2", o.c2, "diagonal entry c2");
    sub->add_option("--c", o.c, "Jordan block eigenvalue");
    sub->add_option("--a", o.a, "companion matrix trace parameter");
    sub->add_option("--b", o.b, "companion matrix determinant parameter");
}

Fq checked_element(const FieldCtx& F, unsigned v, const char* flag) {
    if (v >= F.q())
        throw std::invalid_argument(std::string(flag) + "=" + std::to_string(v) +
                                    " is not an element encoding of F_" +
                                    std::to_string(F.q()));
    return static_cast<Fq>(v);
}

/// Builds the input matrix from whichever parameter group was given:
/// --matrix, --c1[/--c2], --c, or --a/--b.
Mat2 resolve_matrix(const CLI::App* sub, const FieldCtx& F, const Opts& o) {
    bool has_matrix = sub->count("--matrix") > 0;
    bool has_diag = sub->count("--c1") > 0;
    bool has_jordan = sub->count("--c") > 0;
    bool has_companion = sub->count("--a") > 0 || sub->count("--b") > 0;
    int groups = int(has_matrix) + int(has_diag) + int(has_jordan) +
                 int(has_companion);
    if (groups != 1)
        throw std::invalid_argument(
            "give the matrix exactly one way: --matrix, --c1 [--c2], --c, "
            "or --a with --b");
    if (has_matrix) return parse_mat2(F, o.matrix);
    if (has_diag) {
        Fq c1 = checked_element(F, o.c1, "--c1");
        Fq c2 = sub->count("--c2") ? checked_element(F, o.c2, "--c2") : Fq{0};
        return {c1, 0, 0, c2};
    }
    if (has_jordan) {
        Fq c = checked_element(F, o.c, "--c");
        return {c, 1, 0, c};
    }
    if (sub->count("--a") == 0 || sub->count("--b") == 0)
        throw std::invalid_argument("the companion form needs both --a and --b");
    Fq a = checked_element(F, o.a, "--a");
    Fq b = checked_element(F, o.b, "--b");
    return {0, F.neg(b), 1, a};
}

int emit(const Opts& o, std::ostream& out, std::ostream& err,
         const std::string& rendered, int status) {
    if (!o.out_path.empty()) {
        std::ofstream f(o.out_path);
        if (!f) {
            err << "error: cannot open " << o.out_path << " for writing\n";
            return 2;
        }
        f << rendered;
    } else {
        out << rendered;
    }
    return status;
}

int run_classify(const CLI::App* sub, const Opts& o, std::ostream& out,
                 std::ostream& err) {
    FieldPtr F = parse_field_spec(o.field);
    Mat2 B = resolve_matrix(sub, *F, o);
    CanonicalForm cf = rational_canonical_form(*F, B);
    Mat2 C = canonical_matrix(*F, cf);

    std::ostringstream params;
    switch (cf.tag) {
        case CanonicalTag::DistinctDiag:
            params << "c1=" << cf.c1 << ",c2=" << cf.c2;
            break;
        case CanonicalTag::Jordan:
        case CanonicalTag::Scalar:
            params << "c=" << cf.c1;
            break;
        case CanonicalTag::Companion:
            params << "a=" << cf.a << ",b=" << cf.b;
            break;
    }

    std::string rendered;
    if (o.format == "json") {
        ordered_json j;
        j["field"] = F->spec_string();
        j["B"] = ordered_json::parse(format_mat2(B));
        j["class"] = tag_name(cf.tag);
        j["params"] = params.str();
        j["canonical"] = ordered_json::parse(format_mat2(C));
        j["transform"] = ordered_json::parse(format_mat2(cf.transform));
        j["root_count"] = cf.root_count;
        rendered = j.dump(2) + "\n";
    } else if (o.format == "csv") {
        std::ostringstream os;
        os << "q,class,params,canonical\n";
        os << F->q() << "," << tag_name(cf.tag) << ",\"" << params.str()
           << "\",\"" << format_mat2(C) << "\"\n";
        rendered = os.str();
    } else {
        std::ostringstream os;
        os << "field: " << F->spec_string() << "\n";
        os << "B: " << format_mat2(B) << "\n";
        os << "class: " << tag_name(cf.tag) << "\n";
        os << "params: " << params.str() << "\n";
        os << "canonical: " << format_mat2(C) << "\n";
        os << "transform: " << format_mat2(cf.transform) << "\n";
        os << "root_count: " << cf.root_count << "\n";
        rendered = os.str();
    }
    return emit(o, out, err, rendered, 0);
}

int run_solve(const CLI::App* sub, const Opts& o, std::ostream& out,
              std::ostream& err) {
    FieldPtr F = parse_field_spec(o.field);
    Mat2 B = resolve_matrix(sub, *F, o);
    SolutionSet S = solve(*F, B, o.max_q);

    std::string rendered;
    if (o.format == "json")
        rendered = solution_set_json(S);
    else if (o.format == "csv")
        rendered = solution_set_csv(S);
    else
        rendered = solution_set_plain(S);

    if (o.check) {
        // read the JSON rendering back and re-verify independently of the
        // in-memory set that produced it
        SolutionSet back = parse_solution_set_json(solution_set_json(S));
        if (!verify_residuals(*F, back)) {
            err << "check failed: a re-ingested point does not solve the "
                   "equation\n";
            return 1;
        }
        if (back.points != S.points) {
            err << "check failed: the re-ingested point list differs\n";
            return 1;
        }
        err << "check: " << back.points.size()
            << " residuals re-verified from the JSON round trip\n";
    }
    return emit(o, out, err, rendered, 0);
}

int run_count(const CLI::App* sub, const Opts& o, std::ostream& out,
              std::ostream& err) {
    FieldPtr F = parse_field_spec(o.field);
    Mat2 B = resolve_matrix(sub, *F, o);
    SolutionSet S = solve(*F, B, o.max_q);
    CardinalityPrediction pred = predict_cardinality(*F, B);
    std::string source = prediction_source_name(pred.source);

    int status = 0;
    if (pred.source != PredictionSource::none && pred.count != S.cardinality()) {
        err << "count mismatch: formula " << source << " gives " << pred.count
            << " but the solution set has " << S.cardinality() << " points\n";
        status = 1;
    }

    std::string rendered;
    if (o.format == "json") {
        ordered_json j;
        j["field"] = F->spec_string();
        j["A"] = ordered_json::parse(format_mat2(B));
        j["count"] = S.cardinality();
        j["source"] = source;
        j["conjectural"] = pred.conjectural;
        rendered = j.dump(2) + "\n";
    } else if (o.format == "csv") {
        std::ostringstream os;
        os << "q,count,source,conjectural\n";
        os << F->q() << "," << S.cardinality() << "," << source << ","
           << (pred.conjectural ? "yes" : "no") << "\n";
        rendered = os.str();
    } else {
        std::ostringstream os;
        os << S.cardinality() << " (source: " << source
           << (pred.conjectural ? ", conjectural" : "") << ")\n";
        rendered = os.str();
    }
    return emit(o, out, err, rendered, status);
}

int render_reports(const Opts& o, std::ostream& out, std::ostream& err,
                   const std::vector<VerdictReport>& reports) {
    std::string rendered;
    if (o.format == "json")
        rendered = reports.size() == 1 ? verdict_json(reports.front())
                                       : verdicts_json(reports);
    else if (o.format == "csv")
        rendered = verdicts_csv(reports);
    else
        rendered = traceability_table(reports);
    bool pass = true;
    for (const VerdictReport& rep : reports) pass = pass && rep.overall_pass;
    return emit(o, out, err, rendered, pass ? 0 : 1);
}

int run_verify(const CLI::App* sub, const Opts& o, std::ostream& out,
               std::ostream& err) {
    bool has_theorem = sub->count("--theorem") > 0;
    bool has_prop = sub->count("--c1") > 0;
    bool has_lemma = sub->count("--a") > 0 || sub->count("--b") > 0;
    int groups = int(o.all) + int(has_theorem) + int(has_prop) + int(has_lemma);
    if (groups != 1)
        throw std::invalid_argument(
            "pick exactly one target: --all, --theorem N, --c1 V, or --a A "
            "--b B");

    if (o.all) return render_reports(o, out, err, run_default_campaigns(o.seed));

    if (o.field.empty())
        throw std::invalid_argument("this verify target needs --field");
    FieldPtr F = parse_field_spec(o.field);

    VerdictReport rep;
    if (has_theorem) {
        if (o.theorem == 1)
            rep = verify_theorem1(F);
        else if (o.theorem == 2)
            rep = verify_theorem2(F);
        else
            rep = verify_theorem3(F);
    } else if (has_prop) {
        rep = verify_prop_3_2(F, checked_element(*F, o.c1, "--c1"));
    } else {
        if (sub->count("--a") == 0 || sub->count("--b") == 0)
            throw std::invalid_argument(
                "the companion ideal check needs both --a and --b");
        rep = verify_lemma_5_4(F, checked_element(*F, o.a, "--a"),
                               checked_element(*F, o.b, "--b"));
    }
    return render_reports(o, out, err, {rep});
}

int run_conjecture(const Opts& o, std::ostream& out, std::ostream& err) {
    FieldPtr F = parse_field_spec(o.field);
    return render_reports(o, out, err, {check_conjecture(F)});
}

int run_nabla(const Opts& o, std::ostream& out, std::ostream& err) {
    FieldPtr F = parse_field_spec(o.field);
    NablaSets ns = nabla_sets(*F);

    std::string rendered;
    if (o.format == "json") {
        ordered_json j;
        j["q"] = ns.q;
        ordered_json n0 = ordered_json::array(), n1 = ordered_json::array();
        for (auto [a, b] : ns.nabla0) n0.push_back(ordered_json::array({a, b}));
        for (auto [a, b] : ns.nabla1) n1.push_back(ordered_json::array({a, b}));
        j["nabla0"] = std::move(n0);
        j["nabla1"] = std::move(n1);
        rendered = j.dump(2) + "\n";
    } else if (o.format == "csv") {
        std::ostringstream os;
        os << "a,b,set\n";
        for (auto [a, b] : ns.nabla0)
            os << a << "," << b << ",nabla0\n";
        for (auto [a, b] : ns.nabla1)
            os << a << "," << b << ",nabla1\n";
        rendered = os.str();
    } else {
        std::ostringstream os;
        os << "q: " << ns.q << "\n";
        os << "nabla0 (" << ns.nabla0.size() << "):";
        for (auto [a, b] : ns.nabla0) os << " (" << a << "," << b << ")";
        os << "\nnabla1 (" << ns.nabla1.size() << "):";
        for (auto [a, b] : ns.nabla1) os << " (" << a << "," << b << ")";
        os << "\n";
        rendered = os.str();
    }
    return emit(o, out, err, rendered, 0);
}

int run_groebner(const CLI::App* sub, const Opts& o, std::ostream& out,
                 std::ostream& err) {
    FieldPtr F = parse_field_spec(o.field);
    Mat2 A = resolve_matrix(sub, *F, o);
    IdealGens J = ybme_ideal(F, A);
    GroebnerBasis G = buchberger(J);

    std::string rendered;
    if (o.format == "json") {
        ordered_json j;
        j["field"] = F->spec_string();
        j["A"] = ordered_json::parse(format_mat2(A));
        ordered_json gens = ordered_json::array(), basis = ordered_json::array();
        for (const MPoly& g : J.gens) gens.push_back(format_mpoly(J.ring, g));
        for (const MPoly& g : G.polys) basis.push_back(format_mpoly(G.ring, g));
        j["generators"] = std::move(gens);
        j["basis"] = std::move(basis);
        rendered = j.dump(2) + "\n";
    } else if (o.format == "csv") {
        std::ostringstream os;
        os << "index,polynomial\n";
        for (std::size_t i = 0; i < G.polys.size(); ++i)
            os << i << ",\"" << format_mpoly(G.ring, G.polys[i]) << "\"\n";
        rendered = os.str();
    } else {
        std::ostringstream os;
        os << "field: " << F->spec_string() << "\n";
        os << "A: " << format_mat2(A) << "\n";
        os << "generators (" << J.gens.size() << "):\n";
        for (const MPoly& g : J.gens)
            os << "  " << format_mpoly(J.ring, g) << "\n";
        os << "reduced basis (" << G.polys.size() << "):\n";
        for (const MPoly& g : G.polys)
            os << "  " << format_mpoly(G.ring, g) << "\n";
        rendered = os.str();
    }
    return emit(o, out, err, rendered, 0);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    Opts o;
    CLI::App app{
        "Solution sets of the matrix equation X A X = A X A over finite "
        "fields"};
    app.require_subcommand(1);

    CLI::App* classify = app.add_subcommand(
        "classify", "similarity class of a 2x2 matrix");
    add_field_flag(classify, o, true);
    add_matrix_flags(classify, o);
    add_common_flags(classify, o);

    CLI::App* solve_cmd =
        app.add_subcommand("solve", "enumerate all solutions X");
    add_field_flag(solve_cmd, o, true);
    add_matrix_flags(solve_cmd, o);
    add_common_flags(solve_cmd, o);
    solve_cmd->add_option("--max-q", o.max_q, "exhaustive scan bound on q");
    solve_cmd->add_flag("--check", o.check,
                        "re-ingest the JSON rendering and re-verify residuals");

    CLI::App* count = app.add_subcommand("count", "solution count and source");
    add_field_flag(count, o, true);
    add_matrix_flags(count, o);
    add_common_flags(count, o);
    count->add_option("--max-q", o.max_q, "exhaustive scan bound on q");

    CLI::App* verify = app.add_subcommand(
        "verify", "run a verification campaign against the oracle");
    add_field_flag(verify, o, false);
    add_common_flags(verify, o);
    verify->add_option("--theorem", o.theorem, "cardinality statement 1, 2, or 3")
        ->check(CLI::Range(1u, 3u));
    verify->add_option("--c1", o.c1, "rank-one diagonal ideal check for c1");
    verify->add_option("--a", o.a, "companion ideal check, trace parameter");
    verify->add_option("--b", o.b,
                       "companion ideal check, determinant parameter");
    verify->add_flag("--all", o.all, "run the full default campaign grid");
    verify->add_option("--seed", o.seed, "seed for the randomized checks");

    CLI::App* conjecture = app.add_subcommand(
        "conjecture", "collect evidence for the open q+3 count");
    add_field_flag(conjecture, o, true);
    add_common_flags(conjecture, o);

    CLI::App* nabla = app.add_subcommand(
        "nabla", "census of irreducible (a,b) pairs by discriminant");
    add_field_flag(nabla, o, true);
    add_common_flags(nabla, o);

    CLI::App* groebner = app.add_subcommand(
        "groebner", "reduced basis of the entry ideal of X A X - A X A");
    add_field_flag(groebner, o, true);
    add_matrix_flags(groebner, o);
    add_common_flags(groebner, o);

    std::vector<const char*> argv;
    argv.push_back("ybme");
    for (const std::string& s : args) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (classify->parsed()) return run_classify(classify, o, out, err);
        if (solve_cmd->parsed()) return run_solve(solve_cmd, o, out, err);
        if (count->parsed()) return run_count(count, o, out, err);
        if (verify->parsed()) return run_verify(verify, o, out, err);
        if (conjecture->parsed()) return run_conjecture(o, out, err);
        if (nabla->parsed()) return run_nabla(o, out, err);
        if (groebner->parsed()) return run_groebner(groebner, o, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "usage error: no subcommand given\n";
    return 2;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, out, err);
}

}  // namespace ybme
