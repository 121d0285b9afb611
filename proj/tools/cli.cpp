#include "cli.hpp"

#include "escher/classifier.hpp"
#include "escher/error.hpp"
#include "escher/escherizer.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace escher::cli {

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw IoError("cannot write " + path);
}

void emit(std::ostream& out, const std::optional<std::string>& path, const std::string& text) {
    if (path) write_file(*path, text);
    else out << text;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidArgument: return kInvalidPattern;
    case ErrorKind::ExcludedRule:
    case ErrorKind::MissingRule: return kExcludedRule;
    case ErrorKind::Parse:
    case ErrorKind::InvalidParams: return kBadParams;
    case ErrorKind::AmplitudeTooLarge: return kAmplitudeTooLarge;
    case ErrorKind::Unsplittable:
    case ErrorKind::InvalidGeometry:
    case ErrorKind::Internal: return kInternal;
    }
    return kInternal;
}

SolveMode mode_from(const std::string& text) {
    auto mode = parse_solve_mode(text);
    if (!mode) throw UsageError("unknown mode '" + text + "' (single, one-rule, two-rule)");
    return *mode;
}

SubstitutionRule rule_for(SolveMode mode, std::optional<int> i, std::optional<int> j) {
    switch (mode) {
    case SolveMode::Single: return {};
    case SolveMode::OneRule:
        if (!i) throw UsageError("one-rule mode needs -i");
        return {*i, std::nullopt};
    case SolveMode::TwoRule:
        if (!i || !j) throw UsageError("two-rule mode needs -i and -j");
        return {*i, *j};
    }
    return {};
}

Prototile target_from(const std::string& text) {
    if (text == "alpha") return Prototile::Alpha;
    if (text == "beta") return Prototile::Beta;
    throw UsageError("target must be alpha or beta");
}

std::string solve_text(const SolveResult& r) {
    std::ostringstream os;
    os << "mode: " << to_string(r.mode) << '\n';
    os << "rule: " << r.rule.alpha_pattern;
    if (r.rule.beta_pattern) os << ',' << *r.rule.beta_pattern;
    os << '\n'
       << "degree: " << escher_degree(r.system) << '\n'
       << "presentation: " << presentation(r.system) << '\n'
       << "iterations: " << r.iterations << '\n'
       << "collapse: " << (detect_prototile_collapse(r.system) ? "true" : "false") << '\n';
    return os.str();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Escher degree of chair (L-tromino) substitution tilings"};
    app.require_subcommand(1);

    // classify
    auto* classify = app.add_subcommand("classify", "Classify every two-rule tiling (i,j)");
    bool classify_json = false;
    std::optional<std::string> classify_out;
    auto* cj = classify->add_flag("--json", classify_json, "Structured output");
    classify->add_flag("--table", "Aligned text table (default)")->excludes(cj);
    classify->add_option("--out", classify_out, "Write to FILE instead of stdout");

    // classify-one-rule
    auto* one_rule = app.add_subcommand("classify-one-rule", "Classify the 14 mixed one-rule patterns");
    bool one_json = false;
    std::optional<std::string> one_out;
    auto* oj = one_rule->add_flag("--json", one_json, "Structured output");
    one_rule->add_flag("--table", "Aligned text table (default)")->excludes(oj);
    one_rule->add_option("--out", one_out, "Write to FILE instead of stdout");

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Solve one tiling's edge relations");
    std::string solve_mode;
    std::optional<int> solve_i, solve_j;
    bool solve_json = false;
    solve_cmd->add_option("--mode", solve_mode, "single | one-rule | two-rule")->required();
    solve_cmd->add_option("-i", solve_i, "Alpha pattern 0..15");
    solve_cmd->add_option("-j", solve_j, "Beta pattern 0..15");
    solve_cmd->add_flag("--json", solve_json, "Structured output");

    // render
    auto* render_cmd = app.add_subcommand("render", "Render an escherized s-spread as SVG");
    std::string render_mode = "two-rule";
    std::optional<int> render_i, render_j;
    int render_s = 0;
    std::optional<std::string> params_path, tiling_path, params_out;
    std::optional<std::uint64_t> seed;
    std::string render_out;
    std::string render_target = "alpha";
    render_cmd->add_option("--mode", render_mode, "single | one-rule | two-rule")->capture_default_str();
    render_cmd->add_option("-i", render_i, "Alpha pattern 0..15");
    render_cmd->add_option("-j", render_j, "Beta pattern 0..15");
    render_cmd->add_option("-s", render_s, "Spread level")->required();
    auto* params_opt = render_cmd->add_option("--params", params_path, "Curve parameters (JSON)");
    render_cmd->add_option("--seed", seed, "Draw random admissible curves")->excludes(params_opt);
    render_cmd->add_option("--out", render_out, "SVG output file")->required();
    render_cmd->add_option("--tiling", tiling_path, "Also write the placement/curve dump");
    render_cmd->add_option("--save-params", params_out, "Write the curves used to FILE");
    render_cmd->add_option("--target", render_target, "alpha | beta")->capture_default_str();

    // oracle-check
    auto* oracle_cmd = app.add_subcommand("oracle-check", "Compare the solver with spread geometry");
    std::string oracle_mode = "two-rule";
    std::optional<int> oracle_i, oracle_j;
    bool oracle_all = false;
    int smax = 4;
    oracle_cmd->add_option("--mode", oracle_mode, "single | one-rule | two-rule")->capture_default_str();
    auto* oi = oracle_cmd->add_option("-i", oracle_i, "Alpha pattern 0..15");
    oracle_cmd->add_option("-j", oracle_j, "Beta pattern 0..15");
    oracle_cmd->add_flag("--all", oracle_all, "Every class representative")->excludes(oi);
    oracle_cmd->add_option("--smax", smax, "Deepest spread level")->capture_default_str();

    // spread
    auto* spread_cmd = app.add_subcommand("spread", "Dump the placements of an s-spread");
    std::optional<int> spread_i, spread_j;
    int spread_s = 1;
    std::string spread_target = "alpha";
    std::optional<std::string> spread_out;
    spread_cmd->add_option("-i", spread_i, "Alpha pattern 0..15")->required();
    spread_cmd->add_option("-j", spread_j, "Beta pattern 0..15");
    spread_cmd->add_option("-s", spread_s, "Spread level")->required();
    spread_cmd->add_option("--target", spread_target, "alpha | beta")->capture_default_str();
    spread_cmd->add_option("--out", spread_out, "Write to FILE instead of stdout");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*classify) {
            const auto table = classify_all();
            emit(out, classify_out, classify_json ? to_json(table) + "\n" : to_text_table(table));
        } else if (*one_rule) {
            const auto rows = classify_one_rule();
            emit(out, one_out, one_json ? to_json(rows) + "\n" : to_text_table(rows));
        } else if (*solve_cmd) {
            const SolveMode mode = mode_from(solve_mode);
            const auto result = solve(mode, rule_for(mode, solve_i, solve_j));
            out << (solve_json ? to_json(result) + "\n" : solve_text(result));
        } else if (*render_cmd) {
            const SolveMode mode = mode_from(render_mode);
            const auto solution = solve(mode, rule_for(mode, render_i, render_j));
            PerturbationAssignment params;
            if (params_path) params = parse_params(read_file(*params_path));
            else if (seed) params = random_assignment(solution.system, *seed);
            else params = straight_assignment(solution.system);
            const auto rendered = render(solution, render_s, params, target_from(render_target));
            write_file(render_out, rendered.svg);
            if (tiling_path) write_file(*tiling_path, to_tiling_dump(rendered.tiling, solution.system));
            if (params_out) write_file(*params_out, to_params_json(params) + "\n");
            out << "wrote " << render_out << " (" << rendered.tiling.tiles.size() << " tiles, degree "
                << escher_degree(solution.system) << ")\n";
        } else if (*oracle_cmd) {
            const SolveMode mode = mode_from(oracle_mode);
            std::vector<SubstitutionRule> rules;
            if (oracle_all) {
                switch (mode) {
                case SolveMode::Single: rules.push_back({}); break;
                case SolveMode::OneRule:
                    for (int p = 1; p < kPatternCount - 1; ++p) rules.push_back({p, std::nullopt});
                    break;
                case SolveMode::TwoRule:
                    for (const auto& row : equivalence_classes(admissible_pairs()).rows)
                        rules.push_back(row.representative.rule());
                    break;
                }
            } else {
                rules.push_back(rule_for(mode, oracle_i, oracle_j));
            }
            const auto results = compare_all_with_oracle(mode, rules, smax);
            int mismatches = 0;
            for (std::size_t k = 0; k < rules.size(); ++k) {
                const auto& rule = rules[k];
                const auto& cmp = results[k];
                std::string label = std::to_string(rule.alpha_pattern);
                if (rule.beta_pattern) label = "(" + label + "," + std::to_string(*rule.beta_pattern) + ")";
                if (cmp.match) {
                    out << label << " ok " << cmp.solver << '\n';
                } else {
                    ++mismatches;
                    out << label << " MISMATCH solver: " << cmp.solver << " oracle: " << cmp.oracle << '\n';
                }
            }
            out << rules.size() - mismatches << "/" << rules.size() << " agree (smax " << smax << ")\n";
            if (mismatches) return kOracleMismatch;
        } else if (*spread_cmd) {
            SubstitutionRule rule{*spread_i, spread_j};
            if (!valid_pattern(rule.alpha_pattern) || (rule.beta_pattern && !valid_pattern(*rule.beta_pattern))) {
                throw Error(ErrorKind::InvalidArgument, "pattern out of range 0..15");
            }
            const auto sp = generate_spread(rule, target_from(spread_target), spread_s);
            emit(out, spread_out, to_placement_text(sp.placements));
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    return kOk;
}

} // namespace escher::cli
