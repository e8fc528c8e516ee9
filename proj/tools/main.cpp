#include "demos.hpp"
#include "expr.hpp"

#include "qsr/json_io.hpp"
#include "qsr/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;

qsr::Horizon parse_horizon(const std::string& text) {
    int ell = 8, h = 32, w = 8;
    if (std::sscanf(text.c_str(), "%d,%d,%d", &ell, &h, &w) != 3)
        throw CLI::ValidationError("--horizon", "expected ellmax,hmax,window (e.g. 8,32,8)");
    return qsr::Horizon(ell, h, w);
}

void print_parse_error(const std::string& input, const qsr::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n  " << input << "\n  "
              << std::string(e.position, ' ') << "^\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

qsr::StateSequence load_sequence(const std::string& spec_path) {
    return qsr::sequence_from_spec_json(read_file(spec_path));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"string-state arithmetic and Cauchy sequence toolkit"};
    app.require_subcommand(1);

    bool as_json = false;
    std::string horizon_text = "8,32,8";
    unsigned long long seed = 0;
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_option("--horizon", horizon_text, "probe horizon ellmax,hmax,window")
        ->capture_default_str();
    app.add_option("--seed", seed, "seed for randomized components (reserved)");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression in compact notation");
    std::string expr;
    eval_cmd->add_option("expression", expr, "e.g. \"110+1 * 10+1\" or \"1+ /:7 101+\"")
        ->required();

    // invert
    auto* invert_cmd = app.add_subcommand("invert", "accuracy inverse of a positive real literal");
    int invert_ell = 0;
    std::string invert_literal;
    invert_cmd->add_option("--ell", invert_ell, "accuracy (result within 2^-ell)")->required();
    invert_cmd->add_option("literal", invert_literal, "compact literal, e.g. \"101+\"")->required();

    // seq-gen
    auto* seqgen_cmd = app.add_subcommand("seq-gen", "generate sequence elements from a spec file");
    std::string seqgen_spec;
    int seqgen_count = 8;
    seqgen_cmd->add_option("--spec", seqgen_spec, "sequence spec JSON file")->required();
    seqgen_cmd->add_option("-n,--count", seqgen_count, "number of elements")->capture_default_str();

    // cauchy-check
    auto* cauchy_cmd = app.add_subcommand("cauchy-check", "probe the Cauchy condition");
    std::string cauchy_spec, report_path;
    cauchy_cmd->add_option("--spec", cauchy_spec, "sequence spec JSON file")->required();
    cauchy_cmd->add_option("--report", report_path, "write probe rows (ell,h,j,k,P) as CSV");

    // compare
    auto* compare_cmd = app.add_subcommand("compare", "order two sequences at the horizon");
    std::string compare_a, compare_b, compare_mode = "R";
    compare_cmd->add_option("--lhs", compare_a, "left sequence spec JSON file")->required();
    compare_cmd->add_option("--rhs", compare_b, "right sequence spec JSON file")->required();
    compare_cmd->add_option("--mode", compare_mode, "R, I or C")->capture_default_str();

    // demo
    auto* demo_cmd = app.add_subcommand("demo", "run a named construction and check its claims");
    std::string demo_name;
    demo_cmd
        ->add_option("name", demo_name,
                     "exam1 | bell | gaussian | entangled-real | completeness | x2-minus-1")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        const qsr::Horizon hz = parse_horizon(horizon_text);

        if (*eval_cmd) {
            qsr::StringState result;
            try {
                result = qsr::cli::eval_expression(expr);
            } catch (const qsr::ParseError& e) {
                print_parse_error(expr, e);
                return kExitUsage;
            }
            const qsr::DyadicComplex value = qsr::eigenvalue(result);
            if (as_json) {
                nlohmann::json j{{"compact", qsr::format_compact(result)},
                                 {"re", qsr::to_decimal_string(value)},
                                 {"im", qsr::to_decimal_string(value.imag_part())},
                                 {"state", nlohmann::json::parse(qsr::to_json(result))}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << qsr::format_compact(result) << "  (= "
                          << qsr::to_decimal_string_complex(value) << ")\n";
            }
            return kExitOk;
        }

        if (*invert_cmd) {
            qsr::StringState literal;
            try {
                literal = qsr::parse_compact(invert_literal);
            } catch (const qsr::ParseError& e) {
                print_parse_error(invert_literal, e);
                return kExitUsage;
            }
            if (!literal.im.is_zero()) {
                std::cerr << "error: invert expects a purely real literal\n";
                return kExitUsage;
            }
            qsr::RealComponent inv;
            try {
                inv = qsr::ell_inverse(literal.re, qsr::Accuracy(invert_ell));
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitUsage;
            }
            const qsr::StringState out = qsr::real_state(inv.sign, inv.digits);
            if (as_json) {
                nlohmann::json j{{"compact", qsr::format_compact(out)},
                                 {"value", qsr::to_decimal_string(qsr::eigenvalue(out))},
                                 {"ell", invert_ell}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << qsr::format_compact(out) << "  (= "
                          << qsr::to_decimal_string(qsr::eigenvalue(out)) << ")\n";
            }
            return kExitOk;
        }

        if (*seqgen_cmd) {
            qsr::StateSequence seq = load_sequence(seqgen_spec);
            if (as_json) {
                nlohmann::json arr = nlohmann::json::array();
                for (int n = 1; n <= seqgen_count; ++n)
                    arr.push_back(nlohmann::json::parse(qsr::to_json(seq.at(n))));
                std::cout << arr.dump() << "\n";
            } else {
                for (int n = 1; n <= seqgen_count; ++n)
                    std::cout << "n=" << n << ": " << seq.at(n).to_text() << "\n";
            }
            return kExitOk;
        }

        if (*cauchy_cmd) {
            qsr::StateSequence seq = load_sequence(cauchy_spec);
            std::ofstream report;
            qsr::ProbeLog log;
            if (!report_path.empty()) {
                report.open(report_path);
                if (!report) throw std::runtime_error("cannot open " + report_path);
                report << "ell,h,j,k,P\n";
                log = [&report](int ell, int h, int j, int k, double p) {
                    report << ell << "," << h << "," << j << "," << k << "," << p << "\n";
                };
            }
            qsr::CauchyVerdict v = qsr::cauchy_check(seq, hz, log);
            if (as_json)
                std::cout << qsr::to_json(v) << "\n";
            else {
                std::cout << "status: " << qsr::to_string(v.status) << "\n";
                for (auto [ell, h] : v.witness)
                    std::cout << "  ell=" << ell << " -> h=" << h << "\n";
                if (v.refutation)
                    std::cout << "  refuted at ell=" << v.refutation->ell
                              << " j=" << v.refutation->j << " k=" << v.refutation->k
                              << " P=" << v.refutation->probability << "\n";
            }
            return v.passed() ? kExitOk : kExitPropertyFailure;
        }

        if (*compare_cmd) {
            qsr::StateSequence a = load_sequence(compare_a);
            qsr::StateSequence b = load_sequence(compare_b);
            qsr::Mode mode;
            if (compare_mode == "R")
                mode = qsr::Mode::real;
            else if (compare_mode == "I")
                mode = qsr::Mode::imaginary;
            else if (compare_mode == "C")
                mode = qsr::Mode::complex;
            else {
                std::cerr << "error: --mode must be R, I or C\n";
                return kExitUsage;
            }
            qsr::TrichotomyResult t = qsr::trichotomy(a, b, mode, hz);
            if (as_json)
                std::cout << nlohmann::json{{"result", qsr::to_string(t)}}.dump() << "\n";
            else
                std::cout << qsr::to_string(t) << "\n";
            return kExitOk;
        }

        if (*demo_cmd) {
            qsr::cli::DemoReport report = qsr::cli::run_demo(demo_name, hz);
            std::cout << (as_json ? report.to_json() + "\n" : report.to_text());
            return report.ok ? kExitOk : kExitPropertyFailure;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPropertyFailure;
    }
    return kExitUsage;
}
