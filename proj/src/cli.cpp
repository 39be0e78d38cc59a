#include "bergman/cli.hpp"

#include <fstream>
#include <future>
#include <optional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bergman/error.hpp"
#include "bergman/olsen_reguera.hpp"
#include "bergman/operator.hpp"
#include "bergman/report.hpp"
#include "bergman/torsion.hpp"

namespace bergman {

namespace {

struct SymbolInput {
    std::string coeffs;
    std::string file;

    void attach(CLI::App* cmd) {
        auto* inline_opt = cmd->add_option("--coeffs", coeffs, "Coefficients as a JSON array of [re, im] pairs");
        auto* file_opt = cmd->add_option("--file", file, "File holding the coefficient JSON");
        inline_opt->excludes(file_opt);
    }

    TaylorSymbol load() const {
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw PreconditionError("cannot open coefficient file '" + file + "'");
            std::stringstream buf;
            buf << in.rdbuf();
            return parse_symbol(buf.str());
        }
        if (coeffs.empty()) throw PreconditionError("one of --coeffs or --file is required");
        return parse_symbol(coeffs);
    }
};

std::pair<int, int> parse_grid(const std::string& text) {
    const auto x = text.find_first_of("xX");
    try {
        if (x == std::string::npos) throw std::invalid_argument(text);
        std::size_t used_r = 0, used_a = 0;
        const std::string r = text.substr(0, x), a = text.substr(x + 1);
        const int radial = std::stoi(r, &used_r);
        const int angular = std::stoi(a, &used_a);
        if (used_r != r.size() || used_a != a.size()) throw std::invalid_argument(text);
        return {radial, angular};
    } catch (const std::logic_error&) {
        throw PreconditionError("malformed grid '" + text + "', expected RADIALxANGULAR such as 128x256");
    }
}

nlohmann::ordered_json basis_to_json(const ExtremalityResult& r) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& v : r.exact_basis) {
        auto vec = nlohmann::ordered_json::array();
        for (const auto& x : v) vec.push_back({x.re.get_str(), x.im.get_str()});
        out.push_back(std::move(vec));
    }
    return out;
}

int run_commutator(const TaylorSymbol& s, double tol, std::ostream& out) {
    const CommutatorNorm n = commutator_norm(s, tol);
    nlohmann::ordered_json j;
    j["symbol"] = symbol_to_json(s);
    j["value"] = n.value;
    j["truncationUsed"] = n.N_used;
    j["tolerance"] = tol;
    j["dirichletBound"] = 0.5 * dirichlet_sum(s).get_d();
    j["largeTruncation"] = n.large_truncation;
    j["history"] = n.history;
    out << format_json(j) << '\n';
    return kExitOk;
}

int run_torsion(const TaylorSymbol& s, const std::string& method, const std::string& grid, bool unsafe,
                std::ostream& out) {
    TorsionResult t;
    if (method == "exact") {
        t = torsional_rigidity_exact(s, unsafe);
    } else if (method == "fd") {
        const auto [radial, angular] = parse_grid(grid);
        t = torsional_rigidity_fd(s, radial, angular, unsafe);
    } else {
        throw PreconditionError("unknown torsion method '" + method + "', expected exact or fd");
    }
    nlohmann::ordered_json j;
    j["symbol"] = symbol_to_json(s);
    j["method"] = to_string(t.method);
    j["rho"] = t.rho;
    j["rhoOverPi"] = t.rho_over_pi ? nlohmann::ordered_json(t.rho_over_pi->get_str()) : nlohmann::ordered_json();
    j["maxBoundaryValue"] = t.max_boundary_value;
    j["maxLaplacianDefect"] = t.max_laplacian_defect;
    j["univalenceCertified"] = univalence_certificate(s);
    out << format_json(j) << '\n';
    return kExitOk;
}

int run_extremal(const TaylorSymbol& s, int truncation, std::ostream& out) {
    const ExtremalityResult r = extremal_nullspace(s, truncation);
    nlohmann::ordered_json j;
    j["symbol"] = symbol_to_json(s);
    j["classification"] = to_string(r.classification);
    j["nullspaceDim"] = r.nullspace_dim;
    j["truncation"] = r.truncation;
    j["stable"] = r.stable;
    j["basis"] = basis_to_json(r);
    out << format_json(j) << '\n';
    return kExitOk;
}

int run_or_check(const TaylorSymbol& s, const std::string& f_text, std::ostream& out) {
    const CoeffSeq f = CoeffSeq::from_symbol(parse_symbol(f_text));
    const double value = hankel_norm_sq_on(f, s);
    const double bound = or_bound(f, s);
    nlohmann::ordered_json j;
    j["symbol"] = symbol_to_json(s);
    j["f"] = symbol_to_json(f.as_symbol());
    j["sumI"] = sum_I(f, s);
    j["sumII"] = sum_II(f, s);
    j["hankelNormSq"] = value;
    j["sumStar"] = sum_star(f, s);
    j["orBound"] = bound;
    j["seqNormSq"] = seq_norm_sq(f);
    j["seqDirichlet"] = seq_dirichlet(s);
    j["gap"] = bound - value;
    auto alarms = nlohmann::ordered_json::array();
    if (value > bound + 1e-12 * std::max(1.0, bound)) alarms.push_back("hankelNormSq exceeds orBound");
    j["alarms"] = alarms;
    out << format_json(j) << '\n';
    return alarms.empty() ? kExitOk : kExitAlarm;
}

struct SandwichArgs {
    double tol = 1e-9;
    std::string json_out;
    bool csv = false;
    std::string batch;
    int samples = 4096;
};

int run_sandwich_batch(const SandwichArgs& args, std::ostream& out, std::ostream& err) {
    std::ifstream in(args.batch);
    if (!in) throw PreconditionError("cannot open batch file '" + args.batch + "'");
    nlohmann::json list;
    try {
        list = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw PreconditionError(std::string("malformed batch file: ") + e.what());
    }
    if (!list.is_array()) throw PreconditionError("batch file must hold a JSON array of coefficient arrays");

    SandwichOptions opts;
    opts.perimeter_samples = args.samples;
    struct Outcome {
        std::optional<SandwichReport> report;
        std::string error;
        int code = kExitOk;
    };
    std::vector<std::future<Outcome>> jobs;
    for (const auto& entry : list) {
        jobs.push_back(std::async(std::launch::async, [entry, &args, opts]() {
            Outcome o;
            try {
                o.report = sandwich(symbol_from_json(entry), args.tol, opts);
                if (!o.report->alarms.empty()) o.code = kExitAlarm;
            } catch (const PreconditionError& e) {
                o.error = e.what();
                o.code = kExitPrecondition;
            } catch (const ConsistencyError& e) {
                o.error = e.what();
                o.code = kExitAlarm;
            } catch (const std::exception& e) {
                o.error = e.what();
                o.code = kExitFailure;
            }
            return o;
        }));
    }

    auto reports = nlohmann::ordered_json::array();
    std::vector<std::string> csv_rows;
    int code = kExitOk;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        Outcome o = jobs[i].get();
        if (o.report) {
            reports.push_back(report_to_json(*o.report));
            csv_rows.push_back(report_csv_row(*o.report));
        } else {
            nlohmann::ordered_json failed;
            failed["index"] = i;
            failed["error"] = o.error;
            reports.push_back(std::move(failed));
            err << "entry " << i << ": " << o.error << '\n';
        }
        // Precondition failures outrank alarms, alarms outrank other failures.
        if (o.code == kExitPrecondition || (o.code == kExitAlarm && code != kExitPrecondition) ||
            (o.code == kExitFailure && code == kExitOk)) {
            code = o.code;
        }
    }
    const std::string text = format_json(reports);
    if (!args.json_out.empty()) std::ofstream(args.json_out) << text << '\n';
    if (args.csv) {
        out << report_csv_header() << '\n';
        for (const auto& row : csv_rows) out << row << '\n';
    } else {
        out << text << '\n';
    }
    return code;
}

int run_sandwich(const TaylorSymbol& s, const SandwichArgs& args, std::ostream& out) {
    SandwichOptions opts;
    opts.perimeter_samples = args.samples;
    const SandwichReport r = sandwich(s, args.tol, opts);
    const std::string text = format_json(report_to_json(r));
    if (!args.json_out.empty()) {
        std::ofstream file(args.json_out);
        if (!file) throw PreconditionError("cannot write '" + args.json_out + "'");
        file << text << '\n';
    }
    if (args.csv) {
        out << report_csv_header() << '\n' << report_csv_row(r) << '\n';
    } else {
        out << text << '\n';
    }
    return r.alarms.empty() ? kExitOk : kExitAlarm;
}

void print_error(std::ostream& err, const std::string& kind, const std::string& message) {
    nlohmann::ordered_json j;
    j["error"] = kind;
    j["message"] = message;
    err << format_json(j) << '\n';
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Self-commutator norms, torsional rigidity and isoperimetric sandwich checks for polynomial symbols"};
    app.name("bergman");
    app.require_subcommand(1);

    SymbolInput comm_in, tors_in, sand_in, ext_in, or_in;
    double comm_tol = 1e-9;
    auto* comm = app.add_subcommand("commutator", "Norm of the self-commutator of T_phi on A^2(D)");
    comm_in.attach(comm);
    comm->add_option("--tol", comm_tol, "Absolute tolerance")->check(CLI::PositiveNumber);

    std::string method = "exact", grid = "128x256";
    bool unsafe = false;
    auto* tors = app.add_subcommand("torsion", "Torsional rigidity of phi(D)");
    tors_in.attach(tors);
    tors->add_option("--method", method, "exact or fd");
    tors->add_option("--grid", grid, "Finite-difference grid RADIALxANGULAR");
    tors->add_flag("--unsafe", unsafe, "Allow symbols without a univalence certificate");

    SandwichArgs sand_args;
    auto* sand = app.add_subcommand("sandwich", "Full bound report rho/A <= ||[T*,T]|| <= A/(2 pi)");
    sand_in.attach(sand);
    sand->add_option("--tol", sand_args.tol, "Commutator-norm tolerance")->check(CLI::PositiveNumber);
    sand->add_option("--json", sand_args.json_out, "Also write the JSON report to this path");
    sand->add_flag("--csv", sand_args.csv, "Print CSV instead of JSON");
    sand->add_option("--batch", sand_args.batch, "JSON file holding an array of coefficient arrays");
    sand->add_option("--samples", sand_args.samples, "Perimeter quadrature nodes")->check(CLI::PositiveNumber);

    int truncation = 0;
    auto* ext = app.add_subcommand("extremal", "Nullspace of the equality system for the Hankel bound");
    ext_in.attach(ext);
    ext->add_option("--truncation", truncation, "Number of unknowns b_1..b_N (default 4(K+1))");

    std::string f_text;
    auto* orc = app.add_subcommand("or-check", "Hankel norm of one f against the coefficient bound");
    or_in.attach(orc);
    orc->add_option("--f", f_text, "Coefficients of f as a JSON array of [re, im] pairs")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        print_error(err, "usage", e.what());
        return kExitPrecondition;
    }

    try {
        if (comm->parsed()) return run_commutator(comm_in.load(), comm_tol, out);
        if (tors->parsed()) return run_torsion(tors_in.load(), method, grid, unsafe, out);
        if (sand->parsed()) {
            if (!sand_args.batch.empty()) return run_sandwich_batch(sand_args, out, err);
            return run_sandwich(sand_in.load(), sand_args, out);
        }
        if (ext->parsed()) return run_extremal(ext_in.load(), truncation, out);
        if (orc->parsed()) return run_or_check(or_in.load(), f_text, out);
    } catch (const PreconditionError& e) {
        print_error(err, "precondition", e.what());
        return kExitPrecondition;
    } catch (const ConsistencyError& e) {
        print_error(err, "consistency", e.what());
        return kExitAlarm;
    } catch (const std::exception& e) {
        print_error(err, "failure", e.what());
        return kExitFailure;
    }
    return kExitFailure;
}

}  // namespace bergman
