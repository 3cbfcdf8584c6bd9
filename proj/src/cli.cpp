#include "truncbose/cli.hpp"

#include "truncbose/errors.hpp"
#include "truncbose/hermite.hpp"
#include "truncbose/jacobi.hpp"
#include "truncbose/lie.hpp"
#include "truncbose/operators.hpp"
#include "truncbose/scaling.hpp"
#include "truncbose/serialize.hpp"
#include "truncbose/states.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <ctime>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

namespace truncbose::cli {

namespace {

using nlohmann::json;

constexpr int max_build_dim = 4096;
constexpr int max_spectrum_dim = 100000;
constexpr int max_vectors_dim = 512;

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buf;
}

json make_manifest(const std::string& command,
                   const std::map<std::string, std::string>& parameters) {
    json params = json::object();
    for (const auto& [key, value] : parameters)
        params[key] = value;
    return {{"command", command},
            {"parameters", params},
            {"tool_version", tool_version},
            {"timestamp", utc_timestamp()}};
}

TruncatedOperator build_by_name(const std::string& name, Dim dim) {
    if (name == "N")
        return build_number(dim);
    if (name == "B")
        return build_position(dim);
    if (name == "C")
        return build_momentum_like(dim);
    if (name == "b")
        return build_lowering(dim);
    if (name == "bdag")
        return build_raising(dim);
    if (name == "I")
        return build_identity(dim);
    throw std::invalid_argument("unknown operator '" + name + "' (expected N|B|C|b|bdag|I)");
}

std::string matrix_to_table(const Matrix& matrix) {
    std::vector<std::string> cells(matrix.rows() * matrix.cols());
    std::size_t width = 0;
    for (std::size_t i = 0; i < matrix.rows(); ++i)
        for (std::size_t j = 0; j < matrix.cols(); ++j) {
            std::string& cell = cells[i * matrix.cols() + j];
            cell = format_double(matrix(i, j));
            width = std::max(width, cell.size());
        }
    std::string out;
    for (std::size_t i = 0; i < matrix.rows(); ++i) {
        for (std::size_t j = 0; j < matrix.cols(); ++j) {
            const std::string& cell = cells[i * matrix.cols() + j];
            if (j > 0)
                out += "  ";
            out.append(width - cell.size(), ' ');
            out += cell;
        }
        out += '\n';
    }
    return out;
}

// ---- build ----------------------------------------------------------------

int cmd_build(const std::string& op_name, int n, const std::string& format,
              std::ostream& out) {
    if (n > max_build_dim)
        throw std::domain_error("build: n > " + std::to_string(max_build_dim) +
                                " would serialize an enormous dense matrix");
    const TruncatedOperator op = build_by_name(op_name, Dim(n));
    if (format == "csv") {
        out << matrix_to_csv(op.entries);
    } else if (format == "json") {
        json doc{{"manifest", make_manifest("build", {{"op", op_name},
                                                      {"n", std::to_string(n)},
                                                      {"format", format}})},
                 {"dim", n},
                 {"role", role_name(op.role)},
                 {"entries", op.entries.data()}};
        out << doc.dump(2) << '\n';
    } else {
        out << role_name(op.role) << " operator, n = " << n << "\n"
            << matrix_to_table(op.entries);
    }
    return exit_ok;
}

// ---- lie-check ------------------------------------------------------------

struct CheckRow {
    std::string name;
    double residual;
    double tolerance;
    bool pass;
};

void append_report(std::vector<CheckRow>& rows, const std::string& name,
                   const lie::HomomorphismReport& report, double tol) {
    rows.push_back({name, report.max_residual, tol, report.max_residual <= tol});
}

int cmd_lie_check(const std::vector<int>& dims, double tol_option, bool inject_sign_flip,
                  const std::string& format, std::ostream& out, std::ostream& err) {
    const bool auto_tol = std::isnan(tol_option);
    std::vector<CheckRow> rows;

    for (int n : dims) {
        const Dim dim(n);
        // The truncated brackets accumulate roundoff from inexact sqrt
        // products, so the automatic tolerance scales with n.
        const double tol =
            auto_tol ? std::max(1e-13 * std::sqrt(static_cast<double>(n)),
                                8.0 * std::numeric_limits<double>::epsilon() * n)
                     : tol_option;
        const TruncatedOperator number = build_number(dim);
        const TruncatedOperator position = build_position(dim);
        const TruncatedOperator momentum = build_momentum_like(dim);
        const TruncatedOperator lowering = build_lowering(dim);
        const TruncatedOperator raising = build_raising(dim);

        const auto row = [&](const BracketReport& report, const std::string& expected) {
            rows.push_back({"n=" + std::to_string(n) + " [" + report.lhs_label + "," +
                                report.rhs_label + "] = " + expected,
                            report.residual, report.tolerance, report.pass});
        };
        row(check_bracket(number, position, momentum.entries, tol), "MomentumLike");
        row(check_bracket(number, momentum, position.entries, tol), "Position");
        row(check_bracket(position, momentum, expected_bc_defect(dim), tol),
            "diag(2,..,2,2(1-n))");
        row(check_bracket(lowering, raising, expected_ladder_defect(dim), tol),
            "diag(1,..,1,1-n)");
    }

    const double rep_tol = auto_tol ? 0.0 : tol_option;
    lie::LieBasis heisenberg = lie::heisenberg_3x3();
    if (inject_sign_flip) {
        // Test hook: corrupt one generator so the structure check must fail.
        for (std::size_t i = 0; i < heisenberg.labels.size(); ++i)
            if (heisenberg.labels[i] == "bdag")
                heisenberg.matrices[i](1, 2) = -heisenberg.matrices[i](1, 2);
    }
    append_report(rows, "heisenberg_3x3 structure", lie::verify_structure(heisenberg, rep_tol),
                  rep_tol);
    append_report(rows, "fermi_2x2 structure", lie::verify_structure(lie::fermi_2x2(), rep_tol),
                  rep_tol);
    append_report(rows, "oscillator adjoint homomorphism",
                  lie::verify_adjoint_homomorphism(rep_tol), rep_tol);

    bool all_pass = true;
    for (const CheckRow& row : rows)
        all_pass = all_pass && row.pass;

    if (format == "csv") {
        out << "check,residual,tolerance,pass\n";
        for (const CheckRow& row : rows)
            out << row.name << ',' << format_double(row.residual) << ','
                << format_double(row.tolerance) << ',' << (row.pass ? "true" : "false") << '\n';
    } else if (format == "json") {
        std::map<std::string, std::string> params{{"format", format}};
        std::string dim_list;
        for (int n : dims)
            dim_list += (dim_list.empty() ? "" : ",") + std::to_string(n);
        params["dims"] = dim_list;
        json checks = json::array();
        for (const CheckRow& row : rows)
            checks.push_back({{"name", row.name},
                              {"residual", row.residual},
                              {"tolerance", row.tolerance},
                              {"pass", row.pass}});
        json doc{{"manifest", make_manifest("lie-check", params)},
                 {"checks", checks},
                 {"all_pass", all_pass}};
        out << doc.dump(2) << '\n';
    } else {
        for (const CheckRow& row : rows)
            out << (row.pass ? "pass  " : "FAIL  ") << row.name
                << "  (residual " << format_double(row.residual) << ", tol "
                << format_double(row.tolerance) << ")\n";
        out << (all_pass ? "all checks passed\n" : "CHECKS FAILED\n");
    }
    if (!all_pass) {
        for (const CheckRow& row : rows)
            if (!row.pass)
                err << "failed: " << row.name << " residual " << format_double(row.residual)
                    << '\n';
        return exit_check_failed;
    }
    return exit_ok;
}

// ---- spectrum -------------------------------------------------------------

int cmd_spectrum(int n, bool with_vectors, double abs_tol, const std::string& format,
                 std::ostream& out) {
    if (n > max_spectrum_dim)
        throw std::domain_error("spectrum: n > " + std::to_string(max_spectrum_dim) +
                                " is out of the supported range");
    if (with_vectors && n > max_vectors_dim)
        throw std::domain_error("spectrum: eigenvectors are only offered for n <= " +
                                std::to_string(max_vectors_dim));
    const spectral::JacobiMatrix jacobi = spectral::bose_jacobi(Dim(n));
    const spectral::SpectrumResult spectrum =
        with_vectors ? spectral::spectrum_with_vectors(jacobi, abs_tol)
                     : spectral::eigenvalues_bisect(jacobi, abs_tol);

    if (format == "csv") {
        out << spectrum_to_csv(spectrum);
    } else if (format == "json") {
        json doc{{"manifest", make_manifest("spectrum", {{"n", std::to_string(n)},
                                                         {"vectors", with_vectors ? "true" : "false"},
                                                         {"tol", format_double(abs_tol)},
                                                         {"format", format}})},
                 {"n", n},
                 {"eigenvalues", spectrum.eigenvalues}};
        if (with_vectors)
            doc["eigenvectors"] = spectrum.eigenvectors;
        out << doc.dump(2) << '\n';
    } else {
        for (std::size_t k = 0; k < spectrum.eigenvalues.size(); ++k) {
            out << std::setw(5) << k << "  " << format_double(spectrum.eigenvalues[k]);
            if (k < spectrum.eigenvectors.size()) {
                out << "  (";
                for (std::size_t i = 0; i < spectrum.eigenvectors[k].size(); ++i)
                    out << (i ? ", " : "") << format_double(spectrum.eigenvectors[k][i]);
                out << ")";
            }
            out << '\n';
        }
    }
    return exit_ok;
}

// ---- expect ---------------------------------------------------------------

struct StateSpec {
    std::string kind;
    int level = 0;
    states::Complex param{0.0};
};

StateSpec parse_state_spec(const std::string& text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("state spec '" + text +
                                    "' (expected number:K | coherent:RE,IM | squeezed:RE,IM)");
    StateSpec spec;
    spec.kind = text.substr(0, colon);
    const std::string rest = text.substr(colon + 1);
    if (spec.kind == "number") {
        std::size_t used = 0;
        spec.level = std::stoi(rest, &used);
        if (used != rest.size())
            throw std::invalid_argument("state spec: bad level '" + rest + "'");
        return spec;
    }
    if (spec.kind == "coherent" || spec.kind == "squeezed") {
        const std::size_t comma = rest.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("state spec: expected RE,IM in '" + text + "'");
        std::size_t used_re = 0, used_im = 0;
        const std::string re_text = rest.substr(0, comma);
        const std::string im_text = rest.substr(comma + 1);
        const double re = std::stod(re_text, &used_re);
        const double im = std::stod(im_text, &used_im);
        if (used_re != re_text.size() || used_im != im_text.size())
            throw std::invalid_argument("state spec: bad complex parameter in '" + text + "'");
        spec.param = {re, im};
        return spec;
    }
    throw std::invalid_argument("state spec: unknown kind '" + spec.kind + "'");
}

int cmd_expect(const std::string& state_text, const std::string& op_name, int n,
               const std::string& format, std::ostream& out) {
    if (op_name != "N" && op_name != "B" && op_name != "C")
        throw std::invalid_argument("expect: operator must be N, B or C");
    const StateSpec spec = parse_state_spec(state_text);
    const Dim dim(n);

    states::StateVector state = [&] {
        if (spec.kind == "number")
            return states::number_state(dim, spec.level);
        if (spec.kind == "coherent")
            return states::coherent_state(dim, spec.param);
        return states::squeezed_vacuum(dim, spec.param);
    }();
    const TruncatedOperator op = build_by_name(op_name, dim);
    const states::Complex value = states::expectation(state, op);

    // Analytic references. The MomentumLike expectation of the truncated real
    // antisymmetric matrix is purely imaginary; its reference is a magnitude.
    double reference = 0.0;
    if (op_name == "N") {
        if (spec.kind == "number")
            reference = spec.level;
        else if (spec.kind == "coherent")
            reference = std::norm(spec.param);
        else
            reference = std::pow(std::sinh(std::abs(spec.param)), 2);
    } else if (op_name == "B" && spec.kind == "coherent") {
        reference = 2.0 * spec.param.real();
    } else if (op_name == "C" && spec.kind == "coherent") {
        reference = 2.0 * std::fabs(spec.param.imag());
    }
    const double deviation =
        op_name == "C" ? std::fabs(std::abs(value) - reference) : std::fabs(value.real() - reference);

    if (format == "csv") {
        out << "value_re,value_im,reference,deviation\n"
            << format_double(value.real()) << ',' << format_double(value.imag()) << ','
            << format_double(reference) << ',' << format_double(deviation) << '\n';
    } else if (format == "json") {
        json doc{{"manifest", make_manifest("expect", {{"state", state_text},
                                                       {"op", op_name},
                                                       {"n", std::to_string(n)},
                                                       {"format", format}})},
                 {"state", state_text},
                 {"operator", op_name},
                 {"n", n},
                 {"value", {{"re", value.real()}, {"im", value.imag()}}},
                 {"reference", reference},
                 {"deviation", deviation}};
        out << doc.dump(2) << '\n';
    } else {
        out << "<" << state_text << "| " << op_name << " |" << state_text << ">  n=" << n << '\n';
        out << "value     = " << format_double(value.real());
        if (std::fabs(value.imag()) > 1e-12)
            out << (value.imag() < 0 ? " - " : " + ") << format_double(std::fabs(value.imag()))
                << "i";
        out << '\n';
        out << "reference = " << format_double(reference)
            << (op_name == "C" ? " (magnitude)" : "") << '\n';
        out << "deviation = " << format_double(deviation) << '\n';
    }
    return exit_ok;
}

// ---- scaling --------------------------------------------------------------

int cmd_scaling(const std::string& kind, int n_min, int n_max, int points, double abs_tol,
                const std::string& format, std::ostream& out) {
    const scaling::ScalingFit fit = kind == "gap"
                                        ? scaling::gap_law_report(n_min, n_max, points, abs_tol)
                                        : scaling::lambda_max_report(n_min, n_max, points, abs_tol);
    if (format == "csv") {
        out << scaling_to_csv(fit);
    } else if (format == "json") {
        json samples = json::array();
        for (const auto& [n, value] : fit.samples)
            samples.push_back({{"n", n}, {"value", value}});
        json doc{{"manifest", make_manifest("scaling", {{"kind", kind},
                                                        {"n_min", std::to_string(n_min)},
                                                        {"n_max", std::to_string(n_max)},
                                                        {"points", std::to_string(points)},
                                                        {"tol", format_double(abs_tol)},
                                                        {"format", format}})},
                 {"kind", kind},
                 {"samples", samples},
                 {"fit",
                  {{"exponent", fit.exponent},
                   {"prefactor", fit.prefactor},
                   {"rms_residual", fit.rms_residual},
                   {"n_min", fit.n_range.first},
                   {"n_max", fit.n_range.second}}}};
        out << doc.dump(2) << '\n';
    } else {
        out << kind << " sweep, n in [" << n_min << ", " << n_max << "], " << points
            << " points\n";
        for (const auto& [n, value] : fit.samples)
            out << std::setw(8) << static_cast<long>(n) << "  " << format_double(value) << '\n';
        out << "fit: value ~ " << format_double(fit.prefactor) << " * n^"
            << format_double(fit.exponent) << "  (rms log residual "
            << format_double(fit.rms_residual) << ")\n";
    }
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Truncated ladder-operator toolkit: operator matrices, bracket checks,\n"
                 "Jacobi spectra, state expectations and scaling studies."};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"table", "csv", "json"};

    // build
    std::string build_op;
    int build_n = 0;
    std::string build_format = "table";
    CLI::App* build = app.add_subcommand("build", "Print a truncated operator matrix");
    build->add_option("op", build_op, "Operator: N|B|C|b|bdag|I")->required();
    build->add_option("n", build_n, "Truncation dimension (>= 2)")->required();
    build->add_option("--format", build_format, "Output format")
        ->check(CLI::IsMember(formats));

    // lie-check
    std::vector<int> lie_dims{2, 3, 4};
    double lie_tol = std::numeric_limits<double>::quiet_NaN();
    bool inject_sign_flip = false;
    std::string lie_format = "table";
    CLI::App* lie_check =
        app.add_subcommand("lie-check", "Verify the bracket tables and representations");
    lie_check->add_option("--dims", lie_dims, "Truncation dimensions to sweep")
        ->delimiter(',');
    lie_check->add_option("--tol", lie_tol,
                          "Residual tolerance (default: 0 for exact representation "
                          "checks, scaled with n for truncated sweeps)");
    lie_check->add_flag("--inject-sign-flip", inject_sign_flip,
                        "Corrupt one generator sign (negative-control test hook)");
    lie_check->add_option("--format", lie_format, "Output format")->check(CLI::IsMember(formats));

    // spectrum
    int spectrum_n = 0;
    bool with_vectors = false;
    double spectrum_tol = spectral::default_abs_tol;
    std::string spectrum_format = "table";
    CLI::App* spectrum =
        app.add_subcommand("spectrum", "Eigenvalues (descending) of the Position operator");
    spectrum->add_option("n", spectrum_n, "Truncation dimension (2..100000)")->required();
    spectrum->add_flag("--vectors", with_vectors, "Also print unit eigenvectors (n <= 512)");
    spectrum->add_option("--tol", spectrum_tol, "Bisection bracket width");
    spectrum->add_option("--format", spectrum_format, "Output format")
        ->check(CLI::IsMember(formats));

    // expect
    std::string expect_state, expect_op;
    int expect_n = 0;
    std::string expect_format = "table";
    CLI::App* expect = app.add_subcommand(
        "expect", "Expectation value of N, B or C in a number/coherent/squeezed state");
    expect->add_option("state", expect_state, "number:K | coherent:RE,IM | squeezed:RE,IM")
        ->required();
    expect->add_option("op", expect_op, "Operator: N|B|C")->required();
    expect->add_option("n", expect_n, "Truncation dimension (>= 2)")->required();
    expect->add_option("--format", expect_format, "Output format")->check(CLI::IsMember(formats));

    // scaling
    std::string scaling_kind;
    int scaling_min = 0, scaling_max = 0, scaling_points = 0;
    double scaling_tol = spectral::default_abs_tol;
    std::string scaling_format = "table";
    CLI::App* scaling_cmd = app.add_subcommand(
        "scaling", "Sweep the top of the spectrum over a geometric grid and fit a power law");
    scaling_cmd->add_option("kind", scaling_kind, "lambda-max | gap")
        ->required()
        ->check(CLI::IsMember({"lambda-max", "gap"}));
    scaling_cmd->add_option("n_min", scaling_min, "Smallest dimension (>= 16)")->required();
    scaling_cmd->add_option("n_max", scaling_max, "Largest dimension (<= 100000)")->required();
    scaling_cmd->add_option("points", scaling_points, "Grid points (>= 5)")->required();
    scaling_cmd->add_option("--tol", scaling_tol, "Bisection bracket width");
    scaling_cmd->add_option("--format", scaling_format, "Output format")
        ->check(CLI::IsMember(formats));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& help) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& parse_error) {
        err << parse_error.what() << '\n';
        return exit_usage;
    }

    try {
        if (build->parsed())
            return cmd_build(build_op, build_n, build_format, out);
        if (lie_check->parsed())
            return cmd_lie_check(lie_dims, lie_tol, inject_sign_flip, lie_format, out, err);
        if (spectrum->parsed())
            return cmd_spectrum(spectrum_n, with_vectors, spectrum_tol, spectrum_format, out);
        if (expect->parsed())
            return cmd_expect(expect_state, expect_op, expect_n, expect_format, out);
        if (scaling_cmd->parsed())
            return cmd_scaling(scaling_kind, scaling_min, scaling_max, scaling_points,
                               scaling_tol, scaling_format, out);
        err << "no subcommand\n";
        return exit_usage;
    } catch (const DimensionError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_check_failed;
    }
}

} // namespace truncbose::cli
