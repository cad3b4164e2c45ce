#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qspin/invariants.hpp"
#include "qspin/qspin.hpp"

namespace qspin::cli {
namespace {

using Cell = std::variant<double, std::string>;

std::string format_number(double v, int digits, char conv = 'g') {
    char buf[64];
    const char fmt[] = {'%', '.', '*', conv, '\0'};
    std::snprintf(buf, sizeof buf, fmt, digits, v);
    return buf;
}

/// A column-named table emitted as CSV (header + rows) or as a JSON array of
/// row objects. Numbers are written with `precision` significant digits.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void write(std::ostream& os, const std::string& format, int precision) const {
        if (format == "json") {
            auto arr = nlohmann::json::array();
            for (const auto& row : rows) {
                nlohmann::json obj = nlohmann::json::object();
                for (std::size_t c = 0; c < columns.size(); ++c) {
                    if (const double* d = std::get_if<double>(&row[c]))
                        obj[columns[c]] = std::stod(format_number(*d, precision));
                    else
                        obj[columns[c]] = std::get<std::string>(row[c]);
                }
                arr.push_back(std::move(obj));
            }
            os << arr.dump(2) << '\n';
            return;
        }
        for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << columns[c];
        os << '\n';
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) os << ',';
                if (const double* d = std::get_if<double>(&row[c]))
                    os << format_number(*d, precision);
                else
                    os << std::get<std::string>(row[c]);
            }
            os << '\n';
        }
    }
};

struct RangeOpts {
    double min = 0.0, max = 0.0;
    std::size_t count = 1;
    bool log = false;

    Range to_range() const { return {min, max, count, log ? Spacing::log : Spacing::linear}; }
};

void add_range(CLI::App* cmd, const std::string& name, RangeOpts& r) {
    cmd->add_option("--" + name + "-min", r.min, name + " range start")->capture_default_str();
    cmd->add_option("--" + name + "-max", r.max, name + " range end")->capture_default_str();
    cmd->add_option("--" + name + "-count", r.count, name + " node count")->capture_default_str();
    cmd->add_flag("--" + name + "-log", r.log, "logarithmic " + name + " spacing");
}

/// Operators accepted by `decompose`.
ComplexMat4 named_operator(const std::string& name, const ModelParams& p) {
    const auto& s = spin32_operators();
    if (name == "Ix") return s.ix;
    if (name == "Iy") return s.iy;
    if (name == "Iz") return s.iz;
    if (name == "E") return ComplexMat4::identity();
    ModelParams q = p;
    if (name == "HQ") {
        q.alpha = 0.0;
        return hamiltonian_spin32(q);
    }
    if (name == "HZ") return p.alpha * s.ix;
    if (name == "H") return hamiltonian_spin32(p);
    if (name == "H2") return hamiltonian_two_qubit(p);
    throw Error(ErrorKind::InvalidArgument, "unknown operator '" + name + "'");
}

std::size_t env_threads() {
    if (const char* v = std::getenv("QSPIN_THREADS")) {
        try {
            const long n = std::stol(v);
            if (n > 0) return static_cast<std::size_t>(n);
        } catch (const std::exception&) {
        }
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spin-3/2 nucleus as two fictitious spins 1/2: spectra and entanglement", "qspin"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "csv";
    std::string output;
    int precision = 9;
    int decimals = 6;
    std::size_t threads = 0;
    std::string mode_name = "paper";
    app.add_option("--format", format, "table output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--output,-o", output, "write results to this file instead of stdout");
    app.add_option("--precision", precision, "significant digits in tables")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
    app.add_option("--decimals", decimals, "decimal places for scalar results")
        ->check(CLI::Range(0, 17))
        ->capture_default_str();
    app.add_option("--threads", threads, "sweep worker cap (default: QSPIN_THREADS or all cores)");
    app.add_option("--mode", mode_name, "Hamiltonian variant")
        ->check(CLI::IsMember({"paper", "exact"}))
        ->capture_default_str();

    double alpha = 1.0, eta = 0.0, beta = 1.0, tol = kDefaultBetaTolerance;
    double thermal_eta = 0.14;
    std::string op_name = "H";
    std::vector<double> alphas;
    std::string preset;
    RangeOpts ra{0.0, 5.0, 51}, rb{0.0, 4.0, 41}, re{0.14, 0.14, 1};
    double eqq_mhz = 62.8;

    auto* c_decompose = app.add_subcommand("decompose", "Pauli-product coefficients of an operator");
    c_decompose->add_option("--operator", op_name, "Ix, Iy, Iz, E, HQ, HZ, H or H2")
        ->capture_default_str();
    c_decompose->add_option("--alpha", alpha)->capture_default_str();
    c_decompose->add_option("--eta", eta)->capture_default_str();

    auto* c_spectrum = app.add_subcommand("spectrum", "energy levels, closed form and numerical");
    c_spectrum->add_option("--alpha", alpha)->capture_default_str();
    c_spectrum->add_option("--eta", eta)->capture_default_str();

    auto* c_ground = app.add_subcommand("ground", "printed ground-state amplitudes and concurrence");
    c_ground->add_option("--alpha", alpha)->capture_default_str();
    c_ground->add_option("--eta", eta)->capture_default_str();

    auto* c_conc = app.add_subcommand("concurrence", "closed-form ground-state concurrence");
    c_conc->add_option("--alpha", alpha)->capture_default_str();
    c_conc->add_option("--eta", eta)->capture_default_str();

    auto* c_thermal = app.add_subcommand("thermal", "Wootters concurrence of the Gibbs state");
    c_thermal->add_option("--alpha", alpha)->capture_default_str();
    c_thermal->add_option("--eta", thermal_eta)->capture_default_str();
    c_thermal->add_option("--beta", beta)->capture_default_str();

    auto* c_boundary = app.add_subcommand("boundary", "critical inverse temperature per alpha");
    c_boundary->add_option("--alpha", alphas, "ascending alpha values")->delimiter(',');
    c_boundary->add_option("--eta", thermal_eta)->capture_default_str();
    c_boundary->add_option("--tol", tol)->capture_default_str();
    c_boundary->add_option("--preset", preset)->check(CLI::IsMember({"fig4"}));

    auto* c_sweep_pure = app.add_subcommand("sweep-pure", "closed-form concurrence over (alpha, eta)");
    RangeOpts pa{0.01, 5.0, 100}, pe{0.0, 1.0, 11};
    add_range(c_sweep_pure, "alpha", pa);
    add_range(c_sweep_pure, "eta", pe);
    c_sweep_pure->add_option("--preset", preset)->check(CLI::IsMember({"fig1"}));

    auto* c_sweep_thermal =
        app.add_subcommand("sweep-thermal", "thermal concurrence over (alpha, beta, eta)");
    add_range(c_sweep_thermal, "alpha", ra);
    add_range(c_sweep_thermal, "beta", rb);
    add_range(c_sweep_thermal, "eta", re);
    c_sweep_thermal->add_option("--preset", preset)
        ->check(CLI::IsMember({"fig2a", "fig3", "fig5", "fig6"}));

    auto* c_report = app.add_subcommand("report", "cross-check of the printed formulas");
    c_report->add_option("--alpha", alpha)->capture_default_str();
    c_report->add_option("--eta", eta)->capture_default_str();

    auto* c_cu63 = app.add_subcommand("cu63", "spin temperature in kelvin for a given beta");
    c_cu63->add_option("--beta", beta)->capture_default_str();
    c_cu63->add_option("--eqq", eqq_mhz, "quadrupole coupling e^2Qq in MHz")->capture_default_str();

    auto* c_check = app.add_subcommand("check", "run the invariant self-check suite");

    std::vector<std::string> argv_rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(argv_rest);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "qspin: " << e.what() << '\n';
        return kArgumentError;
    }

    std::ofstream file;
    if (!output.empty()) {
        file.open(output);
        if (!file) {
            err << "qspin: cannot open '" << output << "' for writing\n";
            return kArgumentError;
        }
    }
    std::ostream& sink = output.empty() ? out : file;
    if (threads == 0) threads = env_threads();
    const Mode mode = *parse_mode(mode_name);
    auto scalar = [&](double v) { sink << format_number(v, decimals, 'f') << '\n'; };

    try {
        if (*c_decompose) {
            const ModelParams p{alpha, eta, 0.0, mode, {}};
            p.validate();
            const auto c = decompose(named_operator(op_name, p));
            Table t{{"index", "re", "im"}, {}};
            for (std::size_t k = 0; k < 16; ++k) {
                const auto idx = PauliIndex::from_flat(k);
                if (std::abs(c[idx]) > 1e-14)
                    t.rows.push_back({idx.label(), c[idx].real(), c[idx].imag()});
            }
            t.write(sink, format, precision);
        } else if (*c_spectrum) {
            const ModelParams p{alpha, eta, 0.0, mode, {}};
            p.validate();
            const auto numeric = herm_eigensolve(hamiltonian_two_qubit(p)).values;
            Table t;
            if (mode == Mode::paper) {
                const auto closed = analytic_energies(p);
                t.columns = {"level", "numeric", "analytic"};
                for (std::size_t k = 0; k < 4; ++k)
                    t.rows.push_back({static_cast<double>(k), numeric[k], closed[k]});
            } else {
                t.columns = {"level", "numeric"};
                for (std::size_t k = 0; k < 4; ++k)
                    t.rows.push_back({static_cast<double>(k), numeric[k]});
            }
            t.write(sink, format, precision);
        } else if (*c_ground) {
            const ModelParams p{alpha, eta, 0.0, Mode::paper, {}};
            p.validate();
            const auto g = ground_amplitudes(p);
            Table t{{"a_minus", "b_plus", "b_minus", "a_plus", "d", "C"},
                    {{g.a_minus, g.b_plus, g.b_minus, g.a_plus, g.d, pure_concurrence(g)}}};
            t.write(sink, format, precision);
        } else if (*c_conc) {
            const ModelParams p{alpha, eta, 0.0, Mode::paper, {}};
            p.validate();
            scalar(closed_form_concurrence(p));
        } else if (*c_thermal) {
            const ModelParams p{alpha, thermal_eta, beta, mode, {}};
            p.validate();
            scalar(thermal_concurrence(p));
        } else if (*c_boundary) {
            if (preset == "fig4") {
                alphas = Range{0.01, 100.0, 41, Spacing::log}.values();
            }
            if (alphas.empty()) throw Error(ErrorKind::InvalidArgument, "boundary needs --alpha or --preset");
            const auto pb = phase_boundary(alphas, thermal_eta, tol, mode, threads);
            Table t{{"alpha", "beta_c", "eta"}, {}};
            for (const auto& pt : pb.points) t.rows.push_back({pt.alpha, pt.beta_c, pt.eta});
            t.write(sink, format, precision);
            for (const auto& note : pb.notes) err << "qspin: note: " << note << '\n';
        } else if (*c_sweep_pure) {
            GridSpec g;
            g.mode = mode;
            if (preset == "fig1") {
                pa = {0.01, 5.0, 100};
                pe = {0.0, 1.0, 11};
            }
            g.alpha = pa.to_range();
            g.eta = pe.to_range();
            Table t{{"alpha", "eta", "C"}, {}};
            for (const auto& r : sweep_pure(g)) t.rows.push_back({r.alpha, r.eta, r.c});
            t.write(sink, format, precision);
        } else if (*c_sweep_thermal) {
            GridSpec g;
            g.mode = mode;
            if (preset == "fig2a") {
                ra = {0.5, 0.5, 1};
                rb = {1.0, 4.0, 4};
                re = {0.0, 1.0, 51};
            } else if (preset == "fig3") {
                ra = {0.0, 5.0, 51};
                rb = {0.0, 4.0, 41};
                re = {0.14, 0.14, 1};
            } else if (preset == "fig5") {
                ra = {1.0, 4.0, 4};
                rb = {0.0, 4.0, 81};
                re = {0.14, 0.14, 1};
            } else if (preset == "fig6") {
                ra = {0.0, 5.0, 101};
                rb = {1.0, 4.0, 4};
                re = {0.14, 0.14, 1};
            }
            g.alpha = ra.to_range();
            g.beta = rb.to_range();
            g.eta = re.to_range();
            Table t{{"alpha", "beta", "eta", "C_T"}, {}};
            for (const auto& r : sweep_thermal(g, threads))
                t.rows.push_back({r.alpha, r.beta, r.eta, r.c_t});
            t.write(sink, format, precision);
        } else if (*c_report) {
            const ModelParams p{alpha, eta, 0.0, Mode::paper, {}};
            p.validate();
            const auto r = consistency_report(p);
            Table t{{"field", "value"}, {}};
            t.rows.push_back({std::string("hq_eta_coeff_exact"), r.hq_eta_coeff_exact});
            t.rows.push_back({std::string("hq_eta_coeff_printed"), r.hq_eta_coeff_printed});
            for (std::size_t k = 0; k < 4; ++k)
                t.rows.push_back({"eq11_printed_energy_" + std::to_string(k), r.eq11_printed_energies[k]});
            for (std::size_t k = 0; k < 4; ++k)
                t.rows.push_back({"numeric_energy_" + std::to_string(k), r.numeric_energies[k]});
            t.rows.push_back({std::string("max_energy_mismatch"), r.max_energy_mismatch});
            t.rows.push_back({std::string("eq12_state_overlap"), r.eq12_state_overlap});
            t.rows.push_back({std::string("eq12_gauge_overlap"), r.eq12_gauge_overlap});
            t.rows.push_back({std::string("eq15_concurrence_mismatch"), r.eq15_concurrence_mismatch});
            t.write(sink, format, precision);
        } else if (*c_cu63) {
            Table t{{"convention", "kelvin"}, {}};
            t.rows.push_back({std::string("cyclic"),
                              cu63_temperature(beta, eqq_mhz, FrequencyConvention::cyclic)});
            t.rows.push_back({std::string("angular"),
                              cu63_temperature(beta, eqq_mhz, FrequencyConvention::angular)});
            t.write(sink, format, precision);
        } else if (*c_check) {
            bool ok = true;
            for (const auto& c : run_invariant_suite()) {
                sink << (c.passed ? "PASS " : "FAIL ") << c.name << " (worst "
                     << format_number(c.worst, 3) << ", tol " << format_number(c.tolerance, 3)
                     << ")\n";
                ok = ok && c.passed;
            }
            if (!ok) {
                err << "qspin: invariant suite failed\n";
                return kNumericalError;
            }
        }
    } catch (const Error& e) {
        err << "qspin: " << e.what() << '\n';
        if (e.kind() == ErrorKind::InvalidArgument) return kArgumentError;
        return is_numerical(e.kind()) ? kNumericalError : kDomainError;
    }
    return kOk;
}

}  // namespace qspin::cli
