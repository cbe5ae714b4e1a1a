#include "clark/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "clark/extensions.hpp"
#include "clark/livsic.hpp"
#include "clark/parallel.hpp"
#include "clark/verify.hpp"

namespace clark::cli {

using json = nlohmann::ordered_json;

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

double parse_real(const std::string& text, const char* what) {
    const std::string t = trim(text);
    if (t.empty()) throw ConfigError(std::string("empty ") + what);
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(t, &pos);
    } catch (const std::exception&) {
        throw ConfigError(std::string("cannot parse ") + what + ": '" + text + "'");
    }
    if (pos != t.size()) throw ConfigError(std::string("trailing characters in ") + what + ": '" + text + "'");
    return v;
}

long parse_integer(const std::string& text) {
    const std::string t = trim(text);
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(t, &pos);
    } catch (const std::exception&) {
        throw ConfigError("cannot parse integer: '" + text + "'");
    }
    if (pos != t.size()) throw ConfigError("trailing characters in integer: '" + text + "'");
    return v;
}

std::string entry_name(Eigen::Index i, Eigen::Index j) {
    return "r" + std::to_string(i + 1) + "c" + std::to_string(j + 1);
}

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Matrix matrix_from_json(const json& rows) {
    const auto n = static_cast<Eigen::Index>(rows.size());
    Matrix m(n, n == 0 ? 0 : static_cast<Eigen::Index>(rows.at(0).size()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const json& z = rows.at(i).at(j);
            m(i, j) = Complex(z.at("re").get<double>(), z.at("im").get<double>());
        }
    return m;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    return out;
}

void write_matrix_columns(std::ostream& os, const Matrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            os << ',' << format_double(m(i, j).real()) << ',' << format_double(m(i, j).imag());
}

void write_matrix_header(std::ostream& os, Eigen::Index n) {
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) os << ",re_" << entry_name(i, j) << ",im_" << entry_name(i, j);
}

// CLI11 reads "-3..3" or "-1" as a flag; glue such values onto their option.
std::vector<std::string> normalize_argv(int argc, const char* const* argv) {
    static const std::regex negative_value(R"(^-[0-9.].*)");
    std::vector<std::string> out;
    for (int k = 1; k < argc; ++k) {
        std::string tok = argv[k];
        if (tok.rfind("--", 0) == 0 && tok.find('=') == std::string::npos && k + 1 < argc &&
            std::regex_match(std::string(argv[k + 1]), negative_value)) {
            tok += "=";
            tok += argv[++k];
        }
        out.push_back(tok);
    }
    return out;
}

// ---- parameter assembly ---------------------------------------------------

PerturbationParameter resolve_alpha(const RunConfig& cfg) {
    if (cfg.alpha) return PerturbationParameter(*cfg.alpha);
    switch (cfg.model.kind) {
        case ModelKind::K1:
            return extensions::alpha_from_bc_k1(cfg.b.value_or(Complex(1.0)), cfg.c.value_or(Complex(0.0)));
        case ModelKind::L1:
            return extensions::alpha_from_bc_l1(*cfg.beta, cfg.model.a);
        case ModelKind::L2:
            return extensions::alpha_from_bc_regular(cfg.model, BoundaryMatrices::standard(*cfg.beta_a, *cfg.beta_b));
        case ModelKind::K2:
            break;
    }
    throw ConfigError("no boundary-condition translation for " + cfg.model.name() + "; pass --alpha");
}

SchurFunction schur_for(const RunConfig& cfg) {
    return cfg.closed_form ? models::closed_form_function(cfg.model) : livsic::livsic_function(cfg.model);
}

// AC density; K2 has a quarter-power branch at s = 0 that needs the finer Richardson step.
Matrix density_at(const RunConfig& cfg, const SchurFunction& b, const PerturbationParameter& alpha, double s) {
    if (cfg.closed_form) {
        if (cfg.model.kind == ModelKind::K1) return Matrix::Constant(1, 1, models::k1_density(alpha.alpha()(0, 0), s));
        if (cfg.model.kind == ModelKind::K2) return models::k2_density(alpha, s);
    }
    try {
        return measure::ac_density(b, alpha, s);
    } catch (const ConvergenceError&) {
        if (cfg.model.kind != ModelKind::K2) throw;
        cplane::LimitScheme fine;
        fine.exponent_step = 0.25;
        return measure::ac_density(b, alpha, s, fine);
    }
}

std::vector<double> atom_locations(const RunConfig& cfg, const SchurFunction& b, const PerturbationParameter& alpha) {
    if (cfg.n_range) {
        if (cfg.model.kind != ModelKind::L1) throw ConfigError("--n-range applies to the l1 model only");
        return models::l1_atoms(alpha.alpha()(0, 0), cfg.model.a, *cfg.n_range);
    }
    if (!cfg.window) return {};
    const auto [lo, hi] = *cfg.window;
    if (cfg.model.kind == ModelKind::L2) return models::l2_atoms(alpha, cfg.model.a, lo, hi);
    const double step = cfg.model.half_line() ? 0.05 : M_PI / (8.0 * cfg.model.a);
    return measure::scan_atoms(b, alpha, lo, hi, step);
}

std::ostream& pick_stream(const RunConfig& cfg, std::ofstream& file, std::ostream& out) {
    if (cfg.output.empty()) return out;
    file.open(cfg.output);
    if (!file) throw ConfigError("cannot open output file '" + cfg.output + "'");
    return file;
}

// ---- commands -------------------------------------------------------------

int cmd_measure(const RunConfig& cfg, const PerturbationParameter& alpha, std::ostream& os) {
    const SchurFunction b = schur_for(cfg);
    MeasureReport rep;
    const bool density = cfg.command == "density";
    if (density) {
        rep.grid = cfg.grid->points();
        rep.density.resize(rep.grid.size());
        parallel_for(rep.grid.size(), [&](std::size_t k) { rep.density[k] = density_at(cfg, b, alpha, rep.grid[k]); });
    }
    const std::vector<double> locs = atom_locations(cfg, b, alpha);
    if (!locs.empty()) {
        const MeasureReport pp = measure::measure_report(b, alpha, {}, locs);
        rep.atoms = pp.atoms;
    }
    rep.validate();
    if (cfg.format == "json")
        write_report_json(os, cfg.model, alpha.alpha(), rep);
    else
        write_report_csv(os, rep, !density);
    return 0;
}

int cmd_livsic(const RunConfig& cfg, std::ostream& os) {
    const SchurFunction b = schur_for(cfg);
    const std::vector<double> xs = cfg.grid->points();
    std::vector<Matrix> vals(xs.size());
    parallel_for(xs.size(), [&](std::size_t k) { vals[k] = b(Complex(xs[k], cfg.eta)); });
    if (cfg.format == "json") {
        json rows = json::array();
        for (std::size_t k = 0; k < xs.size(); ++k)
            rows.push_back(json{{"w", complex_json(Complex(xs[k], cfg.eta))},
                                {"value", matrix_json(vals[k])},
                                {"sigma_max", cplane::sigma_max(vals[k])}});
        os << json{{"model", cfg.model.name()}, {"values", rows}}.dump(2) << '\n';
        return 0;
    }
    os << "re_w,im_w";
    write_matrix_header(os, b.n);
    os << ",sigma_max\n";
    for (std::size_t k = 0; k < xs.size(); ++k) {
        os << format_double(xs[k]) << ',' << format_double(cfg.eta);
        write_matrix_columns(os, vals[k]);
        os << ',' << format_double(cplane::sigma_max(vals[k])) << '\n';
    }
    return 0;
}

struct KeyValue {
    std::string key;
    Complex value;
};

void emit_matrix(std::vector<KeyValue>& kv, const std::string& key, const Matrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) kv.push_back({key + "_" + entry_name(i, j), m(i, j)});
}

int cmd_bcmap(const RunConfig& cfg, std::ostream& os) {
    std::vector<KeyValue> kv;
    double residual = 0.0;
    const ModelId& m = cfg.model;
    if (cfg.alpha) {
        const PerturbationParameter alpha(*cfg.alpha);
        const Matrix& al = alpha.alpha();
        switch (m.kind) {
            case ModelKind::K1: {
                const RobinBC bc = extensions::bc_from_alpha_k1(al(0, 0));
                kv.push_back({"b", bc.b});
                kv.push_back({"c", bc.c});
                residual = std::abs(extensions::alpha_from_bc_k1(bc.b, bc.c).alpha()(0, 0) - al(0, 0));
                break;
            }
            case ModelKind::L1: {
                const Complex beta = extensions::bc_from_alpha_l1(al(0, 0), m.a);
                kv.push_back({"beta", beta});
                residual = std::abs(extensions::alpha_from_bc_l1(beta, m.a).alpha()(0, 0) - al(0, 0));
                break;
            }
            case ModelKind::L2: {
                const BoundaryMatrices bm = extensions::bc_from_alpha_regular(m, al);
                emit_matrix(kv, "beta_a", bm.beta_a);
                emit_matrix(kv, "beta_b", bm.beta_b);
                residual = cplane::sigma_max(extensions::alpha_from_bc_regular(m, bm).alpha() - al);
                break;
            }
            case ModelKind::K2:
                throw ConfigError("bcmap: no boundary-condition translation for k2");
        }
    } else {
        const PerturbationParameter alpha = resolve_alpha(cfg);
        emit_matrix(kv, "alpha", alpha.alpha());
        residual = cplane::unitarity_residual(alpha.alpha());
    }
    if (cfg.format == "json") {
        json obj;
        obj["model"] = m.name();
        for (const auto& e : kv) obj[e.key] = complex_json(e.value);
        obj["residual"] = residual;
        os << obj.dump(2) << '\n';
    } else {
        os << "key,re,im\n";
        for (const auto& e : kv) os << e.key << ',' << format_double(e.value.real()) << ',' << format_double(e.value.imag()) << '\n';
        os << "residual," << format_double(residual) << ",0\n";
    }
    return residual <= 1e-8 ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg, std::ostream& os) {
    const auto checks = verify::run_oracle_checks(cfg.seed);
    bool all = true;
    for (const auto& c : checks) all = all && c.passed;
    if (cfg.format == "json") {
        json rows = json::array();
        for (const auto& c : checks)
            rows.push_back(json{{"check", c.name},
                                {"residual", std::isfinite(c.residual) ? json(c.residual) : json("inf")},
                                {"tolerance", c.tolerance},
                                {"status", c.passed ? "PASS" : "FAIL"},
                                {"note", c.note}});
        os << json{{"seed", cfg.seed}, {"checks", rows}, {"passed", all}}.dump(2) << '\n';
    } else {
        os << "check,residual,tolerance,status\n";
        for (const auto& c : checks)
            os << c.name << ',' << format_double(c.residual) << ',' << format_double(c.tolerance) << ','
               << (c.passed ? "PASS" : "FAIL") << '\n';
    }
    return all ? 0 : 1;
}

}  // namespace

// ---- parsing --------------------------------------------------------------

std::vector<double> Grid::points() const {
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) out[k] = start + (stop - start) * k / double(count - 1);
    out.back() = stop;
    return out;
}

Complex parse_complex(const std::string& text) {
    const std::string t = trim(text);
    if (const auto p = t.find(':'); p != std::string::npos)
        return std::polar(parse_real(t.substr(0, p), "modulus"), parse_real(t.substr(p + 1), "argument"));
    if (const auto p = t.find(','); p != std::string::npos)
        return {parse_real(t.substr(0, p), "real part"), parse_real(t.substr(p + 1), "imaginary part")};
    return {parse_real(t, "real number"), 0.0};
}

Matrix parse_matrix(const std::string& text) {
    const auto parts = split(text, ';');
    const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(double(parts.size()))));
    if (n == 0 || n * n != static_cast<Eigen::Index>(parts.size()))
        throw ConfigError("matrix needs n*n ';'-separated entries, got " + std::to_string(parts.size()));
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = parse_complex(parts[i * n + j]);
    return m;
}

Grid parse_grid(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw ConfigError("grid must be start:stop:count");
    Grid g{parse_real(parts[0], "grid start"), parse_real(parts[1], "grid stop"), 0};
    const long n = parse_integer(parts[2]);
    if (n < 2 || n > 100000000) throw ConfigError("grid count must be at least 2");
    g.count = static_cast<int>(n);
    if (!(g.start < g.stop)) throw ConfigError("grid start must be below stop");
    return g;
}

models::IndexRange parse_range(const std::string& text) {
    const auto p = text.find("..");
    if (p == std::string::npos) throw ConfigError("range must be lo..hi");
    models::IndexRange r{parse_integer(text.substr(0, p)), parse_integer(text.substr(p + 2))};
    if (r.lo > r.hi) throw ConfigError("range lo must not exceed hi");
    return r;
}

std::pair<double, double> parse_window(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() != 2) throw ConfigError("window must be lo:hi");
    const double lo = parse_real(parts[0], "window start"), hi = parse_real(parts[1], "window stop");
    if (!(lo < hi)) throw ConfigError("window lo must be below hi");
    return {lo, hi};
}

void RunConfig::validate() const {
    static const std::vector<std::string> commands{"density", "atoms", "livsic", "bcmap", "verify"};
    if (std::find(commands.begin(), commands.end(), command) == commands.end())
        throw ConfigError("unknown command '" + command + "'");
    if (format != "csv" && format != "json") throw ConfigError("format must be csv or json");
    if (grid && (grid->count < 2 || !(grid->start < grid->stop))) throw ConfigError("invalid grid");
    if (command == "verify") return;

    const ModelKind k = model.kind;
    if (beta && k != ModelKind::L1) throw ConfigError("--beta applies to the l1 model only");
    if ((b || c) && k != ModelKind::K1) throw ConfigError("--b/--c apply to the k1 model only");
    if ((beta_a || beta_b) && k != ModelKind::L2) throw ConfigError("--beta-a/--beta-b apply to the l2 model only");
    if (bool(beta_a) != bool(beta_b)) throw ConfigError("--beta-a and --beta-b go together");
    if (alpha && alpha->rows() != model.rank())
        throw ConfigError("alpha must be " + std::to_string(model.rank()) + "x" + std::to_string(model.rank()) +
                          " for " + model.name());

    if (command == "livsic") {
        if (!grid) throw ConfigError("livsic needs --grid");
        if (!(eta > 0.0)) throw ConfigError("--eta must be positive");
        return;
    }
    if (bool(alpha) == has_bc()) throw ConfigError("supply exactly one of --alpha or boundary-condition parameters");
    if (command == "density" && !grid) throw ConfigError("density needs --grid");
    if (command == "atoms" && !n_range && !window) throw ConfigError("atoms needs --n-range or --window");
}

RunConfig parse_args(int argc, const char* const* argv) {
    CLI::App app{"Clark measures of self-adjoint extensions of derivative operators", "clark_spectra"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    RunConfig cfg;
    std::string model = "k1", alpha, beta, b, c, beta_a, beta_b, grid, n_range, window;
    double a = 1.0;

    auto add_common = [&](CLI::App* sub, bool measure_opts) {
        sub->add_option("--model", model, "k1 | k2 | l1 | l2")->capture_default_str();
        sub->add_option("--a", a, "half-width of the interval (-a, a)")->capture_default_str();
        sub->add_option("--format", cfg.format, "csv | json")->capture_default_str();
        sub->add_option("-o,--output", cfg.output, "output file (default stdout)");
        sub->add_flag("--closed-form", cfg.closed_form, "use the closed-form Livsic function");
        if (!measure_opts) return;
        sub->add_option("--alpha", alpha,
                        "perturbation parameter; complex numbers as re,im or mod:arg, matrices as ';'-separated row-major entries");
        sub->add_option("--beta", beta, "l1 boundary condition f(a) = beta f(-a)");
        sub->add_option("--b", b, "k1 Robin condition b f(0) + c f'(0) = 0");
        sub->add_option("--c", c, "k1 Robin condition b f(0) + c f'(0) = 0");
        sub->add_option("--beta-a", beta_a, "l2 boundary matrix acting on (f(-a), f'(-a))");
        sub->add_option("--beta-b", beta_b, "l2 boundary matrix acting on (f(a), f'(a))");
    };

    CLI::App* density = app.add_subcommand("density", "absolutely continuous density on a grid of s");
    add_common(density, true);
    density->add_option("--grid", grid, "start:stop:count")->required();
    density->add_option("--window", window, "lo:hi window to scan for atoms");

    CLI::App* atoms = app.add_subcommand("atoms", "atom locations and point masses");
    add_common(atoms, true);
    atoms->add_option("--n-range", n_range, "lo..hi atom indices (l1)");
    atoms->add_option("--window", window, "lo:hi scan window");

    CLI::App* liv = app.add_subcommand("livsic", "Livsic function B(x + i eta) on a grid of x");
    add_common(liv, false);
    liv->add_option("--grid", grid, "start:stop:count")->required();
    liv->add_option("--eta", cfg.eta, "imaginary part of w")->capture_default_str();

    CLI::App* bcmap = app.add_subcommand("bcmap", "translate boundary conditions and perturbation parameters");
    add_common(bcmap, true);

    CLI::App* ver = app.add_subcommand("verify", "run the oracle cross-checks");
    ver->add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
    ver->add_option("--format", cfg.format, "csv | json")->capture_default_str();
    ver->add_option("-o,--output", cfg.output, "output file (default stdout)");

    std::vector<std::string> args = normalize_argv(argc, argv);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        throw HelpRequested("help");
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e);
        throw HelpRequested("help");
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }

    cfg.command = app.get_subcommands().front()->get_name();
    try {
        cfg.model = parse_model(model, a);
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
    if (!alpha.empty()) cfg.alpha = parse_matrix(alpha);
    if (!beta.empty()) cfg.beta = parse_complex(beta);
    if (!b.empty()) cfg.b = parse_complex(b);
    if (!c.empty()) cfg.c = parse_complex(c);
    if (!beta_a.empty()) cfg.beta_a = parse_matrix(beta_a);
    if (!beta_b.empty()) cfg.beta_b = parse_matrix(beta_b);
    if (!grid.empty()) cfg.grid = parse_grid(grid);
    if (!n_range.empty()) cfg.n_range = parse_range(n_range);
    if (!window.empty()) cfg.window = parse_window(window);
    cfg.validate();
    return cfg;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    std::optional<PerturbationParameter> alpha;
    std::ofstream file;
    std::ostream* os = nullptr;
    try {
        config.validate();
        if (config.command == "density" || config.command == "atoms") alpha = resolve_alpha(config);
        os = &pick_stream(config, file, out);
    } catch (const Error& e) {
        err << "configuration error: " << e.what() << '\n';
        return 2;
    }
    try {
        if (config.command == "verify") return cmd_verify(config, *os);
        if (config.command == "livsic") return cmd_livsic(config, *os);
        if (config.command == "bcmap") return cmd_bcmap(config, *os);
        return cmd_measure(config, *alpha, *os);
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const NonUnitaryError& e) {
        err << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "computation failed: " << e.what() << '\n';
        return 1;
    }
}

int main(int argc, const char* const* argv) {
    RunConfig cfg;
    try {
        cfg = parse_args(argc, argv);
    } catch (const HelpRequested&) {
        return 0;
    } catch (const Error& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    }
    return run(cfg, std::cout, std::cerr);
}

// ---- serialization --------------------------------------------------------

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_report_csv(std::ostream& os, const MeasureReport& rep, bool atoms_table) {
    Eigen::Index n = 1;
    if (atoms_table && !rep.atoms.empty()) n = rep.atoms.front().weight.rows();
    if (!atoms_table && !rep.density.empty()) n = rep.density.front().rows();
    os << "s";
    write_matrix_header(os, n);
    os << '\n';
    if (atoms_table) {
        for (const Atom& at : rep.atoms) {
            os << format_double(at.s);
            write_matrix_columns(os, at.weight);
            os << '\n';
        }
    } else {
        for (std::size_t k = 0; k < rep.grid.size(); ++k) {
            os << format_double(rep.grid[k]);
            write_matrix_columns(os, rep.density[k]);
            os << '\n';
        }
    }
}

void write_report_json(std::ostream& os, const ModelId& m, const Matrix& alpha, const MeasureReport& rep) {
    json j;
    j["model"] = m.name();
    j["alpha"] = matrix_json(alpha);
    j["grid"] = rep.grid;
    json dens = json::array();
    for (const Matrix& d : rep.density) dens.push_back(matrix_json(d));
    j["density"] = dens;
    json atoms = json::array();
    for (const Atom& at : rep.atoms) atoms.push_back(json{{"s", at.s}, {"weight", matrix_json(at.weight)}});
    j["atoms"] = atoms;
    os << j.dump(2) << '\n';
}

MeasureReport read_report_csv(std::istream& is, bool atoms_table) {
    std::string header;
    if (!std::getline(is, header)) throw ConfigError("empty CSV");
    const auto cols = split(header, ',');
    if (cols.empty() || cols[0] != "s" || cols.size() % 2 != 1) throw ConfigError("unexpected CSV header");
    const auto entries = static_cast<Eigen::Index>((cols.size() - 1) / 2);
    const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(double(entries))));
    if (n * n != entries) throw ConfigError("CSV entry count is not square");
    MeasureReport rep;
    std::string line;
    while (std::getline(is, line)) {
        if (trim(line).empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != cols.size()) throw ConfigError("CSV row width mismatch");
        Matrix m(n, n);
        for (Eigen::Index e = 0; e < entries; ++e)
            m(e / n, e % n) = Complex(std::stod(f[1 + 2 * e]), std::stod(f[2 + 2 * e]));
        const double s = std::stod(f[0]);
        if (atoms_table) {
            rep.atoms.push_back({s, m});
        } else {
            rep.grid.push_back(s);
            rep.density.push_back(m);
        }
    }
    return rep;
}

MeasureReport read_report_json(std::istream& is) {
    json j;
    try {
        is >> j;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    MeasureReport rep;
    rep.grid = j.at("grid").get<std::vector<double>>();
    for (const json& d : j.at("density")) rep.density.push_back(matrix_from_json(d));
    for (const json& a : j.at("atoms")) rep.atoms.push_back({a.at("s").get<double>(), matrix_from_json(a.at("weight"))});
    return rep;
}

}  // namespace clark::cli
