#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "clark/measure.hpp"
#include "clark/model_id.hpp"
#include "clark/models.hpp"

namespace clark::cli {

struct ConfigError : Error { using Error::Error; };
// Thrown by parse_args after --help output has been printed.
struct HelpRequested : Error { using Error::Error; };

struct Grid {
    double start = 0.0;
    double stop = 1.0;
    int count = 2;
    std::vector<double> points() const;
};

struct RunConfig {
    std::string command;
    ModelId model = ModelId::k1();
    std::optional<Matrix> alpha;
    std::optional<Complex> beta;             // L1: f(a) = beta f(-a)
    std::optional<Complex> b, c;              // K1: b f(0) + c f'(0) = 0
    std::optional<Matrix> beta_a, beta_b;    // L2
    std::optional<Grid> grid;
    std::optional<models::IndexRange> n_range;
    std::optional<std::pair<double, double>> window;
    double eta = 0.5;                         // Im w for the livsic table
    bool closed_form = false;
    std::string output;                       // empty: stdout
    std::string format = "csv";
    std::uint64_t seed = 20240601;

    bool has_bc() const { return beta || b || c || beta_a || beta_b; }
    void validate() const;
};

// "re,im", "mod:arg" or a plain real number.
Complex parse_complex(const std::string& text);
// n*n complex entries separated by ';', row-major.
Matrix parse_matrix(const std::string& text);
Grid parse_grid(const std::string& text);
models::IndexRange parse_range(const std::string& text);
std::pair<double, double> parse_window(const std::string& text);

// Builds a RunConfig from argv; throws ConfigError.
RunConfig parse_args(int argc, const char* const* argv);

// Executes the command; returns the exit status (0 ok, 1 convergence/verification failure, 2 config error).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int main(int argc, const char* const* argv);

// Serialization used by density/atoms outputs.
std::string format_double(double v);
void write_report_csv(std::ostream& os, const MeasureReport& rep, bool atoms_table);
void write_report_json(std::ostream& os, const ModelId& m, const Matrix& alpha, const MeasureReport& rep);
MeasureReport read_report_csv(std::istream& is, bool atoms_table);
MeasureReport read_report_json(std::istream& is);

}  // namespace clark::cli
