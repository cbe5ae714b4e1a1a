#pragma once

#include <optional>
#include <vector>

#include "clark/defect.hpp"
#include "clark/extensions.hpp"
#include "clark/models.hpp"

namespace clark::oracle {

struct QuadratureSpec {
    double abs_tol = 1e-13;
    double rel_tol = 1e-10;
    int halfline_cutoff_digits = 16;
};

struct QuadResult {
    Complex value;
    double error = 0.0;
};

// Adaptive Gauss-Kronrod (15 point) integration of f conj(g) over the common domain.
QuadResult quad_inner(const ExpSum& f, const ExpSum& g, const QuadratureSpec& spec = {});

// Half-line truncation point X with exp(-c X) = 10^-digits, c the slowest combined decay rate.
double halfline_cutoff(const ExpSum& f, const ExpSum& g, int digits);

// s_n = -(arg beta + 2 pi n)/(2a).
std::vector<double> l1_eigenvalues_direct(Complex beta, double a, models::IndexRange n);

// Real eigenvalues of the second-order finite-difference matrix for -f'' on (-a, a), sorted, no extrapolation.
std::vector<double> l2_fd_spectrum(const BoundaryMatrices& bm, double a, int grid_points);

// Richardson-extrapolated eigenvalues (grid_points and 2 grid_points) inside [lo, hi].
std::vector<double> l2_eigenvalues_fd(const BoundaryMatrices& bm, double a, int grid_points, double lo, double hi);

struct BoundState {
    double location = 0.0;
    double weight = 0.0;
};

// Robin condition b f(0) + c f'(0) = 0 on K1: bound state exp(-sigma x), sigma = b/c > 0, at s = -sigma^2.
std::optional<BoundState> k1_bound_state_check(Complex b, Complex c);

}  // namespace clark::oracle
