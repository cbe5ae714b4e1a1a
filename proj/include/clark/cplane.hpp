#pragma once

#include <complex>
#include <functional>

#include <Eigen/Dense>

#include "clark/errors.hpp"

namespace clark {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr Complex I_unit{0.0, 1.0};

// Throws DomainError when z carries a NaN or Inf component.
void require_finite(Complex z, const char* what);
void require_finite(const Matrix& m, const char* what);
void require_square(const Matrix& m, const char* what);

namespace cplane {

Complex cayley(Complex w);
Complex inv_cayley(Complex z);

// exp(p Log w) with Arg in (-pi, pi]. p is passed as num/den.
Complex principal_power(Complex w, int num, int den);
Complex principal_sqrt(Complex w);

struct LimitScheme {
    double eps0 = 1.0 / 16.0;
    int levels = 30;
    double rel_tol = 1e-8;
    // Extrapolation assumes f(s+ie) = f0 + sum_j c_j e^(j*exponent_step).
    // Half-integer steps cover the sqrt(w) branch behaviour of the half-line models.
    double exponent_step = 0.5;
    int max_order = 8;

    double eps(int k) const;
};

struct LimitResult {
    Matrix value;
    double error = 0.0;
    int levels_used = 0;
};

using MatrixFunction = std::function<Matrix(Complex)>;

// Generic ladder limit of g(eps) as eps -> 0+, eps = eps0 * 2^-k.
LimitResult ladder_limit(const std::function<Matrix(double)>& g, const LimitScheme& scheme);

// Vertical boundary limit lim_{eps->0+} f(s + i eps).
LimitResult nt_limit(const MatrixFunction& f, double s, const LimitScheme& scheme = {});

double sigma_max(const Matrix& m);
double sigma_min(const Matrix& m);

bool is_unitary(const Matrix& m, double tol);
bool is_contraction(const Matrix& m, double tol);
bool is_c_symmetric(const Matrix& m, const Matrix& c, double tol);

// Distance of M*M from the identity in the spectral norm.
double unitarity_residual(const Matrix& m);

// (M + M*)/2
Matrix hermitian_part(const Matrix& m);

}  // namespace cplane
}  // namespace clark
